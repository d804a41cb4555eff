//! Oracle harness: every applicable closed form is evaluated next to the
//! enumerated value of `m`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::closed_forms::{m_closed_corollary, m_closed_thm1, m_closed_thm2, m_closed_thm3, CorollaryReading};
use super::{classify_pair, overlap_rectangle, rect_dims, Classification, DiscPair, Regime};
use crate::error::GeometryError;
use crate::lattice::{enumerate_disc, DigitalDisc, EnumCap, PixelPoint};
use crate::scalar::Coord;

/// A closed-form family selectable for a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Thm1,
    Thm2,
    Thm3,
    Corollary,
}

impl Formula {
    pub const ALL: [Formula; 4] = [Formula::Thm1, Formula::Thm2, Formula::Thm3, Formula::Corollary];

    pub fn id(self) -> &'static str {
        match self {
            Formula::Thm1 => "thm1",
            Formula::Thm2 => "thm2",
            Formula::Thm3 => "thm3",
            Formula::Corollary => "corollary",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::ALL
            .into_iter()
            .find(|f| f.id() == s.trim())
            .ok_or_else(|| format!("unknown formula {s:?} (expected thm1, thm2, thm3 or corollary)"))
    }
}

/// One evaluated expression; the corollary contributes two readings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosedForm {
    Thm1,
    Thm2,
    Thm3,
    Corollary(CorollaryReading),
}

impl ClosedForm {
    pub fn formula(self) -> Formula {
        match self {
            ClosedForm::Thm1 => Formula::Thm1,
            ClosedForm::Thm2 => Formula::Thm2,
            ClosedForm::Thm3 => Formula::Thm3,
            ClosedForm::Corollary(_) => Formula::Corollary,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            ClosedForm::Thm1 => "thm1",
            ClosedForm::Thm2 => "thm2",
            ClosedForm::Thm3 => "thm3",
            ClosedForm::Corollary(CorollaryReading::Printed) => "corollary",
            ClosedForm::Corollary(CorollaryReading::SignCorrected) => "corollary_corrected",
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormulaCheck<T> {
    pub form: ClosedForm,
    pub closed: T,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VerificationReport<T> {
    pub pair: DiscPair<T>,
    pub classification: Classification,
    pub card_first: u64,
    pub card_second: u64,
    pub card_intersection: u64,
    /// `m` of the enumerated discs.
    pub oracle_m: u64,
    /// One entry per closed form whose hypothesis the pair satisfies.
    pub checks: Vec<FormulaCheck<T>>,
}

impl<T: Coord> VerificationReport<T> {
    pub fn check(&self, form: ClosedForm) -> Option<&FormulaCheck<T>> {
        self.checks.iter().find(|c| c.form == form)
    }

    pub fn evaluates(&self, formulas: &[Formula]) -> bool {
        self.checks.iter().any(|c| formulas.contains(&c.form.formula()))
    }

    /// Failed checks among the selected formulas.
    pub fn disagreements<'a>(
        &'a self,
        formulas: &'a [Formula],
    ) -> impl Iterator<Item = &'a FormulaCheck<T>> + 'a {
        self.checks
            .iter()
            .filter(move |c| !c.agrees && formulas.contains(&c.form.formula()))
    }

    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.agrees)
    }
}

/// Regime errors mean "hypothesis not met"; anything else is a real failure.
fn applicable<T>(result: Result<T, GeometryError>) -> Result<Option<T>, GeometryError> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(GeometryError::Regime(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn verify_pair<T: Coord>(pair: &DiscPair<T>, cap: EnumCap) -> Result<VerificationReport<T>, GeometryError> {
    let a = enumerate_disc(&pair.first, cap)?;
    let b = enumerate_disc(&pair.second, cap)?;
    let card_intersection = a.intersection_len(&b) as u64;
    let (card_first, card_second) = (a.len() as u64, b.len() as u64);
    let oracle_m = card_first + card_second - 2 * card_intersection;
    let oracle = T::from_count(oracle_m as usize)?;

    let classification = classify_pair(pair, cap)?;
    let mut checks = Vec::new();
    let mut record = |form, closed: Option<T>| {
        if let Some(closed) = closed {
            checks.push(FormulaCheck {
                form,
                closed,
                agrees: closed == oracle,
            });
        }
    };

    let dims = overlap_rectangle(pair).map(|r| rect_dims(&r));
    match (classification.regime, dims) {
        (Regime::Thm1, Some(Ok(d))) => record(ClosedForm::Thm1, Some(m_closed_thm1(pair, &d, cap)?)),
        (Regime::Thm2, Some(Ok(d))) => record(ClosedForm::Thm2, Some(m_closed_thm2(pair, &d, cap)?)),
        _ => {}
    }
    if classification.collinear {
        record(ClosedForm::Thm3, applicable(m_closed_thm3(pair, cap))?);
        for reading in [CorollaryReading::Printed, CorollaryReading::SignCorrected] {
            record(
                ClosedForm::Corollary(reading),
                applicable(m_closed_corollary(pair, reading, cap))?,
            );
        }
    }

    Ok(VerificationReport {
        pair: *pair,
        classification,
        card_first,
        card_second,
        card_intersection,
        oracle_m,
        checks,
    })
}

/// Sweep extent: `R₁, R₂ ∈ [0, max_radius]`, second center `(γ, δ) ∈ [0, max_offset]²`,
/// first center at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SweepBounds {
    pub max_radius: u32,
    pub max_offset: u32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tally {
    pub evaluated: u64,
    pub disagreed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary<T> {
    pub bounds: SweepBounds,
    pub formulas: Vec<Formula>,
    pub pairs_swept: u64,
    /// Pairs for which at least one selected formula applied.
    pub pairs_checked: u64,
    pub tallies: BTreeMap<ClosedForm, Tally>,
    /// Reports with at least one selected disagreement, ordered by `(R₁, R₂, γ, δ)`.
    pub disagreements: Vec<VerificationReport<T>>,
}

impl<T: Coord> SweepSummary<T> {
    pub fn disagreement_count(&self) -> u64 {
        self.tallies.values().map(|t| t.disagreed).sum()
    }

    pub fn evaluations(&self) -> u64 {
        self.tallies.values().map(|t| t.evaluated).sum()
    }
}

/// Exhaustively verifies every pair within `bounds` and keeps the reports
/// where a selected formula disagrees with enumeration. Pairs are evaluated
/// in parallel; output order is deterministic.
pub fn counterexample_search<T: Coord>(
    bounds: SweepBounds,
    formulas: &[Formula],
    cap: EnumCap,
) -> Result<SweepSummary<T>, GeometryError> {
    cap.check(T::from_count(bounds.max_radius as usize)?)?;
    let mut formulas = formulas.to_vec();
    formulas.sort();
    formulas.dedup();

    let mut summary = SweepSummary {
        bounds,
        formulas,
        pairs_swept: 0,
        pairs_checked: 0,
        tallies: BTreeMap::new(),
        disagreements: Vec::new(),
    };
    let max_off = T::from_count(bounds.max_offset as usize)?;
    PixelPoint::new(max_off, max_off)?;

    for r1 in 0..=bounds.max_radius {
        let first = DigitalDisc::new(PixelPoint::origin(), T::from_count(r1 as usize)?)?;
        let jobs: Vec<(u32, u32, u32)> = (0..=bounds.max_radius)
            .flat_map(|r2| {
                (0..=bounds.max_offset)
                    .flat_map(move |g| (0..=bounds.max_offset).map(move |d| (r2, g, d)))
            })
            .collect();
        let reports = jobs
            .par_iter()
            .map(|&(r2, g, d)| {
                let center = PixelPoint::new(T::from_count(g as usize)?, T::from_count(d as usize)?)?;
                let second = DigitalDisc::new(center, T::from_count(r2 as usize)?)?;
                verify_pair(&DiscPair::new(first, second), cap)
            })
            .collect::<Result<Vec<_>, _>>()?;

        for report in reports {
            summary.pairs_swept += 1;
            if report.evaluates(&summary.formulas) {
                summary.pairs_checked += 1;
            }
            for check in &report.checks {
                if summary.formulas.contains(&check.form.formula()) {
                    let tally = summary.tallies.entry(check.form).or_default();
                    tally.evaluated += 1;
                    tally.disagreed += u64::from(!check.agrees);
                }
            }
            if report.disagreements(&summary.formulas).next().is_some() {
                summary.disagreements.push(report);
            }
        }
    }
    Ok(summary)
}
