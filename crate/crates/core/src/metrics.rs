//! Proximity measures on finite pixel sets.
//!
//! `m(A, B) = card(A △ B)` is the unnormalized Jaccard-like distance; the
//! Hausdorff distance uses the taxicab metric as ground distance. Both are
//! exact nonnegative integers.

use std::fmt;

use crate::error::GeometryError;
use crate::lattice::{l1_distance, PixelSet};
use crate::scalar::Coord;

/// An exact, nonnegative proximity value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProximityValue(pub u64);

impl ProximityValue {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for ProximityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The three equivalent ways of counting `card(A △ B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricDifferenceForms {
    /// `card(A △ B)`
    pub direct: u64,
    /// `card(A \ B) + card(B \ A)`
    pub one_sided: u64,
    /// `card(A) + card(B) − 2·card(A ∩ B)`
    pub inclusion_exclusion: u64,
}

impl SymmetricDifferenceForms {
    pub fn agree(&self) -> bool {
        self.direct == self.one_sided && self.one_sided == self.inclusion_exclusion
    }
}

pub fn symmetric_difference_forms<T: Coord>(
    a: &PixelSet<T>,
    b: &PixelSet<T>,
) -> SymmetricDifferenceForms {
    let direct = a.symmetric_difference(b).len() as u64;
    let one_sided = (a.difference(b).len() + b.difference(a).len()) as u64;
    let inclusion_exclusion = (a.len() + b.len() - 2 * a.intersection_len(b)) as u64;
    SymmetricDifferenceForms {
        direct,
        one_sided,
        inclusion_exclusion,
    }
}

/// `m(A, B) = card(A △ B)`. Empty sets are accepted: `m(∅, B) = card(B)`.
pub fn symmetric_difference_metric<T: Coord>(a: &PixelSet<T>, b: &PixelSet<T>) -> ProximityValue {
    let m = (a.len() + b.len() - 2 * a.intersection_len(b)) as u64;
    #[cfg(debug_assertions)]
    {
        let forms = symmetric_difference_forms(a, b);
        debug_assert!(forms.agree() && forms.direct == m, "{forms:?} vs {m}");
    }
    ProximityValue(m)
}

/// `max_{a ∈ A} min_{b ∈ B} d(a, b)`.
pub fn directed_hausdorff<T: Coord>(
    a: &PixelSet<T>,
    b: &PixelSet<T>,
) -> Result<ProximityValue, GeometryError> {
    if a.is_empty() || b.is_empty() {
        return Err(GeometryError::Domain(
            "Hausdorff distance is undefined for an empty set",
        ));
    }
    let mut worst = T::zero();
    for &p in a {
        if b.contains(&p) {
            continue;
        }
        let mut nearest: Option<T> = None;
        for &q in b {
            let d = l1_distance(p, q);
            if nearest.map_or(true, |n| d < n) {
                nearest = Some(d);
                // no closer pixel exists once the nearest is one step away
                if d == T::one() {
                    break;
                }
            }
        }
        if let Some(n) = nearest {
            worst = worst.max(n);
        }
    }
    worst
        .to_u64()
        .map(ProximityValue)
        .ok_or(GeometryError::Overflow)
}

/// Hausdorff distance between two nonempty finite pixel sets. Quadratic in
/// the set sizes.
pub fn hausdorff_distance<T: Coord>(
    a: &PixelSet<T>,
    b: &PixelSet<T>,
) -> Result<ProximityValue, GeometryError> {
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}
