//! Closed-form values of `m(D(x, R₁), D(y, R₂))` for the regimes in which
//! they are claimed, each guarded by its hypothesis.

use super::{boundaries_intersect, classify_pair, overlap_rectangle, DiscPair, RectDims, Regime};
use crate::error::GeometryError;
use crate::lattice::{DigitalDisc, EnumCap, PixelPoint};
use crate::scalar::Coord;

fn regime_error(msg: impl Into<String>) -> GeometryError {
    GeometryError::Regime(msg.into())
}

/// `R₁² + R₂² + R₁ + R₂`
fn radius_terms<T: Coord>(r1: T, r2: T) -> Result<T, GeometryError> {
    r1.checked_mul_or(r1)?
        .checked_add_or(r2.checked_mul_or(r2)?)?
        .checked_add_or(r1)?
        .checked_add_or(r2)
}

fn require_regime<T: Coord>(
    pair: &DiscPair<T>,
    wanted: Regime,
    cap: EnumCap,
) -> Result<(), GeometryError> {
    let class = classify_pair(pair, cap)?;
    if class.regime == wanted {
        Ok(())
    } else {
        Err(regime_error(format!(
            "{pair} is classified {class}, not {}",
            wanted.label()
        )))
    }
}

/// `2(R₁² + R₂² + R₁ + R₂ − 2kn + k + n)`, for pairs whose boundaries meet.
pub fn m_closed_thm1<T: Coord>(
    pair: &DiscPair<T>,
    dims: &RectDims<T>,
    cap: EnumCap,
) -> Result<T, GeometryError> {
    require_regime(pair, Regime::Thm1, cap)?;
    let kn = dims.k.checked_mul_or(dims.n)?;
    radius_terms(pair.first.radius(), pair.second.radius())?
        .checked_sub_or(T::two().checked_mul_or(kn)?)?
        .checked_add_or(dims.k)?
        .checked_add_or(dims.n)?
        .checked_mul_or(T::two())
}

/// `2(R₁² + R₂² + R₁ + R₂ + 1 − 2kn)`, for intersecting discs whose
/// boundaries miss each other while `C(x, R₁ − 1)` meets `C(y, R₂)`.
pub fn m_closed_thm2<T: Coord>(
    pair: &DiscPair<T>,
    dims: &RectDims<T>,
    cap: EnumCap,
) -> Result<T, GeometryError> {
    require_regime(pair, Regime::Thm2, cap)?;
    let kn = dims.k.checked_mul_or(dims.n)?;
    radius_terms(pair.first.radius(), pair.second.radius())?
        .checked_add_or(T::one())?
        .checked_sub_or(T::two().checked_mul_or(kn)?)?
        .checked_mul_or(T::two())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// A collinear pair rotated onto the horizontal axis (by transposing when
/// the centers share a column) and ordered so that `left` has the smaller
/// abscissa `α < γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CollinearFrame<T> {
    pub axis: Axis,
    pub left: DigitalDisc<T>,
    pub right: DigitalDisc<T>,
    /// `γ − α > 0`
    pub gap: T,
}

impl<T: Coord> CollinearFrame<T> {
    /// `R₁ + R₂ − (γ − α)`; twice the radius of the lens when it is a disc.
    pub fn slack(&self) -> T {
        self.left.radius() + self.right.radius() - self.gap
    }

    fn unmap(&self, p: PixelPoint<T>) -> PixelPoint<T> {
        match self.axis {
            Axis::Horizontal => p,
            Axis::Vertical => p.transpose(),
        }
    }
}

pub fn collinear_frame<T: Coord>(pair: &DiscPair<T>) -> Result<CollinearFrame<T>, GeometryError> {
    if pair.concentric() {
        return Err(regime_error(format!("{pair}: centers coincide")));
    }
    let (x, y) = (pair.first.center(), pair.second.center());
    let (axis, flat) = if x.y() == y.y() {
        (Axis::Horizontal, *pair)
    } else if x.x() == y.x() {
        (Axis::Vertical, pair.transposed())
    } else {
        return Err(regime_error(format!(
            "{pair}: centers are not on a common horizontal or vertical line"
        )));
    };
    let flat = if flat.first.center().x() > flat.second.center().x() {
        flat.swapped()
    } else {
        flat
    };
    Ok(CollinearFrame {
        axis,
        left: flat.first,
        right: flat.second,
        gap: flat.second.center().x() - flat.first.center().x(),
    })
}

/// Frame of a pair meeting the collinear-with-crossing-boundaries hypothesis.
fn thm3_frame<T: Coord>(pair: &DiscPair<T>, cap: EnumCap) -> Result<CollinearFrame<T>, GeometryError> {
    let frame = collinear_frame(pair)?;
    let slack = frame.slack();
    if slack < T::zero() {
        return Err(regime_error(format!(
            "{pair}: center gap {} exceeds R₁ + R₂",
            frame.gap
        )));
    }
    if !slack.is_even() {
        return Err(regime_error(format!(
            "{pair}: R₁ + R₂ − (γ − α) = {slack} is odd, so the boundaries cannot meet \
             and the overlap is not a disc; use the thm2 path"
        )));
    }
    if !boundaries_intersect(pair, cap)? {
        return Err(regime_error(format!("{pair}: boundaries do not intersect")));
    }
    Ok(frame)
}

/// The disc that the overlap of a collinear pair with crossing boundaries
/// reduces to: center `((α + R₁ + γ − R₂)/2, β)`, radius
/// `(R₁ + R₂ − (γ − α))/2`.
pub fn thm3_intersection_disc<T: Coord>(
    pair: &DiscPair<T>,
    cap: EnumCap,
) -> Result<DigitalDisc<T>, GeometryError> {
    let frame = thm3_frame(pair, cap)?;
    let two = T::two();
    let (a, b) = (frame.left.center(), frame.right.center());
    let cx = (a.x() + frame.left.radius() + b.x() - frame.right.radius()) / two;
    let center = PixelPoint::new(cx, a.y())?;
    DigitalDisc::new(frame.unmap(center), frame.slack() / two)
}

/// `(R₁ − R₂)² + 2(R₁ + R₂ + 1)(γ − α) − (γ − α)²` for collinear centers
/// with crossing boundaries.
pub fn m_closed_thm3<T: Coord>(pair: &DiscPair<T>, cap: EnumCap) -> Result<T, GeometryError> {
    let frame = thm3_frame(pair, cap)?;
    let (r1, r2, gap) = (frame.left.radius(), frame.right.radius(), frame.gap);
    let diff = r1 - r2;
    let m = diff
        .checked_mul_or(diff)?
        .checked_add_or(
            T::two()
                .checked_mul_or(r1 + r2 + T::one())?
                .checked_mul_or(gap)?,
        )?
        .checked_sub_or(gap.checked_mul_or(gap)?)?;
    // same value via the lens radius r: 2(R₁² + R₂² + R₁ + R₂ − 2r² − 2r)
    if cfg!(debug_assertions) {
        let r = frame.slack() / T::two();
        let via_lens = radius_terms(r1, r2)
            .and_then(|t| t.checked_sub_or(T::two().checked_mul_or(r.checked_mul_or(r)?)?))
            .and_then(|t| t.checked_sub_or(T::two().checked_mul_or(r)?))
            .and_then(|t| t.checked_mul_or(T::two()));
        if let Ok(v) = via_lens {
            debug_assert_eq!(v, m);
        }
    }
    Ok(m)
}

/// How the corollary's `r₀` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CorollaryReading {
    /// `r₀ = (R₁ − 1 + R₂ + (γ − α)) / 2`, as printed.
    Printed,
    /// `r₀ = (R₁ − 1 + R₂ − (γ − α)) / 2`, the sign flipped to mirror the
    /// corrected lens radius.
    SignCorrected,
}

/// `2(R₁² + R₂² + R₁ + R₂ − 2r₀² − 4r₀ + 1)` for collinear, intersecting
/// discs with disjoint boundaries. Evaluated verbatim, never adjusted to fit
/// the enumeration.
///
/// `r₀ = N/2` may be a half-integer; with `N` the numerator the value is
/// `2(R₁² + R₂² + R₁ + R₂ + 1) − N² − 4N`, always an integer.
pub fn m_closed_corollary<T: Coord>(
    pair: &DiscPair<T>,
    reading: CorollaryReading,
    cap: EnumCap,
) -> Result<T, GeometryError> {
    let frame = collinear_frame(pair)?;
    if frame.slack() < T::zero() {
        return Err(regime_error(format!(
            "{pair}: center gap {} exceeds R₁ + R₂",
            frame.gap
        )));
    }
    if !overlap_rectangle(pair).is_some_and(|r| r.pixel_count() > T::zero()) {
        return Err(regime_error(format!("{pair}: discs do not intersect")));
    }
    if boundaries_intersect(pair, cap)? {
        return Err(regime_error(format!("{pair}: boundaries intersect")));
    }
    let (r1, r2, gap) = (frame.left.radius(), frame.right.radius(), frame.gap);
    let partial = r1 - T::one() + r2;
    let numerator = match reading {
        CorollaryReading::Printed => partial.checked_add_or(gap)?,
        CorollaryReading::SignCorrected => partial.checked_sub_or(gap)?,
    };
    radius_terms(r1, r2)?
        .checked_add_or(T::one())?
        .checked_mul_or(T::two())?
        .checked_sub_or(numerator.checked_mul_or(numerator)?)?
        .checked_sub_or(T::from_count(4)?.checked_mul_or(numerator)?)
}
