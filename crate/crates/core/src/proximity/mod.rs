//! Proximity of pairs of digital discs.
//!
//! Pairs are classified by how their boundaries meet, the overlap is
//! measured in the rotated `(u, v)` frame (where it is an axis-aligned
//! rectangle intersected with the pixel sublattice `u ≡ v (mod 2)`), and
//! the closed-form values of `m` are checked against exhaustive enumeration.

mod closed_forms;
mod verify;

pub use closed_forms::{
    collinear_frame, m_closed_corollary, m_closed_thm1, m_closed_thm2, m_closed_thm3,
    thm3_intersection_disc, Axis, CollinearFrame, CorollaryReading,
};
pub use verify::{
    counterexample_search, verify_pair, ClosedForm, Formula, FormulaCheck, SweepBounds,
    SweepSummary, Tally, VerificationReport,
};

use std::fmt;

use crate::error::GeometryError;
use crate::lattice::{
    circle_extent_ok, circle_pixels, enumerate_disc, l1_distance, DigitalDisc, EnumCap,
    PixelPoint,
};
use crate::scalar::{count_with_parity, Coord};

/// An ordered pair of discs: `first` has center `x = (α, β)` and radius
/// `R₁`, `second` has center `y = (γ, δ)` and radius `R₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiscPair<T> {
    pub first: DigitalDisc<T>,
    pub second: DigitalDisc<T>,
}

impl<T: Coord> DiscPair<T> {
    pub fn new(first: DigitalDisc<T>, second: DigitalDisc<T>) -> Self {
        Self { first, second }
    }

    /// Shorthand: `(cx, cy, radius)` for each disc.
    pub fn from_parts(a: (T, T, T), b: (T, T, T)) -> Result<Self, GeometryError> {
        Ok(Self {
            first: DigitalDisc::new(PixelPoint::new(a.0, a.1)?, a.2)?,
            second: DigitalDisc::new(PixelPoint::new(b.0, b.1)?, b.2)?,
        })
    }

    pub fn swapped(&self) -> Self {
        Self {
            first: self.second,
            second: self.first,
        }
    }

    pub fn transposed(&self) -> Self {
        Self {
            first: self.first.transpose(),
            second: self.second.transpose(),
        }
    }

    pub fn translate(&self, dx: T, dy: T) -> Result<Self, GeometryError> {
        Ok(Self {
            first: self.first.translate(dx, dy)?,
            second: self.second.translate(dx, dy)?,
        })
    }

    pub fn center_distance(&self) -> T {
        l1_distance(self.first.center(), self.second.center())
    }

    /// Centers share a horizontal or vertical line.
    pub fn is_collinear(&self) -> bool {
        let (x, y) = (self.first.center(), self.second.center());
        x.x() == y.x() || x.y() == y.y()
    }

    pub fn concentric(&self) -> bool {
        self.first.center() == self.second.center()
    }
}

impl<T: Coord> fmt::Display for DiscPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} & {}", self.first, self.second)
    }
}

/// Which boundary-intersection hypothesis a pair satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regime {
    /// The discs share no pixel.
    Disjoint,
    /// `C(x, R₁) ∩ C(y, R₂) ≠ ∅`, centers distinct.
    Thm1,
    /// Boundaries disjoint but `C(x, R₁ − 1) ∩ C(y, R₂) ≠ ∅`.
    Thm2,
    /// Intersecting, covered by neither hypothesis (includes concentric pairs).
    Other,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::Disjoint => "disjoint",
            Regime::Thm1 => "thm1",
            Regime::Thm2 => "thm2",
            Regime::Other => "other",
        }
    }
}

/// Regime plus the collinear-centers flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub regime: Regime,
    pub collinear: bool,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.regime.label())?;
        if self.collinear {
            f.write_str("+collinear")?;
        }
        Ok(())
    }
}

/// Whether some pixel lies at distance exactly `r1` from `c1` and exactly
/// `r2` from `c2`. Walks the smaller circle. A negative radius is an empty
/// circle.
pub fn circles_meet<T: Coord>(
    c1: PixelPoint<T>,
    r1: T,
    c2: PixelPoint<T>,
    r2: T,
    cap: EnumCap,
) -> Result<bool, GeometryError> {
    if r1 < T::zero() || r2 < T::zero() {
        return Ok(false);
    }
    let (walk_center, walk_r, other_center, other_r) = if r1 <= r2 {
        (c1, r1, c2, r2)
    } else {
        (c2, r2, c1, r1)
    };
    cap.check(walk_r)?;
    if !circle_extent_ok(walk_center, walk_r) {
        return Err(GeometryError::OutOfBound {
            value: walk_r.to_string(),
            bound: T::bound().to_string(),
        });
    }
    Ok(circle_pixels(walk_center, walk_r).any(|z| l1_distance(z, other_center) == other_r))
}

/// `C(x, R₁) ∩ C(y, R₂) ≠ ∅`.
pub fn boundaries_intersect<T: Coord>(pair: &DiscPair<T>, cap: EnumCap) -> Result<bool, GeometryError> {
    circles_meet(
        pair.first.center(),
        pair.first.radius(),
        pair.second.center(),
        pair.second.radius(),
        cap,
    )
}

pub fn classify_pair<T: Coord>(pair: &DiscPair<T>, cap: EnumCap) -> Result<Classification, GeometryError> {
    let collinear = pair.is_collinear();
    let shares_pixel = overlap_rectangle(pair).is_some_and(|r| r.pixel_count() > T::zero());
    let regime = if !shares_pixel {
        Regime::Disjoint
    } else if pair.concentric() {
        Regime::Other
    } else if boundaries_intersect(pair, cap)? {
        Regime::Thm1
    } else if circles_meet(
        pair.first.center(),
        pair.first.radius() - T::one(),
        pair.second.center(),
        pair.second.radius(),
        cap,
    )? {
        Regime::Thm2
    } else {
        Regime::Other
    };
    Ok(Classification { regime, collinear })
}

/// Intersection of the two discs' squares in the `(u, v)` frame; bounds are
/// inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OverlapRect<T> {
    pub u_lo: T,
    pub u_hi: T,
    pub v_lo: T,
    pub v_hi: T,
}

impl<T: Coord> OverlapRect<T> {
    /// `(#even, #odd)` u-values and v-values.
    fn parity_counts(&self) -> ((T, T), (T, T)) {
        let (zero, one) = (T::zero(), T::one());
        (
            (
                count_with_parity(self.u_lo, self.u_hi, zero),
                count_with_parity(self.u_lo, self.u_hi, one),
            ),
            (
                count_with_parity(self.v_lo, self.v_hi, zero),
                count_with_parity(self.v_lo, self.v_hi, one),
            ),
        )
    }

    /// Number of pixels (`u ≡ v mod 2`) inside the rectangle.
    pub fn pixel_count(&self) -> T {
        let ((ue, uo), (ve, vo)) = self.parity_counts();
        ue * ve + uo * vo
    }

    pub fn contains(&self, p: PixelPoint<T>) -> bool {
        let q = p.to_uv();
        (self.u_lo..=self.u_hi).contains(&q.u) && (self.v_lo..=self.v_hi).contains(&q.v)
    }
}

/// `None` when the squares do not overlap. A returned rectangle can still be
/// pixel-free (e.g. a single `(u, v)` point of mixed parity).
pub fn overlap_rectangle<T: Coord>(pair: &DiscPair<T>) -> Option<OverlapRect<T>> {
    let (a, ra) = (pair.first.center().to_uv(), pair.first.radius());
    let (b, rb) = (pair.second.center().to_uv(), pair.second.radius());
    let rect = OverlapRect {
        u_lo: (a.u - ra).max(b.u - rb),
        u_hi: (a.u + ra).min(b.u + rb),
        v_lo: (a.v - ra).max(b.v - rb),
        v_hi: (a.v + ra).min(b.v + rb),
    };
    (rect.u_lo <= rect.u_hi && rect.v_lo <= rect.v_hi).then_some(rect)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Rectangle width `k` and height `n`, counted on one parity sublattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RectDims<T> {
    pub k: T,
    pub n: T,
    pub majority_parity: Parity,
}

impl<T: Coord> RectDims<T> {
    /// `kn + (k−1)(n−1)`: pixels of a rectangle whose edges all share the
    /// majority parity.
    pub fn crossing_boundary_count(&self) -> T {
        self.k * self.n + (self.k - T::one()) * (self.n - T::one())
    }

    /// `2kn`: pixels of a rectangle with an even number of rows and columns.
    pub fn disjoint_boundary_count(&self) -> T {
        T::two() * self.k * self.n
    }
}

/// Counts the u- and v-values of each parity class and keeps the class
/// holding more values (even on a tie).
pub fn rect_dims<T: Coord>(rect: &OverlapRect<T>) -> Result<RectDims<T>, GeometryError> {
    if rect.pixel_count().is_zero() {
        return Err(GeometryError::DegenerateOverlap);
    }
    let ((ue, uo), (ve, vo)) = rect.parity_counts();
    Ok(if ue + ve >= uo + vo {
        RectDims {
            k: ue,
            n: ve,
            majority_parity: Parity::Even,
        }
    } else {
        RectDims {
            k: uo,
            n: vo,
            majority_parity: Parity::Odd,
        }
    })
}

/// Ground truth `card(D(x, R₁) ∩ D(y, R₂))` by enumerating both discs.
pub fn intersection_cardinality_oracle<T: Coord>(
    pair: &DiscPair<T>,
    cap: EnumCap,
) -> Result<usize, GeometryError> {
    let a = enumerate_disc(&pair.first, cap)?;
    let b = enumerate_disc(&pair.second, cap)?;
    Ok(a.intersection_len(&b))
}
