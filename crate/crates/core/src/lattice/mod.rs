//! Exact geometry of the digital plane `Z²` under the taxicab metric.
//!
//! Points are pixels with integer coordinates. The 45° rotation
//! `u = x + y`, `v = x − y` turns taxicab distance into Chebyshev distance,
//! so taxicab discs become axis-aligned squares in the `(u, v)` frame. Only
//! `(u, v)` pairs of equal parity correspond to pixels.

mod pixel_set;
mod shapes;

pub use pixel_set::PixelSet;
pub(crate) use shapes::{circle_extent_ok, circle_pixels};
pub use shapes::{
    circle_cardinality_closed, circumference_closed, disc_cardinality_closed, enumerate_circle,
    enumerate_disc, DigitalCircle, DigitalDisc, EnumCap, DEFAULT_ENUM_CAP, PI_L1,
};

use std::fmt;

use crate::error::GeometryError;
use crate::scalar::Coord;

/// A pixel: a point of the integer lattice, `|x|, |y| <= T::bound()`.
///
/// Ordering is lexicographic in `(x, y)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PixelPoint<T> {
    x: T,
    y: T,
}

impl<T: Coord> PixelPoint<T> {
    pub fn new(x: T, y: T) -> Result<Self, GeometryError> {
        check_bound(x)?;
        check_bound(y)?;
        Ok(Self { x, y })
    }

    pub fn origin() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
        }
    }

    /// Caller guarantees both coordinates are in bound.
    pub(crate) fn raw(x: T, y: T) -> Self {
        debug_assert!(x.in_bound() && y.in_bound());
        Self { x, y }
    }

    pub fn x(self) -> T {
        self.x
    }

    pub fn y(self) -> T {
        self.y
    }

    /// The point moved by `(dx, dy)`.
    pub fn translate(self, dx: T, dy: T) -> Result<Self, GeometryError> {
        Self::new(self.x.checked_add_or(dx)?, self.y.checked_add_or(dy)?)
    }

    /// The point with its coordinates exchanged (reflection in `y = x`).
    pub fn transpose(self) -> Self {
        Self {
            x: self.y,
            y: self.x,
        }
    }

    pub fn to_uv(self) -> UvPoint<T> {
        UvPoint {
            u: self.x + self.y,
            v: self.x - self.y,
        }
    }

    /// Inverse of [`to_uv`](Self::to_uv); fails when `u` and `v` differ in parity.
    pub fn from_uv(q: UvPoint<T>) -> Result<Self, GeometryError> {
        if !q.is_pixel() {
            return Err(GeometryError::Parity {
                u: q.u.to_string(),
                v: q.v.to_string(),
            });
        }
        let sum = q.u.checked_add_or(q.v)?;
        let diff = q.u.checked_sub_or(q.v)?;
        Self::new(sum / T::two(), diff / T::two())
    }
}

impl<T: Coord> fmt::Display for PixelPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point of the rotated frame `u = x + y`, `v = x − y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UvPoint<T> {
    pub u: T,
    pub v: T,
}

impl<T: Coord> UvPoint<T> {
    pub fn new(u: T, v: T) -> Self {
        Self { u, v }
    }

    /// Whether this `(u, v)` pair is the image of a pixel.
    pub fn is_pixel(self) -> bool {
        (self.u - self.v).is_even()
    }

    pub fn chebyshev_distance(self, other: Self) -> T {
        let du = (self.u - other.u).abs();
        let dv = (self.v - other.v).abs();
        du.max(dv)
    }
}

/// Taxicab distance `|Δx| + |Δy|`.
///
/// Exact for every pair of in-bound pixels; each coordinate width's bound
/// leaves headroom for the sum.
pub fn l1_distance<T: Coord>(p: PixelPoint<T>, q: PixelPoint<T>) -> T {
    (p.x - q.x).abs() + (p.y - q.y).abs()
}

pub(crate) fn check_bound<T: Coord>(value: T) -> Result<(), GeometryError> {
    if value.in_bound() {
        Ok(())
    } else {
        Err(GeometryError::OutOfBound {
            value: value.to_string(),
            bound: T::bound().to_string(),
        })
    }
}

/// Inclusive integer range `lo..=hi` for any coordinate width.
pub(crate) fn span<T: Coord>(lo: T, hi: T) -> impl Iterator<Item = T> {
    std::iter::successors((lo <= hi).then_some(lo), move |&t| {
        (t < hi).then(|| t + T::one())
    })
}
