//! Integer scalar abstraction for lattice coordinates.
//!
//! Every coordinate, radius and closed-form value in the crate is an exact
//! signed integer. The crate is generic over the width of that integer; each
//! width carries a coordinate bound small enough that the cardinality and
//! proximity formulas stay exact (closed forms additionally use checked
//! arithmetic and report overflow instead of wrapping).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{Euclid, NumCast, PrimInt, Signed};

use crate::error::GeometryError;

/// A signed primitive integer usable as a lattice coordinate.
pub trait Coord:
    PrimInt + Signed + Euclid + NumCast + Hash + Debug + Display + Default + Send + Sync + 'static
{
    /// Largest admissible absolute value of a coordinate or radius.
    fn bound() -> Self;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// `true` when `|self| <= bound()`.
    fn in_bound(self) -> bool {
        self.abs() <= Self::bound()
    }

    fn is_even(self) -> bool {
        self.rem_euclid(&Self::two()).is_zero()
    }

    /// Converts a count (set cardinality, loop index) into the coordinate type.
    fn from_count(n: usize) -> Result<Self, GeometryError> {
        <Self as NumCast>::from(n).ok_or(GeometryError::Overflow)
    }

    fn checked_add_or(self, rhs: Self) -> Result<Self, GeometryError> {
        self.checked_add(&rhs).ok_or(GeometryError::Overflow)
    }

    fn checked_sub_or(self, rhs: Self) -> Result<Self, GeometryError> {
        self.checked_sub(&rhs).ok_or(GeometryError::Overflow)
    }

    fn checked_mul_or(self, rhs: Self) -> Result<Self, GeometryError> {
        self.checked_mul(&rhs).ok_or(GeometryError::Overflow)
    }
}

impl Coord for i32 {
    fn bound() -> Self {
        1 << 13
    }
}

impl Coord for i64 {
    fn bound() -> Self {
        1 << 30
    }
}

impl Coord for i128 {
    fn bound() -> Self {
        1 << 62
    }
}

/// Number of integers `t` in `lo..=hi` with `t ≡ parity (mod 2)`.
pub(crate) fn count_with_parity<T: Coord>(lo: T, hi: T, parity: T) -> T {
    if lo > hi {
        return T::zero();
    }
    let two = T::two();
    // floor((hi - p) / 2) - floor((lo - 1 - p) / 2)
    (hi - parity).div_euclid(&two) - (lo - T::one() - parity).div_euclid(&two)
}
