use std::fmt;

use super::{check_bound, span, PixelPoint, PixelSet};
use crate::error::GeometryError;
use crate::scalar::Coord;

/// Ratio of a digital circle's circumference `8r` to its diameter `2r`.
pub const PI_L1: i64 = 4;

/// Largest radius enumerated without an explicit override (≈33.5M pixels).
pub const DEFAULT_ENUM_CAP: u64 = 4096;

/// Upper limit on the radius of any circle or disc that gets enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumCap(pub u64);

impl Default for EnumCap {
    fn default() -> Self {
        Self(DEFAULT_ENUM_CAP)
    }
}

impl EnumCap {
    pub fn check<T: Coord>(self, radius: T) -> Result<(), GeometryError> {
        match radius.to_u64() {
            Some(r) if r <= self.0 => Ok(()),
            _ => Err(GeometryError::EnumerationCap {
                radius: radius.to_string(),
                cap: self.0,
            }),
        }
    }
}

fn check_radius<T: Coord>(radius: T) -> Result<(), GeometryError> {
    if radius < T::zero() {
        return Err(GeometryError::NegativeRadius(radius.to_string()));
    }
    check_bound(radius)
}

/// All pixels at taxicab distance exactly `radius` from `center`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DigitalCircle<T> {
    center: PixelPoint<T>,
    radius: T,
}

impl<T: Coord> DigitalCircle<T> {
    pub fn new(center: PixelPoint<T>, radius: T) -> Result<Self, GeometryError> {
        check_radius(radius)?;
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> PixelPoint<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }
}

/// All pixels at taxicab distance at most `radius` from `center`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DigitalDisc<T> {
    center: PixelPoint<T>,
    radius: T,
}

impl<T: Coord> DigitalDisc<T> {
    pub fn new(center: PixelPoint<T>, radius: T) -> Result<Self, GeometryError> {
        check_radius(radius)?;
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> PixelPoint<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    /// The boundary circle of the same center and radius.
    pub fn boundary(&self) -> DigitalCircle<T> {
        DigitalCircle {
            center: self.center,
            radius: self.radius,
        }
    }

    pub fn contains(&self, p: PixelPoint<T>) -> bool {
        super::l1_distance(self.center, p) <= self.radius
    }

    pub fn translate(&self, dx: T, dy: T) -> Result<Self, GeometryError> {
        Self::new(self.center.translate(dx, dy)?, self.radius)
    }

    pub fn transpose(&self) -> Self {
        Self {
            center: self.center.transpose(),
            radius: self.radius,
        }
    }
}

impl<T: Coord> fmt::Display for DigitalDisc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({}, {})", self.center, self.radius)
    }
}

/// Every pixel within `radius` of `center` must itself be in bound.
fn check_extent<T: Coord>(center: PixelPoint<T>, radius: T) -> Result<(), GeometryError> {
    for c in [center.x(), center.y()] {
        check_bound(c.checked_add_or(radius)?)?;
        check_bound(c.checked_sub_or(radius)?)?;
    }
    Ok(())
}

pub fn enumerate_circle<T: Coord>(
    circle: &DigitalCircle<T>,
    cap: EnumCap,
) -> Result<PixelSet<T>, GeometryError> {
    cap.check(circle.radius)?;
    check_extent(circle.center, circle.radius)?;
    Ok(circle_pixels(circle.center, circle.radius).collect())
}

/// Lazily walks the pixels of a circle; the upper and lower arcs meet at
/// `dx = ±r`, where a pixel is yielded twice. Caller checks the extent.
pub(crate) fn circle_pixels<T: Coord>(
    center: PixelPoint<T>,
    r: T,
) -> impl Iterator<Item = PixelPoint<T>> {
    let (cx, cy) = (center.x(), center.y());
    span(-r, r).flat_map(move |dx| {
        let dy = r - dx.abs();
        [
            PixelPoint::raw(cx + dx, cy + dy),
            PixelPoint::raw(cx + dx, cy - dy),
        ]
    })
}

pub(crate) fn circle_extent_ok<T: Coord>(center: PixelPoint<T>, radius: T) -> bool {
    check_extent(center, radius).is_ok()
}

pub fn enumerate_disc<T: Coord>(
    disc: &DigitalDisc<T>,
    cap: EnumCap,
) -> Result<PixelSet<T>, GeometryError> {
    cap.check(disc.radius)?;
    check_extent(disc.center, disc.radius)?;
    let (cx, cy, r) = (disc.center.x(), disc.center.y(), disc.radius);
    let mut set = PixelSet::new();
    for dx in span(-r, r) {
        let reach = r - dx.abs();
        set.extend(span(-reach, reach).map(|dy| PixelPoint::raw(cx + dx, cy + dy)));
    }
    Ok(set)
}

/// `4r`, the pixel count of a digital circle of radius `r >= 1`.
///
/// At `r = 0` the circle is the single center pixel while the formula gives
/// zero, so that radius is rejected.
pub fn circle_cardinality_closed<T: Coord>(r: T) -> Result<T, GeometryError> {
    if r < T::one() {
        return Err(GeometryError::Domain(
            "circle cardinality 4r holds only for r >= 1 (the r = 0 circle is its center, 1 pixel)",
        ));
    }
    check_bound(r)?;
    T::from_count(4)?.checked_mul_or(r)
}

/// `8r`, the circumference of a digital circle of radius `r >= 1`.
pub fn circumference_closed<T: Coord>(r: T) -> Result<T, GeometryError> {
    if r < T::one() {
        return Err(GeometryError::Domain(
            "circumference 8r is defined for r >= 1",
        ));
    }
    check_bound(r)?;
    T::from_count(8)?.checked_mul_or(r)
}

/// `2R² + 2R + 1`, the pixel count of a digital disc.
pub fn disc_cardinality_closed<T: Coord>(radius: T) -> Result<T, GeometryError> {
    check_radius(radius)?;
    let two = T::two();
    let sq = radius.checked_mul_or(radius)?;
    two.checked_mul_or(sq)?
        .checked_add_or(two.checked_mul_or(radius)?)?
        .checked_add_or(T::one())
}
