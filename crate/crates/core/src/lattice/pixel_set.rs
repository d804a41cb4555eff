use std::collections::btree_set;
use std::collections::BTreeSet;

use super::PixelPoint;
use crate::error::GeometryError;
use crate::scalar::Coord;

/// A finite set of pixels.
///
/// Backed by an ordered set, so iteration order (lexicographic in `(x, y)`)
/// and every derived output are deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PixelSet<T> {
    points: BTreeSet<PixelPoint<T>>,
}

impl<T: Coord> PixelSet<T> {
    pub fn new() -> Self {
        Self {
            points: BTreeSet::new(),
        }
    }

    /// Adds a pixel; returns `false` if it was already present.
    pub fn insert(&mut self, p: PixelPoint<T>) -> bool {
        self.points.insert(p)
    }

    pub fn contains(&self, p: &PixelPoint<T>) -> bool {
        self.points.contains(p)
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, PixelPoint<T>> {
        self.points.iter()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.points.union(&other.points).copied().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.points.intersection(&other.points).copied().collect()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.points.difference(&other.points).copied().collect()
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.points
            .symmetric_difference(&other.points)
            .copied()
            .collect()
    }

    /// `card(self ∩ other)` without materializing the intersection.
    pub fn intersection_len(&self, other: &Self) -> usize {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().filter(|p| large.contains(p)).count()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.points.is_disjoint(&other.points)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.points.is_subset(&other.points)
    }

    /// Every pixel moved by `(dx, dy)`.
    pub fn translate(&self, dx: T, dy: T) -> Result<Self, GeometryError> {
        self.iter().map(|p| p.translate(dx, dy)).collect()
    }

    /// `(x_min, x_max, y_min, y_max)`, or `None` for the empty set.
    pub fn bounding_box(&self) -> Option<(T, T, T, T)> {
        let first = self.points.first()?;
        let last = self.points.last()?;
        let (y_min, y_max) = self.iter().fold((first.y(), first.y()), |(lo, hi), p| {
            (lo.min(p.y()), hi.max(p.y()))
        });
        Some((first.x(), last.x(), y_min, y_max))
    }
}

impl<T: Coord> FromIterator<PixelPoint<T>> for PixelSet<T> {
    fn from_iter<I: IntoIterator<Item = PixelPoint<T>>>(iter: I) -> Self {
        Self {
            points: iter.into_iter().collect(),
        }
    }
}

impl<T: Coord> Extend<PixelPoint<T>> for PixelSet<T> {
    fn extend<I: IntoIterator<Item = PixelPoint<T>>>(&mut self, iter: I) {
        self.points.extend(iter);
    }
}

impl<'a, T: Coord> IntoIterator for &'a PixelSet<T> {
    type Item = &'a PixelPoint<T>;
    type IntoIter = btree_set::Iter<'a, PixelPoint<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl<T: Coord> IntoIterator for PixelSet<T> {
    type Item = PixelPoint<T>;
    type IntoIter = btree_set::IntoIter<PixelPoint<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.into_iter()
    }
}
