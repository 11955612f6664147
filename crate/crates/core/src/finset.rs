use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::element::Point;

/// A finite set of points, kept sorted.
///
/// Under union this is the free semilattice over the point universe, with
/// the empty set as identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FinSet(BTreeSet<Point>);

impl FinSet {
    pub fn new() -> Self {
        FinSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Point) -> bool {
        self.0.contains(&x)
    }

    pub fn insert(&mut self, x: Point) -> bool {
        self.0.insert(x)
    }

    pub fn remove(&mut self, x: Point) -> bool {
        self.0.remove(&x)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Point> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Point> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Point> {
        self.0.last().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<Point> {
        &self.0
    }

    /// Set union: the semilattice product.
    pub fn join(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &FinSet) -> FinSet {
        FinSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &FinSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// All subsets, in order of their bitmask over the sorted elements.
    ///
    /// Panics if the set has 64 or more elements.
    pub fn subsets(&self) -> Vec<FinSet> {
        let elems: Vec<Point> = self.iter().collect();
        assert!(elems.len() < 64, "too many elements to enumerate subsets");
        (0..1u64 << elems.len())
            .map(|mask| {
                elems
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect()
    }

    /// Smallest natural number not in the set.
    pub fn least_absent(&self) -> Point {
        let mut x = 0;
        for y in self.iter() {
            if y != x {
                break;
            }
            x += 1;
        }
        x
    }
}

impl FromIterator<Point> for FinSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        FinSet(iter.into_iter().collect())
    }
}

impl From<BTreeSet<Point>> for FinSet {
    fn from(s: BTreeSet<Point>) -> Self {
        FinSet(s)
    }
}

impl<const N: usize> From<[Point; N]> for FinSet {
    fn from(xs: [Point; N]) -> Self {
        xs.into_iter().collect()
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
