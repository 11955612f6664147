//! Canonical representation of injective partial selfmaps of the naturals
//! that are the identity almost everywhere.
//!
//! An element is stored as its finite set of moved pairs `x > y` (with
//! `x != y`) together with the finite set of domain holes. Every point that
//! is neither moved nor a hole is fixed. Equality of values is therefore
//! structural equality of this data.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::finset::FinSet;

/// A point of the countable universe, modelled as a natural number.
pub type Point = u64;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialSelfmap {
    moved: BTreeMap<Point, Point>,
    holes: BTreeSet<Point>,
}

impl PartialSelfmap {
    /// The identity map.
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds the canonical element from raw pairs and holes.
    ///
    /// Identity pairs are accepted and dropped. Duplicate sources or targets,
    /// a source listed as a hole, and a target that would collide with the
    /// cofinite identity part are rejected.
    pub fn make<P, H>(pairs: P, holes: H) -> Result<Self>
    where
        P: IntoIterator<Item = (Point, Point)>,
        H: IntoIterator<Item = Point>,
    {
        let holes: BTreeSet<Point> = holes.into_iter().collect();
        let mut sources = BTreeSet::new();
        let mut targets = BTreeSet::new();
        let mut moved = BTreeMap::new();
        for (x, y) in pairs {
            if !sources.insert(x) {
                return Err(Error::NonInjective(x));
            }
            if !targets.insert(y) {
                return Err(Error::NonInjective(y));
            }
            if holes.contains(&x) {
                return Err(Error::SourceIsHole(x));
            }
            if x != y {
                moved.insert(x, y);
            }
        }
        for &y in moved.values() {
            if !moved.contains_key(&y) && !holes.contains(&y) {
                return Err(Error::TargetIsFixed(y));
            }
        }
        Ok(PartialSelfmap { moved, holes })
    }

    /// Builds an element from its action on a finite set of points, being the
    /// identity everywhere else. `None` marks a hole.
    pub fn from_local<I, F>(points: I, action: F) -> Result<Self>
    where
        I: IntoIterator<Item = Point>,
        F: Fn(Point) -> Option<Point>,
    {
        let mut pairs = Vec::new();
        let mut holes = Vec::new();
        for p in points {
            match action(p) {
                Some(q) => pairs.push((p, q)),
                None => holes.push(p),
            }
        }
        Self::make(pairs, holes)
    }

    /// The idempotent with the given holes.
    pub fn idempotent(holes: &FinSet) -> Self {
        PartialSelfmap {
            moved: BTreeMap::new(),
            holes: holes.as_set().clone(),
        }
    }

    pub fn apply(&self, x: Point) -> Option<Point> {
        if self.holes.contains(&x) {
            None
        } else {
            Some(self.moved.get(&x).copied().unwrap_or(x))
        }
    }

    /// Preimage of `y`, if `y` lies in the range.
    pub fn preimage(&self, y: Point) -> Option<Point> {
        if let Some((&x, _)) = self.moved.iter().find(|(_, &t)| t == y) {
            return Some(x);
        }
        if self.moved.contains_key(&y) || self.holes.contains(&y) {
            None
        } else {
            Some(y)
        }
    }

    /// Left-to-right composition: `x (a * b) = (x a) b`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut moved = BTreeMap::new();
        let mut holes = BTreeSet::new();
        let points: BTreeSet<Point> = self.support_iter().chain(other.support_iter()).collect();
        for x in points {
            match self.apply(x).and_then(|y| other.apply(y)) {
                None => {
                    holes.insert(x);
                }
                Some(z) if z != x => {
                    moved.insert(x, z);
                }
                Some(_) => {}
            }
        }
        let out = PartialSelfmap { moved, holes };
        debug_assert!(out.is_canonical());
        out
    }

    pub fn inverse(&self) -> Self {
        PartialSelfmap {
            moved: self.moved.iter().map(|(&x, &y)| (y, x)).collect(),
            holes: self.range_complement_set(),
        }
    }

    /// `|λ \ dom α|`, which always equals `|λ \ ran α|`.
    pub fn corank(&self) -> usize {
        self.holes.len()
    }

    pub fn holes(&self) -> FinSet {
        self.holes.clone().into()
    }

    pub fn holes_set(&self) -> &BTreeSet<Point> {
        &self.holes
    }

    /// Points outside the range: sources and holes that are not images.
    pub fn range_complement(&self) -> FinSet {
        self.range_complement_set().into()
    }

    fn range_complement_set(&self) -> BTreeSet<Point> {
        let targets: BTreeSet<Point> = self.moved.values().copied().collect();
        self.moved
            .keys()
            .chain(self.holes.iter())
            .copied()
            .filter(|p| !targets.contains(p))
            .collect()
    }

    pub fn in_domain(&self, x: Point) -> bool {
        !self.holes.contains(&x)
    }

    pub fn in_range(&self, y: Point) -> bool {
        self.preimage(y).is_some()
    }

    /// Moved pairs `(source, target)` in increasing source order.
    pub fn moved(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.moved.iter().map(|(&x, &y)| (x, y))
    }

    pub fn moved_count(&self) -> usize {
        self.moved.len()
    }

    fn support_iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.moved
            .iter()
            .flat_map(|(&x, &y)| [x, y])
            .chain(self.holes.iter().copied())
    }

    /// Sources, targets and holes: everything outside is a fixed point.
    pub fn support(&self) -> FinSet {
        self.support_iter().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty() && self.holes.is_empty()
    }

    pub fn is_idempotent(&self) -> bool {
        self.moved.is_empty()
    }

    /// `dom α = ran α`.
    pub fn is_permutation_of_domain(&self) -> bool {
        self.holes == self.range_complement_set()
    }

    /// Corank zero: a bijection of the whole universe.
    pub fn is_total_bijection(&self) -> bool {
        self.holes.is_empty()
    }

    fn is_canonical(&self) -> bool {
        let targets: BTreeSet<Point> = self.moved.values().copied().collect();
        targets.len() == self.moved.len()
            && self.moved.iter().all(|(x, y)| x != y)
            && self.moved.keys().all(|x| !self.holes.contains(x))
            && targets
                .iter()
                .all(|y| self.moved.contains_key(y) || self.holes.contains(y))
    }
}

impl Mul for &PartialSelfmap {
    type Output = PartialSelfmap;

    fn mul(self, rhs: &PartialSelfmap) -> PartialSelfmap {
        self.compose(rhs)
    }
}

impl Mul for PartialSelfmap {
    type Output = PartialSelfmap;

    fn mul(self, rhs: PartialSelfmap) -> PartialSelfmap {
        self.compose(&rhs)
    }
}

impl Serialize for PartialSelfmap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
