//! Basic open sets of the two semigroup topologies and the witnesses that
//! make their continuity and separation claims checkable.
//!
//! A neighbourhood `U_a(F)` has a centre `a` and a finite constraint set
//! `F ⊆ dom a`. In the `F` flavour it holds the elements with the same
//! domain and range as `a` that agree with `a` on `F`; in the `WF` flavour
//! it holds the elements whose domain is contained in `dom a` and that agree
//! with `a` on `F`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::element::{PartialSelfmap, Point};
use crate::error::{Error, Result};
use crate::finset::FinSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    F,
    WF,
}

impl Flavor {
    pub const ALL: [Flavor; 2] = [Flavor::F, Flavor::WF];
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" => Ok(Flavor::F),
            "WF" => Ok(Flavor::WF),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: format!("unknown flavour `{s}` (expected F or WF)"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Nbhd {
    flavor: Flavor,
    center: PartialSelfmap,
    constraint: FinSet,
}

impl Nbhd {
    pub fn new(flavor: Flavor, center: PartialSelfmap, constraint: FinSet) -> Result<Self> {
        require_in_domain(&center, &constraint)?;
        Ok(Nbhd {
            flavor,
            center,
            constraint,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn center(&self) -> &PartialSelfmap {
        &self.center
    }

    pub fn constraint(&self) -> &FinSet {
        &self.constraint
    }

    pub fn contains(&self, b: &PartialSelfmap) -> bool {
        member(self, b)
    }
}

impl fmt::Display for Nbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U_{}({}; {})", self.flavor, self.center, self.constraint)
    }
}

fn require_in_domain(a: &PartialSelfmap, set: &FinSet) -> Result<()> {
    if set.iter().all(|x| a.in_domain(x)) {
        Ok(())
    } else {
        Err(Error::ConstraintOutsideDomain(set.to_string()))
    }
}

pub fn member(n: &Nbhd, b: &PartialSelfmap) -> bool {
    let c = &n.center;
    let shape = match n.flavor {
        Flavor::F => c.holes_set() == b.holes_set() && c.range_complement() == b.range_complement(),
        Flavor::WF => c.holes_set().is_subset(b.holes_set()),
    };
    shape && n.constraint.iter().all(|x| b.apply(x) == c.apply(x))
}

/// The combined point assignment of two neighbourhoods, if it is a
/// consistent partial injection.
fn forced_assignment(n1: &Nbhd, n2: &Nbhd) -> Option<BTreeMap<Point, Point>> {
    let mut map = BTreeMap::new();
    let mut images = BTreeSet::new();
    for n in [n1, n2] {
        for x in n.constraint.iter() {
            let y = n.center.apply(x).expect("constraint lies in the domain");
            match map.insert(x, y) {
                Some(prev) if prev != y => return None,
                Some(_) => {}
                None => {
                    if !images.insert(y) {
                        return None;
                    }
                }
            }
        }
    }
    Some(map)
}

/// A common member of two same-flavour neighbourhoods, or `None` when they
/// are disjoint.
pub fn common_member(n1: &Nbhd, n2: &Nbhd) -> Result<Option<PartialSelfmap>> {
    if n1.flavor != n2.flavor {
        return Err(Error::FlavorMismatch);
    }
    let (c1, c2) = (&n1.center, &n2.center);
    match n1.flavor {
        Flavor::F => {
            if c1.holes_set() != c2.holes_set() || c1.range_complement() != c2.range_complement() {
                return Ok(None);
            }
            let Some(forced) = forced_assignment(n1, n2) else {
                return Ok(None);
            };
            Ok(Some(extend_to_bijection(
                &forced,
                &c1.holes(),
                &c1.range_complement(),
            )))
        }
        Flavor::WF => {
            let holes = c1.holes().join(&c2.holes());
            let constrained = n1.constraint.join(&n2.constraint);
            if !constrained.is_disjoint(&holes) {
                return Ok(None);
            }
            let Some(forced) = forced_assignment(n1, n2) else {
                return Ok(None);
            };
            // forced values, identity elsewhere, holes at every other
            // touched point
            let points: BTreeSet<Point> = forced
                .iter()
                .flat_map(|(&x, &y)| [x, y])
                .chain(holes.iter())
                .collect();
            let w = PartialSelfmap::from_local(points, |p| forced.get(&p).copied())
                .expect("consistent injective assignment");
            Ok(Some(w))
        }
    }
}

/// Extends a finite partial injection `forced` (inside `dom`, into `ran`) to
/// an element with domain `λ \ dom_c` and range `λ \ ran_c`, identity off a
/// finite set. Requires `|dom_c| = |ran_c|`.
fn extend_to_bijection(
    forced: &BTreeMap<Point, Point>,
    dom_c: &FinSet,
    ran_c: &FinSet,
) -> PartialSelfmap {
    let points: BTreeSet<Point> = forced
        .iter()
        .flat_map(|(&x, &y)| [x, y])
        .chain(dom_c.iter())
        .chain(ran_c.iter())
        .collect();
    let images: BTreeSet<Point> = forced.values().copied().collect();
    let free_src: Vec<Point> = points
        .iter()
        .copied()
        .filter(|p| !dom_c.contains(*p) && !forced.contains_key(p))
        .collect();
    let free_dst: Vec<Point> = points
        .iter()
        .copied()
        .filter(|p| !ran_c.contains(*p) && !images.contains(p))
        .collect();
    debug_assert_eq!(free_src.len(), free_dst.len());
    PartialSelfmap::from_local(points.iter().copied(), |p| {
        if let Some(&y) = forced.get(&p) {
            Some(y)
        } else {
            free_src.iter().position(|&s| s == p).map(|i| free_dst[i])
        }
    })
    .expect("matching of equal-size complements")
}

pub fn disjoint(n1: &Nbhd, n2: &Nbhd) -> Result<bool> {
    Ok(common_member(n1, n2)?.is_none())
}

/// Constraint sets `(F1, F2)` with `U_a(F1) ∩ U_b(F2) = ∅`.
pub fn separate(
    a: &PartialSelfmap,
    b: &PartialSelfmap,
    flavor: Flavor,
) -> Result<(FinSet, FinSet)> {
    if a == b {
        return Err(Error::EqualElements);
    }
    let first_difference = || {
        a.support()
            .join(&b.support())
            .iter()
            .find(|&x| a.apply(x) != b.apply(x))
            .expect("distinct elements differ on the joint support")
    };
    let single = |x: Point| FinSet::from([x]);
    match flavor {
        Flavor::F => {
            if a.holes_set() != b.holes_set() || a.range_complement() != b.range_complement() {
                Ok((FinSet::new(), FinSet::new()))
            } else {
                let x = first_difference();
                Ok((single(x), single(x)))
            }
        }
        Flavor::WF => {
            let (ha, hb) = (a.holes(), b.holes());
            if ha == hb {
                let x = first_difference();
                return Ok((single(x), single(x)));
            }
            let only_b = ha.difference(&hb).first(); // in dom b, not dom a
            let only_a = hb.difference(&ha).first(); // in dom a, not dom b
            match (only_a, only_b) {
                // dom a ⊊ dom b
                (None, Some(x)) => Ok((single(ha.least_absent()), single(x))),
                // dom b ⊊ dom a
                (Some(x), None) => Ok((single(x), single(hb.least_absent()))),
                (Some(y), Some(x)) => Ok((single(y), single(x))),
                (None, None) => unreachable!("hole sets differ"),
            }
        }
    }
}

/// Constraint sets `(F1, F2)` with `U_a(F1) * U_b(F2) ⊆ U_{ab}(F)` in both
/// flavours.
///
/// Besides `F` and its image `F a`, `F1` pins the points that `a` sends into
/// the holes of `b`, and `F2` pins the points of `dom b` outside `ran a`.
/// Without them a member of `U_a(F1)` could route a point of `dom(ab)` into a
/// hole of `b`, or a member of `U_b(F2)` could move `ran(ab)`.
pub fn continuity_witness(
    a: &PartialSelfmap,
    b: &PartialSelfmap,
    f: &FinSet,
) -> Result<(FinSet, FinSet)> {
    let ab = a.compose(b);
    require_in_domain(&ab, f)?;
    let into_holes = b
        .holes()
        .iter()
        .filter_map(|h| a.preimage(h))
        .collect::<FinSet>();
    let f1 = f.join(&into_holes);
    let image: FinSet = f.iter().map(|x| a.apply(x).expect("in dom a")).collect();
    let outside_range = a
        .range_complement()
        .iter()
        .filter(|&y| b.in_domain(y))
        .collect::<FinSet>();
    Ok((f1, image.join(&outside_range)))
}

/// Constraint set `K` with `U_g(F)⁻¹ ⊆ U_{g⁻¹}(K)`.
///
/// In the `WF` flavour this only exists when `g` is a total bijection; see
/// [`wf_inversion_counterexample`].
pub fn inversion_witness(flavor: Flavor, g: &PartialSelfmap, f: &FinSet) -> Result<FinSet> {
    require_in_domain(g, f)?;
    if flavor == Flavor::WF && !g.is_total_bijection() {
        return Err(Error::InversionDiscontinuous(g.to_string()));
    }
    Ok(f.iter().map(|x| g.apply(x).expect("in dom g")).collect())
}

/// For `g` of positive corank, a member `b` of `U_g(F)` in the `WF` flavour
/// whose inverse lies outside every `WF` neighbourhood of `g⁻¹`: `b` sends a
/// fresh point onto a point missing from `ran g`.
pub fn wf_inversion_counterexample(
    g: &PartialSelfmap,
    f: &FinSet,
) -> Result<Option<PartialSelfmap>> {
    require_in_domain(g, f)?;
    let Some(missing) = g.range_complement().first() else {
        return Ok(None);
    };
    let support = g.support().join(f);
    let fresh = support.last().map_or(0, |m| m + 1);
    let points = support.iter().chain([fresh]);
    let b = PartialSelfmap::from_local(points, |p| {
        if p == fresh {
            Some(missing)
        } else {
            g.apply(p)
        }
    })?;
    Ok(Some(b))
}
