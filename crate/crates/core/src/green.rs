//! Green's relations, the natural order on idempotents, the ideals `I_n`,
//! and the constructive witnesses for `D` and `J`.
//!
//! In this monoid `R` is equality of domains, `L` equality of ranges, and
//! `D = J` is equality of coranks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::element::{PartialSelfmap, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
    J,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 5] = [Self::R, Self::L, Self::H, Self::D, Self::J];

    pub fn relates(self, a: &PartialSelfmap, b: &PartialSelfmap) -> bool {
        match self {
            Self::R => r_related(a, b),
            Self::L => l_related(a, b),
            Self::H => h_related(a, b),
            Self::D => d_related(a, b),
            Self::J => j_related(a, b),
        }
    }
}

impl FromStr for GreenRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(Self::R),
            "L" => Ok(Self::L),
            "H" => Ok(Self::H),
            "D" => Ok(Self::D),
            "J" => Ok(Self::J),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: format!("unknown Green relation `{s}`"),
            }),
        }
    }
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Equal domains.
pub fn r_related(a: &PartialSelfmap, b: &PartialSelfmap) -> bool {
    a.holes_set() == b.holes_set()
}

/// Equal ranges.
pub fn l_related(a: &PartialSelfmap, b: &PartialSelfmap) -> bool {
    a.range_complement() == b.range_complement()
}

pub fn h_related(a: &PartialSelfmap, b: &PartialSelfmap) -> bool {
    r_related(a, b) && l_related(a, b)
}

/// Equal coranks.
pub fn d_related(a: &PartialSelfmap, b: &PartialSelfmap) -> bool {
    a.corank() == b.corank()
}

/// `J` coincides with `D` in this monoid.
pub fn j_related(a: &PartialSelfmap, b: &PartialSelfmap) -> bool {
    d_related(a, b)
}

fn require_idempotent(e: &PartialSelfmap) -> Result<()> {
    if e.is_idempotent() {
        Ok(())
    } else {
        Err(Error::NotIdempotent(e.to_string()))
    }
}

/// Natural order on idempotents: `e <= i` iff `dom e ⊆ dom i`.
pub fn nat_leq(e: &PartialSelfmap, i: &PartialSelfmap) -> Result<bool> {
    require_idempotent(e)?;
    require_idempotent(i)?;
    Ok(i.holes_set().is_subset(e.holes_set()))
}

/// Membership in the ideal `I_n` of elements of corank at least `n`.
pub fn ideal_member(a: &PartialSelfmap, n: usize) -> bool {
    a.corank() >= n
}

fn joint_support(a: &PartialSelfmap, b: &PartialSelfmap) -> BTreeSet<Point> {
    a.support().join(&b.support()).as_set().clone()
}

fn require_d(a: &PartialSelfmap, b: &PartialSelfmap) -> Result<()> {
    if d_related(a, b) {
        Ok(())
    } else {
        Err(Error::NotDRelated(a.to_string(), b.to_string()))
    }
}

/// Returns `c` with `a L c` and `c R b`.
///
/// Off the joint support both elements are the identity, so `c` is taken to
/// be the identity there too; on the joint support it matches the sorted
/// points of `dom b` to the sorted points of `ran a`.
pub fn d_witness(a: &PartialSelfmap, b: &PartialSelfmap) -> Result<PartialSelfmap> {
    require_d(a, b)?;
    let support = joint_support(a, b);
    let sources: Vec<Point> = support
        .iter()
        .copied()
        .filter(|&p| b.in_domain(p))
        .collect();
    let targets: Vec<Point> = support.iter().copied().filter(|&p| a.in_range(p)).collect();
    debug_assert_eq!(sources.len(), targets.len());
    PartialSelfmap::from_local(support.iter().copied(), |p| {
        sources.iter().position(|&s| s == p).map(|i| targets[i])
    })
}

/// Returns `(c, d)` with `c * b * d = a`, both of the common corank.
pub fn j_factor(
    a: &PartialSelfmap,
    b: &PartialSelfmap,
) -> Result<(PartialSelfmap, PartialSelfmap)> {
    require_d(a, b)?;
    let support = joint_support(a, b);
    let a_dom: Vec<Point> = support
        .iter()
        .copied()
        .filter(|&p| a.in_domain(p))
        .collect();
    let b_dom: Vec<Point> = support
        .iter()
        .copied()
        .filter(|&p| b.in_domain(p))
        .collect();
    debug_assert_eq!(a_dom.len(), b_dom.len());
    let left = PartialSelfmap::from_local(support.iter().copied(), |p| {
        a_dom.iter().position(|&x| x == p).map(|i| b_dom[i])
    })?;
    // b-images of the matched points go back to the a-images
    let b_img: Vec<Point> = b_dom
        .iter()
        .map(|&y| b.apply(y).expect("in domain"))
        .collect();
    let a_img: Vec<Point> = a_dom
        .iter()
        .map(|&x| a.apply(x).expect("in domain"))
        .collect();
    let right = PartialSelfmap::from_local(support.iter().copied(), |p| {
        b_img.iter().position(|&y| y == p).map(|i| a_img[i])
    })?;
    Ok((left, right))
}

/// Membership of `a` in the local submonoid `e S e`.
pub fn local_member(a: &PartialSelfmap, e: &PartialSelfmap) -> Result<bool> {
    require_idempotent(e)?;
    let ran_c = a.range_complement();
    Ok(e.holes_set().is_subset(a.holes_set()) && e.holes().is_subset(&ran_c))
}

/// Relabels `a` along the total bijection `pi`: returns `pi⁻¹ a pi`.
pub fn rename(a: &PartialSelfmap, pi: &PartialSelfmap) -> Result<PartialSelfmap> {
    if !pi.is_total_bijection() {
        return Err(Error::NotBijection(pi.to_string()));
    }
    Ok(pi.inverse().compose(a).compose(pi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> PartialSelfmap {
        s.parse().unwrap()
    }

    fn id() -> PartialSelfmap {
        PartialSelfmap::identity()
    }

    #[test]
    fn r_examples() {
        assert!(r_related(&el("{1>2,2>1}"), &id()));
        assert!(r_related(&el("{1>3,-3}"), &el("{-3}")));
        assert!(!r_related(&el("{-1}"), &el("{-2}")));
    }

    #[test]
    fn l_examples() {
        assert!(l_related(&id(), &el("{1>2,2>1}")));
        assert!(l_related(&el("{1>3,-3}"), &el("{-1}")));
        assert!(!l_related(&el("{-1}"), &el("{-2}")));
    }

    #[test]
    fn h_d_j_examples() {
        assert!(h_related(&id(), &el("{1>2,2>1}")));
        assert!(d_related(&el("{-1}"), &el("{-2}")));
        assert!(j_related(&el("{-1}"), &el("{-2}")));
        assert!(!h_related(&el("{-1}"), &el("{-2}")));
    }

    #[test]
    fn nat_leq_examples() {
        assert!(nat_leq(&el("{-1,-2}"), &el("{-1}")).unwrap());
        let e = el("{-4, -6}");
        assert!(nat_leq(&e, &e).unwrap());
        assert!(!nat_leq(&el("{-1}"), &el("{-2}")).unwrap());
        assert!(!nat_leq(&el("{-2}"), &el("{-1}")).unwrap());
        assert!(matches!(
            nat_leq(&el("{1>2,2>1}"), &id()),
            Err(Error::NotIdempotent(_))
        ));
    }

    #[test]
    fn ideal_examples() {
        assert!(ideal_member(&id(), 0));
        assert!(ideal_member(&el("{-1}"), 1));
        assert!(!ideal_member(&el("{-1}"), 2));
    }

    fn check_d_witness(a: &PartialSelfmap, b: &PartialSelfmap) -> PartialSelfmap {
        let c = d_witness(a, b).unwrap();
        assert!(l_related(a, &c), "{a} L {c}");
        assert!(r_related(&c, b), "{c} R {b}");
        c
    }

    #[test]
    fn d_witness_examples() {
        let a = el("{1>3, 4>1, -3}");
        check_d_witness(&a, &a);
        let c = check_d_witness(&el("{-1}"), &el("{-2}"));
        assert_eq!(c, el("{1>2, -2}"));
        let c = check_d_witness(&id(), &el("{1>2,2>1}"));
        assert!(c.is_total_bijection());
        assert!(matches!(
            d_witness(&id(), &el("{-1}")),
            Err(Error::NotDRelated(..))
        ));
    }

    fn check_j_factor(a: &PartialSelfmap, b: &PartialSelfmap) -> (PartialSelfmap, PartialSelfmap) {
        let (c, d) = j_factor(a, b).unwrap();
        assert_eq!(&(&c * b) * &d, *a);
        assert_eq!(c.corank(), a.corank());
        assert_eq!(d.corank(), a.corank());
        (c, d)
    }

    #[test]
    fn j_factor_examples() {
        let t = el("{1>2,2>1}");
        assert_eq!(check_j_factor(&t, &t), (id(), id()));
        check_j_factor(&el("{-1}"), &el("{-2}"));
        check_j_factor(&t, &el("{1>2,2>3,3>1}"));
        assert!(j_factor(&el("{-1}"), &id()).is_err());
    }

    #[test]
    fn local_member_examples() {
        assert!(!local_member(&id(), &el("{-1}")).unwrap());
        assert!(local_member(&el("{-1}"), &el("{-1}")).unwrap());
        assert!(!local_member(&el("{1>3,-3}"), &el("{-3}")).unwrap());
        assert!(local_member(&el("{2>4, 4>2, -1}"), &el("{-1}")).unwrap());
        assert!(local_member(&id(), &el("{2>3,3>2}")).is_err());
    }

    #[test]
    fn rename_examples() {
        let a = el("{1>3, -3}");
        assert_eq!(rename(&a, &id()).unwrap(), a);
        assert_eq!(rename(&el("{-1}"), &el("{1>2,2>1}")).unwrap(), el("{-2}"));
        assert!(matches!(
            rename(&a, &el("{-1}")),
            Err(Error::NotBijection(_))
        ));
    }

    #[test]
    fn relation_names_round_trip() {
        for r in GreenRelation::ALL {
            assert_eq!(r.to_string().parse::<GreenRelation>().unwrap(), r);
        }
        assert!("X".parse::<GreenRelation>().is_err());
    }
}
