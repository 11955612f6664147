//! Statements that look plausible but fail, each pinned by a concrete
//! element. The library implements the corrected forms noted alongside.

use ilambda_core::green::h_related;
use ilambda_core::oracle::Window;
use ilambda_core::topology::{
    common_member, continuity_witness, disjoint, inversion_witness, member,
    wf_inversion_counterexample,
};
use ilambda_core::{enumerate_window, CongruenceId, Error, FinSet, Flavor, Nbhd, PartialSelfmap};

fn el(s: &str) -> PartialSelfmap {
    s.parse().unwrap()
}

fn id() -> PartialSelfmap {
    PartialSelfmap::identity()
}

fn fs<const N: usize>(xs: [u64; N]) -> FinSet {
    FinSet::from(xs)
}

/// Collapsing two units does not pull the corank-one elements into their
/// class; only the elements of higher corank become related to each other.
#[test]
fn unit_collapse_stays_at_its_level() {
    let s0 = CongruenceId::S(0);
    let (a, b, g) = (id(), el("{0>1, 1>0}"), el("{-0}"));
    assert!(a != b && h_related(&a, &b) && s0.related(&a, &b));
    assert!(g.corank() > a.corank());
    assert!(!s0.related(&g, &a));
    assert!(s0.related(&g, &el("{-1}")));
}

/// A related H-pair of corank one with no lower partner does not force the
/// units apart: `S:0` relates such a pair and also two distinct units.
#[test]
fn lower_levels_can_collapse_independently() {
    let s0 = CongruenceId::S(0);
    let (a, b) = (el("{1>0, 2>1, -0}"), el("{2>0, -0}"));
    assert!(a != b && h_related(&a, &b) && s0.related(&a, &b));
    let window = enumerate_window(&Window::first(3)).unwrap();
    let lower_partner = window
        .iter()
        .any(|g| g.corank() < a.corank() && s0.related(g, &a));
    assert!(!lower_partner);
    let (u, v) = (id(), el("{0>1, 1>0}"));
    assert!(u.corank() < a.corank() && u != v && s0.related(&u, &v));
    // what does hold: distinct related elements below are H-related, one level down
    assert!(h_related(&u, &v) && u.corank() + 1 == a.corank());
}

/// Pinning only `F` and its image is not enough for products: a member of
/// `U_id(∅)` can swap a point into the hole of `b`.
#[test]
fn continuity_needs_more_than_the_image() {
    let (a, b) = (id(), el("{-1}"));
    let ab = a.compose(&b);
    let swap = el("{1>2, 2>1}");
    for flavor in Flavor::ALL {
        let u1 = Nbhd::new(flavor, a.clone(), FinSet::new()).unwrap();
        let u2 = Nbhd::new(flavor, b.clone(), FinSet::new()).unwrap();
        let u = Nbhd::new(flavor, ab.clone(), FinSet::new()).unwrap();
        assert!(member(&u1, &swap) && member(&u2, &b));
        assert!(!member(&u, &swap.compose(&b)), "{flavor}");

        let (f1, f2) = continuity_witness(&a, &b, &FinSet::new()).unwrap();
        assert_eq!((f1.clone(), f2), (fs([1]), FinSet::new()));
        let w1 = Nbhd::new(flavor, a.clone(), f1).unwrap();
        assert!(!member(&w1, &swap));
    }
}

/// In the weak topology a member of `U_g(F)` may map a fresh point onto a
/// point outside `ran g`; its inverse then has a domain no neighbourhood of
/// `g⁻¹` allows.
#[test]
fn weak_inversion_escapes() {
    let (g, f) = (el("{-1}"), FinSet::new());
    assert!(matches!(
        inversion_witness(Flavor::WF, &g, &f),
        Err(Error::InversionDiscontinuous(_))
    ));
    let b = wf_inversion_counterexample(&g, &f).unwrap().unwrap();
    let source = Nbhd::new(Flavor::WF, g.clone(), f).unwrap();
    // the empty constraint gives the largest neighbourhood of g⁻¹
    let widest = Nbhd::new(Flavor::WF, g.inverse(), FinSet::new()).unwrap();
    assert!(member(&source, &b));
    assert!(!member(&widest, &b.inverse()));
    assert_eq!(wf_inversion_counterexample(&id(), &fs([3])).unwrap(), None);
}

/// Agreement on the shared constraint points is not enough for two `F`
/// neighbourhoods to meet: the forced values must also be injective.
#[test]
fn forced_values_must_be_injective() {
    let n1 = Nbhd::new(Flavor::F, id(), fs([1])).unwrap();
    let n2 = Nbhd::new(Flavor::F, el("{1>2, 2>1}"), fs([2])).unwrap();
    assert!(n1.constraint().is_disjoint(n2.constraint()));
    assert!(disjoint(&n1, &n2).unwrap());
    assert_eq!(common_member(&n1, &n2).unwrap(), None);
    let window = enumerate_window(&Window::first(4)).unwrap();
    assert!(!window.iter().any(|w| member(&n1, w) && member(&n2, w)));
}
