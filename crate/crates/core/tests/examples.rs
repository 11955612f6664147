//! Worked values for every public operation.

use ilambda_core::congruence::ClassLabel;
use ilambda_core::green::{
    d_related, d_witness, h_related, ideal_member, j_factor, l_related, local_member, nat_leq,
    r_related, rename,
};
use ilambda_core::oracle::Window;
use ilambda_core::semilattice::{
    down_set_in_window, f_solver, from_idempotent, join, maximal_chain_up, to_idempotent, up_set,
};
use ilambda_core::topology::{
    common_member, continuity_witness, disjoint, inversion_witness, member, separate,
};
use ilambda_core::{
    enumerate_window, eval_expr, fiber_count, principal_congruence, sign, solve_left, solve_right,
    verify, CongruenceId, Error, FinSet, Flavor, Nbhd, Parity, PartialSelfmap, Suite, VerifyConfig,
};

fn el(s: &str) -> PartialSelfmap {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn id() -> PartialSelfmap {
    PartialSelfmap::identity()
}

fn fs<const N: usize>(xs: [u64; N]) -> FinSet {
    FinSet::from(xs)
}

fn nb(flavor: Flavor, c: &str, f: FinSet) -> Nbhd {
    Nbhd::new(flavor, el(c), f).unwrap()
}

#[test]
fn construction() {
    assert_eq!(PartialSelfmap::make([], []).unwrap(), id());
    assert_eq!(
        PartialSelfmap::make([(1, 1), (2, 3)], [3]).unwrap(),
        el("{2>3, -3}")
    );
    assert_eq!(
        PartialSelfmap::make([(1, 2)], []),
        Err(Error::TargetIsFixed(2))
    );
    assert_eq!(
        PartialSelfmap::make([(2, 3)], [3]).unwrap().to_string(),
        "{2>3, -3}"
    );
    assert_eq!(el("id"), id());
    assert_eq!(
        el("{1>2, 2>1}"),
        PartialSelfmap::make([(1, 2), (2, 1)], []).unwrap()
    );
}

#[test]
fn evaluation() {
    let t = el("{1>2,2>1}");
    assert_eq!(t.apply(1), Some(2));
    assert_eq!(el("{-3}").apply(3), None);
    assert_eq!(el("{-3}").apply(7), Some(7));
    assert_eq!(t.compose(&t), id());
    assert_eq!(el("{-1}").compose(&el("{-2}")), el("{-1,-2}"));
    assert_eq!(el("{1>3,-3}").compose(&el("{3>1,-1}")), el("{-3}"));
    assert_eq!(eval_expr("{1>2,2>1} * {1>2,2>1}").unwrap(), id());
}

#[test]
fn inverses_and_shape() {
    assert_eq!(el("{1>2,2>1}").inverse(), el("{1>2,2>1}"));
    assert_eq!(el("{1>3,-3}").inverse(), el("{3>1,-1}"));
    assert_eq!(id().inverse(), id());
    assert_eq!(id().corank(), 0);
    assert_eq!(el("{-1,-2}").corank(), 2);
    assert_eq!(el("{1>3,-3}").corank(), 1);
    assert!(el("{-5}").is_idempotent());
    assert!(!el("{1>3,-3}").is_permutation_of_domain());
    assert!(id().support().is_empty());
}

#[test]
fn green_relations() {
    assert!(r_related(&el("{1>2,2>1}"), &id()));
    assert!(r_related(&el("{1>3,-3}"), &el("{-3}")));
    assert!(!r_related(&el("{-1}"), &el("{-2}")));
    assert!(l_related(&id(), &el("{1>2,2>1}")));
    assert!(l_related(&el("{1>3,-3}"), &el("{-1}")));
    assert!(!l_related(&el("{-1}"), &el("{-2}")));
    assert!(h_related(&id(), &el("{1>2,2>1}")));
    assert!(d_related(&el("{-1}"), &el("{-2}")));
    assert!(!h_related(&el("{-1}"), &el("{-2}")));
}

#[test]
fn order_and_ideals() {
    assert!(nat_leq(&el("{-1,-2}"), &el("{-1}")).unwrap());
    assert!(nat_leq(&el("{-4}"), &el("{-4}")).unwrap());
    assert!(!nat_leq(&el("{-1}"), &el("{-2}")).unwrap());
    assert!(!nat_leq(&el("{-2}"), &el("{-1}")).unwrap());
    assert!(ideal_member(&id(), 0));
    assert!(ideal_member(&el("{-1}"), 1));
    assert!(!ideal_member(&el("{-1}"), 2));
}

#[test]
fn constructive_factorizations() {
    let (a, b) = (el("{-1}"), el("{-2}"));
    let c = d_witness(&a, &b).unwrap();
    assert_eq!(c.holes(), fs([2]));
    assert_eq!(c.range_complement(), fs([1]));
    let c = d_witness(&id(), &el("{1>2,2>1}")).unwrap();
    assert!(c.is_total_bijection());

    let (x, y) = j_factor(&a, &b).unwrap();
    assert_eq!(x.compose(&b).compose(&y), a);
    assert_eq!((x.corank(), y.corank()), (1, 1));
    let (t, cycle) = (el("{1>2,2>1}"), el("{1>2,2>3,3>1}"));
    let (x, y) = j_factor(&t, &cycle).unwrap();
    assert_eq!(x.compose(&cycle).compose(&y), t);
    assert_eq!((x.corank(), y.corank()), (0, 0));
    assert!(matches!(j_factor(&id(), &a), Err(Error::NotDRelated(..))));
}

#[test]
fn local_submonoids_and_renaming() {
    assert!(!local_member(&id(), &el("{-1}")).unwrap());
    assert!(local_member(&el("{-1}"), &el("{-1}")).unwrap());
    assert!(!local_member(&el("{1>3,-3}"), &el("{-3}")).unwrap());
    assert_eq!(rename(&el("{1>3,-3}"), &id()).unwrap(), el("{1>3,-3}"));
    assert_eq!(rename(&el("{-1}"), &el("{1>2,2>1}")).unwrap(), el("{-2}"));
}

#[test]
fn parity() {
    assert_eq!(sign(&id()).unwrap(), Parity::Even);
    assert_eq!(sign(&el("{1>2,2>1}")).unwrap(), Parity::Odd);
    assert_eq!(sign(&el("{1>2,2>3,3>1}")).unwrap(), Parity::Even);
    assert!(matches!(
        sign(&el("{1>3,-3}")),
        Err(Error::NotPermutation(_))
    ));
}

#[test]
fn congruences() {
    let t = el("{1>2,2>1}");
    assert!(CongruenceId::I(1).related(&el("{-1}"), &el("{-2}")));
    assert!(!CongruenceId::A(0).related(&id(), &t));
    assert!(CongruenceId::S(0).related(&id(), &t));
    assert!(!CongruenceId::Delta.related(&id(), &t));
    assert!(CongruenceId::Delta.related(&t, &t));

    assert_eq!(principal_congruence(&id(), &t), CongruenceId::S(0));
    assert_eq!(
        principal_congruence(&id(), &el("{1>2,2>3,3>1}")),
        CongruenceId::A(0)
    );
    assert_eq!(
        principal_congruence(&el("{-1}"), &el("{-2}")),
        CongruenceId::I(1)
    );
    assert_eq!(CongruenceId::S(0).to_string(), "S:0");

    let units = ClassLabel::HClass {
        dom_c: FinSet::new(),
        ran_c: FinSet::new(),
    };
    assert_eq!(CongruenceId::S(0).class_label(&t), units);
    assert_eq!(CongruenceId::S(0).class_label(&id()), units);
    let coset = |parity| ClassLabel::HCoset {
        dom_c: FinSet::new(),
        ran_c: FinSet::new(),
        parity,
    };
    assert_eq!(CongruenceId::A(0).class_label(&t), coset(Parity::Odd));
    assert_eq!(CongruenceId::A(0).class_label(&id()), coset(Parity::Even));
    assert_eq!(
        CongruenceId::I(2).class_label(&el("{-1}")),
        ClassLabel::Singleton(el("{-1}"))
    );

    assert!(CongruenceId::A(0).leq(CongruenceId::S(0)));
    assert!(CongruenceId::I(1).leq(CongruenceId::A(0)));
    assert_eq!(
        CongruenceId::Delta.join(CongruenceId::OMEGA),
        CongruenceId::OMEGA
    );
}

#[test]
fn semilattice() {
    assert_eq!(join(&fs([1]), &fs([2])), fs([1, 2]));
    assert_eq!(join(&fs([4]), &FinSet::new()), fs([4]));
    assert_eq!(join(&fs([4]), &fs([4])), fs([4]));
    assert_eq!(to_idempotent(&fs([3])), el("{-3}"));
    assert_eq!(from_idempotent(&id()).unwrap(), FinSet::new());
    assert_eq!(f_solver(&fs([1]), &fs([1, 2])), vec![fs([1, 2]), fs([2])]);
    assert!(f_solver(&fs([1, 2]), &fs([1])).is_empty());
    assert_eq!(
        f_solver(&FinSet::new(), &FinSet::new()),
        vec![FinSet::new()]
    );

    let mut up = up_set(&el("{-1,-2}")).unwrap();
    up.sort();
    let mut expected = vec![id(), el("{-1}"), el("{-2}"), el("{-1,-2}")];
    expected.sort();
    assert_eq!(up, expected);
    assert_eq!(
        maximal_chain_up(&el("{-1,-2}")).unwrap(),
        vec![el("{-1,-2}"), el("{-1}"), id()]
    );
    let mut down = down_set_in_window(&id(), &fs([1])).unwrap();
    down.sort();
    let mut expected = vec![id(), el("{-1}")];
    expected.sort();
    assert_eq!(down, expected);
}

#[test]
fn solvers() {
    let b = el("{1>3,-3}");
    assert_eq!(solve_left(&id(), &b), vec![b.clone()]);
    assert_eq!(solve_right(&id(), &b), vec![b.clone()]);
    let mut both = vec![el("{-1}"), id()];
    both.sort();
    assert_eq!(solve_left(&el("{-1}"), &el("{-1}")), both);
    assert_eq!(solve_right(&el("{-1}"), &el("{-1}")), both);
    assert!(solve_left(&el("{-1}"), &id()).is_empty());
    assert_eq!(fiber_count(&id(), &b), 1u32.into());
    assert_eq!(fiber_count(&el("{-1}"), &el("{-1}")), 2u32.into());
}

#[test]
fn neighbourhoods() {
    let t = el("{1>2,2>1}");
    assert!(member(&nb(Flavor::F, "id", fs([3])), &t));
    assert!(!member(&nb(Flavor::F, "id", fs([1])), &t));
    assert!(member(&nb(Flavor::WF, "id", FinSet::new()), &el("{-1}")));
    assert!(!member(&nb(Flavor::WF, "{-1}", FinSet::new()), &id()));

    assert!(disjoint(
        &nb(Flavor::F, "id", fs([1])),
        &nb(Flavor::F, "{1>2,2>1}", fs([1]))
    )
    .unwrap());
    assert!(disjoint(
        &nb(Flavor::F, "id", FinSet::new()),
        &nb(Flavor::F, "{-1}", FinSet::new())
    )
    .unwrap());
    let (n1, n2) = (
        nb(Flavor::WF, "id", fs([2])),
        nb(Flavor::WF, "{-1}", fs([2])),
    );
    assert!(!disjoint(&n1, &n2).unwrap());
    let w = common_member(&n1, &n2).unwrap().unwrap();
    assert!(member(&n1, &w) && member(&n2, &w));
    assert!(member(&n1, &el("{-1}")) && member(&n2, &el("{-1}")));
}

#[test]
fn separation() {
    assert_eq!(
        separate(&id(), &el("{1>2,2>1}"), Flavor::F).unwrap(),
        (fs([1]), fs([1]))
    );
    assert_eq!(
        separate(&id(), &el("{-1}"), Flavor::F).unwrap(),
        (FinSet::new(), FinSet::new())
    );
    let (a, b) = (el("{-1}"), el("{-2}"));
    let (f1, f2) = separate(&a, &b, Flavor::WF).unwrap();
    assert_eq!((f1.clone(), f2.clone()), (fs([2]), fs([1])));
    assert!(disjoint(
        &Nbhd::new(Flavor::WF, a, f1).unwrap(),
        &Nbhd::new(Flavor::WF, b, f2).unwrap()
    )
    .unwrap());
    assert_eq!(
        separate(&id(), &id(), Flavor::WF),
        Err(Error::EqualElements)
    );
}

#[test]
fn witnesses() {
    assert_eq!(
        continuity_witness(&id(), &id(), &fs([1, 2])).unwrap(),
        (fs([1, 2]), fs([1, 2]))
    );
    assert_eq!(
        continuity_witness(&el("{1>3,-3}"), &el("{3>1,-1}"), &fs([1])).unwrap(),
        (fs([1]), fs([3]))
    );
    assert!(matches!(
        continuity_witness(&el("{-1}"), &id(), &fs([1])),
        Err(Error::ConstraintOutsideDomain(_))
    ));
    assert_eq!(
        inversion_witness(Flavor::F, &id(), &fs([5])).unwrap(),
        fs([5])
    );
    assert_eq!(
        inversion_witness(Flavor::F, &el("{1>3,-3}"), &fs([1])).unwrap(),
        fs([3])
    );
    assert_eq!(
        inversion_witness(Flavor::WF, &id(), &fs([5])).unwrap(),
        fs([5])
    );
}

#[test]
fn windows() {
    let counts: Vec<usize> = (0..=4)
        .map(|n| enumerate_window(&Window::first(n)).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 7, 34, 209]);
    let one = enumerate_window(&Window::first(1)).unwrap();
    assert!(one.contains(&id()) && one.contains(&el("{-0}")));
    let report = verify(Suite::All, &Window::first(1), &VerifyConfig::default()).unwrap();
    assert!(report.passed(), "{report}");
}
