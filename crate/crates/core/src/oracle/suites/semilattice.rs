use std::collections::BTreeSet;

use super::Ctx;
use crate::element::PartialSelfmap;
use crate::error::Error;
use crate::finset::FinSet;
use crate::green::nat_leq;
use crate::oracle::check::{Check, CheckResult};
use crate::semilattice::{
    down_set_in_window, f_solver, from_idempotent, join, maximal_chain_up, to_idempotent, up_set,
};

pub(super) fn run(ctx: &Ctx) -> Vec<CheckResult> {
    let m = ctx.model;
    let window = m.window().points();
    let subsets = window.subsets();
    let s = subsets.len();
    let mut out = Vec::new();

    let triples: Vec<(usize, usize, usize)> = (0..s)
        .flat_map(|a| (0..s).flat_map(move |b| (0..s).map(move |c| (a, b, c))))
        .collect();
    out.push(
        Check::new(
            "semilattice.monoid",
            "union is associative, commutative and idempotent with identity the empty set",
        )
        .sweep(&triples, |&(a, b, c3), c| {
            let (x, y, z) = (&subsets[a], &subsets[b], &subsets[c3]);
            let ok = join(&join(x, y), z) == join(x, &join(y, z))
                && join(x, y) == join(y, x)
                && join(x, x) == *x
                && join(x, &FinSet::new()) == *x;
            c.case(ok, || format!("a = {x}, b = {y}, c = {z}"))
        }),
    );

    let set_pairs: Vec<(usize, usize)> = (0..s).flat_map(|a| (0..s).map(move |b| (a, b))).collect();
    out.push(
        Check::new(
            "semilattice.homomorphism",
            "the idempotent of a union is the product of the idempotents",
        )
        .sweep(&set_pairs, |&(a, b), c| {
            let (x, y) = (&subsets[a], &subsets[b]);
            c.case(
                to_idempotent(&join(x, y)) == to_idempotent(x).compose(&to_idempotent(y)),
                || format!("a = {x}, b = {y}"),
            )
        }),
    );

    let mut c = Check::new(
        "semilattice.isomorphism",
        "sets and window idempotents correspond one to one, and non-idempotents are rejected",
    );
    for x in &subsets {
        let e = to_idempotent(x);
        c.case(
            e.is_idempotent() && m.index_of(&e).is_some() && from_idempotent(&e).as_ref() == Ok(x),
            || x.to_string(),
        );
    }
    let idem = ctx.idempotents();
    c.case(idem.len() == s, || {
        format!("{} window idempotents for {s} subsets", idem.len())
    });
    for a in m.elements() {
        match from_idempotent(a) {
            Ok(x) => c.case(a.is_idempotent() && to_idempotent(&x) == *a, || {
                a.to_string()
            }),
            Err(e) => c.case(
                !a.is_idempotent() && matches!(e, Error::NotIdempotent(_)),
                || a.to_string(),
            ),
        }
    }
    out.push(c.finish());

    out.push(
        Check::new(
            "semilattice.f_solver",
            "the solutions of a ∪ x = b are exactly the subsets found by brute force",
        )
        .sweep(&set_pairs, |&(a, b), c| {
            let (x, y) = (&subsets[a], &subsets[b]);
            // solutions lie inside b, hence inside the window
            let brute: BTreeSet<&FinSet> = subsets.iter().filter(|z| join(x, z) == *y).collect();
            let got = f_solver(x, y);
            let got_set: BTreeSet<&FinSet> = got.iter().collect();
            c.case(got_set == brute && got_set.len() == got.len(), || {
                format!("a = {x}, b = {y}")
            })
        }),
    );

    let leq = |e: &PartialSelfmap, f: &PartialSelfmap| nat_leq(e, f).expect("idempotents");
    out.push(
        Check::new(
            "semilattice.up_set",
            "the up-set of e is every idempotent above e, 2^corank(e) of them",
        )
        .sweep(&idem, |&e, c| {
            let e = ctx.el(e);
            let got: BTreeSet<PartialSelfmap> =
                up_set(e).expect("idempotent").into_iter().collect();
            let brute: BTreeSet<PartialSelfmap> = idem
                .iter()
                .map(|&f| ctx.el(f))
                .filter(|f| leq(e, f))
                .cloned()
                .collect();
            c.case(got == brute && got.len() == 1 << e.corank(), || {
                e.to_string()
            })
        }),
    );

    out.push(
        Check::new(
            "semilattice.down_set",
            "the window down-set of e is every window idempotent below e",
        )
        .sweep(&idem, |&e, c| {
            let e = ctx.el(e);
            let got: BTreeSet<PartialSelfmap> = down_set_in_window(e, window)
                .expect("idempotent")
                .into_iter()
                .collect();
            let brute: BTreeSet<PartialSelfmap> = idem
                .iter()
                .map(|&f| ctx.el(f))
                .filter(|f| leq(f, e))
                .cloned()
                .collect();
            c.case(got == brute, || e.to_string())
        }),
    );

    out.push(
        Check::new(
            "semilattice.maximal_chain",
            "the chain from e to the identity rises strictly, one corank step at a time",
        )
        .sweep(&idem, |&e, c| {
            let e = ctx.el(e);
            let chain = maximal_chain_up(e).expect("idempotent");
            let steps_ok = chain
                .windows(2)
                .all(|w| leq(&w[0], &w[1]) && w[0] != w[1] && w[0].corank() == w[1].corank() + 1);
            let ends_ok = chain.first() == Some(e)
                && chain.last().is_some_and(PartialSelfmap::is_identity)
                && chain.len() == e.corank() + 1;
            c.case(steps_ok && ends_ok, || e.to_string())
        }),
    );

    out
}
