use std::collections::HashSet;

use super::Ctx;
use crate::element::{PartialSelfmap, Point};
use crate::oracle::check::{Check, CheckResult};

/// Independent count of partial injections of an `n`-set into itself.
fn symmetric_inverse_order(n: usize) -> u128 {
    let n = n as u128;
    let (mut total, mut binom, mut fact) = (1u128, 1u128, 1u128);
    for k in 1..=n {
        binom = binom * (n - k + 1) / k;
        fact *= k;
        total += binom * binom * fact;
    }
    total
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckResult> {
    let m = ctx.model;
    let n = ctx.n();
    let window = m.window().points();
    let all = ctx.all();
    let mut out = Vec::new();

    let mut c = Check::new(
        "elements.distinct",
        "enumerated elements are pairwise distinct",
    );
    let distinct: HashSet<&PartialSelfmap> = m.elements().iter().collect();
    c.case(distinct.len() == n, || {
        format!("{n} elements but {} distinct", distinct.len())
    });
    out.push(c.finish());

    let mut c = Check::new(
        "elements.count",
        "enumeration size is the sum over k of C(|W|,k)^2 k!",
    );
    let expected = symmetric_inverse_order(ctx.w);
    c.case(expected == n as u128, || {
        format!("expected {expected}, got {n}")
    });
    out.push(c.finish());

    out.push(
        Check::new(
            "elements.support",
            "every element is supported in the window",
        )
        .sweep(&all, |&a, c| {
            let el = ctx.el(a);
            c.case(el.support().is_subset(window), || el.to_string())
        }),
    );

    out.push(
        Check::new(
            "elements.closure",
            "products and inverses stay in the window",
        )
        .sampled(ctx.sampled_pairs())
        .sweep(&ctx.pairs(1), |&(a, b), c| {
            let (x, y) = (ctx.el(a), ctx.el(b));
            c.case(
                m.index_of(&x.compose(y)).is_some() && m.index_of(&x.inverse()).is_some(),
                || format!("a = {x}, b = {y}"),
            )
        }),
    );

    out.push(
        Check::new("elements.associativity", "(ab)c = a(bc)")
            .sampled(ctx.sampled_triples())
            .sweep(&ctx.triples(2), |&(a, b, c3), c| {
                c.case(m.mul(m.mul(a, b), c3) == m.mul(a, m.mul(b, c3)), || {
                    format!("a = {}, b = {}, c = {}", ctx.el(a), ctx.el(b), ctx.el(c3))
                })
            }),
    );

    out.push(
        Check::new("elements.inverse_axioms", "a a' a = a and a' a a' = a'").sweep(
            &all,
            |&a, c| {
                let i = m.inv(a);
                c.case(
                    m.mul(m.mul(a, i), a) == a && m.mul(m.mul(i, a), i) == i,
                    || ctx.el(a).to_string(),
                )
            },
        ),
    );

    out.push(
        Check::new(
            "elements.inverse_unique",
            "the inverse is the only x with axa = a and xax = x",
        )
        .sampled(ctx.sampled_pairs())
        .sweep(&ctx.pairs(3), |&(a, x), c| {
            let solves = m.mul(m.mul(a, x), a) == a && m.mul(m.mul(x, a), x) == x;
            c.case(!solves || x == m.inv(a), || {
                format!("a = {}, x = {}", ctx.el(a), ctx.el(x))
            })
        }),
    );

    let idem = ctx.idempotents();
    let idem_pairs: Vec<(usize, usize)> = idem
        .iter()
        .flat_map(|&e| idem.iter().map(move |&f| (e, f)))
        .collect();
    out.push(
        Check::new(
            "elements.idempotents_commute",
            "ef = fe for idempotents e, f",
        )
        .sweep(&idem_pairs, |&(e, f), c| {
            c.case(m.mul(e, f) == m.mul(f, e), || {
                format!("e = {}, f = {}", ctx.el(e), ctx.el(f))
            })
        }),
    );

    out.push(
        Check::new(
            "elements.corank_monotone",
            "corank(ab) >= max(corank a, corank b)",
        )
        .sampled(ctx.sampled_pairs())
        .sweep(&ctx.pairs(4), |&(a, b), c| {
            let ab = ctx.el(m.mul(a, b)).corank();
            c.case(ab >= ctx.el(a).corank().max(ctx.el(b).corank()), || {
                format!("a = {}, b = {}", ctx.el(a), ctx.el(b))
            })
        }),
    );

    out.push(
        Check::new(
            "elements.pointwise",
            "composition agrees with applying a then b, on the joint support and three fresh points",
        )
        .sampled(ctx.sampled_pairs())
        .sweep(&ctx.pairs(5), |&(a, b), c| {
            let (x, y) = (ctx.el(a), ctx.el(b));
            let xy = x.compose(y);
            let support = x.support().join(&y.support());
            let start: Point = support.last().max(window.last()).map_or(0, |p| p + 1);
            let bad = support
                .iter()
                .chain(start..start + 3)
                .find(|&p| xy.apply(p) != x.apply(p).and_then(|q| y.apply(q)));
            c.case(bad.is_none(), || {
                format!("a = {x}, b = {y}, point {}", bad.unwrap_or_default())
            })
        }),
    );

    out.push(
        Check::new(
            "elements.round_trip",
            "parsing the printed form gives the element back",
        )
        .sweep(&all, |&a, c| {
            let el = ctx.el(a);
            let back = el.to_string().parse::<PartialSelfmap>();
            c.case(back.as_ref() == Ok(el), || {
                format!("{el} parsed as {back:?}")
            })
        }),
    );

    // Restriction to the window as plain index arrays.
    let pts: Vec<Point> = window.iter().collect();
    let pos = |p: Point| pts.iter().position(|&q| q == p);
    let arrays: Vec<Vec<Option<usize>>> = m
        .elements()
        .iter()
        .map(|el| pts.iter().map(|&p| el.apply(p).and_then(pos)).collect())
        .collect();
    let mut c = Check::new(
        "elements.restriction_bijective",
        "restriction to the window is a bijection onto its partial injections",
    );
    let distinct: HashSet<&Vec<Option<usize>>> = arrays.iter().collect();
    c.case(distinct.len() == n, || {
        "two elements restrict to the same map".into()
    });
    for (i, arr) in arrays.iter().enumerate() {
        let images: Vec<usize> = arr.iter().flatten().copied().collect();
        let unique: HashSet<&usize> = images.iter().collect();
        let stays = pts
            .iter()
            .all(|&p| ctx.el(i).apply(p).is_none_or(|q| pos(q).is_some()));
        c.case(unique.len() == images.len() && stays, || {
            ctx.el(i).to_string()
        });
    }
    out.push(c.finish());

    out.push(
        Check::new(
            "elements.restriction_homomorphism",
            "restriction to the window turns products into composites of partial injections",
        )
        .sampled(ctx.sampled_pairs())
        .sweep(&ctx.pairs(6), |&(a, b), c| {
            let composite: Vec<Option<usize>> = arrays[a]
                .iter()
                .map(|x| x.and_then(|i| arrays[b][i]))
                .collect();
            c.case(composite == arrays[m.mul(a, b)], || {
                format!("a = {}, b = {}", ctx.el(a), ctx.el(b))
            })
        }),
    );

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_formula() {
        let got: Vec<u128> = (0..6).map(symmetric_inverse_order).collect();
        assert_eq!(got, vec![1, 2, 7, 34, 209, 1546]);
    }
}
