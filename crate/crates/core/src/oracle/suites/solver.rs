use num_bigint::BigUint;

use super::Ctx;
use crate::element::PartialSelfmap;
use crate::oracle::check::{Check, CheckResult};
use crate::solver::{fiber_count, solve_left, solve_right};

pub(super) fn run(ctx: &Ctx) -> Vec<CheckResult> {
    let m = ctx.model;
    let n = ctx.n();
    let mut out = Vec::new();

    let left_fiber = |a: usize, b: usize| (0..n).filter(|&x| m.mul(a, x) == b).collect::<Vec<_>>();
    let right_fiber = |c: usize, d: usize| (0..n).filter(|&x| m.mul(x, c) == d).collect::<Vec<_>>();
    let sorted = |xs: &[usize]| {
        let mut v: Vec<&PartialSelfmap> = xs.iter().map(|&x| ctx.el(x)).collect();
        v.sort_by_cached_key(|x| x.to_string());
        v.into_iter().cloned().collect::<Vec<_>>()
    };

    let pairs = ctx.pairs(40);
    let sampled = ctx.sampled_pairs();
    let pair_ctx = |a: usize, b: usize| format!("a = {}, b = {}", ctx.el(a), ctx.el(b));

    out.push(
        Check::new(
            "solver.left_exact",
            "solve_left returns exactly the window solutions of a x = b, in canonical order",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let got = solve_left(ctx.el(a), ctx.el(b));
            c.case(got == sorted(&left_fiber(a, b)), || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "solver.right_exact",
            "solve_right returns exactly the window solutions of x c = d, in canonical order",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let got = solve_right(ctx.el(a), ctx.el(b));
            c.case(got == sorted(&right_fiber(a, b)), || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "solver.sound",
            "every returned solution recomposes to the right-hand side",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let (x, y) = (ctx.el(a), ctx.el(b));
            let ok = solve_left(x, y).iter().all(|s| x.compose(s) == *y)
                && solve_right(x, y).iter().all(|s| s.compose(x) == *y);
            c.case(ok, || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "solver.count",
            "fiber_count equals the number of window solutions",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let count = fiber_count(ctx.el(a), ctx.el(b));
            c.case(count == BigUint::from(left_fiber(a, b).len()), || {
                format!("{}: count {count}", pair_ctx(a, b))
            })
        }),
    );
    out.push(
        Check::new(
            "solver.duality",
            "x solves x c = d exactly when its inverse solves c' y = d'",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let (ia, ib) = (m.inv(a), m.inv(b));
            let mut dual: Vec<usize> = left_fiber(ia, ib).iter().map(|&x| m.inv(x)).collect();
            dual.sort_unstable();
            let mut direct = right_fiber(a, b);
            direct.sort_unstable();
            c.case(dual == direct, || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "solver.support",
            "solutions for window elements are supported in the window",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let sols = solve_left(ctx.el(a), ctx.el(b));
            c.case(sols.iter().all(|s| m.index_of(s).is_some()), || {
                pair_ctx(a, b)
            })
        }),
    );

    out
}
