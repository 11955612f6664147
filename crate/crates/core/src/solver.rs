//! Exact solution sets of the translation equations `a * x = b` and
//! `x * c = d`. Every such set is finite.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::element::{PartialSelfmap, Point};

/// All `x` with `a * x = b`, sorted by canonical text.
///
/// A solution exists iff `dom b ⊆ dom a`. On `ran a` the value of `x` is
/// forced: `(p a) x = p b` for `p ∈ dom b`, and `(p a)` is a hole of `x` for
/// `p ∈ dom a \ dom b`. Off `ran a`, `x` is any partial injection from
/// `λ \ ran a` into `λ \ ran b`.
pub fn solve_left(a: &PartialSelfmap, b: &PartialSelfmap) -> Vec<PartialSelfmap> {
    if !a.holes_set().is_subset(b.holes_set()) {
        return Vec::new();
    }
    let points: BTreeSet<Point> = a.support().join(&b.support()).as_set().clone();
    let free_src: Vec<Point> = a.range_complement().iter().collect();
    let free_dst: Vec<Point> = b.range_complement().iter().collect();

    let mut out = Vec::new();
    for_each_partial_injection(&free_src, &free_dst, &mut |choice: &[Option<Point>]| {
        let x = PartialSelfmap::from_local(points.iter().copied(), |y| match a.preimage(y) {
            Some(p) => b.apply(p),
            None => {
                let i = free_src
                    .iter()
                    .position(|&s| s == y)
                    .expect("outside ran a");
                choice[i]
            }
        })
        .expect("forced part plus a partial injection is a valid element");
        out.push(x);
    });
    sort_canonical(&mut out);
    out
}

/// All `x` with `x * c = d`, obtained from [`solve_left`] by inversion.
pub fn solve_right(c: &PartialSelfmap, d: &PartialSelfmap) -> Vec<PartialSelfmap> {
    let mut out: Vec<PartialSelfmap> = solve_left(&c.inverse(), &d.inverse())
        .iter()
        .map(PartialSelfmap::inverse)
        .collect();
    sort_canonical(&mut out);
    out
}

/// `|solve_left(a, b)|` in closed form: zero when `dom b ⊄ dom a`, otherwise
/// the number of partial injections between sets of sizes `corank a` and
/// `corank b`, `Σ_k C(h_a, k) C(h_b, k) k!`.
pub fn fiber_count(a: &PartialSelfmap, b: &PartialSelfmap) -> BigUint {
    if !a.holes_set().is_subset(b.holes_set()) {
        return BigUint::ZERO;
    }
    partial_injection_count(a.corank(), b.corank())
}

/// Number of partial injections from an `m`-set into an `n`-set.
pub fn partial_injection_count(m: usize, n: usize) -> BigUint {
    let mut total = BigUint::ZERO;
    for k in 0..=m.min(n) {
        total += binomial(m, k) * binomial(n, k) * factorial(k);
    }
    total
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

fn sort_canonical(xs: &mut [PartialSelfmap]) {
    xs.sort_by_cached_key(|x| x.to_string());
}

/// Calls `f` once for every partial injection `src ⇀ dst`, given as the
/// image (or `None`) of each source in order.
pub(crate) fn for_each_partial_injection<F>(src: &[Point], dst: &[Point], f: &mut F)
where
    F: FnMut(&[Option<Point>]),
{
    fn go<F: FnMut(&[Option<Point>])>(
        i: usize,
        src: &[Point],
        dst: &[Point],
        used: &mut Vec<bool>,
        choice: &mut Vec<Option<Point>>,
        f: &mut F,
    ) {
        if i == src.len() {
            f(choice);
            return;
        }
        choice.push(None);
        go(i + 1, src, dst, used, choice, f);
        choice.pop();
        for j in 0..dst.len() {
            if !used[j] {
                used[j] = true;
                choice.push(Some(dst[j]));
                go(i + 1, src, dst, used, choice, f);
                choice.pop();
                used[j] = false;
            }
        }
    }
    let mut used = vec![false; dst.len()];
    let mut choice = Vec::with_capacity(src.len());
    go(0, src, dst, &mut used, &mut choice, f);
}
