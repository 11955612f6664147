use super::{equivalence_check, Bits, Ctx, Matrix};
use crate::error::Error;
use crate::green::{
    d_witness, ideal_member, j_factor, local_member, nat_leq, rename, GreenRelation,
};
use crate::oracle::check::{Check, CheckResult};
use crate::solver::{solve_left, solve_right};

/// Principal one-sided and two-sided ideals of every element, read off the
/// multiplication table.
struct Divisibility {
    /// `right[a]` is `a S¹`.
    right: Vec<Bits>,
    /// `left[a]` is `S¹ a`.
    left: Vec<Bits>,
    /// `two_sided[a]` is `S¹ a S¹`.
    two_sided: Vec<Bits>,
}

impl Divisibility {
    fn new(ctx: &Ctx) -> Self {
        let (m, n) = (ctx.model, ctx.n());
        let mut right = vec![Bits::new(n); n];
        let mut left = vec![Bits::new(n); n];
        for a in 0..n {
            for x in 0..n {
                right[a].set(m.mul(a, x));
                left[a].set(m.mul(x, a));
            }
        }
        let two_sided = (0..n)
            .map(|a| {
                let mut acc = Bits::new(n);
                for c in left[a].ones() {
                    acc.union_with(&right[c]);
                }
                acc
            })
            .collect();
        Divisibility {
            right,
            left,
            two_sided,
        }
    }
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckResult> {
    let m = ctx.model;
    let n = ctx.n();
    let mut out = Vec::new();

    let rel: Vec<(GreenRelation, Matrix)> = GreenRelation::ALL
        .into_iter()
        .map(|g| (g, ctx.matrix(|a, b| g.relates(ctx.el(a), ctx.el(b)))))
        .collect();
    let get = |g: GreenRelation| &rel.iter().find(|(h, _)| *h == g).expect("all relations").1;
    let (r, l, h, d, j) = (
        get(GreenRelation::R),
        get(GreenRelation::L),
        get(GreenRelation::H),
        get(GreenRelation::D),
        get(GreenRelation::J),
    );

    let ids = [
        ("green.R.equivalence", "R is an equivalence relation"),
        ("green.L.equivalence", "L is an equivalence relation"),
        ("green.H.equivalence", "H is an equivalence relation"),
        ("green.D.equivalence", "D is an equivalence relation"),
        ("green.J.equivalence", "J is an equivalence relation"),
    ];
    for (k, ((_, mat), (id, st))) in rel.iter().zip(ids).enumerate() {
        out.push(equivalence_check(ctx, mat, id, st, 10 + k as u64));
    }

    let pairs = ctx.pairs(20);
    let sampled = ctx.sampled_pairs();
    let pair_ctx = |a: usize, b: usize| format!("a = {}, b = {}", ctx.el(a), ctx.el(b));

    out.push(
        Check::new(
            "green.H_is_R_and_L",
            "H holds exactly when R and L both hold",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            c.case(h.get(a, b) == (r.get(a, b) && l.get(a, b)), || {
                pair_ctx(a, b)
            })
        }),
    );

    let div = Divisibility::new(ctx);
    let r_def = |a: usize, b: usize| div.right[a].get(b) && div.right[b].get(a);
    let l_def = |a: usize, b: usize| div.left[a].get(b) && div.left[b].get(a);
    let j_def = |a: usize, b: usize| div.two_sided[a].get(b) && div.two_sided[b].get(a);
    let l_rows: Vec<Bits> = (0..n)
        .map(|a| {
            let mut row = Bits::new(n);
            (0..n).filter(|&c| l_def(a, c)).for_each(|c| row.set(c));
            row
        })
        .collect();
    let r_rows: Vec<Bits> = (0..n)
        .map(|b| {
            let mut row = Bits::new(n);
            (0..n).filter(|&c| r_def(c, b)).for_each(|c| row.set(c));
            row
        })
        .collect();
    let d_def = |a: usize, b: usize| l_rows[a].intersects(&r_rows[b]);

    out.push(
        Check::new(
            "green.R.divisibility",
            "R agrees with mutual right divisibility in the window",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            c.case(r.get(a, b) == r_def(a, b), || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "green.L.divisibility",
            "L agrees with mutual left divisibility in the window",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            c.case(l.get(a, b) == l_def(a, b), || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "green.D.composite",
            "D agrees with the existence of c such that a L c and c R b",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            c.case(d.get(a, b) == d_def(a, b), || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "green.J.divisibility",
            "J agrees with mutual two-sided divisibility in the window",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            c.case(j.get(a, b) == j_def(a, b), || pair_ctx(a, b))
        }),
    );

    out.push(
        Check::new(
            "green.R.solver",
            "R holds exactly when a x = b and b y = a are both solvable",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let (x, y) = (ctx.el(a), ctx.el(b));
            let solvable = !solve_left(x, y).is_empty() && !solve_left(y, x).is_empty();
            c.case(r.get(a, b) == solvable, || pair_ctx(a, b))
        }),
    );
    out.push(
        Check::new(
            "green.L.solver",
            "L holds exactly when x a = b and y b = a are both solvable",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let (x, y) = (ctx.el(a), ctx.el(b));
            let solvable = !solve_right(x, y).is_empty() && !solve_right(y, x).is_empty();
            c.case(l.get(a, b) == solvable, || pair_ctx(a, b))
        }),
    );

    out.push(
        Check::new(
            "green.corank_levels",
            "J-classes in the window are exactly the corank levels",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let same = ctx.el(a).corank() == ctx.el(b).corank();
            c.case(j_def(a, b) == same && d.get(a, b) == same, || {
                pair_ctx(a, b)
            })
        }),
    );

    let d_pairs: Vec<(usize, usize)> = ctx.pairs(21);
    out.push(
        Check::new(
            "green.d_witness",
            "the D witness c satisfies a L c and c R b, and non-D pairs are rejected",
        )
        .sampled(sampled)
        .sweep(&d_pairs, |&(a, b), c| {
            let (x, y) = (ctx.el(a), ctx.el(b));
            match d_witness(x, y) {
                Ok(w) => {
                    let ok = d.get(a, b)
                        && m.index_of(&w)
                            .is_some_and(|wi| l_def(a, wi) && r_def(wi, b));
                    c.case(ok, || format!("{} gave {w}", pair_ctx(a, b)))
                }
                Err(e) => c.case(!d.get(a, b) && matches!(e, Error::NotDRelated(..)), || {
                    format!("{} failed: {e}", pair_ctx(a, b))
                }),
            }
        }),
    );
    out.push(
        Check::new(
            "green.j_factor",
            "the J factors recompose, c b d = a, with c and d of the common corank",
        )
        .sampled(sampled)
        .sweep(&d_pairs, |&(a, b), c| {
            let (x, y) = (ctx.el(a), ctx.el(b));
            match j_factor(x, y) {
                Ok((left, right)) => {
                    let k = x.corank();
                    let ok = left.compose(y).compose(&right) == *x
                        && left.corank() == k
                        && right.corank() == k;
                    c.case(ok, || format!("{} gave ({left}, {right})", pair_ctx(a, b)))
                }
                Err(e) => c.case(!d.get(a, b) && matches!(e, Error::NotDRelated(..)), || {
                    format!("{} failed: {e}", pair_ctx(a, b))
                }),
            }
        }),
    );

    let idem = ctx.idempotents();
    let leq = |e: usize, f: usize| nat_leq(ctx.el(e), ctx.el(f)).expect("idempotents");
    let mut c = Check::new(
        "green.natural_order",
        "the natural order is a partial order, and e <= f iff ef = fe = e",
    );
    for &e in &idem {
        c.case(leq(e, e), || format!("not reflexive at {}", ctx.el(e)));
        for &f in &idem {
            let by_products = m.mul(e, f) == e && m.mul(f, e) == e;
            c.case(leq(e, f) == by_products, || {
                format!("e = {}, f = {}", ctx.el(e), ctx.el(f))
            });
            c.case(!(leq(e, f) && leq(f, e)) || e == f, || {
                format!("not antisymmetric at ({}, {})", ctx.el(e), ctx.el(f))
            });
            for &g in &idem {
                c.case(!(leq(e, f) && leq(f, g)) || leq(e, g), || {
                    format!(
                        "not transitive at ({}, {}, {})",
                        ctx.el(e),
                        ctx.el(f),
                        ctx.el(g)
                    )
                });
            }
        }
    }
    let non_idem = (0..n).find(|&a| !ctx.el(a).is_idempotent());
    if let Some(a) = non_idem {
        c.case(
            matches!(nat_leq(ctx.el(a), ctx.el(a)), Err(Error::NotIdempotent(_))),
            || format!("accepted {}", ctx.el(a)),
        );
    }
    out.push(c.finish());

    let levels = ctx.w;
    out.push(
        Check::new(
            "green.ideals",
            "each I_n absorbs products on both sides and is the set of corank >= n",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            for k in 0..=levels {
                let inside = ideal_member(ctx.el(a), k);
                c.case(inside == (ctx.el(a).corank() >= k), || {
                    format!("membership of {} in I_{k}", ctx.el(a))
                });
                c.case(
                    !inside
                        || (ideal_member(ctx.el(m.mul(a, b)), k)
                            && ideal_member(ctx.el(m.mul(b, a)), k)),
                    || format!("{} in I_{k}", pair_ctx(a, b)),
                );
            }
        }),
    );

    let local_cases: Vec<(usize, usize)> = idem
        .iter()
        .flat_map(|&e| (0..n).map(move |a| (e, a)))
        .collect();
    out.push(
        Check::new("green.local_member", "a lies in eSe exactly when eae = a").sweep(
            &local_cases,
            |&(e, a), c| {
                let member = local_member(ctx.el(a), ctx.el(e)).expect("idempotent");
                c.case(member == (m.mul(m.mul(e, a), e) == a), || {
                    format!("e = {}, a = {}", ctx.el(e), ctx.el(a))
                })
            },
        ),
    );

    let perms: Vec<usize> = (0..n).filter(|&p| ctx.el(p).is_total_bijection()).collect();
    let rename_cases: Vec<(usize, usize, usize)> = perms
        .iter()
        .flat_map(|&p| pairs.iter().map(move |&(a, b)| (p, a, b)))
        .collect();
    out.push(
        Check::new(
            "green.rename",
            "renaming along a bijection preserves corank and idempotency and respects products",
        )
        .sampled(sampled)
        .sweep(&rename_cases, |&(p, a, b), c| {
            let pi = ctx.el(p);
            let ra = rename(ctx.el(a), pi).expect("bijection");
            let rb = rename(ctx.el(b), pi).expect("bijection");
            let rab = rename(ctx.el(m.mul(a, b)), pi).expect("bijection");
            let ok = ra.corank() == ctx.el(a).corank()
                && ra.is_idempotent() == ctx.el(a).is_idempotent()
                && rab == ra.compose(&rb);
            c.case(ok, || format!("pi = {pi}, {}", pair_ctx(a, b)))
        }),
    );
    let mut c = Check::new(
        "green.rename_rejects",
        "renaming along a non-bijection is an error",
    );
    for a in (0..n).filter(|&a| !ctx.el(a).is_total_bijection()) {
        c.case(
            matches!(rename(ctx.el(a), ctx.el(a)), Err(Error::NotBijection(_))),
            || ctx.el(a).to_string(),
        );
    }
    out.push(c.finish());

    out
}
