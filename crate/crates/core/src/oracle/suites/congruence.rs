use super::{equivalence_check, Ctx, Matrix};
use crate::congruence::{principal_congruence, sign, ClassLabel, CongruenceId, Parity};
use crate::element::{PartialSelfmap, Point};
use crate::error::Error;
use crate::green::h_related;
use crate::oracle::check::{Check, CheckResult};

/// Parity by counting inversions of the induced permutation of the moved
/// points, listed in increasing order.
fn inversion_parity(a: &PartialSelfmap) -> Parity {
    let moved: Vec<Point> = a.moved().map(|(x, _)| x).collect();
    let image: Vec<usize> = moved
        .iter()
        .map(|&x| {
            let y = a.apply(x).expect("moved point is in the domain");
            moved
                .iter()
                .position(|&z| z == y)
                .expect("permutation of the moved set")
        })
        .collect();
    let mut inversions = 0usize;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            if image[i] > image[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

struct Member {
    id: CongruenceId,
    rel: Matrix,
    labels: Vec<ClassLabel>,
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckResult> {
    let m = ctx.model;
    let n = ctx.n();
    let max_level = ctx.cfg.max_level.unwrap_or(ctx.w);
    let family: Vec<Member> = CongruenceId::family(max_level)
        .into_iter()
        .map(|id| Member {
            id,
            rel: ctx.matrix(|a, b| id.related(ctx.el(a), ctx.el(b))),
            labels: m.elements().iter().map(|a| id.class_label(a)).collect(),
        })
        .collect();
    let pair_ctx = |a: usize, b: usize| format!("a = {}, b = {}", ctx.el(a), ctx.el(b));
    let mut out = Vec::new();

    // One combined equivalence check over the family.
    let mut eq = Check::new(
        "congruence.equivalence",
        "every family member is an equivalence relation",
    )
    .sampled(ctx.sampled_triples())
    .finish();
    eq.passed = true;
    for (k, c) in family.iter().enumerate() {
        let r = equivalence_check(ctx, &c.rel, "", "", 100 + k as u64);
        eq.cases += r.cases;
        if eq.passed && !r.passed {
            eq.passed = false;
            eq.counterexample = r.counterexample.map(|s| format!("{}: {s}", c.id));
        }
    }
    out.push(eq);

    let triples = ctx.triples(30);
    out.push(
        Check::new(
            "congruence.compatibility",
            "related pairs stay related after multiplying by the same element on either side",
        )
        .sampled(ctx.sampled_triples())
        .sweep(&triples, |&(a, b, g), c| {
            for cg in &family {
                let related = cg.rel.get(a, b);
                c.case(
                    !related
                        || (cg.rel.get(m.mul(g, a), m.mul(g, b))
                            && cg.rel.get(m.mul(a, g), m.mul(b, g))),
                    || {
                        format!(
                            "{}: a = {}, b = {}, c = {}",
                            cg.id,
                            ctx.el(a),
                            ctx.el(b),
                            ctx.el(g)
                        )
                    },
                );
            }
        }),
    );

    let pairs = ctx.pairs(31);
    let sampled = ctx.sampled_pairs();
    out.push(
        Check::new(
            "congruence.labels",
            "two elements get the same class label exactly when they are related",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            for cg in &family {
                c.case((cg.labels[a] == cg.labels[b]) == cg.rel.get(a, b), || {
                    format!("{}: {}", cg.id, pair_ctx(a, b))
                });
            }
        }),
    );

    let mut c = Check::new(
        "congruence.chain",
        "inclusion of relations follows the chain index, and meet and join are intersection and union",
    );
    for c1 in &family {
        for c2 in &family {
            let depth = |id: CongruenceId| id.index().unwrap_or(usize::MAX);
            c.case(c1.id.leq(c2.id) == (depth(c1.id) >= depth(c2.id)), || {
                format!("leq disagrees with the index at ({}, {})", c1.id, c2.id)
            });
            if c1.id.leq(c2.id) {
                c.case(c1.rel.is_subset(&c2.rel), || {
                    format!("{} is not contained in {}", c1.id, c2.id)
                });
            }
            let meet = c1.id.meet(c2.id);
            let join = c1.id.join(c2.id);
            let rel_of = |id: CongruenceId| family.iter().find(|m| m.id == id).map(|m| &m.rel);
            c.case(rel_of(meet) == Some(&c1.rel.and(&c2.rel)), || {
                format!("meet of {} and {} is {meet}", c1.id, c2.id)
            });
            c.case(rel_of(join) == Some(&c1.rel.or(&c2.rel)), || {
                format!("join of {} and {} is {join}", c1.id, c2.id)
            });
        }
    }
    out.push(c.finish());

    out.push(
        Check::new(
            "congruence.principal_minimal",
            "the principal congruence contains the pair and no finer family member does",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            let p = principal_congruence(ctx.el(a), ctx.el(b));
            c.case(p.related(ctx.el(a), ctx.el(b)), || {
                format!("{} does not contain {}", p, pair_ctx(a, b))
            });
            for cg in family.iter().filter(|cg| cg.id < p) {
                c.case(!cg.rel.get(a, b), || {
                    format!("finer {} than {} contains {}", cg.id, p, pair_ctx(a, b))
                });
            }
        }),
    );

    let perms: Vec<usize> = (0..n)
        .filter(|&a| ctx.el(a).is_permutation_of_domain())
        .collect();
    let perm_pairs: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| {
            perms.binary_search(&a).is_ok()
                && perms.binary_search(&b).is_ok()
                && ctx.el(a).holes_set() == ctx.el(b).holes_set()
        })
        .collect();
    out.push(
        Check::new(
            "congruence.sign_homomorphism",
            "sign(ab) = sign(a) sign(b) for permutations of a common domain",
        )
        .sampled(sampled)
        .sweep(&perm_pairs, |&(a, b), c| {
            let s = |i: usize| sign(ctx.el(i)).expect("permutation of its domain");
            c.case(s(m.mul(a, b)) == s(a) * s(b), || pair_ctx(a, b))
        }),
    );
    let all = ctx.all();
    out.push(
        Check::new(
            "congruence.sign_inversions",
            "sign agrees with the parity of the inversion count, and non-permutations are rejected",
        )
        .sweep(&all, |&a, c| {
            let el = ctx.el(a);
            match sign(el) {
                Ok(s) => c.case(
                    el.is_permutation_of_domain() && s == inversion_parity(el),
                    || el.to_string(),
                ),
                Err(e) => c.case(
                    !el.is_permutation_of_domain() && matches!(e, Error::NotPermutation(_)),
                    || el.to_string(),
                ),
            }
        }),
    );

    // Collapse properties, per family member.
    let corank: Vec<usize> = m.elements().iter().map(PartialSelfmap::corank).collect();
    let idem = ctx.idempotents();

    let mut c = Check::new(
        "congruence.idempotent_collapse",
        "if distinct idempotents e, f are related, every a of corank >= min(corank e, corank f) is related to e",
    );
    for cg in &family {
        for &e in &idem {
            for &f in &idem {
                if e == f || !cg.rel.get(e, f) {
                    continue;
                }
                let k = corank[e].min(corank[f]);
                let bad = (0..n).find(|&a| corank[a] >= k && !cg.rel.get(a, e));
                c.case(bad.is_none(), || {
                    format!(
                        "{}: e = {}, f = {}, a = {}",
                        cg.id,
                        ctx.el(e),
                        ctx.el(f),
                        ctx.el(bad.unwrap_or(0))
                    )
                });
            }
        }
    }
    out.push(c.finish());

    // attracts[i][a][k]: under member i, everything of corank >= k is related to a
    let levels = ctx.w + 1;
    let attracts: Vec<Vec<Vec<bool>>> = family
        .iter()
        .map(|cg| {
            (0..n)
                .map(|a| {
                    (0..=levels)
                        .map(|k| (0..n).all(|g| corank[g] < k || cg.rel.get(g, a)))
                        .collect()
                })
                .collect()
        })
        .collect();
    out.push(
        Check::new(
            "congruence.non_h_collapse",
            "if non-H-related a, b are related, every c of corank >= min(corank a, corank b) is related to a",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            if h_related(ctx.el(a), ctx.el(b)) {
                return;
            }
            for (i, cg) in family.iter().enumerate() {
                if cg.rel.get(a, b) {
                    let k = corank[a].min(corank[b]);
                    c.case(attracts[i][a][k], || format!("{}: {}", cg.id, pair_ctx(a, b)));
                }
            }
        }),
    );

    // For each member and level k: are all elements of corank > k mutually
    // related, and are elements of corank < k related only when equal?
    let above: Vec<Vec<bool>> = family
        .iter()
        .map(|cg| {
            (0..=levels)
                .map(|k| {
                    let high: Vec<usize> = (0..n).filter(|&a| corank[a] > k).collect();
                    high.iter().all(|&a| high.iter().all(|&b| cg.rel.get(a, b)))
                })
                .collect()
        })
        .collect();
    let no_lower_partner: Vec<Vec<bool>> = family
        .iter()
        .map(|cg| {
            (0..n)
                .map(|a| (0..n).all(|g| corank[g] >= corank[a] || !cg.rel.get(a, g)))
                .collect()
        })
        .collect();
    let h = ctx.matrix(|a, b| h_related(ctx.el(a), ctx.el(b)));
    // first_bad[i]: least k such that member i relates two distinct elements
    // of corank < k other than an H-related pair of corank exactly k - 1
    let first_bad: Vec<usize> = family
        .iter()
        .map(|cg| {
            let mut least = usize::MAX;
            for a in 0..n {
                for b in cg.rel.row(a).ones().filter(|&b| b != a) {
                    let from = if h.get(a, b) {
                        corank[a] + 2
                    } else {
                        corank[a].max(corank[b]) + 1
                    };
                    least = least.min(from);
                }
            }
            least
        })
        .collect();
    out.push(
        Check::new(
            "congruence.h_collapse",
            "if distinct H-related a, b are related, all elements of corank > corank a are related to each other",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            if a == b || !h_related(ctx.el(a), ctx.el(b)) {
                return;
            }
            for (i, cg) in family.iter().enumerate() {
                if cg.rel.get(a, b) {
                    c.case(above[i][corank[a]], || format!("{}: {}", cg.id, pair_ctx(a, b)));
                }
            }
        }),
    );

    out.push(
        Check::new(
            "congruence.lower_separation",
            "each member of level n relates elements of corank < n only when they are equal",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            for cg in &family {
                let level = match cg.id {
                    CongruenceId::Delta => usize::MAX,
                    CongruenceId::I(k) | CongruenceId::S(k) | CongruenceId::A(k) => k,
                };
                if corank[a] < level && corank[b] < level {
                    c.case(cg.rel.get(a, b) == (a == b), || {
                        format!("{}: {}", cg.id, pair_ctx(a, b))
                    });
                }
            }
        }),
    );

    out.push(
        Check::new(
            "congruence.lower_collapse_bound",
            "if distinct H-related a, b are related and nothing of lower corank is related to a, distinct related elements of lower corank are H-related of corank exactly corank a - 1",
        )
        .sampled(sampled)
        .sweep(&pairs, |&(a, b), c| {
            if a == b || !h.get(a, b) {
                return;
            }
            for (i, cg) in family.iter().enumerate() {
                if cg.rel.get(a, b) && no_lower_partner[i][a] {
                    c.case(corank[a] < first_bad[i], || {
                        format!("{}: {}", cg.id, pair_ctx(a, b))
                    });
                }
            }
        }),
    );

    out
}
