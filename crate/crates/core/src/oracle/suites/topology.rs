use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{merge, Bits, Ctx};
use crate::element::{PartialSelfmap, Point};
use crate::error::Error;
use crate::finset::FinSet;
use crate::oracle::check::{Check, CheckResult};
use crate::topology::{
    common_member, continuity_witness, disjoint, inversion_witness, member, separate,
    wf_inversion_counterexample, Flavor, Nbhd,
};

/// Every neighbourhood of one flavour whose centre is a window element and
/// whose constraint lies in the window, with its window members.
struct Table {
    nbhds: Vec<Nbhd>,
    members: Vec<Bits>,
    index: HashMap<(usize, FinSet), usize>,
}

impl Table {
    fn new(ctx: &Ctx, flavor: Flavor) -> Self {
        let window = ctx.model.window().points();
        let mut nbhds = Vec::new();
        let mut index = HashMap::new();
        for a in 0..ctx.n() {
            let center = ctx.el(a);
            let dom: FinSet = window.iter().filter(|&p| center.in_domain(p)).collect();
            for f in dom.subsets() {
                index.insert((a, f.clone()), nbhds.len());
                nbhds.push(Nbhd::new(flavor, center.clone(), f).expect("constraint in domain"));
            }
        }
        let members = nbhds
            .iter()
            .map(|nb| {
                let mut bits = Bits::new(ctx.n());
                for (b, el) in ctx.model.elements().iter().enumerate() {
                    if member(nb, el) {
                        bits.set(b);
                    }
                }
                bits
            })
            .collect();
        Table {
            nbhds,
            members,
            index,
        }
    }

    fn find(&self, ctx: &Ctx, center: &PartialSelfmap, f: &FinSet) -> Option<usize> {
        let a = ctx.model.index_of(center)?;
        self.index.get(&(a, f.clone())).copied()
    }

    /// Window members of `U_center(f)`, computed directly when the
    /// neighbourhood is not tabulated.
    fn members_of(&self, ctx: &Ctx, nb: &Nbhd) -> Bits {
        if let Some(i) = self.find(ctx, nb.center(), nb.constraint()) {
            return self.members[i].clone();
        }
        let mut bits = Bits::new(ctx.n());
        for (b, el) in ctx.model.elements().iter().enumerate() {
            if member(nb, el) {
                bits.set(b);
            }
        }
        bits
    }
}

/// Membership straight from the set-builder description, tested point by
/// point on the window and one point outside it.
fn member_by_points(nb: &Nbhd, b: &PartialSelfmap, points: &[Point]) -> bool {
    let c = nb.center();
    let shape = points.iter().all(|&p| match nb.flavor() {
        Flavor::F => c.in_domain(p) == b.in_domain(p) && c.in_range(p) == b.in_range(p),
        Flavor::WF => !b.in_domain(p) || c.in_domain(p),
    });
    shape && nb.constraint().iter().all(|x| b.apply(x) == c.apply(x))
}

/// Sample size used when the window is past the exhaustive threshold and
/// `total` items would exceed it.
fn sample_cap(ctx: &Ctx, total: usize) -> Option<usize> {
    let cap = ctx.cfg.samples / 10;
    (ctx.sampled_triples() && total > cap).then_some(cap)
}

fn rng(ctx: &Ctx, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.cfg.seed ^ salt)
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckResult> {
    let m = ctx.model;
    let n = ctx.n();
    let window = m.window().points();
    let tables: Vec<(Flavor, Table)> = Flavor::ALL
        .into_iter()
        .map(|f| (f, Table::new(ctx, f)))
        .collect();
    let mut points: Vec<Point> = window.iter().collect();
    points.push(window.last().map_or(0, |p| p + 1));
    let mut out = Vec::new();

    let mut c = Check::new(
        "topology.member_definition",
        "member agrees with the pointwise description of each neighbourhood",
    );
    let mut centre = Check::new(
        "topology.center_member",
        "every neighbourhood contains its centre",
    );
    for (_, t) in &tables {
        for (i, nb) in t.nbhds.iter().enumerate() {
            for b in 0..n {
                c.case(
                    t.members[i].get(b) == member_by_points(nb, ctx.el(b), &points),
                    || format!("{nb} and {}", ctx.el(b)),
                );
            }
            let own = m.index_of(nb.center()).expect("window centre");
            centre.case(t.members[i].get(own), || nb.to_string());
        }
    }
    out.push(c.finish());
    out.push(centre.finish());

    let mut c = Check::new(
        "topology.constraint_validation",
        "constraints outside the centre's domain are rejected",
    );
    for a in m.elements() {
        if let Some(h) = a.holes().first() {
            for flavor in Flavor::ALL {
                let r = Nbhd::new(flavor, a.clone(), FinSet::from([h]));
                c.case(matches!(r, Err(Error::ConstraintOutsideDomain(_))), || {
                    format!("{a} with constraint {{{h}}}")
                });
            }
        }
    }
    out.push(c.finish());

    // Pairs of neighbourhoods, per flavour.
    let total: usize = tables.iter().map(|(_, t)| t.nbhds.len().pow(2)).sum();
    let (nb_pairs, sampled) = match sample_cap(ctx, total) {
        None => {
            let mut v: Vec<(usize, usize, usize)> = Vec::new();
            for (k, (_, t)) in tables.iter().enumerate() {
                let len = t.nbhds.len();
                v.extend((0..len).flat_map(|i| (0..len).map(move |j| (k, i, j))));
            }
            (v, false)
        }
        Some(cap) => {
            let mut r = rng(ctx, 50);
            let v = (0..cap)
                .map(|_| {
                    let k = r.random_range(0..tables.len());
                    let len = tables[k].1.nbhds.len();
                    (k, r.random_range(0..len), r.random_range(0..len))
                })
                .collect();
            (v, true)
        }
    };

    let mut mismatch = Check::new(
        "topology.disjoint",
        "disjoint holds exactly when no window element is in both neighbourhoods, and the common member it builds lies in both",
    )
    .sampled(sampled);
    let (t_f, t_wf) = (&tables[0].1, &tables[1].1);
    mismatch.case(
        matches!(
            disjoint(&t_f.nbhds[0], &t_wf.nbhds[0]),
            Err(Error::FlavorMismatch)
        ),
        || "mixed flavours accepted".into(),
    );
    let rest = Check::new("topology.disjoint", "").sweep(&nb_pairs, |&(k, i, j), c| {
        let t = &tables[k].1;
        let (n1, n2) = (&t.nbhds[i], &t.nbhds[j]);
        let evidence = t.members[i].intersects(&t.members[j]);
        match common_member(n1, n2) {
            Ok(None) => c.case(!evidence, || format!("{n1} and {n2} share a window member")),
            Ok(Some(w)) => c.case(member(n1, &w) && member(n2, &w) && evidence, || {
                format!("{n1} and {n2}: witness {w}")
            }),
            Err(e) => c.case(false, || format!("{n1} and {n2}: {e}")),
        }
        c.case(disjoint(n1, n2) == Ok(!evidence), || {
            format!("{n1} and {n2}")
        });
    });
    out.push(merge(mismatch.finish(), rest));

    out.push(
        Check::new(
            "topology.basis",
            "around each common member of two neighbourhoods some neighbourhood lies inside both",
        )
        .sampled(sampled)
        .sweep(&nb_pairs, |&(k, i, j), c| {
            let t = &tables[k].1;
            let both = t.members[i].and(&t.members[j]);
            let f = t.nbhds[i].constraint().join(t.nbhds[j].constraint());
            for x in both.ones() {
                let inner = t.find(ctx, ctx.el(x), &f);
                c.case(inner.is_some_and(|u| t.members[u].is_subset(&both)), || {
                    format!("{} and {} around {}", t.nbhds[i], t.nbhds[j], ctx.el(x))
                });
            }
        }),
    );

    // (flavour, a, b, F) with F ⊆ dom ab inside the window
    let dom_ab = |a: usize, b: usize| -> FinSet {
        let ab = ctx.el(m.mul(a, b));
        window.iter().filter(|&p| ab.in_domain(p)).collect()
    };
    let total: usize = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| 1usize << dom_ab(a, b).len())
        .sum::<usize>()
        * tables.len();
    let (configs, sampled) = match sample_cap(ctx, total) {
        None => {
            let mut v: Vec<(usize, usize, usize, FinSet)> = Vec::new();
            for k in 0..tables.len() {
                for a in 0..n {
                    for b in 0..n {
                        v.extend(dom_ab(a, b).subsets().into_iter().map(|f| (k, a, b, f)));
                    }
                }
            }
            (v, false)
        }
        Some(cap) => {
            let mut r = rng(ctx, 51);
            let v = (0..cap)
                .map(|_| {
                    let (k, a, b) = (
                        r.random_range(0..tables.len()),
                        r.random_range(0..n),
                        r.random_range(0..n),
                    );
                    let f: FinSet = dom_ab(a, b).iter().filter(|_| r.random_bool(0.5)).collect();
                    (k, a, b, f)
                })
                .collect();
            (v, true)
        }
    };
    let mut cont = Check::new(
        "topology.continuity",
        "products of members of the witness neighbourhoods of a and b lie in the given neighbourhood of ab",
    )
    .sampled(sampled);
    if let Some(a) = m.elements().iter().find(|a| a.corank() > 0) {
        let hole = a.holes().first().expect("positive corank");
        cont.case(
            matches!(
                continuity_witness(a, &PartialSelfmap::identity(), &FinSet::from([hole])),
                Err(Error::ConstraintOutsideDomain(_))
            ),
            || format!("constraint outside dom {a} accepted"),
        );
    }
    let rest = Check::new("topology.continuity", "").sweep(&configs, |(k, a, b, f), c| {
        let (flavor, t) = (&tables[*k].0, &tables[*k].1);
        let (x, y) = (ctx.el(*a), ctx.el(*b));
        let ab = ctx.el(m.mul(*a, *b));
        let describe = || format!("{flavor}: a = {x}, b = {y}, F = {f}");
        let Ok((f1, f2)) = continuity_witness(x, y, f) else {
            c.case(false, describe);
            return;
        };
        let (Some(u1), Some(u2), Some(u)) =
            (t.find(ctx, x, &f1), t.find(ctx, y, &f2), t.find(ctx, ab, f))
        else {
            c.case(false, || {
                format!("{}: witness ({f1}, {f2}) leaves the window", describe())
            });
            return;
        };
        let bad = t.members[u1].ones().find_map(|p| {
            t.members[u2]
                .ones()
                .find(|&q| !t.members[u].get(m.mul(p, q)))
                .map(|q| (p, q))
        });
        c.case(bad.is_none(), || {
            let (p, q) = bad.unwrap_or_default();
            format!(
                "{}: witness ({f1}, {f2}), product of {} and {} escapes",
                describe(),
                ctx.el(p),
                ctx.el(q)
            )
        });
    });
    out.push(merge(cont.finish(), rest));

    let inv_cases: Vec<(usize, usize)> = tables
        .iter()
        .enumerate()
        .flat_map(|(k, (_, t))| (0..t.nbhds.len()).map(move |i| (k, i)))
        .collect();
    out.push(
        Check::new(
            "topology.inversion",
            "inverses of members of U_g(F) lie in the witness neighbourhood of g', where the witness exists",
        )
        .sweep(&inv_cases, |&(k, i), c| {
            let (flavor, t) = (tables[k].0, &tables[k].1);
            let nb = &t.nbhds[i];
            let g = nb.center();
            if flavor == Flavor::WF && !g.is_total_bijection() {
                return;
            }
            let Ok(kset) = inversion_witness(flavor, g, nb.constraint()) else {
                c.case(false, || format!("no witness for {nb}"));
                return;
            };
            let target = t.find(ctx, &g.inverse(), &kset);
            let ok = target.is_some_and(|u| t.members[i].ones().all(|b| t.members[u].get(m.inv(b))));
            c.case(ok, || format!("{nb} with witness {kset}"))
        }),
    );

    let wf = &tables[1].1;
    let wf_cases: Vec<usize> = (0..wf.nbhds.len()).collect();
    out.push(
        Check::new(
            "topology.wf_inversion_discontinuous",
            "in WF, inversion has no witness at g of positive corank, and the constructed member's inverse escapes every neighbourhood of g'",
        )
        .sweep(&wf_cases, |&i, c| {
            let nb = &wf.nbhds[i];
            let g = nb.center();
            if g.corank() == 0 {
                c.case(
                    wf_inversion_counterexample(g, nb.constraint()) == Ok(None),
                    || nb.to_string(),
                );
                return;
            }
            let refused = matches!(
                inversion_witness(Flavor::WF, g, nb.constraint()),
                Err(Error::InversionDiscontinuous(_))
            );
            let widest = Nbhd::new(Flavor::WF, g.inverse(), FinSet::new()).expect("empty constraint");
            let escapes = match wf_inversion_counterexample(g, nb.constraint()) {
                Ok(Some(b)) => member(nb, &b) && !member(&widest, &b.inverse()),
                _ => false,
            };
            c.case(refused && escapes, || nb.to_string())
        }),
    );

    let distinct: Vec<(usize, usize)> = ctx.pairs(52).into_iter().filter(|(a, b)| a != b).collect();
    let sep_cases: Vec<(usize, usize, usize)> = (0..tables.len())
        .flat_map(|k| distinct.iter().map(move |&(a, b)| (k, a, b)))
        .collect();
    let mut sep = Check::new(
        "topology.separate",
        "separate returns valid constraints whose neighbourhoods are disjoint, with no common window member",
    )
    .sampled(ctx.sampled_pairs());
    for flavor in Flavor::ALL {
        sep.case(
            separate(ctx.el(0), ctx.el(0), flavor) == Err(Error::EqualElements),
            || "equal elements accepted".into(),
        );
    }
    let rest = Check::new("topology.separate", "").sweep(&sep_cases, |&(k, a, b), c| {
        let (flavor, t) = (tables[k].0, &tables[k].1);
        let (x, y) = (ctx.el(a), ctx.el(b));
        let describe = || format!("{flavor}: a = {x}, b = {y}");
        let Ok((f1, f2)) = separate(x, y, flavor) else {
            c.case(false, describe);
            return;
        };
        let (Ok(n1), Ok(n2)) = (
            Nbhd::new(flavor, x.clone(), f1.clone()),
            Nbhd::new(flavor, y.clone(), f2.clone()),
        ) else {
            c.case(false, || {
                format!("{}: invalid constraints ({f1}, {f2})", describe())
            });
            return;
        };
        let overlap = t.members_of(ctx, &n1).and(&t.members_of(ctx, &n2)).first();
        c.case(disjoint(&n1, &n2) == Ok(true) && overlap.is_none(), || {
            format!("{}: constraints ({f1}, {f2})", describe())
        });
    });
    out.push(merge(sep.finish(), rest));

    out
}
