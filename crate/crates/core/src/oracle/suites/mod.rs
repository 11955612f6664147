mod congruence;
mod elements;
mod green;
mod semilattice;
mod solver;
mod topology;

use rayon::prelude::*;

use super::check::{Check, CheckResult, Report, Suite, VerifyConfig};
use super::{Model, Window};
use crate::element::PartialSelfmap;
use crate::error::{Error, Result};

/// Runs every property of `suite` over the elements supported in `window`.
///
/// Property failures are part of the report; the only error is a window
/// larger than `cfg.window_bound`.
pub fn verify(suite: Suite, window: &Window, cfg: &VerifyConfig) -> Result<Report> {
    if window.len() > cfg.window_bound {
        return Err(Error::WindowTooLarge {
            size: window.len(),
            bound: cfg.window_bound,
        });
    }
    let model = Model::new(window, cfg.window_bound)?;
    let ctx = Ctx {
        model: &model,
        cfg,
        w: window.len(),
    };
    let suites = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        checks.extend(match s {
            Suite::Elements => elements::run(&ctx),
            Suite::Green => green::run(&ctx),
            Suite::Congruence => congruence::run(&ctx),
            Suite::Semilattice => semilattice::run(&ctx),
            Suite::Solver => solver::run(&ctx),
            Suite::Topology => topology::run(&ctx),
            Suite::All => unreachable!(),
        });
    }
    Ok(Report {
        suite,
        window: window.points().iter().collect(),
        elements: model.len(),
        seed: cfg.seed,
        checks,
    })
}

struct Ctx<'a> {
    model: &'a Model,
    cfg: &'a VerifyConfig,
    w: usize,
}

impl Ctx<'_> {
    fn n(&self) -> usize {
        self.model.len()
    }

    fn el(&self, i: usize) -> &PartialSelfmap {
        self.model.get(i)
    }

    fn all(&self) -> Vec<usize> {
        (0..self.n()).collect()
    }

    fn pairs(&self, salt: u64) -> Vec<(usize, usize)> {
        self.cfg.pairs(self.w, self.n(), salt)
    }

    fn triples(&self, salt: u64) -> Vec<(usize, usize, usize)> {
        self.cfg.triples(self.w, self.n(), salt)
    }

    fn sampled_pairs(&self) -> bool {
        self.cfg.sampled_pairs(self.w)
    }

    fn sampled_triples(&self) -> bool {
        self.cfg.sampled_triples(self.w)
    }

    fn idempotents(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.el(i).is_idempotent())
            .collect()
    }

    /// Bit matrix of `rel` over all element pairs, rows built in parallel.
    fn matrix<F>(&self, rel: F) -> Matrix
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let n = self.n();
        let rows = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut row = Bits::new(n);
                for b in 0..n {
                    if rel(a, b) {
                        row.set(b);
                    }
                }
                row
            })
            .collect();
        Matrix { rows }
    }
}

/// Fixed-size bit set over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn or(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| i * 64 + b)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Matrix {
    rows: Vec<Bits>,
}

impl Matrix {
    fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a].get(b)
    }

    fn row(&self, a: usize) -> &Bits {
        &self.rows[a]
    }

    fn is_subset(&self, other: &Matrix) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    fn and(&self, other: &Matrix) -> Matrix {
        Matrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.and(b))
                .collect(),
        }
    }

    fn or(&self, other: &Matrix) -> Matrix {
        Matrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.or(b))
                .collect(),
        }
    }
}

/// Reflexivity, symmetry and transitivity of `m` as one check.
fn equivalence_check(
    ctx: &Ctx,
    m: &Matrix,
    id: &'static str,
    statement: &'static str,
    salt: u64,
) -> CheckResult {
    let triples = ctx.triples(salt);
    let mut check = Check::new(id, statement).sampled(ctx.sampled_triples());
    for a in 0..ctx.n() {
        check.case(m.get(a, a), || format!("not reflexive at {}", ctx.el(a)));
    }
    for a in 0..ctx.n() {
        for b in 0..ctx.n() {
            check.case(!m.get(a, b) || m.get(b, a), || {
                format!("not symmetric at ({}, {})", ctx.el(a), ctx.el(b))
            });
        }
    }
    let rest = Check::new(id, statement).sweep(&triples, |&(a, b, c), check| {
        check.case(!(m.get(a, b) && m.get(b, c)) || m.get(a, c), || {
            format!(
                "not transitive at ({}, {}, {})",
                ctx.el(a),
                ctx.el(b),
                ctx.el(c)
            )
        })
    });
    merge(check.finish(), rest)
}

/// Combines a serial prefix of cases with a parallel sweep of the same
/// property.
fn merge(mut head: CheckResult, rest: CheckResult) -> CheckResult {
    head.cases += rest.cases;
    if head.passed && !rest.passed {
        head.passed = false;
        head.counterexample = rest.counterexample;
    }
    head
}
