use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Elements,
    Green,
    Congruence,
    Semilattice,
    Solver,
    Topology,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Elements,
        Suite::Green,
        Suite::Congruence,
        Suite::Semilattice,
        Suite::Solver,
        Suite::Topology,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Elements => "elements",
            Suite::Green => "green",
            Suite::Congruence => "congruence",
            Suite::Semilattice => "semilattice",
            Suite::Solver => "solver",
            Suite::Topology => "topology",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: format!("unknown suite `{s}`"),
            })
    }
}

/// Thresholds for exhaustive versus sampled sweeps.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    /// Seed for sampled sweeps; exhaustive sweeps ignore it.
    pub seed: u64,
    /// Triple quantifiers are exhaustive up to this window size.
    pub exhaustive_triples_up_to: usize,
    /// Pair quantifiers are exhaustive up to this window size.
    pub exhaustive_pairs_up_to: usize,
    /// Number of tuples drawn when sampling.
    pub samples: usize,
    /// Largest congruence level checked; `None` means the window size.
    pub max_level: Option<usize>,
    /// Largest window a verification run accepts.
    pub window_bound: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            exhaustive_triples_up_to: 3,
            exhaustive_pairs_up_to: 4,
            samples: 20_000,
            max_level: None,
            window_bound: super::VERIFY_WINDOW_BOUND,
        }
    }
}

impl VerifyConfig {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// All ordered pairs over `0..n`, or a seeded sample of them.
    pub(crate) fn pairs(&self, window: usize, n: usize, salt: u64) -> Vec<(usize, usize)> {
        if window <= self.exhaustive_pairs_up_to {
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
        } else {
            let mut rng = self.rng(salt);
            (0..self.samples)
                .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
                .collect()
        }
    }

    /// All ordered triples over `0..n`, or a seeded sample of them.
    pub(crate) fn triples(&self, window: usize, n: usize, salt: u64) -> Vec<(usize, usize, usize)> {
        if window <= self.exhaustive_triples_up_to {
            (0..n)
                .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
                .collect()
        } else {
            let mut rng = self.rng(salt);
            (0..self.samples)
                .map(|_| {
                    (
                        rng.random_range(0..n),
                        rng.random_range(0..n),
                        rng.random_range(0..n),
                    )
                })
                .collect()
        }
    }

    pub(crate) fn sampled_pairs(&self, window: usize) -> bool {
        window > self.exhaustive_pairs_up_to
    }

    pub(crate) fn sampled_triples(&self, window: usize) -> bool {
        window > self.exhaustive_triples_up_to
    }
}

/// Outcome of one property over a finite model.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub statement: String,
    /// Number of cases evaluated.
    pub cases: u64,
    pub sampled: bool,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Accumulates the cases of one property.
#[derive(Debug, Clone)]
pub(crate) struct Check {
    id: &'static str,
    statement: &'static str,
    cases: u64,
    sampled: bool,
    failure: Option<String>,
}

impl Check {
    pub(crate) fn new(id: &'static str, statement: &'static str) -> Self {
        Check {
            id,
            statement,
            cases: 0,
            sampled: false,
            failure: None,
        }
    }

    pub(crate) fn sampled(mut self, sampled: bool) -> Self {
        self.sampled = sampled;
        self
    }

    pub(crate) fn case(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(context());
        }
    }

    fn merge(&mut self, later: Check) {
        self.cases += later.cases;
        if self.failure.is_none() {
            self.failure = later.failure;
        }
    }

    pub(crate) fn finish(self) -> CheckResult {
        CheckResult {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            cases: self.cases,
            sampled: self.sampled,
            passed: self.failure.is_none(),
            counterexample: self.failure,
        }
    }

    /// Runs `body` for every item in parallel. The reported counterexample
    /// is the one for the earliest failing item, so output is deterministic.
    pub(crate) fn sweep<T, F>(mut self, items: &[T], body: F) -> CheckResult
    where
        T: Sync,
        F: Fn(&T, &mut Check) + Sync,
    {
        let (id, statement) = (self.id, self.statement);
        let parts: Vec<Check> = items
            .par_chunks(256)
            .map(|chunk| {
                let mut local = Check::new(id, statement);
                for item in chunk {
                    body(item, &mut local);
                }
                local
            })
            .collect();
        for part in parts {
            self.merge(part);
        }
        self.finish()
    }
}

/// Results of one verification run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub window: Vec<u64>,
    pub elements: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} on window {:?} ({} elements, seed {})",
            self.suite, self.window, self.elements, self.seed
        )?;
        for c in &self.checks {
            let mode = if c.sampled { "sampled" } else { "exhaustive" };
            writeln!(
                f,
                "{} {:<34} {:>10} cases ({mode})  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.cases,
                c.statement
            )?;
            if let Some(cx) = &c.counterexample {
                writeln!(f, "     counterexample: {cx}")?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}
