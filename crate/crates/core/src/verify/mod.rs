//! Randomized exact verification suites with machine-readable reports.
//!
//! A suite is a list of named cases. Each case draws its points from its
//! own seeded sampler, so reports do not depend on scheduling; cases run
//! in parallel and are reported in declaration order.

mod random;
mod suites;

pub use random::{random_boundary_model, EdgeConstraint};
pub use suites::{proposition_instances, suite_cases, theorem_example, Suite, DWBC3_REFERENCE};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::PointSampler;
use crate::error::{Error, Result};
use crate::partition::Engine;

/// Environment variable capping the worker threads used by suites.
pub const THREADS_ENV: &str = "VERTEXKIT_THREADS";

/// Knobs shared by every suite. `None` selects the suite's default.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub seed: u64,
    pub points: Option<usize>,
    pub rows: Option<usize>,
    pub cols: Option<usize>,
    pub max_paths: Option<usize>,
    pub engine: Engine,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub name: String,
    pub pass: bool,
    /// Number of individual checks performed.
    pub checks: usize,
    /// Failing input and residual; present only on failure.
    pub witness: Option<Value>,
}

impl CaseResult {
    pub fn to_json(&self) -> Value {
        let mut v = json!({"name": self.name, "pass": self.pass, "checks": self.checks});
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "suite": self.suite.name(),
            "seed": self.seed,
            "pass": self.passed(),
            "cases": self.cases.iter().map(CaseResult::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Per-case state handed to a check: a point sampler, a generator for
/// random models and the shared options.
pub struct CaseContext<'a> {
    pub sampler: PointSampler,
    pub rng: ChaCha8Rng,
    pub options: &'a VerifyOptions,
}

/// A check returns the number of checks made and, on failure, a witness.
pub type Check = Box<dyn Fn(&mut CaseContext<'_>) -> Result<(usize, Option<Value>)> + Send + Sync>;

pub struct Case {
    pub name: String,
    pub check: Check,
}

impl Case {
    pub fn new(name: impl Into<String>, check: impl Fn(&mut CaseContext<'_>) -> Result<(usize, Option<Value>)> + Send + Sync + 'static) -> Case {
        Case {
            name: name.into(),
            check: Box::new(check),
        }
    }
}

fn case_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Runs `f` on a pool capped by [`THREADS_ENV`] when it is set.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Invalid(e.to_string()))?;
            Ok(pool.install(f))
        }
        Err(_) => Ok(f()),
    }
}

pub fn run_cases(suite: Suite, cases: Vec<Case>, options: &VerifyOptions) -> Result<SuiteReport> {
    let results = with_thread_cap(|| {
        cases
            .par_iter()
            .enumerate()
            .map(|(i, case)| {
                let seed = case_seed(options.seed, i);
                let mut ctx = CaseContext {
                    sampler: PointSampler::new(seed),
                    rng: ChaCha8Rng::seed_from_u64(!seed),
                    options,
                };
                let (checks, witness) = match (case.check)(&mut ctx) {
                    Ok(r) => r,
                    Err(e) => (0, Some(json!({"error": e.to_string()}))),
                };
                CaseResult {
                    name: case.name.clone(),
                    pass: witness.is_none(),
                    checks,
                    witness,
                }
            })
            .collect()
    })?;
    Ok(SuiteReport {
        suite,
        seed: options.seed,
        cases: results,
    })
}

/// Builds and runs a suite.
pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<SuiteReport> {
    run_cases(suite, suite_cases(suite, options)?, options)
}
