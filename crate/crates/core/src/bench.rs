//! Timing harness behind the `bench` command.

use std::fmt::Write as _;
use std::time::Duration;

use thiserror::Error;

use crate::generators::{families, gen_promise_instance, PromiseExhausted};
use crate::graph::Graph;
use crate::lists::ListAssignment;
use crate::solver::{solve_report, SolveError, SolverConfig};

pub const CSV_HEADER: &str = "family,n,m,rep,phase,millis,|S|";

/// Attempts per promise-family instance.
pub const PROMISE_ATTEMPTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Grid,
    Promise,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Grid => "grid",
            Family::Promise => "promise",
        }
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("the promise family needs a seed")]
    MissingSeed,
    #[error(transparent)]
    Promise(#[from] PromiseExhausted),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub rep: usize,
    pub phase: &'static str,
    pub millis: f64,
    pub domset_size: usize,
}

/// The benchmark instance of `family` at size `n`. Grids get
/// `round(sqrt(n))` rows, so their vertex count is only close to `n`.
pub fn instance(family: Family, n: usize, cfg: &SolverConfig, seed: Option<u64>) -> Result<Graph, BenchError> {
    Ok(match family {
        Family::Path => families::path(n),
        Family::Grid => families::grid_near(n),
        Family::Promise => {
            let seed = seed.ok_or(BenchError::MissingSeed)?;
            let seed = seed.wrapping_add(n as u64);
            gen_promise_instance(n, cfg.t, cfg.s, seed, PROMISE_ATTEMPTS)?.graph().clone()
        }
    })
}

/// Solves every instance `reps` times with full lists, one row per phase.
pub fn run(
    family: Family,
    sizes: &[usize],
    cfg: &SolverConfig,
    reps: usize,
    seed: Option<u64>,
) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    for &size in sizes {
        let g = instance(family, size, cfg, seed)?;
        let lists = ListAssignment::full(g.n());
        for rep in 0..reps {
            let report = solve_report(&g, &lists, cfg)?;
            let t = report.timings;
            for (phase, d) in [
                ("k4", t.k4),
                ("domset", t.domset),
                ("enum", t.enumeration),
                ("total", t.total),
            ] {
                rows.push(BenchRow {
                    family,
                    n: g.n(),
                    m: g.m(),
                    rep,
                    phase,
                    millis: millis(d),
                    domset_size: report.dominating_set_size,
                });
            }
        }
    }
    Ok(rows)
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{:.4},{}",
            r.family.name(),
            r.n,
            r.m,
            r.rep,
            r.phase,
            r.millis,
            r.domset_size
        )
        .unwrap();
    }
    out
}
