//! Per-index timing along a perturbation trajectory.
//!
//! At each iteration CARI, extended MI and CE are computed on the same pair
//! of co-partitions and each call is timed with a monotonic clock. Warm-up
//! iterations run but are not recorded.

use std::fmt;

use crate::ce::CeSolver;
use crate::error::Result;
use crate::sim::{score, Balance, SimConfig, Trajectory};

pub const DEFAULT_WARMUP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Cari,
    Emi,
    Ce,
}

impl IndexKind {
    pub const ALL: [IndexKind; 3] = [IndexKind::Cari, IndexKind::Emi, IndexKind::Ce];

    pub fn as_str(&self) -> &'static str {
        match self {
            IndexKind::Cari => "cari",
            IndexKind::Emi => "emi",
            IndexKind::Ce => "ce",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub rows: usize,
    pub cols: usize,
    pub row_clusters: usize,
    pub col_clusters: usize,
    pub balance: Balance,
    pub iterations: usize,
    pub warmup: usize,
    pub seed: u64,
    pub ce_solver: CeSolver,
}

impl BenchConfig {
    pub fn new(grid: (usize, usize), clusters: (usize, usize), iterations: usize) -> Self {
        Self {
            rows: grid.0,
            cols: grid.1,
            row_clusters: clusters.0,
            col_clusters: clusters.1,
            balance: Balance::Balanced,
            iterations,
            warmup: DEFAULT_WARMUP,
            seed: 0,
            ce_solver: CeSolver::exhaustive(),
        }
    }
}

/// One timed index evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimingSample {
    pub index: IndexKind,
    pub iteration: usize,
    pub elapsed_ns: u64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub samples: Vec<TimingSample>,
}

impl BenchReport {
    pub fn elapsed(&self, index: IndexKind) -> impl Iterator<Item = u64> + '_ {
        self.samples
            .iter()
            .filter(move |s| s.index == index)
            .map(|s| s.elapsed_ns)
    }

    /// Median elapsed nanoseconds for one index (mean of the middle pair for even counts).
    pub fn median(&self, index: IndexKind) -> Option<f64> {
        let mut v: Vec<u64> = self.elapsed(index).collect();
        if v.is_empty() {
            return None;
        }
        v.sort_unstable();
        let m = v.len() / 2;
        Some(if v.len() % 2 == 1 {
            v[m] as f64
        } else {
            (v[m - 1] as f64 + v[m] as f64) / 2.0
        })
    }
}

/// Times the three indices over `iterations` recorded steps of a trajectory.
/// Rows are emitted per iteration in the order cari, emi, ce.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    let mut sim = SimConfig::new(cfg.rows, cfg.cols, cfg.row_clusters, cfg.col_clusters)
        .with_balance(cfg.balance.clone())
        .with_seed(cfg.seed);
    sim.ce_solver = cfg.ce_solver;
    let mut traj = Trajectory::new(sim)?;
    let mut report = BenchReport {
        samples: Vec::with_capacity(cfg.iterations * IndexKind::ALL.len()),
    };
    let initial = traj.initial().clone();
    for step in 0..cfg.warmup + cfg.iterations {
        let current = traj.advance().clone();
        let s = score(&initial, &current, &cfg.ce_solver, true)?;
        if step < cfg.warmup {
            continue;
        }
        let iteration = step - cfg.warmup + 1;
        for (index, d) in [
            (IndexKind::Cari, s.t_cari),
            (IndexKind::Emi, s.t_emi),
            (IndexKind::Ce, s.t_ce),
        ] {
            report.samples.push(TimingSample {
                index,
                iteration,
                // sub-resolution calls still count as having taken time
                elapsed_ns: u64::try_from(d.as_nanos()).unwrap_or(u64::MAX).max(1),
            });
        }
    }
    Ok(report)
}
