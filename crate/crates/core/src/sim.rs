//! Perturbation trajectories of co-partitions.
//!
//! Starting from an initial co-partition `(z0, w0)`, each iteration moves one
//! random row to a random row cluster and one random column to a random
//! column cluster, then scores the current co-partition against the initial
//! one. Agreement degrades as the iterations accumulate.
//!
//! All randomness comes from a `ChaCha8Rng` seeded with [`SimConfig::seed`]
//! through `SeedableRng::seed_from_u64`, so a trajectory is reproducible from
//! its configuration alone.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cari::cari;
use crate::ce::{classification_error, CeSolver};
use crate::error::{Error, Result};
use crate::mi::extended_mi;
use crate::partition::{CoPartition, Partition};

/// The generator every simulation draws from.
pub type SimRng = ChaCha8Rng;

pub fn sim_rng(seed: u64) -> SimRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Cluster sizes of the initial partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// Equal sizes; when `K` does not divide `n` the first `n mod K` clusters get one extra.
    Balanced,
    /// The built-in unbalanced sizes for five clusters and `n` in {50, 500, 1000}.
    Unbalanced,
    /// Explicit sizes, one per cluster.
    Preset(Vec<usize>),
}

/// Built-in unbalanced cluster sizes, when defined for `(n, k)`.
pub fn unbalanced_preset(n: usize, k: usize) -> Option<&'static [usize]> {
    match (n, k) {
        (50, 5) => Some(&[4, 7, 10, 13, 16]),
        (500, 5) => Some(&[20, 35, 100, 165, 180]),
        (1000, 5) => Some(&[30, 70, 200, 300, 400]),
        _ => None,
    }
}

impl fmt::Display for Balance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Balance::Balanced => f.write_str("balanced"),
            Balance::Unbalanced => f.write_str("unbalanced"),
            Balance::Preset(sizes) => {
                let s: Vec<String> = sizes.iter().map(|x| x.to_string()).collect();
                write!(f, "preset:{}", s.join(","))
            }
        }
    }
}

impl FromStr for Balance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "balanced" => Ok(Balance::Balanced),
            "unbalanced" => Ok(Balance::Unbalanced),
            _ => {
                let list = s.strip_prefix("preset:").ok_or_else(|| {
                    Error::Config(format!(
                        "balance must be balanced, unbalanced or preset:<sizes>, got {s:?}"
                    ))
                })?;
                let sizes = list
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Config(format!("bad preset size {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Balance::Preset(sizes))
            }
        }
    }
}

/// Initial partition of `n` elements into `k` clusters, labels in contiguous runs.
pub fn make_initial(n: usize, k: usize, balance: &Balance) -> Result<Partition> {
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    if k == 0 {
        return Err(Error::ZeroClusters);
    }
    let sizes: Vec<usize> = match balance {
        Balance::Balanced => (0..k).map(|c| n / k + usize::from(c < n % k)).collect(),
        Balance::Unbalanced => unbalanced_preset(n, k)
            .ok_or_else(|| {
                Error::Config(format!(
                    "no built-in unbalanced sizes for {n} elements in {k} clusters"
                ))
            })?
            .to_vec(),
        Balance::Preset(sizes) => {
            if sizes.len() != k {
                return Err(Error::Config(format!(
                    "preset has {} sizes for {k} clusters",
                    sizes.len()
                )));
            }
            let sum: usize = sizes.iter().sum();
            if sum != n {
                return Err(Error::Config(format!(
                    "preset sizes sum to {sum}, expected {n}"
                )));
            }
            sizes.clone()
        }
    };
    let labels = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c + 1, s))
        .collect();
    Partition::new(labels, k)
}

/// Whether a perturbation may redraw the label a coordinate already has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelDraw {
    /// Uniform over all `K` labels, the current one included.
    #[default]
    Inclusive,
    /// Redraw until the label changes (a no-op when `K = 1`).
    Strict,
}

/// Moves one uniformly chosen coordinate to a uniformly drawn label.
pub fn perturb<R: Rng + ?Sized>(p: &Partition, rng: &mut R) -> Partition {
    perturb_with(p, rng, LabelDraw::Inclusive)
}

pub fn perturb_with<R: Rng + ?Sized>(p: &Partition, rng: &mut R, draw: LabelDraw) -> Partition {
    let k = p.cluster_count();
    let position = rng.random_range(0..p.len());
    let mut label = rng.random_range(1..=k);
    if draw == LabelDraw::Strict && k > 1 {
        while label == p.labels()[position] {
            label = rng.random_range(1..=k);
        }
    }
    p.with_label(position, label)
}

/// Which pair is compared against the initial co-partition at each iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `(z_i, w_i)`
    Full,
    /// `(z_0, w_i)`: rows held at their initial partition.
    FixedRows,
    /// `(z_i, w_0)`: columns held at their initial partition.
    FixedCols,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::FixedRows => "fixed_rows",
            Variant::FixedCols => "fixed_cols",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimConfig {
    pub rows: usize,
    pub cols: usize,
    pub row_clusters: usize,
    pub col_clusters: usize,
    pub row_balance: Balance,
    pub col_balance: Balance,
    pub iterations: usize,
    pub seed: u64,
    /// Also score the fixed-row and fixed-column pairs.
    pub variants: bool,
    pub draw: LabelDraw,
    pub ce_solver: CeSolver,
    /// Record wall-clock time per index. Off by default so that records
    /// depend on the configuration only.
    pub timings: bool,
}

impl SimConfig {
    pub fn new(rows: usize, cols: usize, row_clusters: usize, col_clusters: usize) -> Self {
        Self {
            rows,
            cols,
            row_clusters,
            col_clusters,
            row_balance: Balance::Balanced,
            col_balance: Balance::Balanced,
            iterations: 0,
            seed: 0,
            variants: false,
            draw: LabelDraw::Inclusive,
            ce_solver: CeSolver::assignment(),
            timings: false,
        }
    }

    pub fn with_balance(mut self, balance: Balance) -> Self {
        self.row_balance = balance.clone();
        self.col_balance = balance;
        self
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_variants(mut self, variants: bool) -> Self {
        self.variants = variants;
        self
    }

    pub fn initial(&self) -> Result<CoPartition> {
        let rows = make_initial(self.rows, self.row_clusters, &self.row_balance)?;
        let cols = make_initial(self.cols, self.col_clusters, &self.col_balance)?;
        if self.rows * self.cols < 2 {
            return Err(Error::Config("grid needs at least two cells".into()));
        }
        let clusters = self.row_clusters.max(self.col_clusters);
        self.ce_solver.check(clusters)?;
        Ok(CoPartition::new(rows, cols))
    }

    fn enabled_variants(&self) -> &'static [Variant] {
        if self.variants {
            &[Variant::Full, Variant::FixedRows, Variant::FixedCols]
        } else {
            &[Variant::Full]
        }
    }
}

/// Index values (and optionally their timings) for one comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scores {
    pub cari: f64,
    pub emi: f64,
    pub ce: f64,
    pub t_cari: Duration,
    pub t_emi: Duration,
    pub t_ce: Duration,
}

/// Computes CARI, extended MI and CE of `current` against `reference`,
/// timing each when `timed` is set.
pub fn score(
    reference: &CoPartition,
    current: &CoPartition,
    solver: &CeSolver,
    timed: bool,
) -> Result<Scores> {
    let (cari, t_cari) = measure(timed, || cari(reference, current))?;
    let (emi, t_emi) = measure(timed, || extended_mi(reference, current))?;
    let (ce, t_ce) = measure(timed, || classification_error(reference, current, solver))?;
    Ok(Scores {
        cari,
        emi,
        ce,
        t_cari,
        t_emi,
        t_ce,
    })
}

fn measure<T>(timed: bool, f: impl FnOnce() -> Result<T>) -> Result<(T, Duration)> {
    if !timed {
        return Ok((f()?, Duration::ZERO));
    }
    let start = Instant::now();
    let value = std::hint::black_box(f()?);
    Ok((value, start.elapsed()))
}

/// One scored comparison of a trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryRecord {
    pub iteration: usize,
    pub variant: Variant,
    pub cari: f64,
    pub emi: f64,
    pub ce: f64,
    pub one_minus_ce: f64,
    pub t_cari_ns: u64,
    pub t_emi_ns: u64,
    pub t_ce_ns: u64,
}

impl TrajectoryRecord {
    fn new(iteration: usize, variant: Variant, s: Scores) -> Self {
        Self {
            iteration,
            variant,
            cari: s.cari,
            emi: s.emi,
            ce: s.ce,
            one_minus_ce: 1.0 - s.ce,
            t_cari_ns: nanos(s.t_cari),
            t_emi_ns: nanos(s.t_emi),
            t_ce_ns: nanos(s.t_ce),
        }
    }
}

fn nanos(d: Duration) -> u64 {
    u64::try_from(d.as_nanos()).unwrap_or(u64::MAX)
}

/// Iterator over the records of a trajectory, in iteration order and, within
/// an iteration, in the order full, fixed_rows, fixed_cols.
pub struct Trajectory {
    cfg: SimConfig,
    rng: SimRng,
    initial: CoPartition,
    current: CoPartition,
    iteration: usize,
    pending: VecDeque<TrajectoryRecord>,
}

impl Trajectory {
    pub fn new(cfg: SimConfig) -> Result<Self> {
        let initial = cfg.initial()?;
        Ok(Self {
            rng: sim_rng(cfg.seed),
            current: initial.clone(),
            initial,
            cfg,
            iteration: 0,
            pending: VecDeque::new(),
        })
    }

    pub fn initial(&self) -> &CoPartition {
        &self.initial
    }

    /// The co-partition after the last completed iteration.
    pub fn current(&self) -> &CoPartition {
        &self.current
    }

    /// Perturbs rows then columns once; returns the new co-partition.
    pub fn advance(&mut self) -> &CoPartition {
        let rows = perturb_with(self.current.rows(), &mut self.rng, self.cfg.draw);
        let cols = perturb_with(self.current.cols(), &mut self.rng, self.cfg.draw);
        self.current = CoPartition::new(rows, cols);
        self.iteration += 1;
        &self.current
    }

    fn step(&mut self) -> Result<()> {
        self.advance();
        for &variant in self.cfg.enabled_variants() {
            let compared = match variant {
                Variant::Full => self.current.clone(),
                Variant::FixedRows => {
                    CoPartition::new(self.initial.rows().clone(), self.current.cols().clone())
                }
                Variant::FixedCols => {
                    CoPartition::new(self.current.rows().clone(), self.initial.cols().clone())
                }
            };
            let s = score(
                &self.initial,
                &compared,
                &self.cfg.ce_solver,
                self.cfg.timings,
            )?;
            self.pending
                .push_back(TrajectoryRecord::new(self.iteration, variant, s));
        }
        Ok(())
    }
}

impl Iterator for Trajectory {
    type Item = Result<TrajectoryRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.pending.is_empty() {
            if self.iteration >= self.cfg.iterations {
                return None;
            }
            if let Err(e) = self.step() {
                self.iteration = self.cfg.iterations;
                return Some(Err(e));
            }
        }
        self.pending.pop_front().map(Ok)
    }
}

/// Runs a whole trajectory and collects its records.
pub fn run_trajectory(cfg: &SimConfig) -> Result<Vec<TrajectoryRecord>> {
    Trajectory::new(cfg.clone())?.collect()
}
