//! `cari` - compare coclustering partitions, simulate perturbation
//! trajectories, time the indices.
//!
//! Exit codes: 0 success, 1 computation error, 2 input error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cari_core::format::fixed6;
use cari_core::sim::{LabelDraw, Trajectory};
use cari_core::{
    parse_copartition, run_bench, Balance, BenchConfig, CeSolver, CoPartition, Error, IndexReport,
    SimConfig,
};

#[derive(Parser)]
#[command(
    name = "cari",
    version,
    about = "Agreement indices for coclustering partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two co-partition files and print all indices as JSON
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, value_enum, default_value_t = CeModeArg::Assignment)]
        ce_mode: CeModeArg,
    },
    /// Run a perturbation trajectory and write one CSV row per iteration and variant
    Simulate {
        #[command(flatten)]
        grid: GridArgs,
        /// Also compare the fixed-row and fixed-column pairs
        #[arg(long)]
        variants: bool,
        /// Redraw perturbed labels until they differ from the current one
        #[arg(long)]
        strict: bool,
        /// Measure per-index wall-clock times (otherwise the t_* columns are 0)
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t = CeModeArg::Assignment)]
        ce_mode: CeModeArg,
    },
    /// Time CARI, extended MI and CE along a trajectory
    Bench {
        #[command(flatten)]
        grid: GridArgs,
        /// Untimed iterations run before recording
        #[arg(long, default_value_t = cari_core::timing::DEFAULT_WARMUP)]
        warmup: usize,
        #[arg(long, value_enum, default_value_t = CeModeArg::Exhaustive)]
        ce_mode: CeModeArg,
    },
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
    #[arg(long)]
    row_clusters: usize,
    #[arg(long)]
    col_clusters: usize,
    #[arg(long)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// balanced | unbalanced | preset:<size,size,...>
    #[arg(long, default_value = "balanced")]
    balance: String,
    /// Column balance, when it differs from --balance
    #[arg(long)]
    col_balance: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CeModeArg {
    Exhaustive,
    Assignment,
}

impl From<CeModeArg> for CeSolver {
    fn from(m: CeModeArg) -> Self {
        match m {
            CeModeArg::Exhaustive => CeSolver::exhaustive(),
            CeModeArg::Assignment => CeSolver::assignment(),
        }
    }
}

enum Failure {
    Input(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Compute(format!("writing output: {e}"))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(format!("writing output: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compare {
            file_a,
            file_b,
            ce_mode,
        } => compare(&file_a, &file_b, ce_mode.into()),
        Command::Simulate {
            grid,
            variants,
            strict,
            timings,
            ce_mode,
        } => simulate(&grid, variants, strict, timings, ce_mode.into()),
        Command::Bench {
            grid,
            warmup,
            ce_mode,
        } => bench(&grid, warmup, ce_mode.into()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_copartition(path: &Path) -> Result<CoPartition, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_copartition(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn compare(a: &Path, b: &Path, solver: CeSolver) -> Result<(), Failure> {
    let u = read_copartition(a)?;
    let v = read_copartition(b)?;
    let report = IndexReport::compare(&u, &v, &solver)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", report.to_json())?;
    Ok(())
}

fn balances(grid: &GridArgs) -> Result<(Balance, Balance), Failure> {
    let rows: Balance = grid.balance.parse()?;
    let cols = match &grid.col_balance {
        Some(s) => s.parse()?,
        None => rows.clone(),
    };
    Ok((rows, cols))
}

fn simulate(
    grid: &GridArgs,
    variants: bool,
    strict: bool,
    timings: bool,
    solver: CeSolver,
) -> Result<(), Failure> {
    let (row_balance, col_balance) = balances(grid)?;
    let mut cfg = SimConfig::new(grid.rows, grid.cols, grid.row_clusters, grid.col_clusters)
        .with_iterations(grid.iters)
        .with_seed(grid.seed)
        .with_variants(variants);
    cfg.row_balance = row_balance;
    cfg.col_balance = col_balance;
    cfg.draw = if strict {
        LabelDraw::Strict
    } else {
        LabelDraw::Inclusive
    };
    cfg.timings = timings;
    cfg.ce_solver = solver;

    let trajectory = Trajectory::new(cfg)?;
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record([
        "iteration",
        "variant",
        "cari",
        "emi",
        "ce",
        "one_minus_ce",
        "t_cari_ns",
        "t_emi_ns",
        "t_ce_ns",
    ])?;
    for rec in trajectory {
        let r = rec?;
        w.write_record([
            r.iteration.to_string(),
            r.variant.to_string(),
            fixed6(r.cari),
            fixed6(r.emi),
            fixed6(r.ce),
            fixed6(r.one_minus_ce),
            r.t_cari_ns.to_string(),
            r.t_emi_ns.to_string(),
            r.t_ce_ns.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn bench(grid: &GridArgs, warmup: usize, solver: CeSolver) -> Result<(), Failure> {
    let (balance, col_balance) = balances(grid)?;
    if col_balance != balance {
        return Err(Failure::Input(
            "bench uses one balance for rows and columns".into(),
        ));
    }
    let cfg = BenchConfig {
        rows: grid.rows,
        cols: grid.cols,
        row_clusters: grid.row_clusters,
        col_clusters: grid.col_clusters,
        balance,
        iterations: grid.iters,
        warmup,
        seed: grid.seed,
        ce_solver: solver,
    };
    let report = run_bench(&cfg)?;
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(["index", "iteration", "elapsed_ns"])?;
    for s in &report.samples {
        w.write_record([
            s.index.to_string(),
            s.iteration.to_string(),
            s.elapsed_ns.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
