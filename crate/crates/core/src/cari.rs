//! Coclustering Adjusted Rand Index.
//!
//! The block-level contingency table of two co-partitions is the Kronecker
//! product of the row table and the column table, so CARI never needs to
//! visit the `I × J` cells. Row `p` of the product corresponds to block
//! `(h, l)` through [`block_unindex`](crate::contingency::block_unindex),
//! column `q` likewise to `(h', l')`.

use crate::ari::ari_from_sums;
use crate::contingency::{comb2, contingency, ContingencyTable, PairSums};
use crate::error::{Error, Result};
use crate::partition::{ensure_same_grid, CoPartition};

/// Product size `H·H'·L·L'` at or below which the Kronecker table is built explicitly.
pub const DEFAULT_MATERIALIZE_THRESHOLD: u64 = 1_000_000;

/// Kronecker product of two contingency tables.
///
/// With `tz` of shape `H × H'` and `tw` of shape `L × L'`, the result is
/// `(H·L) × (H'·L')` with entry `((h-1)L + l, (h'-1)L' + l') = tz[h][h'] · tw[l][l']`.
/// Margins are filled from the margin products rather than re-summed.
pub fn kronecker(tz: &ContingencyTable, tw: &ContingencyTable) -> ContingencyTable {
    let (h, hp) = (tz.rows(), tz.cols());
    let (l, lp) = (tw.rows(), tw.cols());
    let rows = h * l;
    let cols = hp * lp;
    let mut counts = vec![0u64; rows * cols];
    for zr in 0..h {
        for wr in 0..l {
            let out = &mut counts[(zr * l + wr) * cols..(zr * l + wr + 1) * cols];
            let w_row = tw.row(wr);
            for (zc, &a) in tz.row(zr).iter().enumerate() {
                let block = &mut out[zc * lp..(zc + 1) * lp];
                for (dst, &b) in block.iter_mut().zip(w_row) {
                    *dst = a * b;
                }
            }
        }
    }
    let row_margins = outer(tz.row_margins(), tw.row_margins());
    let col_margins = outer(tz.col_margins(), tw.col_margins());
    ContingencyTable::from_parts_unchecked(
        rows,
        cols,
        counts,
        row_margins,
        col_margins,
        tz.total() * tw.total(),
    )
}

fn outer(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| x * y))
        .collect()
}

/// How [`cari_with`] evaluates the Kronecker sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KroneckerStrategy {
    /// Materialize when `H·H'·L·L'` is at most the threshold, stream otherwise.
    Auto {
        threshold: u64,
    },
    Materialize,
    Stream,
}

impl Default for KroneckerStrategy {
    fn default() -> Self {
        KroneckerStrategy::Auto {
            threshold: DEFAULT_MATERIALIZE_THRESHOLD,
        }
    }
}

/// CARI between two co-partitions of the same `I × J` grid.
///
/// Equals 1 when the co-partitions agree up to relabeling of row and column
/// clusters. Negative values are returned as-is.
pub fn cari(u: &CoPartition, v: &CoPartition) -> Result<f64> {
    cari_with(u, v, KroneckerStrategy::default())
}

pub fn cari_with(u: &CoPartition, v: &CoPartition, strategy: KroneckerStrategy) -> Result<f64> {
    ensure_same_grid(u, v)?;
    let (ni, nj) = u.grid();
    if ni * nj < 2 {
        return Err(Error::UndefinedIndex("CARI needs at least two cells"));
    }
    let tz = contingency(u.rows(), v.rows())?;
    let tw = contingency(u.cols(), v.cols())?;
    cari_from_tables(&tz, &tw, strategy)
}

/// CARI from the row table `n^{zz'}` and the column table `n^{ww'}`.
pub fn cari_from_tables(
    tz: &ContingencyTable,
    tw: &ContingencyTable,
    strategy: KroneckerStrategy,
) -> Result<f64> {
    let sums = kronecker_pair_sums(tz, tw, strategy);
    if sums.total == 0 {
        return Err(Error::UndefinedIndex("CARI needs at least two cells"));
    }
    ari_from_sums(&sums)
}

/// The binomial sums of `tz ⊗ tw`, materialized or streamed per `strategy`.
pub fn kronecker_pair_sums(
    tz: &ContingencyTable,
    tw: &ContingencyTable,
    strategy: KroneckerStrategy,
) -> PairSums {
    let size = (tz.rows() * tz.cols()) as u64 * (tw.rows() * tw.cols()) as u64;
    let materialize = match strategy {
        KroneckerStrategy::Materialize => true,
        KroneckerStrategy::Stream => false,
        KroneckerStrategy::Auto { threshold } => size <= threshold,
    };
    if materialize {
        kronecker(tz, tw).pair_sums()
    } else {
        streamed_pair_sums(tz, tw)
    }
}

/// Visits every product `tz[h][h'] · tw[l][l']` once without storing the table.
fn streamed_pair_sums(tz: &ContingencyTable, tw: &ContingencyTable) -> PairSums {
    let w_counts: Vec<u64> = tw.counts().iter().copied().filter(|&b| b > 0).collect();
    let mut cells = 0u128;
    for &a in tz.counts().iter().filter(|&&a| a > 0) {
        for &b in &w_counts {
            cells += comb2(a * b);
        }
    }
    PairSums {
        cells,
        rows: margin_product_sum(tz.row_margins(), tw.row_margins()),
        cols: margin_product_sum(tz.col_margins(), tw.col_margins()),
        total: comb2(tz.total() * tw.total()),
    }
}

fn margin_product_sum(a: &[u64], b: &[u64]) -> u128 {
    a.iter()
        .map(|&x| b.iter().map(|&y| comb2(x * y)).sum::<u128>())
        .sum()
}
