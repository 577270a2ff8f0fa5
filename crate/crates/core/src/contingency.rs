//! Contingency tables, pair counts and the block-index bijection.

use crate::error::{Error, Result};
use crate::partition::{ensure_same_grid, ensure_same_len, CoPartition, Partition};

/// `m choose 2`, zero for `m < 2`.
pub fn comb2(m: u64) -> u128 {
    let m = u128::from(m);
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

/// Dense cross-tabulation of two partitions with cached margins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    rows: usize,
    cols: usize,
    counts: Vec<u64>,
    row_margins: Vec<u64>,
    col_margins: Vec<u64>,
    total: u64,
}

impl ContingencyTable {
    /// Builds a table from row-major counts, computing margins.
    pub fn from_counts(rows: usize, cols: usize, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                what: "count buffer length vs rows*cols",
                left: counts.len(),
                right: rows * cols,
            });
        }
        let mut row_margins = vec![0u64; rows];
        let mut col_margins = vec![0u64; cols];
        for (r, row) in counts.chunks(cols.max(1)).enumerate().take(rows) {
            for (c, &x) in row.iter().enumerate() {
                row_margins[r] += x;
                col_margins[c] += x;
            }
        }
        let total = row_margins.iter().sum();
        Ok(Self {
            rows,
            cols,
            counts,
            row_margins,
            col_margins,
            total,
        })
    }

    /// Builds a table from nested rows.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut counts = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    what: "ragged table rows",
                    left: r.len(),
                    right: ncols,
                });
            }
            counts.extend_from_slice(r);
        }
        Self::from_counts(rows.len(), ncols, counts)
    }

    /// Caller guarantees the margins match the counts.
    pub(crate) fn from_parts_unchecked(
        rows: usize,
        cols: usize,
        counts: Vec<u64>,
        row_margins: Vec<u64>,
        col_margins: Vec<u64>,
        total: u64,
    ) -> Self {
        debug_assert_eq!(counts.len(), rows * cols);
        Self {
            rows,
            cols,
            counts,
            row_margins,
            col_margins,
            total,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.counts[r * self.cols + c]
    }

    /// Row-major counts.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.counts[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_margins(&self) -> &[u64] {
        &self.row_margins
    }

    pub fn col_margins(&self) -> &[u64] {
        &self.col_margins
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn transpose(&self) -> Self {
        let mut counts = vec![0u64; self.counts.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                counts[c * self.rows + r] = self.get(r, c);
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            counts,
            row_margins: self.col_margins.clone(),
            col_margins: self.row_margins.clone(),
            total: self.total,
        }
    }

    /// The nested-rows view, mostly for assertions and display.
    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// `(Σ C(n_rc, 2), Σ C(row margin, 2), Σ C(col margin, 2))`.
    pub fn pair_sums(&self) -> PairSums {
        PairSums {
            cells: self.counts.iter().map(|&x| comb2(x)).sum(),
            rows: self.row_margins.iter().map(|&x| comb2(x)).sum(),
            cols: self.col_margins.iter().map(|&x| comb2(x)).sum(),
            total: comb2(self.total),
        }
    }
}

/// The three binomial sums the Rand family of indices is built from, plus `C(n, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSums {
    pub cells: u128,
    pub rows: u128,
    pub cols: u128,
    pub total: u128,
}

/// Pair-agreement counts between two partitions of the same set.
///
/// `a`: together in both; `b`: together only in the first; `c`: together only
/// in the second; `d`: apart in both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCounts {
    pub a: u128,
    pub b: u128,
    pub c: u128,
    pub d: u128,
}

impl PairCounts {
    pub fn total(&self) -> u128 {
        self.a + self.b + self.c + self.d
    }
}

impl From<PairSums> for PairCounts {
    fn from(s: PairSums) -> Self {
        let a = s.cells;
        let b = s.rows - a;
        let c = s.cols - a;
        let d = s.total - a - b - c;
        PairCounts { a, b, c, d }
    }
}

/// Pair counts from a contingency table.
pub fn pair_counts(t: &ContingencyTable) -> PairCounts {
    t.pair_sums().into()
}

/// Cross-tabulates two partitions of the same set. The table is
/// `p.cluster_count() × q.cluster_count()`.
pub fn contingency(p: &Partition, q: &Partition) -> Result<ContingencyTable> {
    ensure_same_len(p, q, "partition lengths")?;
    let (rows, cols) = (p.cluster_count(), q.cluster_count());
    let mut counts = vec![0u64; rows * cols];
    let mut row_margins = vec![0u64; rows];
    let mut col_margins = vec![0u64; cols];
    for (&h, &k) in p.labels().iter().zip(q.labels()) {
        counts[(h - 1) * cols + (k - 1)] += 1;
        row_margins[h - 1] += 1;
        col_margins[k - 1] += 1;
    }
    Ok(ContingencyTable::from_parts_unchecked(
        rows,
        cols,
        counts,
        row_margins,
        col_margins,
        p.len() as u64,
    ))
}

/// Block id `p` of block `(h, l)` when there are `col_clusters` column clusters:
/// `p - 1 = (h - 1) * L + (l - 1)`. All ids are 1-based.
pub fn block_index(h: usize, l: usize, col_clusters: usize) -> Result<usize> {
    if col_clusters == 0 {
        return Err(Error::ZeroClusters);
    }
    if h == 0 {
        return Err(Error::OutOfRange {
            what: "row cluster",
            value: h,
            max: usize::MAX,
        });
    }
    if l == 0 || l > col_clusters {
        return Err(Error::OutOfRange {
            what: "column cluster",
            value: l,
            max: col_clusters,
        });
    }
    Ok((h - 1) * col_clusters + l)
}

/// Inverse of [`block_index`]: quotient and remainder of `(p - 1) / L`, each plus one.
pub fn block_unindex(p: usize, col_clusters: usize) -> Result<(usize, usize)> {
    if col_clusters == 0 {
        return Err(Error::ZeroClusters);
    }
    if p == 0 {
        return Err(Error::OutOfRange {
            what: "block id",
            value: p,
            max: usize::MAX,
        });
    }
    Ok(((p - 1) / col_clusters + 1, (p - 1) % col_clusters + 1))
}

/// Block-level contingency table built cell by cell over the `I × J` grid.
///
/// Entry `(p, q)` counts the cells lying in block `p` of `u` and block `q` of
/// `v`. This is the direct O(I·J) construction; [`crate::cari::kronecker`]
/// yields the same table from the row and column tables alone.
pub fn block_contingency_naive(u: &CoPartition, v: &CoPartition) -> Result<ContingencyTable> {
    ensure_same_grid(u, v)?;
    let (ni, nj) = u.grid();
    let rows = u.block_count();
    let cols = v.block_count();
    let mut counts = vec![0u64; rows * cols];
    for i in 0..ni {
        for j in 0..nj {
            let p = u.block_of(i, j);
            let q = v.block_of(i, j);
            counts[(p - 1) * cols + (q - 1)] += 1;
        }
    }
    ContingencyTable::from_counts(rows, cols, counts)
}
