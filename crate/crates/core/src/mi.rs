//! Entropy, mutual information and the extended (row + column) normalized MI.
//!
//! Natural logarithms throughout. The joint distribution of two partitions is
//! the contingency table divided by the element count.

use crate::contingency::{contingency, ContingencyTable};
use crate::error::Result;
use crate::partition::{ensure_same_grid, CoPartition, Partition};

/// Shannon entropy (nats) of a partition's cluster-size distribution.
pub fn entropy(p: &Partition) -> f64 {
    entropy_of_counts(&p.cluster_sizes(), p.len() as u64)
}

fn entropy_of_counts(counts: &[u64], total: u64) -> f64 {
    let n = total as f64;
    let h: f64 = counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.ln()
        })
        .sum();
    h.max(0.0)
}

/// Mutual information (nats) of the joint distribution given by `t`.
pub fn mutual_information(t: &ContingencyTable) -> f64 {
    let n = t.total() as f64;
    let mut mi = 0.0;
    for (r, &rm) in t.row_margins().iter().enumerate() {
        if rm == 0 {
            continue;
        }
        for (c, &cm) in t.col_margins().iter().enumerate() {
            let x = t.get(r, c);
            if x == 0 {
                continue;
            }
            let x = x as f64;
            mi += x / n * (x * n / (rm as f64 * cm as f64)).ln();
        }
    }
    mi.max(0.0)
}

/// `MI(p, q) / max(H(p), H(q))`, in `[0, 1]`.
///
/// Two single-cluster partitions have no entropy and are identical; their
/// normalized MI is 1.
pub fn normalized_mi(p: &Partition, q: &Partition) -> Result<f64> {
    let t = contingency(p, q)?;
    let hp = entropy_of_counts(t.row_margins(), t.total());
    let hq = entropy_of_counts(t.col_margins(), t.total());
    let denom = hp.max(hq);
    if denom == 0.0 {
        return Ok(1.0);
    }
    Ok((mutual_information(&t) / denom).clamp(0.0, 1.0))
}

/// Sum of the row and column normalized MIs, in `[0, 2]`.
pub fn extended_mi(u: &CoPartition, v: &CoPartition) -> Result<f64> {
    ensure_same_grid(u, v)?;
    Ok(normalized_mi(u.rows(), v.rows())? + normalized_mi(u.cols(), v.cols())?)
}
