//! Rand Index and Adjusted Rand Index.
//!
//! All binomial sums stay in exact integers; the only floating-point step is
//! the final division.

use crate::contingency::{contingency, ContingencyTable, PairCounts, PairSums};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Fraction of element pairs on which two partitions agree: `(a + d) / C(n, 2)`.
pub fn rand_index(pc: &PairCounts) -> Result<f64> {
    let total = pc.total();
    if total == 0 {
        return Err(Error::UndefinedIndex(
            "Rand index needs at least two elements",
        ));
    }
    Ok((pc.a + pc.d) as f64 / total as f64)
}

/// Adjusted Rand Index of a contingency table (Hubert–Arabie form).
pub fn adjusted_rand_index(t: &ContingencyTable) -> Result<f64> {
    if t.total() < 2 {
        return Err(Error::UndefinedIndex("ARI needs at least two elements"));
    }
    ari_from_sums(&t.pair_sums())
}

/// ARI of two partitions of the same set.
pub fn ari(p: &Partition, q: &Partition) -> Result<f64> {
    adjusted_rand_index(&contingency(p, q)?)
}

/// ARI from the binomial sums:
///
/// ```text
///         S - R·C/N
/// ARI = ---------------------
///       (R + C)/2 - R·C/N
/// ```
///
/// with `S = Σ C(n_ij,2)`, `R`/`C` the margin sums and `N = C(n,2)`. Both sides
/// are scaled by `2N` so that numerator and denominator are integers.
///
/// A zero denominator only happens when both partitions are all-singletons
/// or both are a single cluster; the numerator is then zero too and the
/// value is 1.
pub fn ari_from_sums(s: &PairSums) -> Result<f64> {
    if s.total == 0 {
        return Err(Error::UndefinedIndex("ARI needs at least two elements"));
    }
    match exact_ari_terms(s) {
        Some((num, den)) => finish(num as f64, den as f64, num == 0, den == 0),
        None => {
            let (cells, rows, cols, total) =
                (s.cells as f64, s.rows as f64, s.cols as f64, s.total as f64);
            let expected = rows * cols / total;
            let num = cells - expected;
            let den = 0.5 * (rows + cols) - expected;
            finish(num, den, num == 0.0, den == 0.0)
        }
    }
}

fn exact_ari_terms(s: &PairSums) -> Option<(i128, i128)> {
    let sn = i128::try_from(s.cells.checked_mul(s.total)?).ok()?;
    let rc = i128::try_from(s.rows.checked_mul(s.cols)?).ok()?;
    let rcn = i128::try_from((s.rows.checked_add(s.cols)?).checked_mul(s.total)?).ok()?;
    let num = (sn - rc).checked_mul(2)?;
    let den = rcn.checked_sub(rc.checked_mul(2)?)?;
    Some((num, den))
}

fn finish(num: f64, den: f64, num_zero: bool, den_zero: bool) -> Result<f64> {
    if den_zero {
        if num_zero {
            Ok(1.0)
        } else {
            Err(Error::UndefinedIndex("ARI denominator is zero"))
        }
    } else {
        Ok(num / den)
    }
}

/// ARI from pair counts: `2(ad - bc) / (b² + c² + 2ad + (a + d)(b + c))`.
///
/// Algebraically identical to [`adjusted_rand_index`]; kept as an independent route.
pub fn ari_from_pair_counts(pc: &PairCounts) -> Result<f64> {
    if pc.total() == 0 {
        return Err(Error::UndefinedIndex("ARI needs at least two elements"));
    }
    let exact = || -> Option<(i128, i128)> {
        let ad = i128::try_from(pc.a.checked_mul(pc.d)?).ok()?;
        let bc = i128::try_from(pc.b.checked_mul(pc.c)?).ok()?;
        let num = (ad - bc).checked_mul(2)?;
        let den =
            pc.b.checked_mul(pc.b)?
                .checked_add(pc.c.checked_mul(pc.c)?)?
                .checked_add(pc.a.checked_mul(pc.d)?.checked_mul(2)?)?
                .checked_add((pc.a + pc.d).checked_mul(pc.b + pc.c)?)?;
        Some((num, i128::try_from(den).ok()?))
    };
    match exact() {
        Some((num, den)) => finish(num as f64, den as f64, num == 0, den == 0),
        None => {
            let (a, b, c, d) = (pc.a as f64, pc.b as f64, pc.c as f64, pc.d as f64);
            let num = 2.0 * (a * d - b * c);
            let den = b * b + c * c + 2.0 * a * d + (a + d) * (b + c);
            finish(num, den, num == 0.0, den == 0.0)
        }
    }
}
