//! Classification error between co-partitions.
//!
//! The row distance is one minus the best fraction of elements that can be
//! matched after relabeling the second partition's clusters. The coclustering
//! error combines row and column distances as `d_r + d_c - d_r·d_c`.
//!
//! When two partitions declare different cluster counts, the smaller one is
//! padded with empty clusters up to the larger count before matching, for
//! rows and columns alike.

use crate::assignment::max_weight_assignment;
use crate::contingency::{block_contingency_naive, contingency, ContingencyTable};
use crate::error::{Error, Result};
use crate::partition::{ensure_same_grid, ensure_same_len, CoPartition, Partition};

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CeMode {
    /// Enumerates all `H!` relabelings.
    Exhaustive,
    /// Solves the matching as a linear assignment problem.
    Assignment,
}

/// How the best relabeling is searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CeSolver {
    pub mode: CeMode,
    /// Largest cluster count exhaustive mode accepts.
    pub cap: usize,
}

impl CeSolver {
    pub fn exhaustive() -> Self {
        Self {
            mode: CeMode::Exhaustive,
            cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }

    pub fn assignment() -> Self {
        Self {
            mode: CeMode::Assignment,
            cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        Self { cap, ..self }
    }

    /// Errors if exhaustive search over `clusters` would exceed the cap.
    pub fn check(&self, clusters: usize) -> Result<()> {
        if self.mode == CeMode::Exhaustive && clusters > self.cap {
            return Err(Error::Capacity {
                clusters,
                cap: self.cap,
            });
        }
        Ok(())
    }
}

impl Default for CeSolver {
    fn default() -> Self {
        Self::assignment()
    }
}

/// Best number of agreeing elements over all relabelings, and the element count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Matching {
    pub matched: u64,
    pub total: u64,
}

impl Matching {
    pub fn distance(&self) -> f64 {
        (self.total - self.matched) as f64 / self.total as f64
    }
}

/// Optimal matching between two partitions of the same set, after padding.
pub fn best_matching(p: &Partition, q: &Partition, solver: &CeSolver) -> Result<Matching> {
    ensure_same_len(p, q, "partition lengths")?;
    let k = p.cluster_count().max(q.cluster_count());
    solver.check(k)?;
    let t = contingency(&p.padded(k)?, &q.padded(k)?)?;
    let matched = match solver.mode {
        CeMode::Exhaustive => max_diagonal_exhaustive(&t),
        CeMode::Assignment => max_weight_assignment(t.counts(), k).1,
    };
    Ok(Matching {
        matched,
        total: p.len() as u64,
    })
}

/// Misclassification distance between two partitions, in `[0, 1]`.
pub fn row_distance(p: &Partition, q: &Partition, solver: &CeSolver) -> Result<f64> {
    Ok(best_matching(p, q, solver)?.distance())
}

/// Classification error between two co-partitions of the same grid, in `[0, 1]`.
///
/// Computed as `1 - (m_r·m_c)/(I·J)` from the row and column matchings,
/// which is `d_r + d_c - d_r·d_c` without the intermediate rounding.
pub fn classification_error(u: &CoPartition, v: &CoPartition, solver: &CeSolver) -> Result<f64> {
    ensure_same_grid(u, v)?;
    let r = best_matching(u.rows(), v.rows(), solver)?;
    let c = best_matching(u.cols(), v.cols(), solver)?;
    let cells = u128::from(r.total) * u128::from(c.total);
    let matched = u128::from(r.matched) * u128::from(c.matched);
    Ok((cells - matched) as f64 / cells as f64)
}

/// Classification error by direct double minimization over row relabelings
/// `σ` and column relabelings `τ`, counting cells on the block-level table.
///
/// Cost is `O(H!·L!·H·L)`; intended as an oracle for small cluster counts.
pub fn classification_error_direct(u: &CoPartition, v: &CoPartition, cap: usize) -> Result<f64> {
    ensure_same_grid(u, v)?;
    let h = u.rows().cluster_count().max(v.rows().cluster_count());
    let l = u.cols().cluster_count().max(v.cols().cluster_count());
    for k in [h, l] {
        if k > cap {
            return Err(Error::Capacity { clusters: k, cap });
        }
    }
    let pad = |c: &CoPartition| -> Result<CoPartition> {
        Ok(CoPartition::new(c.rows().padded(h)?, c.cols().padded(l)?))
    };
    let blocks = block_contingency_naive(&pad(u)?, &pad(v)?)?;

    let mut best = 0u64;
    let col_perms = permutations(l);
    for_each_permutation(h, |sigma| {
        for tau in &col_perms {
            let mut agree = 0u64;
            for (hi, &sh) in sigma.iter().enumerate() {
                for (li, &tl) in tau.iter().enumerate() {
                    agree += blocks.get(hi * l + li, sh * l + tl);
                }
            }
            best = best.max(agree);
        }
    });
    let cells = blocks.total();
    Ok((cells - best) as f64 / cells as f64)
}

/// Largest `Σ_r t[r][σ(r)]` over all permutations of a square table.
fn max_diagonal_exhaustive(t: &ContingencyTable) -> u64 {
    debug_assert_eq!(t.rows(), t.cols());
    let mut best = 0u64;
    for_each_permutation(t.rows(), |sigma| {
        let s = sigma.iter().enumerate().map(|(r, &c)| t.get(r, c)).sum();
        best = best.max(s);
    });
    best
}

/// Visits every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut stack = vec![0usize; n];
    visit(&perm);
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            visit(&perm);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| out.push(p.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn part(labels: &[usize]) -> Partition {
        Partition::from_labels(labels.to_vec()).unwrap()
    }

    #[test]
    fn heap_visits_all_permutations_once() {
        for n in 0..=6 {
            let all = permutations(n);
            let distinct: HashSet<_> = all.iter().cloned().collect();
            let fact: usize = (1..=n).product();
            assert_eq!(all.len(), fact);
            assert_eq!(distinct.len(), fact);
        }
    }

    #[test]
    fn row_distance_examples() {
        let p = part(&[1, 1, 2, 2]);
        let q = part(&[1, 2, 2, 2]);
        for solver in [CeSolver::exhaustive(), CeSolver::assignment()] {
            assert_eq!(row_distance(&p, &q, &solver).unwrap(), 0.25);
            assert_eq!(row_distance(&p, &p, &solver).unwrap(), 0.0);
            let swapped = p.relabel(&[2, 1]).unwrap();
            assert_eq!(row_distance(&p, &swapped, &solver).unwrap(), 0.0);
        }
    }

    #[test]
    fn padding_handles_unequal_cluster_counts() {
        let p = part(&[1, 1, 2, 2, 3]);
        let q = part(&[2, 2, 1, 1, 1]);
        assert_eq!(row_distance(&p, &q, &CeSolver::exhaustive()).unwrap(), 0.2);
        assert_eq!(row_distance(&q, &p, &CeSolver::assignment()).unwrap(), 0.2);
    }

    #[test]
    fn exhaustive_cap() {
        let p = Partition::new(vec![1, 2], 10).unwrap();
        let err = row_distance(&p, &p, &CeSolver::exhaustive()).unwrap_err();
        assert_eq!(
            err,
            Error::Capacity {
                clusters: 10,
                cap: 9
            }
        );
        assert!(err.to_string().contains("assignment"));
        assert_eq!(row_distance(&p, &p, &CeSolver::assignment()).unwrap(), 0.0);
        assert!(row_distance(&p, &p, &CeSolver::exhaustive().with_cap(10)).is_ok());
    }

    #[test]
    fn coclustering_error_examples() {
        let u = CoPartition::new(part(&[1, 1, 2, 2]), part(&[1, 1, 2, 2]));
        let v = CoPartition::new(part(&[1, 2, 2, 2]), part(&[1, 1, 2, 2]));
        let ce = classification_error(&u, &v, &CeSolver::default()).unwrap();
        assert_eq!(ce, 0.25);
        assert_eq!(classification_error_direct(&u, &v, 9).unwrap(), 0.25);

        let v = CoPartition::new(part(&[1, 2, 2, 2]), part(&[1, 2, 1, 2]));
        let ce = classification_error(&u, &v, &CeSolver::exhaustive()).unwrap();
        assert_eq!(ce, 0.625);
        assert_eq!(classification_error_direct(&u, &v, 9).unwrap(), 0.625);
        let (dr, dc) = (0.25, 0.5);
        assert_eq!(dr + dc - dr * dc, 0.625);

        assert_eq!(
            classification_error(&u, &u, &CeSolver::default()).unwrap(),
            0.0
        );
        assert_eq!(classification_error_direct(&u, &u, 9).unwrap(), 0.0);
    }

    #[test]
    fn direct_with_fully_misassigned_rows() {
        let u = CoPartition::new(part(&[1, 1, 2, 2]), part(&[1, 2, 1]));
        let v = CoPartition::new(part(&[1, 2, 1, 2]), part(&[1, 2, 1]));
        let d = row_distance(u.rows(), v.rows(), &CeSolver::exhaustive()).unwrap();
        assert_eq!(d, 0.5);
        assert_eq!(classification_error_direct(&u, &v, 9).unwrap(), d);
    }

    #[test]
    fn direct_cap_and_grid_errors() {
        let big = CoPartition::new(Partition::new(vec![1, 2], 7).unwrap(), part(&[1, 1]));
        assert_eq!(
            classification_error_direct(&big, &big, 6),
            Err(Error::Capacity {
                clusters: 7,
                cap: 6
            })
        );
        let a = CoPartition::new(part(&[1, 2]), part(&[1]));
        let b = CoPartition::new(part(&[1, 2]), part(&[1, 1]));
        assert!(matches!(
            classification_error(&a, &b, &CeSolver::default()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn pair(max_k: usize) -> impl Strategy<Value = (Partition, Partition)> {
        (1usize..20, 1..=max_k, 1..=max_k).prop_flat_map(|(n, k1, k2)| {
            (
                proptest::collection::vec(1..=k1, n),
                proptest::collection::vec(1..=k2, n),
            )
                .prop_map(move |(a, b)| {
                    (
                        Partition::new(a, k1).unwrap(),
                        Partition::new(b, k2).unwrap(),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn assignment_matches_exhaustive((p, q) in pair(7)) {
            let e = best_matching(&p, &q, &CeSolver::exhaustive()).unwrap();
            let a = best_matching(&p, &q, &CeSolver::assignment()).unwrap();
            prop_assert_eq!(e, a);
            let d = e.distance();
            prop_assert!((0.0..=1.0).contains(&d));
        }

        #[test]
        fn row_distance_symmetric((p, q) in pair(5)) {
            let s = CeSolver::assignment();
            prop_assert_eq!(row_distance(&p, &q, &s).unwrap(), row_distance(&q, &p, &s).unwrap());
        }
    }
}
