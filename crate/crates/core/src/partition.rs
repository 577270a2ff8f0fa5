//! Label-vector partitions and row/column co-partitions.
//!
//! Labels are 1-based. A partition declares its cluster count, which may
//! exceed the largest label actually used; the surplus clusters are empty.

use crate::error::{Error, Result};

/// A partition of `n` elements into `cluster_count` clusters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<usize>,
    cluster_count: usize,
}

impl Partition {
    /// Builds a partition, checking every label lies in `1..=cluster_count`.
    pub fn new(labels: Vec<usize>, cluster_count: usize) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if cluster_count == 0 {
            return Err(Error::ZeroClusters);
        }
        if let Some((position, &label)) = labels
            .iter()
            .enumerate()
            .find(|(_, &l)| l == 0 || l > cluster_count)
        {
            return Err(Error::InvalidLabel {
                position,
                label,
                cluster_count,
            });
        }
        Ok(Self {
            labels,
            cluster_count,
        })
    }

    /// Builds a partition whose cluster count is the largest label.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        let k = labels.iter().copied().max().unwrap_or(0);
        Self::new(labels, k.max(1))
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn cluster_count(&self) -> usize {
        self.cluster_count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a partition holds at least one element.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of elements in each cluster, indexed by `label - 1`.
    pub fn cluster_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.cluster_count];
        for &l in &self.labels {
            sizes[l - 1] += 1;
        }
        sizes
    }

    /// Same partition with a larger declared cluster count (extra clusters empty).
    pub fn padded(&self, cluster_count: usize) -> Result<Self> {
        if cluster_count < self.cluster_count {
            return Err(Error::Config(format!(
                "cannot pad {} clusters down to {cluster_count}",
                self.cluster_count
            )));
        }
        Ok(Self {
            labels: self.labels.clone(),
            cluster_count,
        })
    }

    /// Applies `mapping[old - 1] = new` to every label.
    ///
    /// `mapping` must be a permutation of `1..=cluster_count`.
    pub fn relabel(&self, mapping: &[usize]) -> Result<Self> {
        if mapping.len() != self.cluster_count {
            return Err(Error::DimensionMismatch {
                what: "relabel mapping length vs cluster count",
                left: mapping.len(),
                right: self.cluster_count,
            });
        }
        let mut seen = vec![false; self.cluster_count];
        for &m in mapping {
            if m == 0 || m > self.cluster_count || seen[m - 1] {
                return Err(Error::Config(format!(
                    "relabel mapping is not a permutation of 1..={}",
                    self.cluster_count
                )));
            }
            seen[m - 1] = true;
        }
        let labels = self.labels.iter().map(|&l| mapping[l - 1]).collect();
        Ok(Self {
            labels,
            cluster_count: self.cluster_count,
        })
    }

    /// Number of positions where the two label vectors differ.
    pub fn hamming(&self, other: &Partition) -> Result<usize> {
        ensure_same_len(self, other, "partition lengths")?;
        Ok(self
            .labels
            .iter()
            .zip(&other.labels)
            .filter(|(a, b)| a != b)
            .count())
    }

    pub(crate) fn with_label(&self, position: usize, label: usize) -> Self {
        debug_assert!(label >= 1 && label <= self.cluster_count);
        let mut labels = self.labels.clone();
        labels[position] = label;
        Self {
            labels,
            cluster_count: self.cluster_count,
        }
    }
}

pub(crate) fn ensure_same_len(p: &Partition, q: &Partition, what: &'static str) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            what,
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(())
}

/// A coclustering: a row partition of `I` rows and a column partition of `J`
/// columns. Cell `(i, j)` lies in block `(rows[i], cols[j])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoPartition {
    rows: Partition,
    cols: Partition,
}

impl CoPartition {
    pub fn new(rows: Partition, cols: Partition) -> Self {
        Self { rows, cols }
    }

    /// Convenience constructor from raw label vectors; cluster counts are the maxima.
    pub fn from_labels(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        Ok(Self::new(
            Partition::from_labels(rows)?,
            Partition::from_labels(cols)?,
        ))
    }

    pub fn rows(&self) -> &Partition {
        &self.rows
    }

    pub fn cols(&self) -> &Partition {
        &self.cols
    }

    /// Grid size `(I, J)`.
    pub fn grid(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    /// `H * L`.
    pub fn block_count(&self) -> usize {
        self.rows.cluster_count() * self.cols.cluster_count()
    }

    /// 1-based block id of cell `(i, j)` (0-based cell coordinates).
    pub fn block_of(&self, i: usize, j: usize) -> usize {
        let h = self.rows.labels()[i];
        let l = self.cols.labels()[j];
        (h - 1) * self.cols.cluster_count() + l
    }

    pub fn into_parts(self) -> (Partition, Partition) {
        (self.rows, self.cols)
    }
}

pub(crate) fn ensure_same_grid(u: &CoPartition, v: &CoPartition) -> Result<()> {
    ensure_same_len(u.rows(), v.rows(), "row counts")?;
    ensure_same_len(u.cols(), v.cols(), "column counts")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_labels() {
        assert_eq!(
            Partition::new(vec![1, 0, 2], 2),
            Err(Error::InvalidLabel {
                position: 1,
                label: 0,
                cluster_count: 2
            })
        );
        assert!(matches!(
            Partition::new(vec![1, 3], 2),
            Err(Error::InvalidLabel { label: 3, .. })
        ));
        assert_eq!(Partition::new(vec![], 2), Err(Error::EmptyPartition));
        assert_eq!(Partition::new(vec![1], 0), Err(Error::ZeroClusters));
    }

    #[test]
    fn declared_count_may_exceed_labels() {
        let p = Partition::new(vec![1, 1, 2], 4).unwrap();
        assert_eq!(p.cluster_sizes(), vec![2, 1, 0, 0]);
        assert_eq!(p.cluster_sizes().iter().sum::<u64>(), 3);
    }

    #[test]
    fn relabel_and_hamming() {
        let p = Partition::from_labels(vec![1, 1, 2, 3]).unwrap();
        let q = p.relabel(&[3, 1, 2]).unwrap();
        assert_eq!(q.labels(), &[3, 3, 1, 2]);
        assert_eq!(p.hamming(&q).unwrap(), 4);
        assert!(p.relabel(&[1, 1, 2]).is_err());
    }

    #[test]
    fn block_ids_follow_row_major_order() {
        let u = CoPartition::from_labels(vec![1, 2], vec![1, 2, 3, 4]).unwrap();
        assert_eq!(u.block_count(), 8);
        assert_eq!(u.block_of(0, 0), 1);
        assert_eq!(u.block_of(1, 2), 7);
    }
}
