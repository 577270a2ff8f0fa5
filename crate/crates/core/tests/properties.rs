//! Randomized invariants across modules.

use cari_core::cari::{cari_with, kronecker_pair_sums};
use cari_core::{
    adjusted_rand_index, block_contingency_naive, cari, classification_error,
    classification_error_direct, contingency, extended_mi, kronecker, CeSolver, CoPartition,
    KroneckerStrategy, Partition,
};
use proptest::prelude::*;

fn partition(n: usize, k: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=k, n).prop_map(move |l| Partition::new(l, k).unwrap())
}

/// Two co-partitions on one grid, each with its own cluster counts.
fn copartition_pair(
    max_n: usize,
    max_k: usize,
) -> impl Strategy<Value = (CoPartition, CoPartition)> {
    (
        1..=max_n,
        1..=max_n,
        1..=max_k,
        1..=max_k,
        1..=max_k,
        1..=max_k,
    )
        .prop_flat_map(|(i, j, h, l, h2, l2)| {
            (
                partition(i, h),
                partition(j, l),
                partition(i, h2),
                partition(j, l2),
            )
                .prop_map(|(z, w, z2, w2)| (CoPartition::new(z, w), CoPartition::new(z2, w2)))
        })
}

fn permutation(k: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=k).collect::<Vec<_>>()).prop_shuffle()
}

fn relabeled(c: &CoPartition, rp: &[usize], cp: &[usize]) -> CoPartition {
    CoPartition::new(c.rows().relabel(rp).unwrap(), c.cols().relabel(cp).unwrap())
}

proptest! {
    #[test]
    fn kronecker_matches_cellwise_table((u, v) in copartition_pair(12, 4)) {
        let k = kronecker(
            &contingency(u.rows(), v.rows()).unwrap(),
            &contingency(u.cols(), v.cols()).unwrap(),
        );
        let naive = block_contingency_naive(&u, &v).unwrap();
        prop_assert_eq!(&k, &naive);
        let (i, j) = u.grid();
        prop_assert_eq!(naive.total(), (i * j) as u64);
    }

    #[test]
    fn cari_equals_ari_of_naive_table((u, v) in copartition_pair(10, 3)) {
        prop_assume!(u.grid().0 * u.grid().1 >= 2);
        let fast = cari(&u, &v).unwrap();
        let slow = adjusted_rand_index(&block_contingency_naive(&u, &v).unwrap()).unwrap();
        prop_assert!((fast - slow).abs() <= 1e-12, "{} vs {}", fast, slow);
        prop_assert!(fast <= 1.0 + 1e-12);
    }

    #[test]
    fn streaming_and_materialized_agree((u, v) in copartition_pair(40, 6)) {
        prop_assume!(u.grid().0 * u.grid().1 >= 2);
        let tz = contingency(u.rows(), v.rows()).unwrap();
        let tw = contingency(u.cols(), v.cols()).unwrap();
        prop_assert_eq!(
            kronecker_pair_sums(&tz, &tw, KroneckerStrategy::Materialize),
            kronecker_pair_sums(&tz, &tw, KroneckerStrategy::Stream)
        );
        let m = cari_with(&u, &v, KroneckerStrategy::Materialize).unwrap();
        let s = cari_with(&u, &v, KroneckerStrategy::Stream).unwrap();
        prop_assert!((m - s).abs() <= 1e-12);
    }

    #[test]
    fn cari_invariant_to_block_relabeling(
        (u, v, rp, cp) in copartition_pair(12, 4).prop_flat_map(|(u, v)| {
            let (h, l) = (v.rows().cluster_count(), v.cols().cluster_count());
            (Just(u), Just(v), permutation(h), permutation(l))
        })
    ) {
        prop_assume!(u.grid().0 * u.grid().1 >= 2);
        let w = relabeled(&v, &rp, &cp);
        prop_assert_eq!(cari(&u, &v).unwrap(), cari(&u, &w).unwrap());
        prop_assert!((extended_mi(&u, &v).unwrap() - extended_mi(&u, &w).unwrap()).abs() < 1e-12);
        let s = CeSolver::assignment();
        prop_assert_eq!(
            classification_error(&u, &v, &s).unwrap(),
            classification_error(&u, &w, &s).unwrap()
        );
    }

    #[test]
    fn ce_symmetric_after_padding((u, v) in copartition_pair(12, 5)) {
        let s = CeSolver::assignment();
        prop_assert_eq!(
            classification_error(&u, &v, &s).unwrap(),
            classification_error(&v, &u, &s).unwrap()
        );
    }

    #[test]
    fn ce_decomposition_float_form((u, v) in copartition_pair(10, 4)) {
        let s = CeSolver::exhaustive();
        let dr = cari_core::row_distance(u.rows(), v.rows(), &s).unwrap();
        let dc = cari_core::row_distance(u.cols(), v.cols(), &s).unwrap();
        let ce = classification_error(&u, &v, &s).unwrap();
        prop_assert!((dr + dc - dr * dc - ce).abs() < 1e-15);
        prop_assert_eq!(ce, classification_error_direct(&u, &v, 9).unwrap());
        prop_assert!((0.0..=1.0).contains(&ce));
    }

    #[test]
    fn extended_mi_in_range((u, v) in copartition_pair(15, 5)) {
        let e = extended_mi(&u, &v).unwrap();
        prop_assert!((0.0..=2.0).contains(&e));
    }
}

#[test]
fn large_cluster_counts_use_streaming_path() {
    // 40 x 40 clusters on each side: H·H'·L·L' = 2.56e6 > default threshold
    let rows: Vec<usize> = (0..400).map(|i| i % 40 + 1).collect();
    let cols: Vec<usize> = (0..400).map(|i| (i * 7) % 40 + 1).collect();
    let shifted: Vec<usize> = rows.iter().map(|&l| l % 40 + 1).collect();
    let u = CoPartition::from_labels(rows, cols.clone()).unwrap();
    let v = CoPartition::from_labels(shifted, cols).unwrap();
    assert_eq!(cari(&u, &v).unwrap(), 1.0);
    assert_eq!(
        cari(&u, &v).unwrap(),
        cari_with(&u, &v, KroneckerStrategy::Materialize).unwrap()
    );
}
