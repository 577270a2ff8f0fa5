//! Agreement indices between coclustering partitions.
//!
//! A co-partition splits the rows and the columns of an `I × J` grid into
//! clusters; the blocks are the products of a row cluster and a column
//! cluster. This crate compares two co-partitions with:
//!
//! - [`cari`](cari::cari): the Coclustering Adjusted Rand Index, the ARI of
//!   the block-level contingency table, computed from the row and column
//!   tables through their Kronecker product;
//! - [`classification_error`](ce::classification_error): the best block
//!   misclassification rate over cluster relabelings;
//! - [`extended_mi`](mi::extended_mi): the sum of the row and column
//!   normalized mutual informations.
//!
//! It also provides the single-partition Rand and Adjusted Rand indices, a
//! perturbation simulator ([`sim`]) and a per-index timing harness
//! ([`timing`]).
//!
//! ```
//! use cari_core::{cari, CoPartition};
//!
//! let u = CoPartition::from_labels(vec![1, 2, 2, 2, 1], vec![1, 1, 2, 1, 1, 2]).unwrap();
//! let v = CoPartition::from_labels(vec![1, 1, 2, 1, 1], vec![1, 1, 2, 1, 3, 2]).unwrap();
//! let x = cari(&u, &v).unwrap();
//! assert!((x - 0.2501).abs() < 1e-4);
//! ```

pub mod ari;
pub mod assignment;
pub mod cari;
pub mod ce;
pub mod contingency;
mod error;
pub mod format;
pub mod mi;
pub mod partition;
pub mod sim;
pub mod timing;

pub use ari::{adjusted_rand_index, ari, ari_from_pair_counts, rand_index};
pub use cari::{cari, cari_with, kronecker, KroneckerStrategy};
pub use ce::{classification_error, classification_error_direct, row_distance, CeMode, CeSolver};
pub use contingency::{
    block_contingency_naive, block_index, block_unindex, comb2, contingency, pair_counts,
    ContingencyTable, PairCounts,
};
pub use error::{Error, ParseError, Result};
pub use format::{parse_copartition, write_copartition, IndexReport};
pub use mi::{entropy, extended_mi, mutual_information, normalized_mi};
pub use partition::{CoPartition, Partition};
pub use sim::{run_trajectory, Balance, SimConfig, TrajectoryRecord, Variant};
pub use timing::{run_bench, BenchConfig, BenchReport, IndexKind};
