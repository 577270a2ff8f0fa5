//! Fixtures shared by the criterion benchmarks.

use cari_core::sim::{make_initial, perturb, sim_rng};
use cari_core::{Balance, CoPartition};

/// A balanced initial co-partition and a copy perturbed `steps` times.
pub fn perturbed_pair(
    grid: (usize, usize),
    clusters: (usize, usize),
    steps: usize,
    seed: u64,
) -> (CoPartition, CoPartition) {
    let rows = make_initial(grid.0, clusters.0, &Balance::Balanced).expect("valid row sizes");
    let cols = make_initial(grid.1, clusters.1, &Balance::Balanced).expect("valid column sizes");
    let mut rng = sim_rng(seed);
    let (mut r, mut c) = (rows.clone(), cols.clone());
    for _ in 0..steps {
        r = perturb(&r, &mut rng);
        c = perturb(&c, &mut rng);
    }
    (CoPartition::new(rows, cols), CoPartition::new(r, c))
}
