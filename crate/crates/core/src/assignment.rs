//! Dense linear assignment (Hungarian method with potentials), O(n³).

/// Finds a permutation `sigma` maximizing `Σ_r weights[r * n + sigma[r]]`
/// over an `n × n` row-major weight matrix. Returns `(sigma, total)`.
pub fn max_weight_assignment(weights: &[u64], n: usize) -> (Vec<usize>, u64) {
    assert_eq!(weights.len(), n * n, "weight matrix must be n x n");
    if n == 0 {
        return (Vec::new(), 0);
    }
    let max = weights.iter().copied().max().unwrap_or(0) as i128;
    // minimize max - w; costs are non-negative
    let cost = |r: usize, c: usize| max - weights[r * n + c] as i128;

    let inf = i128::MAX / 4;
    let mut u = vec![0i128; n + 1];
    let mut v = vec![0i128; n + 1];
    // p[c] = row assigned to column c (1-based, 0 = none)
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut sigma = vec![0usize; n];
    for j in 1..=n {
        sigma[p[j] - 1] = j - 1;
    }
    let total = sigma
        .iter()
        .enumerate()
        .map(|(r, &c)| weights[r * n + c])
        .sum();
    (sigma, total)
}
