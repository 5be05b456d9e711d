//! Shared fixtures for the benchmarks.

use mrpca_core::{Dims, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform `[0, 1)` matrix from a fixed seed.
pub fn uniform(rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(rows, cols, |_, _| rng.random::<f64>())
}

/// Rank-2 background with a bright block sweeping across it, in `[0, 1]`.
pub fn moving_block(dims: Dims) -> Matrix {
    let (m, n) = (dims.m, dims.n);
    let mut x = Matrix::from_fn(dims.pixels(), dims.k, |p, t| {
        let (i, j) = (p % m, p / m);
        let a = 0.5 + 0.2 * ((i + j) as f64 / (m + n) as f64 - 0.5);
        let b = 0.05 * ((t as f64) * 0.3).sin() * (j as f64 / n as f64);
        a + b
    });
    let side = (m.min(n) / 4).max(1);
    for t in 0..dims.k {
        let j0 = t % (n - side + 1);
        for j in j0..j0 + side {
            for i in m / 2 - side / 2..m / 2 - side / 2 + side {
                x[(i + m * j, t)] = 0.95;
            }
        }
    }
    x
}
