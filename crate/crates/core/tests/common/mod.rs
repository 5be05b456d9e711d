#![allow(dead_code)]

pub mod oracles;

use mrpca_core::data::synth::{generate_scene, Scene, SceneSpec};
use mrpca_core::{Dims, GradientField3D, Matrix, Tensor3D};

pub fn mat(rows: usize, cols: usize, data: &[f64]) -> Matrix {
    Matrix::from_column_slice(rows, cols, data)
}

pub fn field(dims: Dims, h: &[f64], v: &[f64], d: &[f64]) -> GradientField3D {
    GradientField3D::new(
        Tensor3D::from_vec(dims, h.to_vec()).unwrap(),
        Tensor3D::from_vec(dims, v.to_vec()).unwrap(),
        Tensor3D::from_vec(dims, d.to_vec()).unwrap(),
    )
    .unwrap()
}

pub fn max_diff(a: &Matrix, b: &Matrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    (a - b).amax()
}

pub fn field_diff(a: &GradientField3D, b: &GradientField3D) -> f64 {
    a.add_scaled(-1.0, b)
        .channels()
        .iter()
        .flat_map(|c| c.as_slice().iter())
        .fold(0.0_f64, |m, v| m.max(v.abs()))
}

pub fn scene(text: &str) -> Scene {
    generate_scene(&SceneSpec::parse(text).unwrap()).unwrap()
}

pub const STATIC: &str = include_str!("../../../../scenes/static.scene");
pub const SMALL: &str = include_str!("../../../../scenes/small.scene");
pub const DYNAMIC: &str = include_str!("../../../../scenes/dynamic.scene");
pub const SPARSE: &str = include_str!("../../../../scenes/sparse.scene");

/// Deterministic uniform `[0, 1)` matrix.
pub fn uniform(rows: usize, cols: usize, seed: u64) -> Matrix {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(rows, cols, |_, _| rng.random::<f64>())
}
