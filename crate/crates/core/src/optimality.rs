//! Subgradient membership tests used to verify the proximal steps.

use nalgebra::SVD;

use crate::error::{Error, Result};
use crate::tensor::Matrix;

/// Worst violations of the nuclear-norm subgradient characterization
/// `G = UVᵀ + M`, `UᵀM = 0`, `MV = 0`, `‖M‖₂ ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NuclearSubgradientReport {
    /// Numerical rank of the point.
    pub rank: usize,
    /// `‖UᵀM‖_F`
    pub left: f64,
    /// `‖MV‖_F`
    pub right: f64,
    /// `max(‖M‖₂ - 1, 0)`
    pub spectral_excess: f64,
}

impl NuclearSubgradientReport {
    pub fn worst(&self) -> f64 {
        self.left.max(self.right).max(self.spectral_excess)
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.worst() <= tol
    }
}

/// Check whether `g ∈ ∂‖·‖_*(point)`.
///
/// Singular values of `point` at or below `rank_tol · σ_max` are treated as
/// zero.
pub fn nuclear_subgradient(point: &Matrix, g: &Matrix, rank_tol: f64) -> Result<NuclearSubgradientReport> {
    if point.shape() != g.shape() {
        return Err(Error::DimensionMismatch(format!(
            "point is {:?}, subgradient is {:?}",
            point.shape(),
            g.shape()
        )));
    }
    let svd = SVD::try_new(point.clone(), true, true, f64::EPSILON, 0)
        .ok_or_else(|| Error::Svd("subgradient check".into()))?;
    let u = svd.u.as_ref().expect("u");
    let v_t = svd.v_t.as_ref().expect("v_t");
    let smax = svd.singular_values.max();
    let keep: Vec<usize> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > rank_tol * smax && s > 0.0)
        .map(|(i, _)| i)
        .collect();

    let rows = point.nrows();
    let cols = point.ncols();
    let ur = Matrix::from_fn(rows, keep.len(), |r, c| u[(r, keep[c])]);
    let vr = Matrix::from_fn(cols, keep.len(), |r, c| v_t[(keep[c], r)]);
    let m = g - &ur * vr.transpose();

    let left = (ur.transpose() * &m).norm();
    let right = (&m * &vr).norm();
    let spectral = if m.iter().all(|&v| v == 0.0) {
        0.0
    } else {
        m.clone().singular_values().max()
    };
    Ok(NuclearSubgradientReport {
        rank: keep.len(),
        left,
        right,
        spectral_excess: (spectral - 1.0).max(0.0),
    })
}

/// Largest violation of `g ∈ ∂(λ‖·‖₁ + ι_[0,1])(w)`, entrywise:
/// `g ≤ λ` where `w = 0`, `g ≥ λ` where `w = 1`, `g = λ` strictly inside.
pub fn box_l1_subgradient_violation(w: &Matrix, g: &Matrix, lambda: f64) -> Result<f64> {
    if w.shape() != g.shape() {
        return Err(Error::DimensionMismatch(format!(
            "point is {:?}, subgradient is {:?}",
            w.shape(),
            g.shape()
        )));
    }
    let mut worst = 0.0_f64;
    for (&wv, &gv) in w.iter().zip(g) {
        let v = if wv <= 0.0 {
            (gv - lambda).max(0.0)
        } else if wv >= 1.0 {
            (lambda - gv).max(0.0)
        } else {
            (gv - lambda).abs()
        };
        if !(0.0..=1.0).contains(&wv) {
            return Ok(f64::INFINITY);
        }
        worst = worst.max(v);
    }
    Ok(worst)
}
