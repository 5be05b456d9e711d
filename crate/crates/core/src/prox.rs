//! Proximal operators, periodic difference operators and the FFT-diagonalized
//! screened-Poisson solve shared by all solvers.
//!
//! Difference operators are forward differences `x[i+1] - x[i]` with periodic
//! wraparound on every axis. Under that boundary `DᵀD` is circulant, so
//! `(αI + ρ DᵀD) x = b` is diagonal in the 3D DFT basis with eigenvalues
//!
//! ```text
//! α + ρ (4 sin²(πp/m) + 4 sin²(πq/n) + 4 sin²(πr/k))
//! ```

use std::sync::Arc;

use nalgebra::{DVector, SVD};
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::tensor::{ensure_finite, Dims, GradientField3D, Matrix, Tensor3D};

/// Singular value thresholding `U (Σ - δI)₊ Vᵀ`, the prox of `δ‖·‖_*`.
pub fn svt(y: &Matrix, delta: f64) -> Result<Matrix> {
    Ok(svt_full(y, delta)?.matrix)
}

/// Output of [`svt_full`].
#[derive(Clone, Debug)]
pub struct Svt {
    pub matrix: Matrix,
    /// Number of singular values that survived the threshold.
    pub rank: usize,
    /// `Σ (σᵢ - δ)₊`, the nuclear norm of `matrix`.
    pub nuclear_norm: f64,
}

/// [`svt`] that also reports the rank and nuclear norm of the result.
pub fn svt_full(y: &Matrix, delta: f64) -> Result<Svt> {
    if !(delta >= 0.0) || !delta.is_finite() {
        return Err(Error::InvalidInput(format!(
            "svt threshold must be finite and non-negative, got {delta}"
        )));
    }
    ensure_finite(y, "svt input")?;
    let svd = thin_svd(y)?;
    if delta == 0.0 {
        let positive = svd.singular_values.iter().filter(|&&s| s > 0.0);
        return Ok(Svt {
            matrix: y.clone(),
            rank: positive.clone().count(),
            nuclear_norm: positive.sum(),
        });
    }
    let u = svd.u.as_ref().expect("u requested");
    let v_t = svd.v_t.as_ref().expect("v_t requested");

    let mut out = Matrix::zeros(y.nrows(), y.ncols());
    let mut rank = 0;
    let mut nuclear_norm = 0.0;
    for (idx, &s) in svd.singular_values.iter().enumerate() {
        let shrunk = s - delta;
        if shrunk <= 0.0 {
            continue;
        }
        rank += 1;
        nuclear_norm += shrunk;
        // out += shrunk · u_idx v_idxᵀ
        out.ger(shrunk, &u.column(idx), &v_t.row(idx).transpose(), 1.0);
    }
    Ok(Svt {
        matrix: out,
        rank,
        nuclear_norm,
    })
}

fn thin_svd(y: &Matrix) -> Result<SVD<f64, nalgebra::Dyn, nalgebra::Dyn>> {
    SVD::try_new(y.clone(), true, true, f64::EPSILON, 0)
        .ok_or_else(|| Error::Svd(format!("no convergence on {}x{} input", y.nrows(), y.ncols())))
}

/// Singular values in non-increasing order.
pub fn singular_values(y: &Matrix) -> Result<DVector<f64>> {
    ensure_finite(y, "svd input")?;
    let mut s = y.clone().singular_values();
    s.as_mut_slice().sort_by(|a, b| b.total_cmp(a));
    Ok(s)
}

pub fn nuclear_norm(y: &Matrix) -> Result<f64> {
    Ok(singular_values(y)?.sum())
}

/// Scalar soft threshold `sign(v)·max(|v| - t, 0)`.
#[inline]
pub fn soft(v: f64, t: f64) -> f64 {
    if v > t {
        v - t
    } else if v < -t {
        v + t
    } else {
        0.0
    }
}

/// Entrywise soft thresholding, the prox of `t‖·‖₁`.
pub fn soft_threshold(y: &Matrix, t: f64) -> Result<Matrix> {
    if !(t >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "soft threshold must be non-negative, got {t}"
        )));
    }
    ensure_finite(y, "soft_threshold input")?;
    Ok(y.map(|v| soft(v, t)))
}

/// Entrywise clamp onto `[0, 1]`.
pub fn project_unit_interval(y: &Matrix) -> Matrix {
    y.map(|v| v.clamp(0.0, 1.0))
}

/// Periodic forward differences along the three axes.
pub fn grad3d(t: &Tensor3D) -> GradientField3D {
    let d = t.dims();
    let src = t.as_slice();
    let mut h = vec![0.0; d.len()];
    let mut v = vec![0.0; d.len()];
    let mut dd = vec![0.0; d.len()];
    for f in 0..d.k {
        let fnext = (f + 1) % d.k;
        for j in 0..d.n {
            let jnext = (j + 1) % d.n;
            for i in 0..d.m {
                let inext = (i + 1) % d.m;
                let idx = d.index(i, j, f);
                let x = src[idx];
                h[idx] = src[d.index(i, jnext, f)] - x;
                v[idx] = src[d.index(inext, j, f)] - x;
                dd[idx] = src[d.index(i, j, fnext)] - x;
            }
        }
    }
    GradientField3D {
        horizontal: Tensor3D::from_vec(d, h).expect("same dims"),
        vertical: Tensor3D::from_vec(d, v).expect("same dims"),
        depth: Tensor3D::from_vec(d, dd).expect("same dims"),
    }
}

/// Adjoint of [`grad3d`]: `(Dᵀg)[i] = g[i-1] - g[i]` per axis, summed.
pub fn grad3d_adjoint(g: &GradientField3D) -> Result<Tensor3D> {
    let d = g.dims();
    if g.vertical.dims() != d || g.depth.dims() != d {
        return Err(Error::DimensionMismatch(
            "gradient channels have different dimensions".into(),
        ));
    }
    let (h, v, dd) = (
        g.horizontal.as_slice(),
        g.vertical.as_slice(),
        g.depth.as_slice(),
    );
    let mut out = vec![0.0; d.len()];
    for f in 0..d.k {
        let fprev = (f + d.k - 1) % d.k;
        for j in 0..d.n {
            let jprev = (j + d.n - 1) % d.n;
            for i in 0..d.m {
                let iprev = (i + d.m - 1) % d.m;
                let idx = d.index(i, j, f);
                out[idx] = (h[d.index(i, jprev, f)] - h[idx])
                    + (v[d.index(iprev, j, f)] - v[idx])
                    + (dd[d.index(i, j, fprev)] - dd[idx]);
            }
        }
    }
    Tensor3D::from_vec(d, out)
}

/// Isotropic 3D total variation: sum over voxels of the gradient magnitude.
pub fn tv_norm(t: &Tensor3D) -> f64 {
    gradient_magnitude_sum(&grad3d(t))
}

/// `Σ_voxels |(g_h, g_v, g_d)|`.
pub fn gradient_magnitude_sum(g: &GradientField3D) -> f64 {
    g.horizontal
        .as_slice()
        .iter()
        .zip(g.vertical.as_slice())
        .zip(g.depth.as_slice())
        .map(|((a, b), c)| (a * a + b * b + c * c).sqrt())
        .sum()
}

/// Per-voxel group shrinkage `v · max(|v| - t, 0) / |v|`; the prox of
/// `t · Σ|v|`.
pub fn shrink_isotropic(g: &GradientField3D, t: f64) -> Result<GradientField3D> {
    if !(t >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "shrink threshold must be non-negative, got {t}"
        )));
    }
    let d = g.dims();
    let (h, v, dd) = (
        g.horizontal.as_slice(),
        g.vertical.as_slice(),
        g.depth.as_slice(),
    );
    let mut oh = vec![0.0; d.len()];
    let mut ov = vec![0.0; d.len()];
    let mut od = vec![0.0; d.len()];
    for idx in 0..d.len() {
        let mag = (h[idx] * h[idx] + v[idx] * v[idx] + dd[idx] * dd[idx]).sqrt();
        if mag > t {
            let s = (mag - t) / mag;
            oh[idx] = s * h[idx];
            ov[idx] = s * v[idx];
            od[idx] = s * dd[idx];
        }
    }
    GradientField3D::new(
        Tensor3D::from_vec(d, oh)?,
        Tensor3D::from_vec(d, ov)?,
        Tensor3D::from_vec(d, od)?,
    )
}

/// Relative size of the imaginary residue tolerated after the inverse FFT.
const IMAG_TOLERANCE: f64 = 1e-8;

type AxisPlans = (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>);

/// Reusable solver for `(αI + ρ DᵀD) x = b` on a fixed volume shape.
///
/// Holds the FFT plans and the `DᵀD` eigenvalues; a solver iteration builds
/// one of these up front and reuses it every step.
#[derive(Clone)]
pub struct ScreenedPoisson {
    dims: Dims,
    /// Forward and inverse plans along each axis.
    plans: [AxisPlans; 3],
    eigenvalues: Vec<f64>,
}

impl std::fmt::Debug for ScreenedPoisson {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScreenedPoisson")
            .field("dims", &self.dims)
            .finish_non_exhaustive()
    }
}

impl ScreenedPoisson {
    pub fn new(dims: Dims) -> Self {
        let mut planner = FftPlanner::<f64>::new();
        let mut plan = |len: usize| (planner.plan_fft_forward(len), planner.plan_fft_inverse(len));
        let plans = [plan(dims.m), plan(dims.n), plan(dims.k)];

        let axis_eig = |len: usize| -> Vec<f64> {
            (0..len)
                .map(|p| {
                    let s = (std::f64::consts::PI * p as f64 / len as f64).sin();
                    4.0 * s * s
                })
                .collect()
        };
        let (em, en, ek) = (axis_eig(dims.m), axis_eig(dims.n), axis_eig(dims.k));
        let mut eigenvalues = Vec::with_capacity(dims.len());
        for lk in &ek {
            for ln in &en {
                eigenvalues.extend(em.iter().map(|lm| lm + ln + lk));
            }
        }
        ScreenedPoisson {
            dims,
            plans,
            eigenvalues,
        }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Eigenvalues of `DᵀD` in DFT order, laid out like the volume.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Solve `(αI + ρ_z DᵀD) x = rhs` for an `mn × k` right-hand side.
    pub fn solve(&self, rhs: &Matrix, alpha: f64, rho_z: f64) -> Result<Matrix> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidInput(format!(
                "screened Poisson needs alpha > 0, got {alpha}"
            )));
        }
        if !(rho_z >= 0.0) || !rho_z.is_finite() {
            return Err(Error::InvalidInput(format!(
                "screened Poisson needs rho_z >= 0, got {rho_z}"
            )));
        }
        self.dims.check_matrix(rhs)?;
        ensure_finite(rhs, "screened Poisson rhs")?;

        let mut buf: Vec<Complex<f64>> = rhs
            .as_slice()
            .iter()
            .map(|&v| Complex::new(v, 0.0))
            .collect();
        self.transform(&mut buf, false);
        for (z, &lam) in buf.iter_mut().zip(&self.eigenvalues) {
            *z /= alpha + rho_z * lam;
        }
        self.transform(&mut buf, true);

        let scale = 1.0 / self.dims.len() as f64;
        let mut max_re = 0.0_f64;
        let mut max_im = 0.0_f64;
        let out: Vec<f64> = buf
            .iter()
            .map(|z| {
                max_re = max_re.max(z.re.abs());
                max_im = max_im.max(z.im.abs());
                z.re * scale
            })
            .collect();
        if max_im > IMAG_TOLERANCE * max_re {
            return Err(Error::Numerical(format!(
                "inverse FFT left an imaginary residue of {:.3e} (relative {:.3e})",
                max_im * scale,
                max_im / max_re
            )));
        }
        Ok(Matrix::from_vec(self.dims.pixels(), self.dims.k, out))
    }

    /// Unnormalized 3D DFT in place (inverse when `inverse`).
    fn transform(&self, buf: &mut [Complex<f64>], inverse: bool) {
        let d = self.dims;
        let pick = |axis: usize| {
            if inverse {
                &self.plans[axis].1
            } else {
                &self.plans[axis].0
            }
        };

        // rows: contiguous runs of length m
        if d.m > 1 {
            pick(0).process(buf);
        }
        // columns: stride m within each frame
        if d.n > 1 {
            let plan = pick(1);
            let mut line = vec![Complex::new(0.0, 0.0); d.n];
            for f in 0..d.k {
                for i in 0..d.m {
                    for (j, z) in line.iter_mut().enumerate() {
                        *z = buf[d.index(i, j, f)];
                    }
                    plan.process(&mut line);
                    for (j, z) in line.iter().enumerate() {
                        buf[d.index(i, j, f)] = *z;
                    }
                }
            }
        }
        // frames: stride mn
        if d.k > 1 {
            let plan = pick(2);
            let stride = d.pixels();
            let mut line = vec![Complex::new(0.0, 0.0); d.k];
            for p in 0..stride {
                for (f, z) in line.iter_mut().enumerate() {
                    *z = buf[p + f * stride];
                }
                plan.process(&mut line);
                for (f, z) in line.iter().enumerate() {
                    buf[p + f * stride] = *z;
                }
            }
        }
    }
}

/// One-shot form of [`ScreenedPoisson::solve`].
pub fn solve_screened_poisson(rhs: &Matrix, alpha: f64, rho_z: f64, dims: Dims) -> Result<Matrix> {
    ScreenedPoisson::new(dims).solve(rhs, alpha, rho_z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn svt_zero_matrix() {
        let z = Matrix::zeros(3, 3);
        assert_eq!(svt(&z, 0.5).unwrap(), z);
    }

    #[test]
    fn svt_zero_threshold_is_identity() {
        let y = Matrix::from_row_slice(2, 3, &[1.0, -2.0, 0.5, 3.0, 0.25, -1.0]);
        assert_eq!(svt(&y, 0.0).unwrap(), y);
    }

    #[test]
    fn svt_diagonal() {
        let y = Matrix::from_diagonal(&DVector::from_vec(vec![3.0, 1.0]));
        let out = svt(&y, 2.0).unwrap();
        let expected = Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        assert_relative_eq!(out, expected, epsilon = 1e-12);
    }

    #[test]
    fn svt_rejects_nan() {
        let mut y = Matrix::zeros(2, 2);
        y[(0, 1)] = f64::NAN;
        assert!(matches!(svt(&y, 1.0), Err(Error::InvalidInput(_))));
        assert!(svt(&Matrix::zeros(2, 2), -1.0).is_err());
    }

    #[test]
    fn soft_threshold_examples() {
        let out = soft_threshold(&Matrix::from_row_slice(1, 1, &[0.5]), 1.0).unwrap();
        assert_eq!(out[(0, 0)], 0.0);
        let out = soft_threshold(&Matrix::from_row_slice(1, 2, &[2.0, -2.0]), 0.5).unwrap();
        assert_eq!(out.as_slice(), &[1.5, -1.5]);
    }

    #[test]
    fn projection_examples() {
        let y = Matrix::from_row_slice(1, 3, &[-0.2, 0.5, 1.7]);
        assert_eq!(project_unit_interval(&y).as_slice(), &[0.0, 0.5, 1.0]);
        let inside = Matrix::from_row_slice(1, 3, &[0.0, 0.3, 1.0]);
        assert_eq!(project_unit_interval(&inside), inside);
    }

    #[test]
    fn shrink_example() {
        let d = Dims::new(1, 1, 1).unwrap();
        let g = GradientField3D::new(
            Tensor3D::from_elem(d, 3.0),
            Tensor3D::from_elem(d, 4.0),
            Tensor3D::from_elem(d, 0.0),
        )
        .unwrap();
        let s = shrink_isotropic(&g, 2.5).unwrap();
        assert_relative_eq!(s.horizontal.as_slice()[0], 1.5, epsilon = 1e-15);
        assert_relative_eq!(s.vertical.as_slice()[0], 2.0, epsilon = 1e-15);
        assert_eq!(s.depth.as_slice()[0], 0.0);
        let s = shrink_isotropic(&g, 5.0).unwrap();
        assert_eq!(s, GradientField3D::zeros(d));
    }

    #[test]
    fn constant_volume_has_zero_gradient_and_tv() {
        let d = Dims::new(3, 4, 2).unwrap();
        let t = Tensor3D::from_elem(d, 0.7);
        assert_eq!(grad3d(&t), GradientField3D::zeros(d));
        assert_eq!(tv_norm(&t), 0.0);
    }

    #[test]
    fn poisson_trivial_cases() {
        let d = Dims::new(3, 2, 4).unwrap();
        let rhs = Matrix::from_fn(6, 4, |r, c| (r as f64 * 0.3 - c as f64).sin());
        let x = solve_screened_poisson(&rhs, 2.0, 0.0, d).unwrap();
        assert_relative_eq!(x, rhs / 2.0, epsilon = 1e-12);

        let c = Matrix::from_element(6, 4, 0.9);
        let x = solve_screened_poisson(&c, 3.0, 7.0, d).unwrap();
        assert_relative_eq!(x, Matrix::from_element(6, 4, 0.3), epsilon = 1e-12);
    }

    #[test]
    fn poisson_rejects_bad_alpha() {
        let d = Dims::new(2, 2, 2).unwrap();
        assert!(solve_screened_poisson(&Matrix::zeros(4, 2), 0.0, 1.0, d).is_err());
        assert!(solve_screened_poisson(&Matrix::zeros(4, 3), 1.0, 1.0, d).is_err());
    }
}
