//! Extended masked RPCA with a TV-regularized mask and a sparse background
//! perturbation term:
//!
//! ```text
//! minimize  ‖L‖_* + λ_w‖W‖² + λ_z Σ|Z| + λ_e‖E‖₁
//! s.t.      (1-W)∘(X-L) = E,   D(W) = Z,   W ∈ [0,1]
//! ```
//!
//! `D` is the periodic 3D forward-difference operator applied to the volume
//! view of `W`, and `Σ|Z|` the isotropic magnitude sum, so the `Z` term is the
//! total variation of the mask. `E` is reported with the sign of the
//! Lagrangian residual `(1-W)∘(L-X) + E`, i.e. `E ≈ (1-W)∘(X-L)`.
//!
//! One iteration updates, in order, `L` (linearized, singular value
//! thresholding), `W` (linearized, FFT screened-Poisson solve then clamp),
//! `Z` (isotropic shrink), `E` (soft threshold) and both duals.

use crate::error::{Error, Result};
use crate::mrpca::{scaled_rho, temporal_median};
use crate::prox::{self, grad3d, grad3d_adjoint, shrink_isotropic, soft, svt_full, ScreenedPoisson};
use crate::tensor::{ensure_finite, Dims, GradientField3D, Matrix, Tensor3D};
use crate::trace::{ExtendedRecord, IterationTrace, TraceRecord};

/// Multiplier of `1/‖X‖₂` for `rho_x` in [`EmrpcaConfig::with_auto_rho`].
pub const RHO_X_SCALE: f64 = 25.0;
/// Multiplier of `1/‖X‖₂` for `rho_z` in [`EmrpcaConfig::with_auto_rho`].
pub const RHO_Z_SCALE: f64 = 100.0;

#[derive(Clone, Debug, PartialEq)]
pub struct EmrpcaConfig {
    /// Weight of the mask energy `‖W‖²`.
    pub lambda_w: f64,
    /// Weight of the mask total variation.
    pub lambda_z: f64,
    /// Weight of `‖E‖₁`.
    pub lambda_e: f64,
    pub rho_x: f64,
    pub rho_z: f64,
    pub tau_l: f64,
    pub tau_w: f64,
    pub max_iters: usize,
    pub tol_gap: f64,
    pub tol_change: f64,
}

impl Default for EmrpcaConfig {
    fn default() -> Self {
        EmrpcaConfig {
            lambda_w: 8e-3,
            lambda_z: 1e-2,
            lambda_e: 4e-2,
            rho_x: 1.0,
            rho_z: 1.0,
            tau_l: 0.5,
            tau_w: 0.5,
            max_iters: 800,
            tol_gap: 1e-5,
            tol_change: 1e-4,
        }
    }
}

impl EmrpcaConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("lambda_w", self.lambda_w),
            ("lambda_z", self.lambda_z),
            ("lambda_e", self.lambda_e),
            ("rho_x", self.rho_x),
            ("rho_z", self.rho_z),
            ("tol_gap", self.tol_gap),
            ("tol_change", self.tol_change),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidConfig(format!("{name} must be positive, got {v}")));
            }
        }
        for (name, v) in [("tau_l", self.tau_l), ("tau_w", self.tau_w)] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::InvalidConfig(format!("{name} must be in (0, 1], got {v}")));
            }
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        Ok(())
    }

    /// Copy with `rho_x = 25/‖X‖₂` and `rho_z = 100/‖X‖₂`.
    pub fn with_auto_rho(&self, x: &Matrix) -> Result<Self> {
        let rho_x = scaled_rho(x, RHO_X_SCALE)?;
        Ok(EmrpcaConfig {
            rho_x,
            rho_z: rho_x * RHO_Z_SCALE / RHO_X_SCALE,
            ..self.clone()
        })
    }

    /// `α = 2λ_w + ρ_x/τ_W`, the diagonal of the `W` normal equations.
    pub fn alpha(&self) -> f64 {
        2.0 * self.lambda_w + self.rho_x / self.tau_w
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmrpcaState {
    pub l: Matrix,
    pub w: Matrix,
    pub e: Matrix,
    pub u_x: Matrix,
    pub z: GradientField3D,
    pub u_z: GradientField3D,
    pub iter: usize,
}

impl EmrpcaState {
    /// `L` = temporal median, everything else zero.
    pub fn initial(x: &Matrix, dims: Dims) -> Self {
        let zeros = Matrix::zeros(x.nrows(), x.ncols());
        EmrpcaState {
            l: temporal_median(x),
            w: zeros.clone(),
            e: zeros.clone(),
            u_x: zeros,
            z: GradientField3D::zeros(dims),
            u_z: GradientField3D::zeros(dims),
            iter: 0,
        }
    }
}

/// `D(W)`: gradient field of the volume view of `W`.
pub fn d3(w: &Matrix, dims: Dims) -> Result<GradientField3D> {
    Ok(grad3d(&Tensor3D::from_matrix(w, dims)?))
}

/// `Ψ_L = (1-W)∘((L-X)∘(1-W) + E + U_x/ρ_x)`.
pub fn psi_l(state: &EmrpcaState, x: &Matrix, rho_x: f64) -> Matrix {
    let mut out = Matrix::zeros(x.nrows(), x.ncols());
    for (idx, o) in out.iter_mut().enumerate() {
        let ow = 1.0 - state.w[idx];
        *o = ow * ((state.l[idx] - x[idx]) * ow + state.e[idx] + state.u_x[idx] / rho_x);
    }
    out
}

/// `Ψ_W = (X-L⁺)∘((L⁺-X)∘(1-W) + E + U_x/ρ_x)`.
pub fn psi_w(state: &EmrpcaState, l_new: &Matrix, x: &Matrix, rho_x: f64) -> Matrix {
    let mut out = Matrix::zeros(x.nrows(), x.ncols());
    for (idx, o) in out.iter_mut().enumerate() {
        let r = l_new[idx] - x[idx];
        *o = -r * (r * (1.0 - state.w[idx]) + state.e[idx] + state.u_x[idx] / rho_x);
    }
    out
}

/// `Ψ̂_W = W - τ_W Ψ_W`.
pub fn psi_hat_w(state: &EmrpcaState, l_new: &Matrix, x: &Matrix, cfg: &EmrpcaConfig) -> Matrix {
    &state.w - cfg.tau_w * psi_w(state, l_new, x, cfg.rho_x)
}

/// `L⁺ = svt(L - τ_L Ψ_L, τ_L/ρ_x)`.
pub fn update_l_ext(state: &EmrpcaState, x: &Matrix, cfg: &EmrpcaConfig) -> Result<Matrix> {
    Ok(l_step(state, x, cfg)?.matrix)
}

fn l_step(state: &EmrpcaState, x: &Matrix, cfg: &EmrpcaConfig) -> Result<prox::Svt> {
    let target = &state.l - cfg.tau_l * psi_l(state, x, cfg.rho_x);
    svt_full(&target, cfg.tau_l / cfg.rho_x)
}

/// Right-hand side `Γ = (ρ_x/τ_W) Ψ̂_W + ρ_z R(Dᵀ(Z + U_z/ρ_z))` of the `W`
/// normal equations.
pub fn w_rhs(state: &EmrpcaState, l_new: &Matrix, x: &Matrix, cfg: &EmrpcaConfig) -> Result<Matrix> {
    let data = (cfg.rho_x / cfg.tau_w) * psi_hat_w(state, l_new, x, cfg);
    if cfg.rho_z == 0.0 {
        return Ok(data);
    }
    let shifted = state.z.add_scaled(1.0 / cfg.rho_z, &state.u_z);
    let dt = grad3d_adjoint(&shifted)?.into_matrix();
    Ok(data + cfg.rho_z * dt)
}

/// Unclamped solution of `(αI + ρ_z DᵀD) W = Γ`.
pub fn w_solve_unclamped(
    state: &EmrpcaState,
    l_new: &Matrix,
    x: &Matrix,
    cfg: &EmrpcaConfig,
    solver: &ScreenedPoisson,
) -> Result<Matrix> {
    let rhs = w_rhs(state, l_new, x, cfg)?;
    solver.solve(&rhs, cfg.alpha(), cfg.rho_z)
}

/// `W⁺ = Π_[0,1](W solve)`.
pub fn update_w_ext(
    state: &EmrpcaState,
    l_new: &Matrix,
    x: &Matrix,
    cfg: &EmrpcaConfig,
    solver: &ScreenedPoisson,
) -> Result<Matrix> {
    Ok(prox::project_unit_interval(&w_solve_unclamped(state, l_new, x, cfg, solver)?))
}

/// `Z⁺ = shrink(D(W⁺) - U_z/ρ_z, λ_z/ρ_z)`.
pub fn update_z(w_new: &Matrix, u_z: &GradientField3D, dims: Dims, cfg: &EmrpcaConfig) -> Result<GradientField3D> {
    let arg = d3(w_new, dims)?.add_scaled(-1.0 / cfg.rho_z, u_z);
    shrink_isotropic(&arg, cfg.lambda_z / cfg.rho_z)
}

/// `E⁺ = soft((W⁺-1)∘(L⁺-X) - U_x/ρ_x, λ_e/ρ_x)`.
pub fn update_e(l_new: &Matrix, w_new: &Matrix, u_x: &Matrix, x: &Matrix, cfg: &EmrpcaConfig) -> Matrix {
    let t = cfg.lambda_e / cfg.rho_x;
    let mut out = Matrix::zeros(x.nrows(), x.ncols());
    for (idx, o) in out.iter_mut().enumerate() {
        let v = (w_new[idx] - 1.0) * (l_new[idx] - x[idx]) - u_x[idx] / cfg.rho_x;
        *o = soft(v, t);
    }
    out
}

/// `(1-W)∘(L-X) + E`.
pub fn residual_x(l: &Matrix, w: &Matrix, e: &Matrix, x: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(x.nrows(), x.ncols());
    for (idx, o) in out.iter_mut().enumerate() {
        *o = (1.0 - w[idx]) * (l[idx] - x[idx]) + e[idx];
    }
    out
}

/// `Z - D(W)`.
pub fn residual_z(z: &GradientField3D, w: &Matrix, dims: Dims) -> Result<GradientField3D> {
    Ok(z.add_scaled(-1.0, &d3(w, dims)?))
}

/// `U_x⁺ = U_x + ρ_x((1-W)∘(L-X) + E)`, `U_z⁺ = U_z + ρ_z(Z - D(W))`, all at
/// the fresh primal values.
#[allow(clippy::too_many_arguments)]
pub fn update_duals_ext(
    u_x: &Matrix,
    u_z: &GradientField3D,
    l_new: &Matrix,
    w_new: &Matrix,
    e_new: &Matrix,
    z_new: &GradientField3D,
    x: &Matrix,
    dims: Dims,
    rho_x: f64,
    rho_z: f64,
) -> Result<(Matrix, GradientField3D)> {
    let ux = u_x + rho_x * residual_x(l_new, w_new, e_new, x);
    let uz = u_z.add_scaled(rho_z, &residual_z(z_new, w_new, dims)?);
    Ok((ux, uz))
}

/// `‖L‖_* + λ_w‖W‖² + λ_z Σ|Z| + λ_e‖E‖₁` given `‖L‖_*`.
fn objective_with_nuclear(nuclear: f64, w: &Matrix, z: &GradientField3D, e: &Matrix, cfg: &EmrpcaConfig) -> f64 {
    nuclear
        + cfg.lambda_w * w.norm_squared()
        + cfg.lambda_z * prox::gradient_magnitude_sum(z)
        + cfg.lambda_e * e.iter().map(|v| v.abs()).sum::<f64>()
}

/// Objective value at a state.
pub fn objective(state: &EmrpcaState, cfg: &EmrpcaConfig) -> Result<f64> {
    Ok(objective_with_nuclear(
        prox::nuclear_norm(&state.l)?,
        &state.w,
        &state.z,
        &state.e,
        cfg,
    ))
}

/// Augmented Lagrangian at a state; `+∞` if `W ∉ [0,1]`.
pub fn lagrangian(state: &EmrpcaState, x: &Matrix, dims: Dims, cfg: &EmrpcaConfig) -> Result<f64> {
    let nuc = prox::nuclear_norm(&state.l)?;
    lagrangian_with_nuclear(nuc, state, x, dims, cfg)
}

fn lagrangian_with_nuclear(
    nuclear: f64,
    s: &EmrpcaState,
    x: &Matrix,
    dims: Dims,
    cfg: &EmrpcaConfig,
) -> Result<f64> {
    if s.w.iter().any(|&v| !(0.0..=1.0).contains(&v)) {
        return Ok(f64::INFINITY);
    }
    let rz = residual_z(&s.z, &s.w, dims)?;
    let rx = residual_x(&s.l, &s.w, &s.e, x);
    Ok(objective_with_nuclear(nuclear, &s.w, &s.z, &s.e, cfg)
        + s.u_z.dot(&rz)
        + 0.5 * cfg.rho_z * rz.dot(&rz)
        + s.u_x.dot(&rx)
        + 0.5 * cfg.rho_x * rx.norm_squared())
}

/// Diagnostics from one iteration.
#[derive(Clone, Debug)]
pub struct StepDetail {
    /// Right-hand side `Γ` of the `W` normal equations.
    pub w_rhs: Matrix,
    /// `W` solve before clamping to `[0, 1]`.
    pub w_unclamped: Matrix,
    pub u_x_prev: Matrix,
    pub u_z_prev: GradientField3D,
    /// `𝓛` at the new primals with the old duals.
    pub lagrangian_before_dual: f64,
    /// `𝓛` at the new primals with the new duals.
    pub lagrangian_after_dual: f64,
}

#[derive(Clone, Debug)]
pub struct EmrpcaOutput {
    pub l: Matrix,
    pub w: Matrix,
    pub e: Matrix,
    pub state: EmrpcaState,
    pub trace: IterationTrace,
    pub converged: bool,
    pub iterations: usize,
}

/// Stepwise EM-RPCA solver.
#[derive(Clone, Debug)]
pub struct Emrpca {
    x: Matrix,
    x_norm: f64,
    dims: Dims,
    cfg: EmrpcaConfig,
    state: EmrpcaState,
    solver: ScreenedPoisson,
    trace: IterationTrace,
}

impl Emrpca {
    pub fn new(x: Matrix, dims: Dims, cfg: EmrpcaConfig) -> Result<Self> {
        cfg.validate()?;
        dims.check_matrix(&x)?;
        ensure_finite(&x, "X")?;
        let state = EmrpcaState::initial(&x, dims);
        Ok(Self::with_state(x, dims, cfg, state))
    }

    pub fn with_state(x: Matrix, dims: Dims, cfg: EmrpcaConfig, state: EmrpcaState) -> Self {
        Emrpca {
            x_norm: x.norm().max(f64::MIN_POSITIVE),
            x,
            dims,
            cfg,
            state,
            solver: ScreenedPoisson::new(dims),
            trace: IterationTrace::new(),
        }
    }

    pub fn state(&self) -> &EmrpcaState {
        &self.state
    }

    pub fn config(&self) -> &EmrpcaConfig {
        &self.cfg
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn data(&self) -> &Matrix {
        &self.x
    }

    pub fn trace(&self) -> &IterationTrace {
        &self.trace
    }

    pub fn poisson(&self) -> &ScreenedPoisson {
        &self.solver
    }

    pub fn step(&mut self) -> Result<TraceRecord> {
        Ok(self.step_detailed()?.0)
    }

    /// One iteration in the order `L, W, Z, E, (U_x, U_z)`.
    pub fn step_detailed(&mut self) -> Result<(TraceRecord, StepDetail)> {
        let (cfg, x, dims) = (&self.cfg, &self.x, self.dims);
        let s = &self.state;

        let svt = l_step(s, x, cfg)?;
        let l_new = svt.matrix;
        let gamma = w_rhs(s, &l_new, x, cfg)?;
        let w_unclamped = self.solver.solve(&gamma, cfg.alpha(), cfg.rho_z)?;
        let w_new = prox::project_unit_interval(&w_unclamped);
        let z_new = update_z(&w_new, &s.u_z, dims, cfg)?;
        let e_new = update_e(&l_new, &w_new, &s.u_x, x, cfg);
        let (ux_new, uz_new) = update_duals_ext(
            &s.u_x, &s.u_z, &l_new, &w_new, &e_new, &z_new, x, dims, cfg.rho_x, cfg.rho_z,
        )?;

        let rx = residual_x(&l_new, &w_new, &e_new, x).norm();
        let rz = residual_z(&z_new, &w_new, dims)?.norm();
        let d_ux = (&ux_new - &s.u_x).norm();
        let d_uz = uz_new.add_scaled(-1.0, &s.u_z).norm();
        let record_base = (
            (&l_new - &s.l).norm(),
            (&w_new - &s.w).norm(),
            (d_ux * d_ux + d_uz * d_uz).sqrt(),
        );
        let nnz = e_new.iter().filter(|&&v| v != 0.0).count();
        let e_frac = nnz as f64 / e_new.len().max(1) as f64;

        let next = EmrpcaState {
            l: l_new,
            w: w_new,
            e: e_new,
            u_x: ux_new,
            z: z_new,
            u_z: uz_new,
            iter: s.iter + 1,
        };
        let mid = EmrpcaState {
            u_x: s.u_x.clone(),
            u_z: s.u_z.clone(),
            ..next.clone()
        };
        let before = lagrangian_with_nuclear(svt.nuclear_norm, &mid, x, dims, cfg)?;
        let after = lagrangian_with_nuclear(svt.nuclear_norm, &next, x, dims, cfg)?;
        let objective = objective_with_nuclear(svt.nuclear_norm, &next.w, &next.z, &next.e, cfg);

        let record = TraceRecord {
            iter: next.iter,
            objective,
            gap: rx,
            d_l: record_base.0,
            d_w: record_base.1,
            d_u: record_base.2,
            lagrangian: after,
            extended: Some(ExtendedRecord {
                res_x: rx,
                res_z: rz,
                e_frac,
            }),
        };
        let prev = std::mem::replace(&mut self.state, next);
        self.trace.push(record);
        Ok((
            record,
            StepDetail {
                w_rhs: gamma,
                w_unclamped,
                u_x_prev: prev.u_x,
                u_z_prev: prev.u_z,
                lagrangian_before_dual: before,
                lagrangian_after_dual: after,
            },
        ))
    }

    pub fn is_converged(&self, record: &TraceRecord) -> bool {
        let ext = record.extended.expect("extended record");
        ext.res_x.max(ext.res_z) / self.x_norm < self.cfg.tol_gap
            && record.d_l.max(record.d_w) / self.x_norm < self.cfg.tol_change
    }

    pub fn run(mut self) -> Result<EmrpcaOutput> {
        let mut converged = false;
        while self.state.iter < self.cfg.max_iters {
            let record = self.step()?;
            if self.is_converged(&record) {
                converged = true;
                break;
            }
        }
        Ok(self.finish(converged))
    }

    pub fn finish(self, converged: bool) -> EmrpcaOutput {
        EmrpcaOutput {
            l: self.state.l.clone(),
            w: self.state.w.clone(),
            e: self.state.e.clone(),
            iterations: self.state.iter,
            state: self.state,
            trace: self.trace,
            converged,
        }
    }
}

/// Run EM-RPCA from the median initialization.
pub fn solve_emrpca(x: &Matrix, dims: Dims, cfg: &EmrpcaConfig) -> Result<EmrpcaOutput> {
    Emrpca::new(x.clone(), dims, cfg.clone())?.run()
}
