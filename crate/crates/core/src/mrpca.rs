//! Masked RPCA: linearized ADMM for
//!
//! ```text
//! minimize ‖L‖_* + λ_w ‖W‖₁   s.t.  (1-W)∘(X-L) = 0,  W ∈ [0,1]
//! ```
//!
//! with augmented Lagrangian
//!
//! ```text
//! ‖L‖_* + λ_w‖W‖₁ + ι(W) + ⟨U, (1-W)∘(L-X)⟩ + ρ/2 ‖(1-W)∘(L-X)‖²
//! ```
//!
//! Each iteration takes a linearized proximal step in `L` (singular value
//! thresholding), a linearized proximal step in `W` (soft threshold then
//! clamp) and a dual ascent step in `U`.

use crate::error::{Error, Result};
use crate::prox::{self, soft, svt_full};
use crate::tensor::{ensure_finite, Matrix};
use crate::trace::{IterationTrace, TraceRecord};

#[derive(Clone, Debug, PartialEq)]
pub struct MrpcaConfig {
    /// Weight of `‖W‖₁`.
    pub lambda_w: f64,
    pub rho_x: f64,
    /// Proximal step for the linearized `L` subproblem.
    pub tau_l: f64,
    /// Proximal step for the linearized `W` subproblem.
    pub tau_w: f64,
    pub max_iters: usize,
    /// Stop once `‖(1-W)∘(X-L)‖_F / ‖X‖_F` falls below this...
    pub tol_gap: f64,
    /// ...and `max(‖ΔL‖_F, ‖ΔW‖_F) / ‖X‖_F` falls below this.
    pub tol_change: f64,
}

impl Default for MrpcaConfig {
    fn default() -> Self {
        MrpcaConfig {
            lambda_w: 1e-3,
            rho_x: 1.0,
            tau_l: 0.5,
            tau_w: 0.5,
            max_iters: 500,
            tol_gap: 1e-5,
            tol_change: 1e-4,
        }
    }
}

impl MrpcaConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("lambda_w", self.lambda_w),
            ("rho_x", self.rho_x),
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

    /// Copy with `rho_x` set from the data by [`auto_rho`].
    pub fn with_auto_rho(&self, x: &Matrix) -> Result<Self> {
        Ok(MrpcaConfig {
            rho_x: auto_rho(x)?,
            ..self.clone()
        })
    }
}

/// Multiplier of `1/‖X‖₂` in [`auto_rho`].
pub const RHO_SCALE: f64 = 2.5;

/// Data-scaled penalty `2.5 / ‖X‖₂`.
pub fn auto_rho(x: &Matrix) -> Result<f64> {
    scaled_rho(x, RHO_SCALE)
}

/// `scale / ‖X‖₂`.
pub fn scaled_rho(x: &Matrix, scale: f64) -> Result<f64> {
    ensure_finite(x, "X")?;
    let smax = prox::singular_values(x)?.get(0).copied().unwrap_or(0.0);
    if !(smax > 0.0) {
        return Err(Error::Degenerate("cannot scale rho to an all-zero input".into()));
    }
    Ok(scale / smax)
}

/// Iterate of the M-RPCA solver.
#[derive(Clone, Debug, PartialEq)]
pub struct MrpcaState {
    pub l: Matrix,
    pub w: Matrix,
    pub u_x: Matrix,
    pub iter: usize,
}

impl MrpcaState {
    /// `L` = per-pixel temporal median of `X`, `W = 0`, `U = 0`.
    pub fn initial(x: &Matrix) -> Self {
        MrpcaState {
            l: temporal_median(x),
            w: Matrix::zeros(x.nrows(), x.ncols()),
            u_x: Matrix::zeros(x.nrows(), x.ncols()),
            iter: 0,
        }
    }
}

/// Per-row (per-pixel) median over columns (frames), broadcast back across
/// every column. Even frame counts average the two middle values.
pub fn temporal_median(x: &Matrix) -> Matrix {
    let k = x.ncols();
    let mut out = Matrix::zeros(x.nrows(), k);
    if k == 0 {
        return out;
    }
    let mut buf = Vec::with_capacity(k);
    for r in 0..x.nrows() {
        buf.clear();
        buf.extend(x.row(r).iter().copied());
        buf.sort_by(f64::total_cmp);
        let med = if k % 2 == 1 {
            buf[k / 2]
        } else {
            0.5 * (buf[k / 2 - 1] + buf[k / 2])
        };
        out.row_mut(r).fill(med);
    }
    out
}

/// `Λ_L = (1-W)∘((L-X)∘(1-W) + U/ρ)`, the gradient of the coupling term in `L`.
pub fn lambda_l(state: &MrpcaState, x: &Matrix, rho_x: f64) -> Matrix {
    let mut out = Matrix::zeros(x.nrows(), x.ncols());
    for (o, (((&l, &w), &u), &xv)) in out
        .iter_mut()
        .zip(state.l.iter().zip(&state.w).zip(&state.u_x).zip(x))
    {
        let ow = 1.0 - w;
        *o = ow * ((l - xv) * ow + u / rho_x);
    }
    out
}

/// `Λ_W = (X-L⁺)∘((L⁺-X)∘(1-W) + U/ρ)` with `L⁺` the freshly updated `L`.
pub fn lambda_w(state: &MrpcaState, l_new: &Matrix, x: &Matrix, rho_x: f64) -> Matrix {
    let mut out = Matrix::zeros(x.nrows(), x.ncols());
    for (o, (((&l, &w), &u), &xv)) in out
        .iter_mut()
        .zip(l_new.iter().zip(&state.w).zip(&state.u_x).zip(x))
    {
        *o = (xv - l) * ((l - xv) * (1.0 - w) + u / rho_x);
    }
    out
}

/// `L⁺ = svt(L - τ_L Λ_L, τ_L/ρ)`.
pub fn update_l(state: &MrpcaState, x: &Matrix, cfg: &MrpcaConfig) -> Result<Matrix> {
    Ok(update_l_full(state, x, cfg)?.0.matrix)
}

fn update_l_full(
    state: &MrpcaState,
    x: &Matrix,
    cfg: &MrpcaConfig,
) -> Result<(prox::Svt, Matrix)> {
    let grad = lambda_l(state, x, cfg.rho_x);
    let target = &state.l - cfg.tau_l * &grad;
    Ok((svt_full(&target, cfg.tau_l / cfg.rho_x)?, grad))
}

/// `W⁺ = Π_[0,1](soft(W - τ_W Λ_W, λ_w τ_W/ρ))`; needs `L⁺`.
pub fn update_w(state: &MrpcaState, l_new: &Matrix, x: &Matrix, cfg: &MrpcaConfig) -> Matrix {
    let grad = lambda_w(state, l_new, x, cfg.rho_x);
    w_step(&state.w, &grad, cfg)
}

fn w_step(w: &Matrix, grad: &Matrix, cfg: &MrpcaConfig) -> Matrix {
    let t = cfg.lambda_w * cfg.tau_w / cfg.rho_x;
    w.zip_map(grad, |wv, g| soft(wv - cfg.tau_w * g, t).clamp(0.0, 1.0))
}

/// Dual ascent `U⁺ = U + ρ (1-W⁺)∘(L⁺-X)`.
pub fn update_dual(u_x: &Matrix, l_new: &Matrix, w_new: &Matrix, x: &Matrix, rho_x: f64) -> Matrix {
    let mut out = u_x.clone();
    for (o, ((&l, &w), &xv)) in out.iter_mut().zip(l_new.iter().zip(w_new).zip(x)) {
        *o += rho_x * (1.0 - w) * (l - xv);
    }
    out
}

/// `(1-W)∘(L-X)`.
pub fn constraint_residual(l: &Matrix, w: &Matrix, x: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(x.nrows(), x.ncols());
    for (o, ((&lv, &wv), &xv)) in out.iter_mut().zip(l.iter().zip(w).zip(x)) {
        *o = (1.0 - wv) * (lv - xv);
    }
    out
}

/// Augmented Lagrangian at `(L, W, U)`. Returns `+∞` if `W ∉ [0,1]`.
pub fn lagrangian(l: &Matrix, w: &Matrix, u_x: &Matrix, x: &Matrix, cfg: &MrpcaConfig) -> Result<f64> {
    let nuc = prox::nuclear_norm(l)?;
    Ok(lagrangian_with_nuclear(nuc, l, w, u_x, x, cfg))
}

fn lagrangian_with_nuclear(
    nuclear: f64,
    l: &Matrix,
    w: &Matrix,
    u_x: &Matrix,
    x: &Matrix,
    cfg: &MrpcaConfig,
) -> f64 {
    if w.iter().any(|&v| !(0.0..=1.0).contains(&v)) {
        return f64::INFINITY;
    }
    let r = constraint_residual(l, w, x);
    nuclear + cfg.lambda_w * w.sum() + u_x.dot(&r) + 0.5 * cfg.rho_x * r.norm_squared()
}

/// Everything one iteration touched, kept for optimality diagnostics.
#[derive(Clone, Debug)]
pub struct StepDetail {
    pub l_prev: Matrix,
    pub w_prev: Matrix,
    pub u_prev: Matrix,
    /// `Λ_L` evaluated at the previous iterate.
    pub lambda_l: Matrix,
    /// `Λ_W` evaluated with `L⁺` and the previous `W`, `U`.
    pub lambda_w: Matrix,
    /// `𝓛(L⁺, W⁺, U)`
    pub lagrangian_before_dual: f64,
    /// `𝓛(L⁺, W⁺, U⁺)`
    pub lagrangian_after_dual: f64,
}

impl StepDetail {
    /// `-(ρ/τ_L)(L⁺ - L) - ρΛ_L`, which the `L` step places in `∂‖L⁺‖_*`.
    pub fn l_subgradient(&self, l_new: &Matrix, cfg: &MrpcaConfig) -> Matrix {
        -(cfg.rho_x / cfg.tau_l) * (l_new - &self.l_prev) - cfg.rho_x * &self.lambda_l
    }

    /// `-(ρ/τ_W)(W⁺ - W) - ρΛ_W`, which the `W` step places in
    /// `∂(λ_w‖W⁺‖₁ + ι_[0,1](W⁺))`.
    pub fn w_subgradient(&self, w_new: &Matrix, cfg: &MrpcaConfig) -> Matrix {
        -(cfg.rho_x / cfg.tau_w) * (w_new - &self.w_prev) - cfg.rho_x * &self.lambda_w
    }
}

/// Result of a full solve.
#[derive(Clone, Debug)]
pub struct MrpcaOutput {
    pub l: Matrix,
    pub w: Matrix,
    pub u_x: Matrix,
    pub trace: IterationTrace,
    pub converged: bool,
    pub iterations: usize,
}

/// Stepwise M-RPCA solver. [`solve_mrpca`] drives it to convergence; tests and
/// diagnostics can single-step it.
#[derive(Clone, Debug)]
pub struct Mrpca {
    x: Matrix,
    x_norm: f64,
    cfg: MrpcaConfig,
    state: MrpcaState,
    trace: IterationTrace,
}

impl Mrpca {
    pub fn new(x: Matrix, cfg: MrpcaConfig) -> Result<Self> {
        cfg.validate()?;
        ensure_finite(&x, "X")?;
        if x.is_empty() {
            return Err(Error::InvalidInput("X is empty".into()));
        }
        let state = MrpcaState::initial(&x);
        Ok(Self::with_state(x, cfg, state))
    }

    /// Start from an arbitrary iterate (dimensions must match `x`).
    pub fn with_state(x: Matrix, cfg: MrpcaConfig, state: MrpcaState) -> Self {
        let x_norm = x.norm().max(f64::MIN_POSITIVE);
        Mrpca {
            x,
            x_norm,
            cfg,
            state,
            trace: IterationTrace::new(),
        }
    }

    pub fn state(&self) -> &MrpcaState {
        &self.state
    }

    pub fn config(&self) -> &MrpcaConfig {
        &self.cfg
    }

    pub fn data(&self) -> &Matrix {
        &self.x
    }

    pub fn trace(&self) -> &IterationTrace {
        &self.trace
    }

    /// Gap relative to `‖X‖_F`.
    pub fn relative_gap(&self) -> f64 {
        constraint_residual(&self.state.l, &self.state.w, &self.x).norm() / self.x_norm
    }

    pub fn step(&mut self) -> Result<TraceRecord> {
        Ok(self.step_detailed()?.0)
    }

    /// One iteration: `L`, then `W`, then `U`.
    pub fn step_detailed(&mut self) -> Result<(TraceRecord, StepDetail)> {
        let cfg = &self.cfg;
        let x = &self.x;

        let (svt, grad_l) = update_l_full(&self.state, x, cfg)?;
        let l_new = svt.matrix;
        let grad_w = lambda_w(&self.state, &l_new, x, cfg.rho_x);
        let w_new = w_step(&self.state.w, &grad_w, cfg);
        let u_new = update_dual(&self.state.u_x, &l_new, &w_new, x, cfg.rho_x);

        let residual = constraint_residual(&l_new, &w_new, x);
        let before = lagrangian_with_nuclear(svt.nuclear_norm, &l_new, &w_new, &self.state.u_x, x, cfg);
        let after = lagrangian_with_nuclear(svt.nuclear_norm, &l_new, &w_new, &u_new, x, cfg);

        let record = TraceRecord {
            iter: self.state.iter + 1,
            objective: svt.nuclear_norm + cfg.lambda_w * w_new.sum(),
            gap: residual.norm(),
            d_l: (&l_new - &self.state.l).norm(),
            d_w: (&w_new - &self.state.w).norm(),
            d_u: (&u_new - &self.state.u_x).norm(),
            lagrangian: after,
            extended: None,
        };

        let next = MrpcaState {
            l: l_new,
            w: w_new,
            u_x: u_new,
            iter: self.state.iter + 1,
        };
        let prev = std::mem::replace(&mut self.state, next);
        let detail = StepDetail {
            l_prev: prev.l,
            w_prev: prev.w,
            u_prev: prev.u_x,
            lambda_l: grad_l,
            lambda_w: grad_w,
            lagrangian_before_dual: before,
            lagrangian_after_dual: after,
        };
        self.trace.push(record);
        Ok((record, detail))
    }

    /// Whether `record` satisfies both stopping tests.
    pub fn is_converged(&self, record: &TraceRecord) -> bool {
        record.gap / self.x_norm < self.cfg.tol_gap
            && record.d_l.max(record.d_w) / self.x_norm < self.cfg.tol_change
    }

    pub fn run(mut self) -> Result<MrpcaOutput> {
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

    pub fn finish(self, converged: bool) -> MrpcaOutput {
        MrpcaOutput {
            iterations: self.state.iter,
            l: self.state.l,
            w: self.state.w,
            u_x: self.state.u_x,
            trace: self.trace,
            converged,
        }
    }
}

/// Run M-RPCA from the median initialization until convergence or
/// `max_iters`. Non-convergence is reported in [`MrpcaOutput::converged`].
pub fn solve_mrpca(x: &Matrix, cfg: &MrpcaConfig) -> Result<MrpcaOutput> {
    Mrpca::new(x.clone(), cfg.clone())?.run()
}
