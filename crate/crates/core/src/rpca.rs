//! Principal component pursuit baseline (`min ‖L‖_* + λ‖S‖₁ s.t. L + S = X`)
//! by the inexact augmented Lagrange multiplier method, and mask extraction
//! from `|S|` by a fixed or Otsu threshold.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::prox::{self, soft_threshold, svt_full};
use crate::tensor::{ensure_finite, Matrix};
use crate::trace::{IterationTrace, TraceRecord};

#[derive(Clone, Debug, PartialEq)]
pub struct RpcaConfig {
    /// Sparse weight; `None` means `1/sqrt(max(rows, cols))`.
    pub lambda_s: Option<f64>,
    /// Initial ALM penalty; `None` means `1.25/‖X‖₂`.
    pub mu: Option<f64>,
    /// Factor applied to `mu` after every iteration.
    pub mu_growth: f64,
    pub max_iters: usize,
    /// Stop once `‖X-L-S‖_F / ‖X‖_F` falls below this.
    pub tol: f64,
}

impl Default for RpcaConfig {
    fn default() -> Self {
        RpcaConfig {
            lambda_s: None,
            mu: None,
            mu_growth: 1.5,
            max_iters: 1000,
            tol: 1e-7,
        }
    }
}

impl RpcaConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("lambda_s", self.lambda_s), ("mu", self.mu)] {
            if let Some(v) = v {
                if !(v > 0.0) || !v.is_finite() {
                    return Err(Error::InvalidConfig(format!("{name} must be positive, got {v}")));
                }
            }
        }
        if !(self.mu_growth >= 1.0) || !self.mu_growth.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "mu_growth must be at least 1, got {}",
                self.mu_growth
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidConfig(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        Ok(())
    }

    pub fn lambda_for(&self, x: &Matrix) -> f64 {
        self.lambda_s
            .unwrap_or_else(|| 1.0 / (x.nrows().max(x.ncols()) as f64).sqrt())
    }
}

#[derive(Clone, Debug)]
pub struct RpcaOutput {
    pub l: Matrix,
    pub s: Matrix,
    pub trace: IterationTrace,
    pub converged: bool,
    pub iterations: usize,
    /// Resolved `lambda_s`.
    pub lambda_s: f64,
    /// Resolved initial `mu`.
    pub mu: f64,
}

/// Inexact ALM for PCP. The trace reuses the solver schema with `dW` holding
/// `‖ΔS‖_F` and `dU` holding `‖ΔY‖_F`.
pub fn solve_pcp(x: &Matrix, cfg: &RpcaConfig) -> Result<RpcaOutput> {
    cfg.validate()?;
    ensure_finite(x, "X")?;
    let (rows, cols) = x.shape();
    let lambda = cfg.lambda_for(x);
    let x_norm = x.norm();
    let spectral = prox::singular_values(x)?.get(0).copied().unwrap_or(0.0);
    let mut trace = IterationTrace::new();
    if x_norm == 0.0 {
        return Ok(RpcaOutput {
            l: Matrix::zeros(rows, cols),
            s: Matrix::zeros(rows, cols),
            trace,
            converged: true,
            iterations: 0,
            lambda_s: lambda,
            mu: cfg.mu.unwrap_or(1.0),
        });
    }
    let mu0 = cfg.mu.unwrap_or(1.25 / spectral);
    let mu_max = mu0 * 1e7;
    let dual_scale = spectral.max(x.amax() / lambda);
    let mut y = x / dual_scale;
    let mut l = Matrix::zeros(rows, cols);
    let mut s = Matrix::zeros(rows, cols);
    let mut mu = mu0;
    let mut converged = false;
    let mut iter = 0;
    while iter < cfg.max_iters {
        iter += 1;
        let svt = svt_full(&(x - &s + &y / mu), 1.0 / mu)?;
        let s_new = soft_threshold(&(x - &svt.matrix + &y / mu), lambda / mu)?;
        let r = x - &svt.matrix - &s_new;
        let dy = mu * &r;
        let gap = r.norm();
        let l1 = s_new.iter().map(|v| v.abs()).sum::<f64>();
        let objective = svt.nuclear_norm + lambda * l1;
        trace.push(TraceRecord {
            iter,
            objective,
            gap,
            d_l: (&svt.matrix - &l).norm(),
            d_w: (&s_new - &s).norm(),
            d_u: dy.norm(),
            lagrangian: objective + y.dot(&r) + 0.5 * mu * gap * gap,
            extended: None,
        });
        y += dy;
        l = svt.matrix;
        s = s_new;
        if gap / x_norm < cfg.tol {
            converged = true;
            break;
        }
        mu = (mu * cfg.mu_growth).min(mu_max);
    }
    Ok(RpcaOutput {
        l,
        s,
        trace,
        converged,
        iterations: iter,
        lambda_s: lambda,
        mu: mu0,
    })
}

/// Number of histogram bins used by [`otsu_threshold`].
pub const OTSU_BINS: usize = 256;

/// Otsu's threshold over a 256-bin histogram spanning `[min, max]` of the
/// values. The result is the lower edge of the first upper-class bin, so the
/// upper class is `v >= threshold` up to binning.
pub fn otsu_threshold(values: &[f64]) -> Result<f64> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("otsu input must be finite".into()));
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if values.is_empty() || !(hi > lo) {
        return Err(Error::Degenerate(
            "otsu threshold needs at least two distinct values".into(),
        ));
    }
    let width = (hi - lo) / OTSU_BINS as f64;
    let hist = histogram_256(values, lo, width);
    let t = otsu_index(&hist);
    Ok(lo + t as f64 * width)
}

fn histogram_256(values: &[f64], lo: f64, width: f64) -> [u64; OTSU_BINS] {
    let mut hist = [0u64; OTSU_BINS];
    for &v in values {
        let b = (((v - lo) / width) as usize).min(OTSU_BINS - 1);
        hist[b] += 1;
    }
    hist
}

/// Split index `t` in `1..256` (lower class = bins `< t`) that maximizes the
/// between-class variance; ties go to the smallest index.
fn otsu_index(hist: &[u64; OTSU_BINS]) -> usize {
    let total: u64 = hist.iter().sum();
    let sum_all: f64 = hist.iter().enumerate().map(|(i, &c)| i as f64 * c as f64).sum();
    let (mut w0, mut sum0) = (0u64, 0.0);
    let (mut best, mut best_t) = (-1.0, 1);
    for t in 1..OTSU_BINS {
        w0 += hist[t - 1];
        sum0 += (t - 1) as f64 * hist[t - 1] as f64;
        let w1 = total - w0;
        if w0 == 0 || w1 == 0 {
            continue;
        }
        let m0 = sum0 / w0 as f64;
        let m1 = (sum_all - sum0) / w1 as f64;
        let between = w0 as f64 * w1 as f64 * (m0 - m1) * (m0 - m1);
        if between > best {
            best = between;
            best_t = t;
        }
    }
    best_t
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaskThresholdRule {
    Fixed(f64),
    Otsu,
}

impl MaskThresholdRule {
    pub fn validate(&self) -> Result<()> {
        match *self {
            MaskThresholdRule::Fixed(t) if !(0.0..=1.0).contains(&t) => Err(Error::InvalidConfig(
                format!("fixed threshold must lie in [0, 1], got {t}"),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MaskThresholdRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaskThresholdRule::Fixed(t) => write!(f, "{t:?}"),
            MaskThresholdRule::Otsu => f.write_str("otsu"),
        }
    }
}

impl FromStr for MaskThresholdRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rule = if s.eq_ignore_ascii_case("otsu") {
            MaskThresholdRule::Otsu
        } else {
            let t = s.parse::<f64>().map_err(|_| {
                Error::InvalidConfig(format!("threshold must be `otsu` or a number, got `{s}`"))
            })?;
            MaskThresholdRule::Fixed(t)
        };
        rule.validate()?;
        Ok(rule)
    }
}

/// Resolved threshold applied to `|S|`. Otsu on a constant `|S|` returns
/// that constant, so the mask comes out empty.
pub fn resolve_threshold(s: &Matrix, rule: MaskThresholdRule) -> Result<f64> {
    rule.validate()?;
    match rule {
        MaskThresholdRule::Fixed(t) => Ok(t),
        MaskThresholdRule::Otsu => {
            ensure_finite(s, "S")?;
            let mags: Vec<f64> = s.iter().map(|v| v.abs()).collect();
            match mags.first() {
                None => Err(Error::Degenerate("otsu threshold of an empty S".into())),
                Some(&first) if mags.iter().all(|&v| v == first) => Ok(first),
                Some(_) => otsu_threshold(&mags),
            }
        }
    }
}

/// Binary mask: 1 where `|S| > threshold`.
pub fn mask_from_sparse(s: &Matrix, rule: MaskThresholdRule) -> Result<Matrix> {
    let t = resolve_threshold(s, rule)?;
    Ok(s.map(|v| if v.abs() > t { 1.0 } else { 0.0 }))
}
