//! Synthetic clips drawn from the overlaying model
//! `X = (1-W)∘L + W∘S + E + noise`, with full ground truth.
//!
//! * `L` is exactly rank `r`: a static spatial pattern plus `r - 1`
//!   spatial patterns modulated by slow temporal cosines.
//! * `W` is the binary support of moving rectangles or disks, `S` their
//!   constant intensities.
//! * `E` is salt-and-pepper perturbation placed only on background pixels.
//! * Gaussian noise is scaled so that the realized SNR of the final, clamped
//!   clip matches the request.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::keyvalue;
use crate::error::{Error, Result};
use crate::tensor::{Dims, Matrix};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ShapeKind {
    Rect { height: usize, width: usize },
    Disk { radius: f64 },
}

/// A foreground object translating at constant velocity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Shape {
    pub kind: ShapeKind,
    /// Top-left corner (rect) or center (disk) at frame 0, as (row, col).
    pub start: (f64, f64),
    /// Pixels per frame, as (row, col).
    pub velocity: (f64, f64),
    pub intensity: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaltPepper {
    /// Fraction of background pixels hit.
    pub density: f64,
    /// Size of each perturbation before clamping to `[0, 1]`.
    pub magnitude: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SceneSpec {
    pub dims: Dims,
    /// Mean background level around which the components vary.
    pub level: f64,
    /// Per-component amplitudes of the background; `len()` is the rank.
    pub background: Vec<f64>,
    pub shapes: Vec<Shape>,
    pub salt_pepper: Option<SaltPepper>,
    /// Target SNR of the additive Gaussian noise, `None` for a clean clip.
    pub snr_db: Option<f64>,
    pub seed: u64,
}

/// Background level used when a scene file does not set one.
pub const DEFAULT_LEVEL: f64 = 0.5;

impl SceneSpec {
    pub fn rank(&self) -> usize {
        self.background.len()
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dims;
        let infeasible = |msg: String| Err(Error::InfeasibleScene(msg));
        if d.k < 2 {
            return infeasible(format!("need at least 2 frames, got {}", d.k));
        }
        if self.background.is_empty() {
            return infeasible("background rank must be at least 1".into());
        }
        if self.rank() > d.pixels().min(d.k) {
            return infeasible(format!(
                "background rank {} exceeds min(mn, k) = {}",
                self.rank(),
                d.pixels().min(d.k)
            ));
        }
        if self.background.iter().any(|a| !(*a >= 0.0)) {
            return infeasible("background amplitudes must be non-negative".into());
        }
        if !(0.0..=1.0).contains(&self.level) {
            return infeasible(format!("background level {} not in [0, 1]", self.level));
        }
        let swing: f64 = self.background.iter().sum();
        let room = self.level.min(1.0 - self.level);
        if swing > room {
            return infeasible(format!(
                "background amplitudes sum to {swing}, which would leave [0, 1] (max {room})"
            ));
        }
        for (idx, s) in self.shapes.iter().enumerate() {
            match s.kind {
                ShapeKind::Rect { height, width } => {
                    if height == 0 || width == 0 || height > d.m || width > d.n {
                        return infeasible(format!(
                            "shape {idx}: {height}x{width} rectangle does not fit a {}x{} frame",
                            d.m, d.n
                        ));
                    }
                }
                ShapeKind::Disk { radius } => {
                    if !(radius > 0.0) || 2.0 * radius > d.m.min(d.n) as f64 {
                        return infeasible(format!(
                            "shape {idx}: disk of radius {radius} does not fit a {}x{} frame",
                            d.m, d.n
                        ));
                    }
                }
            }
            if !(0.0..=1.0).contains(&s.intensity) {
                return infeasible(format!("shape {idx}: intensity must lie in [0, 1]"));
            }
        }
        if let Some(sp) = self.salt_pepper {
            if !(0.0..=1.0).contains(&sp.density) {
                return infeasible(format!("salt-pepper density {} not in [0, 1]", sp.density));
            }
            if !(sp.magnitude >= 0.0) {
                return infeasible("salt-pepper magnitude must be non-negative".into());
            }
        }
        if let Some(snr) = self.snr_db {
            if !snr.is_finite() {
                return infeasible(format!("SNR must be finite, got {snr}"));
            }
        }
        Ok(())
    }

    /// Parse the `key = value` scene format. Errors carry line numbers.
    ///
    /// ```text
    /// dims = 32 32 40
    /// level = 0.5                     # optional, defaults to 0.5
    /// background = 0.3 0.1            # amplitudes, one per rank
    /// shape = rect 8 8 start 12 0 velocity 0 0.6 intensity 0.95
    /// shape = disk 3.5 start 10 10 velocity 0.2 0.2 intensity 0.05
    /// salt_pepper = 0.05 0.4          # density magnitude
    /// snr_db = 7.7
    /// seed = 7
    /// ```
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let entries = keyvalue::parse(text)?;
        let mut dims = None;
        let mut level = DEFAULT_LEVEL;
        let mut background = None;
        let mut shapes = Vec::new();
        let mut salt_pepper = None;
        let mut snr_db = None;
        let mut seed = 0;
        for e in &entries {
            match e.key.as_str() {
                "dims" => {
                    let v: Vec<usize> = e.parse_list()?;
                    let [m, n, k] = v[..] else {
                        return Err(e.error("expected three integers m n k"));
                    };
                    dims = Some(Dims::new(m, n, k).map_err(|err| e.error(err))?);
                }
                "level" => level = e.parse::<f64>()?,
                "background" => background = Some(e.parse_list::<f64>()?),
                "shape" => shapes.push(parse_shape(e)?),
                "salt_pepper" => {
                    let v: Vec<f64> = e.parse_list()?;
                    let [density, magnitude] = v[..] else {
                        return Err(e.error("expected density and magnitude"));
                    };
                    salt_pepper = Some(SaltPepper { density, magnitude });
                }
                "snr_db" => {
                    snr_db = match e.value.as_str() {
                        "none" | "inf" => None,
                        _ => Some(e.parse::<f64>()?),
                    }
                }
                "seed" => seed = e.parse::<u64>()?,
                _ => return Err(e.error("unknown key")),
            }
        }
        let spec = SceneSpec {
            dims: dims.ok_or("missing required key: dims")?,
            level,
            background: background.ok_or("missing required key: background")?,
            shapes,
            salt_pepper,
            snr_db,
            seed,
        };
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }

    /// Inverse of [`SceneSpec::parse`].
    pub fn to_text(&self) -> String {
        let d = self.dims;
        let mut s = format!("dims = {} {} {}\n", d.m, d.n, d.k);
        s.push_str(&format!("level = {:?}\n", self.level));
        let bg: Vec<String> = self.background.iter().map(|a| format!("{a:?}")).collect();
        s.push_str(&format!("background = {}\n", bg.join(" ")));
        for sh in &self.shapes {
            let kind = match sh.kind {
                ShapeKind::Rect { height, width } => format!("rect {height} {width}"),
                ShapeKind::Disk { radius } => format!("disk {radius:?}"),
            };
            s.push_str(&format!(
                "shape = {kind} start {:?} {:?} velocity {:?} {:?} intensity {:?}\n",
                sh.start.0, sh.start.1, sh.velocity.0, sh.velocity.1, sh.intensity
            ));
        }
        if let Some(sp) = self.salt_pepper {
            s.push_str(&format!("salt_pepper = {:?} {:?}\n", sp.density, sp.magnitude));
        }
        match self.snr_db {
            Some(v) => s.push_str(&format!("snr_db = {v:?}\n")),
            None => s.push_str("snr_db = none\n"),
        }
        s.push_str(&format!("seed = {}\n", self.seed));
        s
    }
}

fn parse_shape(e: &keyvalue::Entry) -> std::result::Result<Shape, String> {
    let toks: Vec<&str> = e.value.split_whitespace().collect();
    let num = |i: usize| -> std::result::Result<f64, String> {
        toks.get(i)
            .ok_or_else(|| e.error("shape line is too short"))?
            .parse::<f64>()
            .map_err(|err| e.error(format!("token {}: {err}", i + 1)))
    };
    let (kind, rest) = match toks.first() {
        Some(&"rect") => {
            let (h, w) = (num(1)?, num(2)?);
            if h.fract() != 0.0 || w.fract() != 0.0 || h < 0.0 || w < 0.0 {
                return Err(e.error("rectangle size must be whole pixels"));
            }
            (
                ShapeKind::Rect {
                    height: h as usize,
                    width: w as usize,
                },
                3,
            )
        }
        Some(&"disk") => (ShapeKind::Disk { radius: num(1)? }, 2),
        _ => return Err(e.error("shape must start with `rect` or `disk`")),
    };
    let expect = |i: usize, word: &str| -> std::result::Result<(), String> {
        if toks.get(i) == Some(&word) {
            Ok(())
        } else {
            Err(e.error(format!("expected `{word}` at token {}", i + 1)))
        }
    };
    expect(rest, "start")?;
    expect(rest + 3, "velocity")?;
    expect(rest + 6, "intensity")?;
    if toks.len() != rest + 8 {
        return Err(e.error("trailing tokens after intensity"));
    }
    Ok(Shape {
        kind,
        start: (num(rest + 1)?, num(rest + 2)?),
        velocity: (num(rest + 4)?, num(rest + 5)?),
        intensity: num(rest + 7)?,
    })
}

/// A generated clip and everything used to build it, all as `mn × k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub dims: Dims,
    /// Observed clip, clamped to `[0, 1]`.
    pub x: Matrix,
    /// Clip before Gaussian noise: `(1-W)∘L + W∘S + E`.
    pub x_clean: Matrix,
    pub l_true: Matrix,
    /// Binary foreground support.
    pub w_true: Matrix,
    /// Foreground intensities (zero off the support).
    pub s_true: Matrix,
    /// Realized salt-and-pepper perturbation (after clamping).
    pub e_true: Matrix,
    /// Realized noise `x - x_clean`.
    pub noise: Matrix,
}

impl Scene {
    /// `10 log10(‖x_clean‖² / ‖noise‖²)`; `+∞` for a noiseless clip.
    pub fn realized_snr_db(&self) -> f64 {
        snr_db(&self.x_clean, &self.noise)
    }
}

/// `10 log10(‖signal‖² / ‖noise‖²)`.
pub fn snr_db(signal: &Matrix, noise: &Matrix) -> f64 {
    let n = noise.norm_squared();
    if n == 0.0 {
        return f64::INFINITY;
    }
    10.0 * (signal.norm_squared() / n).log10()
}

/// Smooth pattern in `[-1, 1]`: a sum of a few random low-frequency waves.
fn smooth_pattern(rng: &mut ChaCha8Rng, d: Dims) -> Vec<f64> {
    let waves: Vec<(f64, f64, f64)> = (0..3)
        .map(|_| {
            let fy = rng.random_range(0.5..2.5) / d.m as f64;
            let fx = rng.random_range(0.5..2.5) / d.n as f64;
            let phase = rng.random_range(0.0..2.0 * PI);
            (fy, fx, phase)
        })
        .collect();
    let mut p = Vec::with_capacity(d.pixels());
    for j in 0..d.n {
        for i in 0..d.m {
            let v: f64 = waves
                .iter()
                .map(|&(fy, fx, ph)| (2.0 * PI * (fy * i as f64 + fx * j as f64) + ph).sin())
                .sum();
            p.push(v);
        }
    }
    let peak = p.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    if peak > 0.0 {
        p.iter_mut().for_each(|v| *v /= peak);
    }
    p
}

fn covers(shape: &Shape, i: usize, j: usize, t: usize) -> bool {
    let (r0, c0) = (
        shape.start.0 + shape.velocity.0 * t as f64,
        shape.start.1 + shape.velocity.1 * t as f64,
    );
    let (fi, fj) = (i as f64, j as f64);
    match shape.kind {
        ShapeKind::Rect { height, width } => {
            let (top, left) = (r0.round(), c0.round());
            fi >= top && fi < top + height as f64 && fj >= left && fj < left + width as f64
        }
        ShapeKind::Disk { radius } => {
            let (dy, dx) = (fi - r0, fj - c0);
            dy * dy + dx * dx <= radius * radius
        }
    }
}

pub fn generate_scene(spec: &SceneSpec) -> Result<Scene> {
    spec.validate()?;
    let d = spec.dims;
    let (mn, k) = (d.pixels(), d.k);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    // background: level + a0·p0 (static) + Σ a_i·p_i·cos(ω_i t + φ_i)
    let mut l_true = Matrix::from_element(mn, k, spec.level);
    for (comp, &amp) in spec.background.iter().enumerate() {
        let pattern = smooth_pattern(&mut rng, d);
        let temporal: Vec<f64> = if comp == 0 {
            vec![1.0; k]
        } else {
            let cycles = rng.random_range(0.5..1.5) * comp as f64;
            let phase = rng.random_range(0.0..2.0 * PI);
            (0..k)
                .map(|t| (2.0 * PI * cycles * t as f64 / k as f64 + phase).cos())
                .collect()
        };
        for t in 0..k {
            for p in 0..mn {
                l_true[(p, t)] += amp * pattern[p] * temporal[t];
            }
        }
    }
    let mut w_true = Matrix::zeros(mn, k);
    let mut s_true = Matrix::zeros(mn, k);
    for t in 0..k {
        for j in 0..d.n {
            for i in 0..d.m {
                // later shapes are drawn on top of earlier ones
                if let Some(s) = spec.shapes.iter().rev().find(|s| covers(s, i, j, t)) {
                    let p = i + d.m * j;
                    w_true[(p, t)] = 1.0;
                    s_true[(p, t)] = s.intensity;
                }
            }
        }
    }

    let mut x_clean = l_true.zip_map(&w_true, |l, w| (1.0 - w) * l) + &s_true;
    let mut e_true = Matrix::zeros(mn, k);
    if let Some(sp) = spec.salt_pepper {
        for idx in 0..mn * k {
            if w_true[idx] != 0.0 {
                continue;
            }
            if rng.random::<f64>() < sp.density {
                let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                let before = x_clean[idx];
                let after = (before + sign * sp.magnitude).clamp(0.0, 1.0);
                e_true[idx] = after - before;
                x_clean[idx] = after;
            }
        }
    }

    let (x, noise) = match spec.snr_db {
        None => (x_clean.clone(), Matrix::zeros(mn, k)),
        Some(target) => {
            let raw = Matrix::from_fn(mn, k, |_, _| rng.sample::<f64, _>(StandardNormal));
            add_noise_at_snr(&x_clean, &raw, target)?
        }
    };

    Ok(Scene {
        dims: d,
        x,
        x_clean,
        l_true,
        w_true,
        s_true,
        e_true,
        noise,
    })
}

/// Find the scale `s` for which `clamp(clean + s·raw) - clean` has SNR
/// `target_db` relative to `clean`, by bisection (the realized noise power is
/// non-decreasing in `s`).
fn add_noise_at_snr(clean: &Matrix, raw: &Matrix, target_db: f64) -> Result<(Matrix, Matrix)> {
    let realize = |s: f64| -> (Matrix, Matrix) {
        let x = clean.zip_map(raw, |c, r| (c + s * r).clamp(0.0, 1.0));
        let noise = &x - clean;
        (x, noise)
    };
    let snr_at = |s: f64| snr_db(clean, &realize(s).1);

    let mut hi = 1e-3;
    while snr_at(hi) > target_db {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::InfeasibleScene(format!(
                "SNR {target_db} dB is below what clamped noise can reach"
            )));
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if snr_at(mid) > target_db {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi {
            break;
        }
    }
    Ok(realize(hi))
}
