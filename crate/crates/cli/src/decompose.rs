use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::ValueEnum;
use mrpca_core::data::save_volume;
use mrpca_core::emrpca::{solve_emrpca, EmrpcaConfig, RHO_X_SCALE, RHO_Z_SCALE};
use mrpca_core::mrpca::{scaled_rho, solve_mrpca, MrpcaConfig, RHO_SCALE};
use mrpca_core::rpca::{mask_from_sparse, resolve_threshold, solve_pcp, MaskThresholdRule, RpcaConfig};
use mrpca_core::{Dims, IterationTrace, Matrix};

use crate::exit::{self, usage};
use crate::manifest::RunManifest;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Mrpca,
    Emrpca,
    Rpca,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Mrpca => "mrpca",
            Method::Emrpca => "emrpca",
            Method::Rpca => "rpca",
        }
    }

    fn keys(self) -> &'static [&'static str] {
        match self {
            Method::Mrpca => &["lambda_w", "rho_x", "tau_l", "tau_w", "max_iters", "tol_gap", "tol_change"],
            Method::Emrpca => &[
                "lambda_w", "lambda_z", "lambda_e", "rho_x", "rho_z", "tau_l", "tau_w", "max_iters", "tol_gap",
                "tol_change",
            ],
            Method::Rpca => &["threshold", "lambda_s", "mu", "mu_growth", "max_iters", "tol"],
        }
    }

    fn required(self) -> &'static [&'static str] {
        match self {
            Method::Mrpca => &[],
            Method::Emrpca => &["lambda_w", "lambda_z", "lambda_e"],
            Method::Rpca => &["threshold"],
        }
    }
}

/// Keys a manifest carries besides the settings; ignored when it is read
/// back as a config.
const RECORD_KEYS: [&str; 9] = [
    "command",
    "tool_version",
    "dims",
    "data_norm",
    "threshold_value",
    "iterations",
    "converged",
    "relative_gap",
    "outputs",
];

#[derive(Clone, Debug, Default, clap::Args)]
pub struct DecomposeArgs {
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Frame directory of 8-bit PGMs or a `.raw` volume.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
    /// `key = value` settings (keys as the flags, with `_`); flags override it.
    /// A manifest written by `decompose` is a valid config.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Mask sparsity weight (mrpca default 1e-3; required for emrpca).
    #[arg(long)]
    pub lambda_w: Option<f64>,
    /// Mask TV weight (emrpca).
    #[arg(long)]
    pub lambda_z: Option<f64>,
    /// Perturbation sparsity weight (emrpca).
    #[arg(long)]
    pub lambda_e: Option<f64>,
    /// Penalty on the overlay constraint; default scales with 1/‖X‖₂.
    #[arg(long)]
    pub rho_x: Option<f64>,
    /// Penalty on the gradient constraint (emrpca); default 4·rho_x.
    #[arg(long)]
    pub rho_z: Option<f64>,
    #[arg(long)]
    pub tau_l: Option<f64>,
    #[arg(long)]
    pub tau_w: Option<f64>,
    #[arg(long)]
    pub max_iters: Option<usize>,
    /// Stop when the relative constraint residual is below this...
    #[arg(long)]
    pub tol_gap: Option<f64>,
    /// ...and the relative change of L and W is below this.
    #[arg(long)]
    pub tol_change: Option<f64>,
    /// Mask rule on |S| for rpca: `otsu` or a number in [0, 1].
    #[arg(long)]
    pub threshold: Option<String>,
    /// Sparse weight for rpca; default 1/sqrt(max(mn, k)).
    #[arg(long)]
    pub lambda_s: Option<f64>,
    /// Initial ALM penalty for rpca; default 1.25/‖X‖₂.
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub mu_growth: Option<f64>,
    /// Relative residual tolerance for rpca.
    #[arg(long)]
    pub tol: Option<f64>,
}

fn flag(key: &str) -> String {
    format!("--{}", key.replace('_', "-"))
}

/// Merged settings: config file first, then flags.
struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    fn gather(args: &DecomposeArgs) -> Result<Self> {
        let mut values = BTreeMap::new();
        if let Some(path) = &args.config {
            let m = RunManifest::read(path)?;
            if let Some(cmd) = m.command() {
                if cmd != "decompose" {
                    return Err(usage(format!("{} is a `{cmd}` manifest", path.display())));
                }
            }
            let known: Vec<&str> = [Method::Mrpca, Method::Emrpca, Method::Rpca]
                .iter()
                .flat_map(|m| m.keys().iter().copied())
                .chain(["method", "input"])
                .collect();
            for (k, v) in m.entries {
                if RECORD_KEYS.contains(&k.as_str()) {
                    continue;
                }
                if !known.contains(&k.as_str()) {
                    return Err(usage(format!("{}: unknown key `{k}`", path.display())));
                }
                values.insert(k, v);
            }
        }
        let flags: [(&str, Option<String>); 17] = [
            ("method", args.method.map(|m| m.name().to_string())),
            ("input", args.input.as_ref().map(|p| p.display().to_string())),
            ("lambda_w", args.lambda_w.map(|v| format!("{v:?}"))),
            ("lambda_z", args.lambda_z.map(|v| format!("{v:?}"))),
            ("lambda_e", args.lambda_e.map(|v| format!("{v:?}"))),
            ("rho_x", args.rho_x.map(|v| format!("{v:?}"))),
            ("rho_z", args.rho_z.map(|v| format!("{v:?}"))),
            ("tau_l", args.tau_l.map(|v| format!("{v:?}"))),
            ("tau_w", args.tau_w.map(|v| format!("{v:?}"))),
            ("max_iters", args.max_iters.map(|v| v.to_string())),
            ("tol_gap", args.tol_gap.map(|v| format!("{v:?}"))),
            ("tol_change", args.tol_change.map(|v| format!("{v:?}"))),
            ("threshold", args.threshold.clone()),
            ("lambda_s", args.lambda_s.map(|v| format!("{v:?}"))),
            ("mu", args.mu.map(|v| format!("{v:?}"))),
            ("mu_growth", args.mu_growth.map(|v| format!("{v:?}"))),
            ("tol", args.tol.map(|v| format!("{v:?}"))),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                values.insert(k.to_string(), v);
            }
        }
        Ok(Settings { values })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.values
            .get(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|e| usage(format!("{}: cannot parse `{v}`: {e}", flag(key))))
            })
            .transpose()
    }

    fn method(&self) -> Result<Method> {
        let name = self.values.get("method").ok_or_else(|| usage("missing --method"))?;
        Method::from_str(name, true).map_err(|_| usage(format!("--method: unknown method `{name}`")))
    }

    fn check_keys(&self, method: Method) -> Result<()> {
        for k in self.values.keys() {
            if k != "method" && k != "input" && !method.keys().contains(&k.as_str()) {
                return Err(usage(format!("{} does not apply to --method {}", flag(k), method.name())));
            }
        }
        for k in method.required() {
            if !self.values.contains_key(*k) {
                return Err(usage(format!("missing {} (required for --method {})", flag(k), method.name())));
            }
        }
        Ok(())
    }
}

struct Solved {
    l: Matrix,
    w: Matrix,
    extra: Option<(&'static str, Matrix)>,
    trace: IterationTrace,
    converged: bool,
    iterations: usize,
}

pub fn run(args: &DecomposeArgs) -> Result<u8> {
    let settings = Settings::gather(args)?;
    let method = settings.method()?;
    settings.check_keys(method)?;
    let input: PathBuf = settings.get("input")?.ok_or_else(|| usage("missing --input"))?;
    let (x, dims) = crate::load(&input)?;

    let mut m = RunManifest::new("decompose");
    m.push("method", method.name());
    m.push("input", crate::absolute(&input)?.display());
    m.push("dims", format!("{} {} {}", dims.m, dims.n, dims.k));

    let solved = match method {
        Method::Mrpca => run_mrpca(&settings, &x, &mut m)?,
        Method::Emrpca => run_emrpca(&settings, &x, dims, &mut m)?,
        Method::Rpca => run_rpca(&settings, &x, &mut m)?,
    };
    write_outputs(&args.out, &solved, dims, &x, m)?;

    let last_gap = solved.trace.last().map_or(0.0, |r| r.gap);
    println!(
        "{}: {} after {} iterations, gap/‖X‖ = {:.3e} -> {}",
        method.name(),
        if solved.converged { "converged" } else { "not converged" },
        solved.iterations,
        relative(last_gap, x.norm()),
        args.out.display()
    );
    Ok(if solved.converged { exit::SUCCESS } else { exit::NOT_CONVERGED })
}

fn relative(v: f64, norm: f64) -> f64 {
    if norm > 0.0 {
        v / norm
    } else {
        v
    }
}

fn run_mrpca(s: &Settings, x: &Matrix, m: &mut RunManifest) -> Result<Solved> {
    let d = MrpcaConfig::default();
    let rho_x = match s.get("rho_x")? {
        Some(v) => v,
        None => scaled_rho(x, RHO_SCALE)?,
    };
    let cfg = MrpcaConfig {
        lambda_w: s.get("lambda_w")?.unwrap_or(d.lambda_w),
        rho_x,
        tau_l: s.get("tau_l")?.unwrap_or(d.tau_l),
        tau_w: s.get("tau_w")?.unwrap_or(d.tau_w),
        max_iters: s.get("max_iters")?.unwrap_or(d.max_iters),
        tol_gap: s.get("tol_gap")?.unwrap_or(d.tol_gap),
        tol_change: s.get("tol_change")?.unwrap_or(d.tol_change),
    };
    cfg.validate()?;
    m.push_f64("lambda_w", cfg.lambda_w);
    m.push_f64("rho_x", cfg.rho_x);
    m.push_f64("tau_l", cfg.tau_l);
    m.push_f64("tau_w", cfg.tau_w);
    m.push("max_iters", cfg.max_iters);
    m.push_f64("tol_gap", cfg.tol_gap);
    m.push_f64("tol_change", cfg.tol_change);
    let out = solve_mrpca(x, &cfg)?;
    Ok(Solved {
        l: out.l,
        w: out.w,
        extra: None,
        trace: out.trace,
        converged: out.converged,
        iterations: out.iterations,
    })
}

fn run_emrpca(s: &Settings, x: &Matrix, dims: Dims, m: &mut RunManifest) -> Result<Solved> {
    let d = EmrpcaConfig::default();
    let rho_x = match s.get("rho_x")? {
        Some(v) => v,
        None => scaled_rho(x, RHO_X_SCALE)?,
    };
    let rho_z = s.get("rho_z")?.unwrap_or(rho_x * RHO_Z_SCALE / RHO_X_SCALE);
    let required = |k: &str| -> Result<f64> { s.get(k)?.ok_or_else(|| usage(format!("missing {}", flag(k)))) };
    let cfg = EmrpcaConfig {
        lambda_w: required("lambda_w")?,
        lambda_z: required("lambda_z")?,
        lambda_e: required("lambda_e")?,
        rho_x,
        rho_z,
        tau_l: s.get("tau_l")?.unwrap_or(d.tau_l),
        tau_w: s.get("tau_w")?.unwrap_or(d.tau_w),
        max_iters: s.get("max_iters")?.unwrap_or(d.max_iters),
        tol_gap: s.get("tol_gap")?.unwrap_or(d.tol_gap),
        tol_change: s.get("tol_change")?.unwrap_or(d.tol_change),
    };
    cfg.validate()?;
    for (k, v) in [
        ("lambda_w", cfg.lambda_w),
        ("lambda_z", cfg.lambda_z),
        ("lambda_e", cfg.lambda_e),
        ("rho_x", cfg.rho_x),
        ("rho_z", cfg.rho_z),
        ("tau_l", cfg.tau_l),
        ("tau_w", cfg.tau_w),
    ] {
        m.push_f64(k, v);
    }
    m.push("max_iters", cfg.max_iters);
    m.push_f64("tol_gap", cfg.tol_gap);
    m.push_f64("tol_change", cfg.tol_change);
    let out = solve_emrpca(x, dims, &cfg)?;
    Ok(Solved {
        l: out.l,
        w: out.w,
        extra: Some(("E", out.e)),
        trace: out.trace,
        converged: out.converged,
        iterations: out.iterations,
    })
}

fn run_rpca(s: &Settings, x: &Matrix, m: &mut RunManifest) -> Result<Solved> {
    let rule_text: String = s.get("threshold")?.ok_or_else(|| usage("missing --threshold"))?;
    let rule = MaskThresholdRule::from_str(&rule_text).map_err(|e| usage(format!("--threshold: {e}")))?;
    let d = RpcaConfig::default();
    let mut cfg = RpcaConfig {
        lambda_s: s.get("lambda_s")?,
        mu: s.get("mu")?,
        mu_growth: s.get("mu_growth")?.unwrap_or(d.mu_growth),
        max_iters: s.get("max_iters")?.unwrap_or(d.max_iters),
        tol: s.get("tol")?.unwrap_or(d.tol),
    };
    cfg.validate()?;
    let out = solve_pcp(x, &cfg)?;
    cfg.lambda_s = Some(out.lambda_s);
    cfg.mu = Some(out.mu);
    let threshold = resolve_threshold(&out.s, rule)?;
    let w = mask_from_sparse(&out.s, rule)?;
    m.push("threshold", rule);
    m.push_f64("lambda_s", out.lambda_s);
    m.push_f64("mu", out.mu);
    m.push_f64("mu_growth", cfg.mu_growth);
    m.push("max_iters", cfg.max_iters);
    m.push_f64("tol", cfg.tol);
    m.push_f64("threshold_value", threshold);
    Ok(Solved {
        l: out.l,
        w,
        extra: Some(("S", out.s)),
        trace: out.trace,
        converged: out.converged,
        iterations: out.iterations,
    })
}

fn write_outputs(out: &Path, solved: &Solved, dims: Dims, x: &Matrix, mut m: RunManifest) -> Result<()> {
    crate::create_dir(out)?;
    let mut names = vec!["L.raw".to_string(), "W.raw".to_string()];
    save_volume(out, "L", &solved.l, dims)?;
    save_volume(out, "W", &solved.w, dims)?;
    if let Some((name, vol)) = &solved.extra {
        save_volume(out, name, vol, dims)?;
        names.push(format!("{name}.raw"));
    }
    let trace_path = out.join("trace.csv");
    solved
        .trace
        .write_csv(&trace_path)
        .with_context(|| format!("writing {}", trace_path.display()))?;
    names.push("trace.csv".into());
    let norm = x.norm();
    m.push_f64("data_norm", norm);
    m.push("iterations", solved.iterations);
    m.push("converged", solved.converged);
    m.push_f64("relative_gap", relative(solved.trace.last().map_or(0.0, |r| r.gap), norm));
    m.push("outputs", names.join(" "));
    m.write(out)
}
