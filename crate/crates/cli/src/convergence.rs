use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use mrpca_core::metrics::binarity;
use mrpca_core::{IterationTrace, TraceRecord};

use crate::exit::{self, usage};
use crate::manifest::{self, RunManifest};

/// Tolerance used when neither the flag nor a sibling manifest sets one.
pub const DEFAULT_TOL: f64 = 1e-4;

#[derive(Debug, Default, clap::Args)]
pub struct ConvergenceArgs {
    /// trace.csv from `decompose`.
    pub trace: PathBuf,
    /// Relative gap tolerance; default from the sibling manifest.txt.
    #[arg(long)]
    pub tol: Option<f64>,
    /// ‖X‖_F used to make the gap relative; default from the sibling manifest.txt.
    #[arg(long, conflicts_with = "data")]
    pub norm: Option<f64>,
    /// Input clip, to compute ‖X‖_F directly.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Mask volume for the binarity fraction; default the sibling W.raw.
    #[arg(long)]
    pub mask: Option<PathBuf>,
    /// Write `iter gap relative_gap` columns here for plotting.
    #[arg(long)]
    pub gap_out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub iterations: usize,
    pub final_gap: f64,
    pub relative_gap: Option<f64>,
    pub tolerance: f64,
    pub converged: bool,
    pub binarity: Option<f64>,
}

impl Summary {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "iterations = {}", self.iterations);
        let _ = writeln!(s, "final_gap = {:e}", self.final_gap);
        if let Some(r) = self.relative_gap {
            let _ = writeln!(s, "relative_gap = {r:e}");
        }
        let _ = writeln!(s, "tolerance = {:e}", self.tolerance);
        let _ = writeln!(s, "status = {}", if self.converged { "converged" } else { "not converged" });
        if let Some(b) = self.binarity {
            let _ = writeln!(s, "binarity = {b:.6}");
        }
        s
    }
}

/// Constraint residual of a record: the larger of both residuals when the
/// trace carries them.
fn gap_of(r: &TraceRecord) -> f64 {
    match r.extended {
        Some(e) => e.res_x.max(e.res_z),
        None => r.gap,
    }
}

pub fn summarize(args: &ConvergenceArgs) -> Result<(Summary, IterationTrace, Option<f64>)> {
    let trace = IterationTrace::read_csv(&args.trace)?;
    let dir = args.trace.parent().unwrap_or(Path::new("."));
    let sibling = dir.join(manifest::FILE_NAME);
    let m = if sibling.is_file() { Some(RunManifest::read(&sibling)?) } else { None };
    let from_manifest = |key: &str| -> Result<Option<f64>> {
        match m.as_ref().and_then(|m| m.get(key)) {
            Some(v) => v
                .parse::<f64>()
                .map(Some)
                .with_context(|| format!("{}: bad `{key}`", sibling.display())),
            None => Ok(None),
        }
    };
    let norm = match (args.norm, &args.data) {
        (Some(n), _) => Some(n),
        (None, Some(p)) => Some(crate::load(p)?.0.norm()),
        (None, None) => from_manifest("data_norm")?,
    };
    if norm.is_some_and(|n| !(n > 0.0)) {
        return Err(usage("the data norm must be positive"));
    }
    let tolerance = match args.tol {
        Some(t) => t,
        None => match from_manifest("tol_gap")? {
            Some(t) => t,
            None => from_manifest("tol")?.unwrap_or(DEFAULT_TOL),
        },
    };
    let mask = match &args.mask {
        Some(p) => Some(p.clone()),
        None => Some(dir.join("W.raw")).filter(|p| p.is_file()),
    };
    let bin = mask.map(|p| crate::load(&p).map(|(w, _)| binarity(&w))).transpose()?;

    let last = trace.last().ok_or_else(|| usage(format!("{} has no iterations", args.trace.display())))?;
    let final_gap = gap_of(last);
    let relative_gap = norm.map(|n| final_gap / n);
    let summary = Summary {
        iterations: last.iter,
        final_gap,
        relative_gap,
        tolerance,
        converged: relative_gap.unwrap_or(final_gap) < tolerance,
        binarity: bin,
    };
    Ok((summary, trace, norm))
}

pub fn run(args: &ConvergenceArgs) -> Result<u8> {
    let (summary, trace, norm) = summarize(args)?;
    print!("{}", summary.to_text());
    if let Some(p) = &args.gap_out {
        let mut s = String::from("# iter gap relative_gap\n");
        for r in &trace.records {
            let g = gap_of(r);
            let rel = norm.map_or(f64::NAN, |n| g / n);
            let _ = writeln!(s, "{} {g:e} {rel:e}", r.iter);
        }
        std::fs::write(p, s).with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(exit::SUCCESS)
}
