use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use mrpca_core::data::synth::snr_db;
use mrpca_core::metrics::{binarity, confusion, f_measure, histogram, psnr, roc_curve, EvalReport};
use mrpca_core::{Dims, Error, Matrix};

use crate::exit::{self, usage};

#[derive(Debug, Default, clap::Args)]
pub struct EvalArgs {
    /// Recovered mask (binary or soft; cut at 0.5).
    #[arg(long)]
    pub mask: Option<PathBuf>,
    /// Ground-truth mask.
    #[arg(long)]
    pub truth: Option<PathBuf>,
    /// Pixels where this volume is >= 0.5 are left out of the counts.
    #[arg(long)]
    pub ignore: Option<PathBuf>,
    /// Also sweep 101 thresholds over the mask and report the ROC and AUC.
    #[arg(long)]
    pub roc: bool,
    /// Recovered background, scored by PSNR against --true-background.
    #[arg(long, requires = "true_background")]
    pub background: Option<PathBuf>,
    #[arg(long, requires = "background")]
    pub true_background: Option<PathBuf>,
    /// Measure the SNR of a noisy clip against its clean version.
    #[arg(long, num_args = 2, value_names = ["NOISY", "CLEAN"])]
    pub snr: Option<Vec<PathBuf>>,
    /// Write report.txt, report.csv, histogram.csv and roc.csv here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn load_like(path: &Path, dims: Option<Dims>) -> Result<(Matrix, Dims)> {
    let (x, d) = crate::load(path)?;
    if let Some(want) = dims {
        if want != d {
            return Err(Error::DimensionMismatch(format!("{} is {d}, expected {want}", path.display())).into());
        }
    }
    Ok((x, d))
}

pub fn evaluate(args: &EvalArgs) -> Result<EvalReport> {
    if args.mask.is_none() && args.background.is_none() && args.snr.is_none() {
        return Err(usage("nothing to evaluate: give --mask, --background or --snr"));
    }
    if args.mask.is_none() && (args.truth.is_some() || args.roc || args.ignore.is_some()) {
        return Err(usage("--truth, --roc and --ignore need --mask"));
    }
    if args.truth.is_none() && (args.roc || args.ignore.is_some()) {
        return Err(usage("--roc and --ignore need --truth"));
    }
    let mut report = EvalReport::default();
    if let Some(mask_path) = &args.mask {
        let (mask, dims) = load_like(mask_path, None)?;
        report.histogram = Some(histogram(&mask));
        report.binarity = Some(binarity(&mask));
        if let Some(truth_path) = &args.truth {
            let (truth, _) = load_like(truth_path, Some(dims))?;
            let ignore = args.ignore.as_ref().map(|p| load_like(p, Some(dims))).transpose()?;
            let ignore = ignore.as_ref().map(|(m, _)| m);
            let counts = confusion(&mask, &truth, ignore)?;
            report.counts = Some(counts);
            report.fmeasure = Some(f_measure(&counts));
            if args.roc {
                report.roc = Some(roc_curve(&mask, &truth, ignore)?);
            }
        }
    }
    if let (Some(b), Some(tb)) = (&args.background, &args.true_background) {
        let (l, dims) = load_like(b, None)?;
        let (l_true, _) = load_like(tb, Some(dims))?;
        report.psnr = Some(psnr(&l, &l_true)?);
    }
    if let Some(paths) = &args.snr {
        let (noisy, dims) = load_like(&paths[0], None)?;
        let (clean, _) = load_like(&paths[1], Some(dims))?;
        report.snr_db = Some(snr_db(&clean, &(&noisy - &clean)));
    }
    Ok(report)
}

pub fn run(args: &EvalArgs) -> Result<u8> {
    let report = evaluate(args)?;
    print!("{}", report.to_key_value());
    if let Some(out) = &args.out {
        crate::create_dir(out)?;
        let mut files = vec![("report.txt", report.to_key_value()), ("report.csv", report.to_csv())];
        if let Some(h) = report.histogram_csv() {
            files.push(("histogram.csv", h));
        }
        if let Some(roc) = &report.roc {
            files.push(("roc.csv", roc.to_csv()));
        }
        for (name, body) in files {
            let p = out.join(name);
            std::fs::write(&p, body).with_context(|| format!("cannot write {}", p.display()))?;
        }
    }
    Ok(exit::SUCCESS)
}
