//! Mask and background quality: confusion counts, recall / precision / F1,
//! PSNR, ROC over a fixed threshold grid, and mask-value histograms.
//!
//! Masks are binarized at 0.5 (`v >= 0.5` is foreground); the same rule
//! applies to ignore masks, where foreground means "do not count".

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tensor::Matrix;

/// Cut used to binarize soft masks.
pub const MASK_CUT: f64 = 0.5;
/// Number of thresholds in [`roc_curve`]: `0.00, 0.01, ..., 1.00`.
pub const ROC_THRESHOLDS: usize = 101;
/// Number of bins in [`histogram`].
pub const HISTOGRAM_BINS: usize = 50;
/// Distance to `{0, 1}` under which an entry counts as binary.
pub const BINARITY_TOL: f64 = 0.05;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub tn: u64,
    pub fp: u64,
    pub fn_: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.tp + self.tn + self.fp + self.fn_
    }
}

fn same_shape(a: &Matrix, b: &Matrix, what: &str) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch(format!(
            "{what}: {}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    Ok(())
}

pub fn confusion(mask: &Matrix, truth: &Matrix, ignore: Option<&Matrix>) -> Result<ConfusionCounts> {
    same_shape(mask, truth, "mask and truth")?;
    if let Some(ig) = ignore {
        same_shape(mask, ig, "mask and ignore region")?;
    }
    let mut c = ConfusionCounts::default();
    for idx in 0..mask.len() {
        if ignore.is_some_and(|ig| ig[idx] >= MASK_CUT) {
            continue;
        }
        match (mask[idx] >= MASK_CUT, truth[idx] >= MASK_CUT) {
            (true, true) => c.tp += 1,
            (true, false) => c.fp += 1,
            (false, true) => c.fn_ += 1,
            (false, false) => c.tn += 1,
        }
    }
    Ok(c)
}

/// Recall, precision and F1. Any undefined ratio is reported as 0 with
/// `undefined` set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FMeasure {
    pub re: f64,
    pub pre: f64,
    pub f1: f64,
    pub undefined: bool,
}

pub fn f_measure(c: &ConfusionCounts) -> FMeasure {
    let ratio = |num: u64, den: u64| {
        if den == 0 {
            None
        } else {
            Some(num as f64 / den as f64)
        }
    };
    let re = ratio(c.tp, c.tp + c.fn_);
    let pre = ratio(c.tp, c.tp + c.fp);
    let f1 = match (re, pre) {
        (Some(r), Some(p)) if r + p > 0.0 => Some(2.0 * r * p / (r + p)),
        _ => None,
    };
    FMeasure {
        re: re.unwrap_or(0.0),
        pre: pre.unwrap_or(0.0),
        f1: f1.unwrap_or(0.0),
        undefined: re.is_none() || pre.is_none() || f1.is_none(),
    }
}

/// `10·log10(1/MSE)` with peak 1; identical inputs give `+∞`.
pub fn psnr(recovered: &Matrix, truth: &Matrix) -> Result<f64> {
    same_shape(recovered, truth, "recovered and true background")?;
    if recovered.is_empty() {
        return Err(Error::InvalidInput("PSNR of an empty volume".into()));
    }
    let mse = (recovered - truth).norm_squared() / recovered.len() as f64;
    if mse == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(-10.0 * mse.log10())
}

#[derive(Clone, Debug, PartialEq)]
pub struct RocPoint {
    pub threshold: f64,
    pub fpr: f64,
    pub tpr: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Roc {
    /// One point per threshold, in increasing threshold order.
    pub points: Vec<RocPoint>,
    pub auc: f64,
}

impl Roc {
    /// `threshold,fpr,tpr` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("threshold,fpr,tpr\n");
        for p in &self.points {
            let _ = writeln!(s, "{:.2},{:e},{:e}", p.threshold, p.fpr, p.tpr);
        }
        s
    }
}

/// ROC of a soft mask over thresholds `0.00..=1.00` in steps of 0.01
/// (`W >= t` is foreground). AUC is the trapezoid rule over the points sorted
/// by `(fpr, tpr)` and closed with `(0,0)` and `(1,1)`.
pub fn roc_curve(w: &Matrix, truth: &Matrix, ignore: Option<&Matrix>) -> Result<Roc> {
    same_shape(w, truth, "soft mask and truth")?;
    if let Some(ig) = ignore {
        same_shape(w, ig, "soft mask and ignore region")?;
    }
    let kept: Vec<(f64, bool)> = (0..w.len())
        .filter(|&idx| !ignore.is_some_and(|ig| ig[idx] >= MASK_CUT))
        .map(|idx| (w[idx], truth[idx] >= MASK_CUT))
        .collect();
    let pos = kept.iter().filter(|(_, t)| *t).count();
    let neg = kept.len() - pos;
    if pos == 0 || neg == 0 {
        return Err(Error::Degenerate(
            "ROC needs both foreground and background pixels in the truth".into(),
        ));
    }
    let points: Vec<RocPoint> = (0..ROC_THRESHOLDS)
        .map(|i| {
            let threshold = i as f64 / (ROC_THRESHOLDS - 1) as f64;
            let (mut tp, mut fp) = (0usize, 0usize);
            for &(v, t) in &kept {
                if v >= threshold {
                    if t {
                        tp += 1;
                    } else {
                        fp += 1;
                    }
                }
            }
            RocPoint {
                threshold,
                fpr: fp as f64 / neg as f64,
                tpr: tp as f64 / pos as f64,
            }
        })
        .collect();
    let auc = trapezoid_auc(&points);
    Ok(Roc { points, auc })
}

fn trapezoid_auc(points: &[RocPoint]) -> f64 {
    let mut xy: Vec<(f64, f64)> = points.iter().map(|p| (p.fpr, p.tpr)).collect();
    xy.push((0.0, 0.0));
    xy.push((1.0, 1.0));
    xy.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    xy.windows(2)
        .map(|p| (p[1].0 - p[0].0) * (p[0].1 + p[1].1) / 2.0)
        .sum()
}

/// Counts of mask values in 50 equal bins over `[0, 1]`; values outside are
/// clamped into the end bins.
pub fn histogram(w: &Matrix) -> Vec<u64> {
    let mut bins = vec![0u64; HISTOGRAM_BINS];
    for &v in w.iter() {
        let b = (v.clamp(0.0, 1.0) * HISTOGRAM_BINS as f64) as usize;
        bins[b.min(HISTOGRAM_BINS - 1)] += 1;
    }
    bins
}

/// Fraction of entries within 0.05 of 0 or 1.
pub fn binarity(w: &Matrix) -> f64 {
    if w.is_empty() {
        return 0.0;
    }
    let near = w
        .iter()
        .filter(|&&v| v.abs() <= BINARITY_TOL || (v - 1.0).abs() <= BINARITY_TOL)
        .count();
    near as f64 / w.len() as f64
}

/// Everything `eval` can report; absent parts were not requested.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EvalReport {
    pub counts: Option<ConfusionCounts>,
    pub fmeasure: Option<FMeasure>,
    pub psnr: Option<f64>,
    pub roc: Option<Roc>,
    pub histogram: Option<Vec<u64>>,
    pub binarity: Option<f64>,
    pub snr_db: Option<f64>,
}

fn num(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{v:.6}")
    }
}

impl EvalReport {
    /// Scalar fields, in a fixed order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        if let Some(c) = self.counts {
            out.push(("tp", c.tp.to_string()));
            out.push(("tn", c.tn.to_string()));
            out.push(("fp", c.fp.to_string()));
            out.push(("fn", c.fn_.to_string()));
        }
        if let Some(f) = self.fmeasure {
            out.push(("re", num(f.re)));
            out.push(("pre", num(f.pre)));
            out.push(("f1", num(f.f1)));
            out.push(("f_undefined", f.undefined.to_string()));
        }
        if let Some(p) = self.psnr {
            out.push(("psnr_db", num(p)));
        }
        if let Some(r) = &self.roc {
            out.push(("auc", num(r.auc)));
        }
        if let Some(b) = self.binarity {
            out.push(("binarity", num(b)));
        }
        if let Some(s) = self.snr_db {
            out.push(("snr_db", num(s)));
        }
        out
    }

    /// `key = value` lines, then the histogram as one space-separated line.
    pub fn to_key_value(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(s, "{k} = {v}");
        }
        if let Some(h) = &self.histogram {
            let counts: Vec<String> = h.iter().map(u64::to_string).collect();
            let _ = writeln!(s, "histogram = {}", counts.join(" "));
        }
        s
    }

    /// Header row and one value row of the scalar fields.
    pub fn to_csv(&self) -> String {
        let fields = self.fields();
        let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
        let vals: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
        format!("{}\n{}\n", keys.join(","), vals.join(","))
    }

    /// `bin_lo,bin_hi,count` rows.
    pub fn histogram_csv(&self) -> Option<String> {
        let h = self.histogram.as_ref()?;
        let mut s = String::from("bin_lo,bin_hi,count\n");
        let width = 1.0 / h.len() as f64;
        for (i, c) in h.iter().enumerate() {
            let _ = writeln!(s, "{:.2},{:.2},{c}", i as f64 * width, (i + 1) as f64 * width);
        }
        Some(s)
    }
}
