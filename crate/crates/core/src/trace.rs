//! Per-iteration solver diagnostics and their CSV form.
//!
//! All solvers share the base columns
//! `iter,objective,gap,dL,dW,dU,lagrangian`. The extended solver appends
//! `res_x,res_z,e_frac`.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

pub const BASE_COLUMNS: [&str; 7] = ["iter", "objective", "gap", "dL", "dW", "dU", "lagrangian"];
pub const EXTENDED_COLUMNS: [&str; 3] = ["res_x", "res_z", "e_frac"];

/// Extra residuals recorded by the extended solver.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedRecord {
    /// `‖(1-W)∘(L-X) + E‖_F`
    pub res_x: f64,
    /// `‖Z - D(W)‖_F`
    pub res_z: f64,
    /// Fraction of nonzero entries in `E`.
    pub e_frac: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceRecord {
    /// 1-based iteration number.
    pub iter: usize,
    pub objective: f64,
    /// Constraint violation (absolute Frobenius norm).
    pub gap: f64,
    pub d_l: f64,
    pub d_w: f64,
    pub d_u: f64,
    pub lagrangian: f64,
    pub extended: Option<ExtendedRecord>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct IterationTrace {
    pub records: Vec<TraceRecord>,
}

impl IterationTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: TraceRecord) {
        self.records.push(record);
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> Option<&TraceRecord> {
        self.records.last()
    }

    pub fn is_extended(&self) -> bool {
        self.records.first().is_some_and(|r| r.extended.is_some())
    }

    pub fn to_csv(&self) -> String {
        let extended = self.is_extended();
        let mut out = String::new();
        let mut header: Vec<&str> = BASE_COLUMNS.to_vec();
        if extended {
            header.extend(EXTENDED_COLUMNS);
        }
        out.push_str(&header.join(","));
        out.push('\n');
        for r in &self.records {
            let _ = write!(
                out,
                "{},{:e},{:e},{:e},{:e},{:e},{:e}",
                r.iter, r.objective, r.gap, r.d_l, r.d_w, r.d_u, r.lagrangian
            );
            if extended {
                let e = r.extended.unwrap_or(ExtendedRecord {
                    res_x: f64::NAN,
                    res_z: f64::NAN,
                    e_frac: f64::NAN,
                });
                let _ = write!(out, ",{:e},{:e},{:e}", e.res_x, e.res_z, e.e_frac);
            }
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv()).map_err(|source| Error::Unwritable {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn read_csv(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Unreadable {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse_csv(&text).map_err(|reason| Error::Malformed {
            path: path.to_path_buf(),
            reason,
        })
    }

    pub fn parse_csv(text: &str) -> std::result::Result<Self, String> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or("empty trace")?;
        let cols: Vec<&str> = header.split(',').map(str::trim).collect();
        if cols.len() < BASE_COLUMNS.len() || cols[..BASE_COLUMNS.len()] != BASE_COLUMNS {
            return Err(format!("line 1: unexpected header {header:?}"));
        }
        let extended = match &cols[BASE_COLUMNS.len()..] {
            [] => false,
            rest if rest == EXTENDED_COLUMNS => true,
            _ => return Err(format!("line 1: unexpected header {header:?}")),
        };

        let mut trace = IterationTrace::new();
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != cols.len() {
                return Err(format!(
                    "line {}: expected {} fields, got {}",
                    lineno + 1,
                    cols.len(),
                    fields.len()
                ));
            }
            let num = |i: usize| -> std::result::Result<f64, String> {
                fields[i]
                    .parse::<f64>()
                    .map_err(|e| format!("line {}: column {}: {e}", lineno + 1, cols[i]))
            };
            let iter = fields[0]
                .parse::<usize>()
                .map_err(|e| format!("line {}: iter: {e}", lineno + 1))?;
            trace.push(TraceRecord {
                iter,
                objective: num(1)?,
                gap: num(2)?,
                d_l: num(3)?,
                d_w: num(4)?,
                d_u: num(5)?,
                lagrangian: num(6)?,
                extended: if extended {
                    Some(ExtendedRecord {
                        res_x: num(7)?,
                        res_z: num(8)?,
                        e_frac: num(9)?,
                    })
                } else {
                    None
                },
            });
        }
        Ok(trace)
    }
}
