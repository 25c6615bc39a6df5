//! Golden-file regression: compare a run artifact against a pinned CSV,
//! column by column, against an absolute tolerance.

use crate::emit::read_csv;
use anyhow::{bail, Context, Result};
use std::path::Path;

/// Per-column comparison outcome.
#[derive(Debug)]
pub struct ColumnReport {
    pub name: String,
    pub max_deviation: f64,
    pub pass: bool,
}

/// Result of comparing one artifact against its golden file.
#[derive(Debug)]
pub struct GoldenReport {
    pub columns: Vec<ColumnReport>,
}

impl GoldenReport {
    pub fn pass(&self) -> bool {
        self.columns.iter().all(|c| c.pass)
    }

    /// Names of the failing columns.
    pub fn failures(&self) -> Vec<&str> {
        self.columns
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Compare `run` against `golden` with absolute tolerance `tol` per value.
/// Schema differences (headers or row counts) are errors, not failures.
pub fn compare_golden(run: &Path, golden: &Path, tol: f64) -> Result<GoldenReport> {
    if !(tol.is_finite() && tol >= 0.0) {
        bail!("tolerance must be a nonnegative finite number, got {tol}");
    }
    let a = read_csv(run).with_context(|| format!("reading run artifact {}", run.display()))?;
    let b = read_csv(golden)
        .with_context(|| format!("reading golden file {}", golden.display()))?;
    if a.header != b.header {
        bail!(
            "schema mismatch: run has columns [{}], golden has [{}]",
            a.header.join(", "),
            b.header.join(", ")
        );
    }
    if a.rows() != b.rows() {
        bail!(
            "schema mismatch: run has {} rows, golden has {}",
            a.rows(),
            b.rows()
        );
    }
    let columns = a
        .header
        .iter()
        .enumerate()
        .map(|(c, name)| {
            let max_deviation = a.columns[c]
                .iter()
                .zip(&b.columns[c])
                .map(|(&x, &y)| {
                    let d = (x - y).abs();
                    if d.is_nan() {
                        f64::INFINITY // NaN anywhere counts as a deviation
                    } else {
                        d
                    }
                })
                .fold(0.0f64, f64::max);
            ColumnReport {
                name: name.clone(),
                max_deviation,
                pass: max_deviation <= tol,
            }
        })
        .collect();
    Ok(GoldenReport { columns })
}
