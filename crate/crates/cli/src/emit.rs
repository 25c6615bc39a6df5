//! CSV and key=value sidecar emission, plus CSV reading for golden
//! comparisons. All floating-point fields are written with 17 significant
//! digits so files round-trip bit-exactly through text.

use anyhow::{bail, Context, Result};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

/// Format with 17 significant digits (full double precision).
pub fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write a CSV file: one header row, comma-separated, no quoting (field
/// names and formatted numbers never contain commas).
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let file = File::create(path)
        .with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        writeln!(w, "{}", row.join(","))?;
    }
    w.flush()?;
    Ok(())
}

/// Write a key=value sidecar, one pair per line, in the given order.
pub fn write_kv(path: &Path, pairs: &[(String, String)]) -> Result<()> {
    let file = File::create(path)
        .with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    for (k, v) in pairs {
        writeln!(w, "{k}={v}")?;
    }
    w.flush()?;
    Ok(())
}

/// A CSV file parsed into named float columns.
#[derive(Debug)]
pub struct Csv {
    pub header: Vec<String>,
    /// `columns[c][r]` is row r of column c; all columns have equal length.
    pub columns: Vec<Vec<f64>>,
}

impl Csv {
    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }
}

/// Read a CSV written by [`write_csv`]: header row then float rows.
pub fn read_csv(path: &Path) -> Result<Csv> {
    let file = File::open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    let mut lines = BufReader::new(file).lines();
    let header_line = match lines.next() {
        Some(l) => l?,
        None => bail!("{}: empty file", path.display()),
    };
    let header: Vec<String> = header_line.split(',').map(|s| s.trim().to_string()).collect();
    if header.iter().any(String::is_empty) {
        bail!("{}: blank column name in header", path.display());
    }
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); header.len()];
    for (lineno, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != header.len() {
            bail!(
                "{}: line {} has {} fields, expected {}",
                path.display(),
                lineno + 2,
                fields.len(),
                header.len()
            );
        }
        for (c, f) in fields.iter().enumerate() {
            let v: f64 = f.trim().parse().with_context(|| {
                format!(
                    "{}: line {} column {}: bad number {f:?}",
                    path.display(),
                    lineno + 2,
                    header[c]
                )
            })?;
            columns[c].push(v);
        }
    }
    Ok(Csv { header, columns })
}
