//! Plain-text `key=value` run configuration.
//!
//! Recognized keys: `problem`, `scheme`, `p`, `epsilon`, `N`,
//! `T-override`, `dt-coefficient-override`, `output`. Lines starting
//! with `#` and blank lines are ignored. Unknown or duplicate keys are
//! errors so typos cannot silently change a run. Command-line flags
//! mirror the keys and take precedence over file values, which take
//! precedence over the `WENO5_OUTPUT_ROOT` environment variable (output
//! root only) and built-in defaults.

use anyhow::{anyhow, bail, Context, Result};
use std::path::{Path, PathBuf};

/// Grid resolution: `N` for 1D problems, `NXxNY` for 2D problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    OneD(usize),
    TwoD(usize, usize),
}

impl Resolution {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once(['x', 'X']) {
            let nx: usize = a.trim().parse().context("bad NX in resolution")?;
            let ny: usize = b.trim().parse().context("bad NY in resolution")?;
            if nx == 0 || ny == 0 {
                bail!("resolution components must be positive, got {s}");
            }
            Ok(Resolution::TwoD(nx, ny))
        } else {
            let n: usize = s.parse().with_context(|| format!("bad resolution {s:?}"))?;
            if n == 0 {
                bail!("resolution must be positive, got {s}");
            }
            Ok(Resolution::OneD(n))
        }
    }

    pub fn label(&self) -> String {
        match self {
            Resolution::OneD(n) => format!("{n}"),
            Resolution::TwoD(nx, ny) => format!("{nx}x{ny}"),
        }
    }
}

impl std::fmt::Display for Resolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// One layer of run settings; `None` means "not set at this layer".
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunConfig {
    pub problem: Option<String>,
    pub scheme: Option<String>,
    pub p: Option<f64>,
    pub epsilon: Option<f64>,
    pub n: Option<Resolution>,
    pub t_override: Option<f64>,
    pub dt_coefficient_override: Option<f64>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    /// Parse the `key=value` text of a config file.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        let mut seen: Vec<String> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected key=value, got {raw:?}", lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            if seen.iter().any(|k| k == key) {
                bail!("line {}: duplicate key {key:?}", lineno + 1);
            }
            seen.push(key.to_string());
            match key {
                "problem" => cfg.problem = Some(value.to_string()),
                "scheme" => cfg.scheme = Some(value.to_string()),
                "p" => cfg.p = Some(parse_f64(key, value)?),
                "epsilon" => cfg.epsilon = Some(parse_f64(key, value)?),
                "N" => cfg.n = Some(Resolution::parse(value)?),
                "T-override" => cfg.t_override = Some(parse_f64(key, value)?),
                "dt-coefficient-override" => {
                    cfg.dt_coefficient_override = Some(parse_f64(key, value)?)
                }
                "output" => cfg.output = Some(PathBuf::from(value)),
                _ => bail!(
                    "line {}: unknown key {key:?} (expected one of problem, scheme, p, \
                     epsilon, N, T-override, dt-coefficient-override, output)",
                    lineno + 1
                ),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing config file {}", path.display()))
    }

    /// Overlay `self` (the higher-precedence layer, e.g. CLI flags) on
    /// top of `base` (e.g. a config file).
    pub fn or(self, base: RunConfig) -> RunConfig {
        RunConfig {
            problem: self.problem.or(base.problem),
            scheme: self.scheme.or(base.scheme),
            p: self.p.or(base.p),
            epsilon: self.epsilon.or(base.epsilon),
            n: self.n.or(base.n),
            t_override: self.t_override.or(base.t_override),
            dt_coefficient_override: self
                .dt_coefficient_override
                .or(base.dt_coefficient_override),
            output: self.output.or(base.output),
        }
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    let v: f64 = value
        .parse()
        .with_context(|| format!("key {key:?}: expected a number, got {value:?}"))?;
    if !v.is_finite() {
        bail!("key {key:?}: value must be finite, got {value:?}");
    }
    Ok(v)
}

/// Environment variable naming the default output root.
pub const OUTPUT_ROOT_ENV: &str = "WENO5_OUTPUT_ROOT";

/// Resolve the output root: explicit setting (flag or config) wins, then
/// the environment variable, then `./runs`.
pub fn resolve_output_root(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(v) = std::env::var_os(OUTPUT_ROOT_ENV) {
        if !v.is_empty() {
            return PathBuf::from(v);
        }
    }
    PathBuf::from("runs")
}
