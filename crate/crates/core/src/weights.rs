//! Nonlinear weight families for the fifth-order WENO reconstruction.
//!
//! All families combine the same candidate stencils with the linear weights
//! `d = (1/10, 3/5, 3/10)`; they differ in how the smoothness indicators are
//! turned into normalized nonlinear weights:
//!
//! * `JS` — classical inverse-square weights `α_k = d_k / (β_k + ε)²`;
//! * `M`  — JS weights passed through the mapping `g_k` and renormalized;
//! * `Z`  — global-indicator weights `α_k = d_k (1 + (τ5/(β_k + ε))^p)`;
//! * `ZR` — same construction built from p-th roots: the global indicator is
//!   `τ = |β0^{1/p} - β2^{1/p}|` and `α_k = d_k (1 + (τ/(β_k^{1/p} + ε))^p)`.
//!
//! For `p = 1` the `ZR` and `Z` constructions coincide identically; as
//! `p → ∞` every ZR weight collapses to its linear weight, recovering the
//! underlying fifth-order linear scheme.

use crate::error::{Error, Result};
use crate::indicators::{tau_z, IndicatorTriple};

/// Ideal (linear) weights of the three candidate stencils.
pub const LINEAR_WEIGHTS: [f64; 3] = [0.1, 0.6, 0.3];

/// Normalized nonlinear weights for one interface reconstruction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightTriple {
    pub w0: f64,
    pub w1: f64,
    pub w2: f64,
}

impl WeightTriple {
    pub fn as_array(&self) -> [f64; 3] {
        [self.w0, self.w1, self.w2]
    }

    /// `max_k |ω_k - d_k|`, the distance from the ideal weights.
    pub fn max_dev_from_linear(&self) -> f64 {
        self.as_array()
            .iter()
            .zip(LINEAR_WEIGHTS.iter())
            .map(|(w, d)| (w - d).abs())
            .fold(0.0, f64::max)
    }
}

fn normalize(a: [f64; 3]) -> WeightTriple {
    let s = a[0] + a[1] + a[2];
    WeightTriple {
        w0: a[0] / s,
        w1: a[1] / s,
        w2: a[2] / s,
    }
}

/// `x^p` with exact fast paths for the small integer exponents that the
/// schemes actually use; falls back to `powf` for general real `p`.
fn powp(x: f64, p: f64) -> f64 {
    if p == 1.0 {
        x
    } else if p == 2.0 {
        x * x
    } else if p == 3.0 {
        x * x * x
    } else if p.fract() == 0.0 && p.abs() <= 512.0 {
        x.powi(p as i32)
    } else {
        x.powf(p)
    }
}

/// `x^{1/p}` with fast paths mirroring [`powp`].
fn rootp(x: f64, p: f64) -> f64 {
    if p == 1.0 {
        x
    } else if p == 2.0 {
        x.sqrt()
    } else if p == 3.0 {
        x.cbrt()
    } else if p == 6.0 {
        x.cbrt().sqrt()
    } else {
        x.powf(1.0 / p)
    }
}

/// The ideal weights, unconditionally.
pub fn weights_linear() -> WeightTriple {
    WeightTriple {
        w0: LINEAR_WEIGHTS[0],
        w1: LINEAR_WEIGHTS[1],
        w2: LINEAR_WEIGHTS[2],
    }
}

/// Classical weights `α_k = d_k / (β_k + ε)²`, normalized.
pub fn weights_js(b: &IndicatorTriple, eps: f64) -> WeightTriple {
    let a = [
        LINEAR_WEIGHTS[0] / ((b.b0 + eps) * (b.b0 + eps)),
        LINEAR_WEIGHTS[1] / ((b.b1 + eps) * (b.b1 + eps)),
        LINEAR_WEIGHTS[2] / ((b.b2 + eps) * (b.b2 + eps)),
    ];
    normalize(a)
}

/// The weight mapping
/// `g(ω) = ω (d + d² - 3 d ω + ω²) / (d² + ω (1 - 2d))`
/// with fixed point `g(d) = d`, `g(0) = 0` and `g(1) = 1`.
pub fn map_g(omega: f64, d: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&omega) || !(d > 0.0 && d < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "map_g requires omega in [0,1] and d in (0,1), got ({omega}, {d})"
        )));
    }
    let num = d + d * d - 3.0 * d * omega + omega * omega;
    let den = d * d + omega * (1.0 - 2.0 * d);
    Ok(omega * num / den)
}

/// Mapped weights: JS weights re-shaped by [`map_g`] and renormalized.
pub fn weights_m(b: &IndicatorTriple, eps: f64) -> WeightTriple {
    let w = weights_js(b, eps);
    // JS weights are normalized, hence inside the map's domain.
    let a = [
        map_g(w.w0, LINEAR_WEIGHTS[0]).expect("JS weight in [0,1]"),
        map_g(w.w1, LINEAR_WEIGHTS[1]).expect("JS weight in [0,1]"),
        map_g(w.w2, LINEAR_WEIGHTS[2]).expect("JS weight in [0,1]"),
    ];
    normalize(a)
}

/// `α_k = d_k (1 + r_k^p)` normalized, shared by the Z and ZR families.
///
/// When the largest ratio is big enough that `r^p` would overflow (a zero
/// indicator next to a jump gives `r ~ τ/ε ~ 1e40`), the ratios are first
/// divided by their maximum. Normalization is scale-invariant, and in that
/// regime the dropped `+1` sits below `1e-300` relative, so the limit
/// weights are unaffected; outside it the plain formula is used unchanged.
fn z_combine(r: [f64; 3], p: f64) -> WeightTriple {
    let m = r[0].max(r[1]).max(r[2]);
    if m > 1.0 && p * m.ln() > 690.0 {
        normalize([
            LINEAR_WEIGHTS[0] * powp(r[0] / m, p),
            LINEAR_WEIGHTS[1] * powp(r[1] / m, p),
            LINEAR_WEIGHTS[2] * powp(r[2] / m, p),
        ])
    } else {
        normalize([
            LINEAR_WEIGHTS[0] * (1.0 + powp(r[0], p)),
            LINEAR_WEIGHTS[1] * (1.0 + powp(r[1], p)),
            LINEAR_WEIGHTS[2] * (1.0 + powp(r[2], p)),
        ])
    }
}

/// Global-indicator weights `α_k = d_k (1 + (τ5/(β_k + ε))^p)`.
pub fn weights_z(b: &IndicatorTriple, eps: f64, p: f64) -> WeightTriple {
    let t5 = tau_z(b);
    z_combine(
        [
            t5 / (b.b0 + eps),
            t5 / (b.b1 + eps),
            t5 / (b.b2 + eps),
        ],
        p,
    )
}

/// Root-based weights: the Z construction applied to `β_k^{1/p}` with the
/// rooted global indicator `τ = |β0^{1/p} - β2^{1/p}|`. Identical to
/// [`weights_z`] for `p = 1`.
pub fn weights_zr(b: &IndicatorTriple, eps: f64, p: f64) -> WeightTriple {
    let r0 = rootp(b.b0, p);
    let r1 = rootp(b.b1, p);
    let r2 = rootp(b.b2, p);
    let tau = (r0 - r2).abs();
    z_combine([tau / (r0 + eps), tau / (r1 + eps), tau / (r2 + eps)], p)
}

/// The five selectable weight families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightFamily {
    Linear,
    Js,
    M,
    Z,
    Zr,
}

impl WeightFamily {
    pub fn label(&self) -> &'static str {
        match self {
            WeightFamily::Linear => "linear",
            WeightFamily::Js => "js",
            WeightFamily::M => "m",
            WeightFamily::Z => "z",
            WeightFamily::Zr => "zr",
        }
    }
}

impl std::str::FromStr for WeightFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "linear" => Ok(WeightFamily::Linear),
            "js" => Ok(WeightFamily::Js),
            "m" => Ok(WeightFamily::M),
            "z" => Ok(WeightFamily::Z),
            "zr" => Ok(WeightFamily::Zr),
            other => Err(Error::InvalidScheme(format!(
                "unknown weight family '{other}' (expected linear, js, m, z or zr)"
            ))),
        }
    }
}

impl std::fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// A fully specified scheme: weight family plus its `p` and `ε` parameters.
///
/// `ε` guards divisions by vanishing indicators (`1e-6` for JS by
/// convention, `1e-40` elsewhere); `p` is the indicator power (`1` for Z,
/// `3` for ZR by default) and must be ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeSpec {
    pub family: WeightFamily,
    pub p: f64,
    pub eps: f64,
}

impl SchemeSpec {
    pub fn new(family: WeightFamily, p: f64, eps: f64) -> Result<Self> {
        if !(eps.is_finite() && eps > 0.0) {
            return Err(Error::InvalidScheme(format!(
                "epsilon must be positive and finite, got {eps}"
            )));
        }
        if !(p.is_finite() && p >= 1.0) {
            return Err(Error::InvalidScheme(format!(
                "p must be >= 1 and finite, got {p}"
            )));
        }
        Ok(SchemeSpec { family, p, eps })
    }

    pub fn linear() -> Self {
        SchemeSpec {
            family: WeightFamily::Linear,
            p: 1.0,
            eps: 1e-40,
        }
    }

    pub fn js() -> Self {
        SchemeSpec {
            family: WeightFamily::Js,
            p: 1.0,
            eps: 1e-6,
        }
    }

    pub fn m() -> Self {
        SchemeSpec {
            family: WeightFamily::M,
            p: 1.0,
            eps: 1e-40,
        }
    }

    pub fn z() -> Self {
        SchemeSpec {
            family: WeightFamily::Z,
            p: 1.0,
            eps: 1e-40,
        }
    }

    pub fn zr() -> Self {
        SchemeSpec {
            family: WeightFamily::Zr,
            p: 3.0,
            eps: 1e-40,
        }
    }

    /// Family default with its conventional `p`/`ε` parameters.
    pub fn preset(family: WeightFamily) -> Self {
        match family {
            WeightFamily::Linear => SchemeSpec::linear(),
            WeightFamily::Js => SchemeSpec::js(),
            WeightFamily::M => SchemeSpec::m(),
            WeightFamily::Z => SchemeSpec::z(),
            WeightFamily::Zr => SchemeSpec::zr(),
        }
    }

    pub fn with_p(self, p: f64) -> Result<Self> {
        SchemeSpec::new(self.family, p, self.eps)
    }

    pub fn with_eps(self, eps: f64) -> Result<Self> {
        SchemeSpec::new(self.family, self.p, eps)
    }

    /// Nonlinear weights of this scheme for one indicator triple.
    pub fn weights(&self, b: &IndicatorTriple) -> WeightTriple {
        match self.family {
            WeightFamily::Linear => weights_linear(),
            WeightFamily::Js => weights_js(b, self.eps),
            WeightFamily::M => weights_m(b, self.eps),
            WeightFamily::Z => weights_z(b, self.eps, self.p),
            WeightFamily::Zr => weights_zr(b, self.eps, self.p),
        }
    }

    /// Short human-readable tag, e.g. `zr(p=3)`.
    pub fn label(&self) -> String {
        match self.family {
            WeightFamily::Z | WeightFamily::Zr => format!("{}(p={})", self.family, self.p),
            _ => self.family.to_string(),
        }
    }
}
