//! Smoothness indicators and the global reference quantities built from them.
//!
//! For a five-cell window `(f_{i-2}, ..., f_{i+2})` the classical indicators
//!
//! ```text
//! β0 = 13/12 (f_{i-2} - 2 f_{i-1} + f_i)^2 + 1/4 (f_{i-2} - 4 f_{i-1} + 3 f_i)^2
//! β1 = 13/12 (f_{i-1} - 2 f_i + f_{i+1})^2 + 1/4 (f_{i-1} - f_{i+1})^2
//! β2 = 13/12 (f_i - 2 f_{i+1} + f_{i+2})^2 + 1/4 (3 f_i - 4 f_{i+1} + f_{i+2})^2
//! ```
//!
//! measure the oscillation of the three quadratic substencil interpolants.
//! `tau_z` is the usual global indicator `|β0 - β2|`; `tau_zr_pow` is its
//! p-th-root counterpart `(β0^{1/p} - β2^{1/p})^p` (reported in p-th-power
//! form), and [`phi`] is the underlying two-parameter function
//! `Φ(x) = (a^{1/x} - b^{1/x})^x` whose monotonicity in `x` drives the
//! root-based weights.

use crate::error::{Error, Result};

/// Five ordered samples feeding one interface reconstruction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StencilWindow(pub [f64; 5]);

impl StencilWindow {
    /// Mirror image of the window; a right-biased reconstruction of `self`
    /// equals a left-biased reconstruction of `self.reversed()`.
    pub fn reversed(self) -> Self {
        let [a, b, c, d, e] = self.0;
        StencilWindow([e, d, c, b, a])
    }
}

impl From<[f64; 5]> for StencilWindow {
    fn from(v: [f64; 5]) -> Self {
        StencilWindow(v)
    }
}

/// The three substencil smoothness indicators for one window.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndicatorTriple {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
}

impl IndicatorTriple {
    pub fn as_array(&self) -> [f64; 3] {
        [self.b0, self.b1, self.b2]
    }
}

/// Classical smoothness indicators of the three 3-point substencils.
pub fn beta_js(w: &StencilWindow) -> IndicatorTriple {
    let [f0, f1, f2, f3, f4] = w.0;
    let b0 = 13.0 / 12.0 * (f0 - 2.0 * f1 + f2).powi(2) + 0.25 * (f0 - 4.0 * f1 + 3.0 * f2).powi(2);
    let b1 = 13.0 / 12.0 * (f1 - 2.0 * f2 + f3).powi(2) + 0.25 * (f1 - f3).powi(2);
    let b2 = 13.0 / 12.0 * (f2 - 2.0 * f3 + f4).powi(2) + 0.25 * (3.0 * f2 - 4.0 * f3 + f4).powi(2);
    IndicatorTriple { b0, b1, b2 }
}

/// Global indicator `τ5 = |β0 - β2|`.
pub fn tau_z(b: &IndicatorTriple) -> f64 {
    (b.b0 - b.b2).abs()
}

/// Root-based global indicator in p-th-power form:
/// `T5(p) = (|β0^{1/p} - β2^{1/p}|)^p`.
///
/// `p` must be ≥ 1 and the indicators non-negative. The value decreases
/// monotonically in `p` and tends to 0 as `p → ∞` whenever β0 ≠ β2.
pub fn tau_zr_pow(beta0: f64, beta2: f64, p: f64) -> Result<f64> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "tau_zr_pow requires p >= 1, got {p}"
        )));
    }
    if !(beta0.is_finite() && beta2.is_finite()) || beta0 < 0.0 || beta2 < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tau_zr_pow requires finite non-negative indicators, got ({beta0}, {beta2})"
        )));
    }
    let (hi, lo) = if beta0 >= beta2 {
        (beta0, beta2)
    } else {
        (beta2, beta0)
    };
    if hi == lo {
        return Ok(0.0);
    }
    if lo == 0.0 {
        // (hi^{1/p} - 0)^p; evaluate in the exact limit form.
        return Ok(hi);
    }
    Ok(rooted_difference_pow(hi, lo, p))
}

/// `Φ(x) = (a^{1/x} - b^{1/x})^x` for `a > b > 0`, `x > 0`.
///
/// Strictly decreasing in `x`, with `Φ(x) → a` as `x → 0⁺`,
/// `Φ(x) → 0` as `x → ∞`, and `0 < Φ(x) < a` throughout.
pub fn phi(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && x.is_finite()) || !(a > b) || !(b > 0.0) || !(x > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "phi requires a > b > 0 and x > 0, got (a, b, x) = ({a}, {b}, {x})"
        )));
    }
    Ok(rooted_difference_pow(a, b, x))
}

/// Stable evaluation of `(a^{1/x} - b^{1/x})^x` for `a > b > 0`:
/// factoring out `a` gives `a (1 - e^{-t})^x` with `t = ln(a/b)/x > 0`,
/// which neither overflows for small `x` nor cancels for large `x`.
fn rooted_difference_pow(a: f64, b: f64, x: f64) -> f64 {
    let t = (a / b).ln() / x;
    a * (x * (-(-t).exp()).ln_1p()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn beta_constant_window_is_zero() {
        let b = beta_js(&StencilWindow([2.5; 5]));
        assert_eq!(b.as_array(), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn beta_linear_window() {
        // Linear data of unit slope: every substencil sees (f' dx)^2 = 1.
        let b = beta_js(&StencilWindow([0.0, 1.0, 2.0, 3.0, 4.0]));
        assert_eq!(b.as_array(), [1.0, 1.0, 1.0]);
    }

    #[test]
    fn beta_parabola_window() {
        // f = x^2 sampled at -2..2: pure-curvature indicators 13/12 * 2^2.
        let b = beta_js(&StencilWindow([4.0, 1.0, 0.0, 1.0, 4.0]));
        for v in b.as_array() {
            assert_relative_eq!(v, 13.0 / 3.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn beta_shift_and_scale() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let w: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
            let b = beta_js(&StencilWindow(w));
            for v in b.as_array() {
                assert!(v >= 0.0);
            }
            let c = rng.gen_range(-100.0..100.0);
            let shifted = beta_js(&StencilWindow(w.map(|v| v + c)));
            let s = rng.gen_range(0.01..100.0);
            let scaled = beta_js(&StencilWindow(w.map(|v| s * v)));
            for k in 0..3 {
                let scale = b.as_array()[k].max(1.0);
                assert!((shifted.as_array()[k] - b.as_array()[k]).abs() <= 1e-12 * scale);
                assert_relative_eq!(
                    scaled.as_array()[k],
                    s * s * b.as_array()[k],
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn tau_z_basics() {
        let b = IndicatorTriple {
            b0: 4.0,
            b1: 1.0,
            b2: 1.0,
        };
        assert_eq!(tau_z(&b), 3.0);
        let sym = IndicatorTriple {
            b0: 2.0,
            b1: 9.0,
            b2: 2.0,
        };
        assert_eq!(tau_z(&sym), 0.0);
    }

    #[test]
    fn tau_zr_pow_examples() {
        // (1^{1/2} - 4^{1/2})^2 = 1
        assert_relative_eq!(tau_zr_pow(1.0, 4.0, 2.0).unwrap(), 1.0, max_relative = 1e-14);
        // p = 1 reduces to |b0 - b2|
        assert_relative_eq!(tau_zr_pow(9.0, 2.0, 1.0).unwrap(), 7.0, max_relative = 1e-14);
        assert_eq!(tau_zr_pow(3.0, 3.0, 5.0).unwrap(), 0.0);
        assert_eq!(tau_zr_pow(3.0, 0.0, 5.0).unwrap(), 3.0);
        assert!(tau_zr_pow(1.0, 2.0, 0.5).is_err());
        assert!(tau_zr_pow(-1.0, 2.0, 2.0).is_err());
    }

    #[test]
    fn tau_zr_pow_monotone_in_p() {
        // Strictly decreasing in p for b0 != b2.
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..1000 {
            let b0 = rng.gen_range(1e-6..1e3);
            let b2 = b0 * rng.gen_range(1.5..1e3);
            let p = rng.gen_range(1.0..20.0);
            let q = p + rng.gen_range(0.1..10.0);
            let tp = tau_zr_pow(b0, b2, p).unwrap();
            let tq = tau_zr_pow(b0, b2, q).unwrap();
            assert!(tq < tp, "T5 not decreasing: ({b0},{b2}) p={p} q={q}");
            assert!(tp < (b0 - b2).abs().max(b0.max(b2)));
        }
    }

    #[test]
    fn phi_unit_example() {
        // (4^{1/1} - 1^{1/1})^1 = 3 exactly.
        assert_relative_eq!(phi(4.0, 1.0, 1.0).unwrap(), 3.0, max_relative = 1e-15);
    }

    #[test]
    fn phi_limits() {
        // Large x: collapses toward zero.
        assert!(phi(4.0, 1.0, 64.0).unwrap() < 1e-10);
        // Small x: approaches the larger argument from below.
        let v = phi(4.0, 1.0, 0.05).unwrap();
        assert!(v < 4.0 && (4.0 - v) < 1e-12);
    }

    #[test]
    fn phi_agrees_with_direct_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..1000 {
            let b: f64 = rng.gen_range(0.01..10.0);
            let a = b * rng.gen_range(1.1..100.0);
            let x: f64 = rng.gen_range(0.5..8.0);
            let direct = (a.powf(1.0 / x) - b.powf(1.0 / x)).powf(x);
            assert_relative_eq!(phi(a, b, x).unwrap(), direct, max_relative = 1e-12);
        }
    }

    #[test]
    fn phi_monotone_and_bounded() {
        // Exponents stay >= 0.5 so the deviation from the small-x limit is
        // representable; below that the value saturates at `a` to rounding
        // (see phi_limits for that regime).
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..1000 {
            let b = rng.gen_range(1e-6..1e6f64);
            let a = b * rng.gen_range(1.01..1e4);
            let q = rng.gen_range(0.5..10.0);
            let p = q + rng.gen_range(0.05..10.0);
            let fp = phi(a, b, p).unwrap();
            let fq = phi(a, b, q).unwrap();
            assert!(fp < fq, "phi not decreasing: a={a} b={b} p={p} q={q}");
            assert!(fq < a && fp > 0.0);
        }
    }

    #[test]
    fn phi_rejects_bad_domain() {
        assert!(phi(1.0, 2.0, 1.0).is_err());
        assert!(phi(2.0, 2.0, 1.0).is_err());
        assert!(phi(2.0, -1.0, 1.0).is_err());
        assert!(phi(2.0, 1.0, 0.0).is_err());
        assert!(phi(2.0, 0.0, 1.0).is_err());
    }
}
