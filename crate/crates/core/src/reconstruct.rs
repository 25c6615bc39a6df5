//! Face reconstruction from five-point stencil windows.
//!
//! A window `(w0..w4)` holds flux samples at the five nodes centred on cell
//! `i`; reconstruction produces the numerical flux at the right face of that
//! cell. The three candidate stencils each give a third-order value, the
//! linear combination with the ideal weights gives the fifth-order upstream
//! value, and the WENO value replaces the ideal weights with nonlinear ones.
//!
//! Left-biased and right-biased reconstructions use the same kernels: a
//! right-biased face value is obtained by reversing the window first (see
//! [`StencilWindow::reversed`]).

use crate::indicators::{beta_js, IndicatorTriple, StencilWindow};
use crate::weights::{SchemeSpec, WeightFamily, WeightTriple};

/// Third-order candidate face values of the three sub-stencils.
pub fn candidate_values(w: &StencilWindow) -> [f64; 3] {
    let [w0, w1, w2, w3, w4] = w.0;
    [
        (2.0 * w0 - 7.0 * w1 + 11.0 * w2) / 6.0,
        (-w1 + 5.0 * w2 + 2.0 * w3) / 6.0,
        (2.0 * w2 + 5.0 * w3 - w4) / 6.0,
    ]
}

/// Fifth-order upstream-biased face value (the ideal-weight combination).
pub fn linear_face_value(w: &StencilWindow) -> f64 {
    let [w0, w1, w2, w3, w4] = w.0;
    (2.0 * w0 - 13.0 * w1 + 47.0 * w2 + 27.0 * w3 - 3.0 * w4) / 60.0
}

/// Everything the reconstruction of one face produces.
#[derive(Clone, Copy, Debug)]
pub struct FaceReconstruction {
    pub value: f64,
    pub weights: WeightTriple,
    pub betas: IndicatorTriple,
}

/// WENO face value for the given scheme.
pub fn weno_face(w: &StencilWindow, scheme: &SchemeSpec) -> f64 {
    if scheme.family == WeightFamily::Linear {
        return linear_face_value(w);
    }
    let betas = beta_js(w);
    let wt = scheme.weights(&betas);
    let c = candidate_values(w);
    wt.w0 * c[0] + wt.w1 * c[1] + wt.w2 * c[2]
}

/// WENO face value together with the weights and indicators that produced
/// it. The `value` is bitwise identical to [`weno_face`] on the same input.
pub fn weno_face_detailed(w: &StencilWindow, scheme: &SchemeSpec) -> FaceReconstruction {
    let betas = beta_js(w);
    let weights = scheme.weights(&betas);
    let value = if scheme.family == WeightFamily::Linear {
        linear_face_value(w)
    } else {
        let c = candidate_values(w);
        weights.w0 * c[0] + weights.w1 * c[1] + weights.w2 * c[2]
    };
    FaceReconstruction {
        value,
        weights,
        betas,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn window_from(f: impl Fn(f64) -> f64, x_center: f64, h: f64) -> StencilWindow {
        StencilWindow([
            f(x_center - 2.0 * h),
            f(x_center - h),
            f(x_center),
            f(x_center + h),
            f(x_center + 2.0 * h),
        ])
    }

    #[test]
    fn constant_window_is_exact() {
        let w = StencilWindow([2.5; 5]);
        assert_eq!(candidate_values(&w), [2.5; 3]);
        assert_relative_eq!(linear_face_value(&w), 2.5, max_relative = 1e-15);
        for s in [SchemeSpec::js(), SchemeSpec::m(), SchemeSpec::z(), SchemeSpec::zr()] {
            assert_relative_eq!(weno_face(&w, &s), 2.5, max_relative = 1e-14);
        }
    }

    #[test]
    fn linear_window_is_exact() {
        // w_j = a + b j reconstructs a + b/2 at the right face of the centre
        let (a, b) = (1.7, -0.4);
        let w = StencilWindow([a - 2.0 * b, a - b, a, a + b, a + 2.0 * b]);
        let want = a + 0.5 * b;
        for c in candidate_values(&w) {
            assert_relative_eq!(c, want, max_relative = 1e-14);
        }
        assert_relative_eq!(linear_face_value(&w), want, max_relative = 1e-14);
        // reversed window reconstructs the left face of the centre cell
        assert_relative_eq!(
            linear_face_value(&w.reversed()),
            a - 0.5 * b,
            max_relative = 1e-14
        );
    }

    #[test]
    fn flux_difference_is_exact_for_quintics() {
        // (face(i+1/2) - face(i-1/2)) / h equals d/dx exactly up to degree 5
        let f = |x: f64| x.powi(5) - 2.0 * x.powi(3) + x;
        let df = |x: f64| 5.0 * x.powi(4) - 6.0 * x * x + 1.0;
        let h = 0.1;
        let x0 = 2.0;
        let right = linear_face_value(&window_from(f, x0, h));
        let left = linear_face_value(&window_from(f, x0 - h, h));
        assert_relative_eq!((right - left) / h, df(x0), max_relative = 1e-11);
    }

    #[test]
    fn flux_difference_is_fifth_order() {
        let f = |x: f64| (2.0 * x).sin();
        let df = |x: f64| 2.0 * (2.0 * x).cos();
        let x0 = 0.3;
        let err = |h: f64| {
            let right = linear_face_value(&window_from(f, x0, h));
            let left = linear_face_value(&window_from(f, x0 - h, h));
            ((right - left) / h - df(x0)).abs()
        };
        let (e1, e2) = (err(0.02), err(0.01));
        let order = (e1 / e2).log2();
        assert!(
            (order - 5.0).abs() < 0.2,
            "observed order {order}, errors {e1:.3e} / {e2:.3e}"
        );
    }

    #[test]
    fn linear_face_matches_ideal_combination() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10_000 {
            let w = StencilWindow(std::array::from_fn(|_| rng.gen_range(-10.0..10.0)));
            let c = candidate_values(&w);
            let combo = 0.1 * c[0] + 0.6 * c[1] + 0.3 * c[2];
            assert_abs_diff_eq!(linear_face_value(&w), combo, epsilon = 1e-12);
        }
    }

    #[test]
    fn weno_value_stays_within_candidate_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let schemes = [
            SchemeSpec::js(),
            SchemeSpec::m(),
            SchemeSpec::z(),
            SchemeSpec::zr(),
            SchemeSpec::zr().with_p(6.0).unwrap(),
        ];
        for _ in 0..10_000 {
            let w = StencilWindow(std::array::from_fn(|_| rng.gen_range(-5.0..5.0)));
            let c = candidate_values(&w);
            let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            for s in &schemes {
                let v = weno_face(&w, s);
                assert!(
                    v >= lo - 1e-12 && v <= hi + 1e-12,
                    "{} value {v} outside [{lo}, {hi}]",
                    s.label()
                );
            }
        }
    }

    #[test]
    fn detailed_value_matches_plain_bitwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let schemes = [
            SchemeSpec::linear(),
            SchemeSpec::js(),
            SchemeSpec::m(),
            SchemeSpec::z(),
            SchemeSpec::zr(),
        ];
        for _ in 0..1_000 {
            let w = StencilWindow(std::array::from_fn(|_| rng.gen_range(-5.0..5.0)));
            for s in &schemes {
                let plain = weno_face(&w, s);
                let detailed = weno_face_detailed(&w, s);
                assert_eq!(plain.to_bits(), detailed.value.to_bits());
            }
        }
    }

    #[test]
    fn mirror_symmetry_of_faces() {
        // Reconstructing the reversed window mirrors the reconstruction:
        // even data about the window centre give identical left/right faces.
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..1_000 {
            let (a, b, c) = (
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let even = |j: f64| a + b * j * j + c * j * j * j * j;
            let w = StencilWindow([even(-2.0), even(-1.0), even(0.0), even(1.0), even(2.0)]);
            for s in [SchemeSpec::js(), SchemeSpec::zr()] {
                let right = weno_face(&w, &s);
                let left = weno_face(&w.reversed(), &s);
                assert_relative_eq!(right, left, max_relative = 1e-12, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn shock_window_biases_to_smooth_side() {
        // step between w2 and w3: the downstream stencils see the jump, so
        // nearly all weight must land on stencil 0 for every nonlinear family
        let w = StencilWindow([1.0, 1.0, 1.0, 0.0, 0.0]);
        for s in [SchemeSpec::js(), SchemeSpec::m(), SchemeSpec::z(), SchemeSpec::zr()] {
            let r = weno_face_detailed(&w, &s);
            assert!(
                r.weights.w0 > 0.99,
                "{}: w0 = {}",
                s.label(),
                r.weights.w0
            );
            // candidate 0 extrapolates the flat left state
            assert_relative_eq!(r.value, 1.0, max_relative = 1e-2);
        }
    }
}
