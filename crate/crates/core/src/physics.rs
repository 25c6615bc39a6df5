//! Flux functions, wave speeds and characteristic decompositions.
//!
//! Three models are supported: linear advection and Burgers (scalar), and
//! the compressible Euler equations in one and two space dimensions with an
//! ideal-gas law. Conservative states are plain arrays — `[f64; 3]` for 1D
//! Euler `(ρ, ρu, E)` and `[f64; 4]` for 2D `(ρ, ρu, ρv, E)`.

use crate::error::{Error, Result};

/// Scalar conservation laws `u_t + f(u)_x = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarModel {
    /// `f(u) = u` (unit transport speed).
    Advection,
    /// `f(u) = u²/2`.
    Burgers,
}

impl ScalarModel {
    #[inline]
    pub fn flux(&self, u: f64) -> f64 {
        match self {
            ScalarModel::Advection => u,
            ScalarModel::Burgers => 0.5 * u * u,
        }
    }

    /// `|f'(u)|`, the local characteristic speed.
    #[inline]
    pub fn speed(&self, u: f64) -> f64 {
        match self {
            ScalarModel::Advection => 1.0,
            ScalarModel::Burgers => u.abs(),
        }
    }
}

/// Lax–Friedrichs flux splitting `f±(u) = (f(u) ± α u) / 2`.
///
/// With `α ≥ max |f'|` over the relevant states, `f⁺` has a non-negative
/// and `f⁻` a non-positive derivative, so each part can be reconstructed
/// with a fixed upwind bias.
#[inline]
pub fn lf_split(f: f64, u: f64, alpha: f64) -> (f64, f64) {
    (0.5 * (f + alpha * u), 0.5 * (f - alpha * u))
}

/// Ideal-gas Euler equations with ratio of specific heats `gamma`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Euler {
    pub gamma: f64,
}

impl Default for Euler {
    fn default() -> Self {
        Euler { gamma: 1.4 }
    }
}

/// Left/right eigenvector pair of a flux Jacobian, with eigenvalues.
/// `left` holds the left eigenvectors as rows, `right` the right
/// eigenvectors as columns; `L R = I`.
#[derive(Clone, Copy, Debug)]
pub struct Eigen<const M: usize> {
    pub left: [[f64; M]; M],
    pub right: [[f64; M]; M],
    pub lambda: [f64; M],
}

impl<const M: usize> Eigen<M> {
    /// Project a conservative vector onto characteristic variables: `L u`.
    #[inline]
    pub fn to_char(&self, u: &[f64; M]) -> [f64; M] {
        std::array::from_fn(|i| {
            let row = &self.left[i];
            (0..M).map(|j| row[j] * u[j]).sum()
        })
    }

    /// Recombine characteristic variables: `R w`.
    #[inline]
    pub fn from_char(&self, w: &[f64; M]) -> [f64; M] {
        std::array::from_fn(|i| (0..M).map(|j| self.right[i][j] * w[j]).sum())
    }
}

impl Euler {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 1.0) {
            return Err(Error::InvalidArgument(format!(
                "gamma must be finite and > 1, got {gamma}"
            )));
        }
        Ok(Euler { gamma })
    }

    #[inline]
    pub fn sound_speed(&self, rho: f64, p: f64) -> f64 {
        (self.gamma * p / rho).sqrt()
    }

    // ---- one space dimension ------------------------------------------

    #[inline]
    pub fn prim_to_cons3(&self, rho: f64, u: f64, p: f64) -> [f64; 3] {
        [
            rho,
            rho * u,
            p / (self.gamma - 1.0) + 0.5 * rho * u * u,
        ]
    }

    /// `(ρ, u, p)` from a conservative state. No positivity checks; see
    /// [`Euler::check3`].
    #[inline]
    pub fn cons_to_prim3(&self, s: &[f64; 3]) -> (f64, f64, f64) {
        let rho = s[0];
        let u = s[1] / rho;
        let p = (self.gamma - 1.0) * (s[2] - 0.5 * rho * u * u);
        (rho, u, p)
    }

    #[inline]
    pub fn pressure3(&self, s: &[f64; 3]) -> f64 {
        (self.gamma - 1.0) * (s[2] - 0.5 * s[1] * s[1] / s[0])
    }

    pub fn check3(&self, s: &[f64; 3], location: &str) -> Result<()> {
        let (rho, _, p) = self.cons_to_prim3(s);
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::NonPhysical {
                quantity: "density",
                value: rho,
                location: location.to_string(),
            });
        }
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::NonPhysical {
                quantity: "pressure",
                value: p,
                location: location.to_string(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn flux3(&self, s: &[f64; 3]) -> [f64; 3] {
        let (rho, u, p) = self.cons_to_prim3(s);
        [rho * u, rho * u * u + p, u * (s[2] + p)]
    }

    /// `|u| + c`.
    #[inline]
    pub fn max_speed3(&self, s: &[f64; 3]) -> f64 {
        let (rho, u, p) = self.cons_to_prim3(s);
        u.abs() + self.sound_speed(rho, p)
    }

    /// Eigenvector decomposition of the flux Jacobian at the given state
    /// (typically an interface average of two cell states).
    pub fn eigensystem3(&self, s: &[f64; 3]) -> Eigen<3> {
        let (rho, u, p) = self.cons_to_prim3(s);
        let c = self.sound_speed(rho, p);
        let h = (s[2] + p) / rho; // total specific enthalpy
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * u * u;
        let right = [
            [1.0, 1.0, 1.0],
            [u - c, u, u + c],
            [h - u * c, 0.5 * u * u, h + u * c],
        ];
        let left = [
            [
                0.5 * (b2 + u / c),
                -0.5 * (b1 * u + 1.0 / c),
                0.5 * b1,
            ],
            [1.0 - b2, b1 * u, -b1],
            [
                0.5 * (b2 - u / c),
                -0.5 * (b1 * u - 1.0 / c),
                0.5 * b1,
            ],
        ];
        Eigen {
            left,
            right,
            lambda: [u - c, u, u + c],
        }
    }

    // ---- two space dimensions ------------------------------------------

    #[inline]
    pub fn prim_to_cons4(&self, rho: f64, u: f64, v: f64, p: f64) -> [f64; 4] {
        [
            rho,
            rho * u,
            rho * v,
            p / (self.gamma - 1.0) + 0.5 * rho * (u * u + v * v),
        ]
    }

    #[inline]
    pub fn cons_to_prim4(&self, s: &[f64; 4]) -> (f64, f64, f64, f64) {
        let rho = s[0];
        let u = s[1] / rho;
        let v = s[2] / rho;
        let p = (self.gamma - 1.0) * (s[3] - 0.5 * rho * (u * u + v * v));
        (rho, u, v, p)
    }

    pub fn check4(&self, s: &[f64; 4], location: &str) -> Result<()> {
        let (rho, _, _, p) = self.cons_to_prim4(s);
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::NonPhysical {
                quantity: "density",
                value: rho,
                location: location.to_string(),
            });
        }
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::NonPhysical {
                quantity: "pressure",
                value: p,
                location: location.to_string(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn flux4_x(&self, s: &[f64; 4]) -> [f64; 4] {
        let (rho, u, v, p) = self.cons_to_prim4(s);
        [rho * u, rho * u * u + p, rho * u * v, u * (s[3] + p)]
    }

    #[inline]
    pub fn flux4_y(&self, s: &[f64; 4]) -> [f64; 4] {
        let (rho, u, v, p) = self.cons_to_prim4(s);
        [rho * v, rho * u * v, rho * v * v + p, v * (s[3] + p)]
    }

    #[inline]
    pub fn max_speed4_x(&self, s: &[f64; 4]) -> f64 {
        let (rho, u, _, p) = self.cons_to_prim4(s);
        u.abs() + self.sound_speed(rho, p)
    }

    #[inline]
    pub fn max_speed4_y(&self, s: &[f64; 4]) -> f64 {
        let (rho, _, v, p) = self.cons_to_prim4(s);
        v.abs() + self.sound_speed(rho, p)
    }

    /// x-direction eigensystem of the 2D equations; `v` rides along as a
    /// passively advected quantity.
    pub fn eigensystem4_x(&self, s: &[f64; 4]) -> Eigen<4> {
        let (rho, u, v, p) = self.cons_to_prim4(s);
        let c = self.sound_speed(rho, p);
        let h = (s[3] + p) / rho;
        let q2 = u * u + v * v;
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * q2;
        let right = [
            [1.0, 1.0, 0.0, 1.0],
            [u - c, u, 0.0, u + c],
            [v, v, 1.0, v],
            [h - u * c, 0.5 * q2, v, h + u * c],
        ];
        let left = [
            [
                0.5 * (b2 + u / c),
                -0.5 * (b1 * u + 1.0 / c),
                -0.5 * b1 * v,
                0.5 * b1,
            ],
            [1.0 - b2, b1 * u, b1 * v, -b1],
            [-v, 0.0, 1.0, 0.0],
            [
                0.5 * (b2 - u / c),
                -0.5 * (b1 * u - 1.0 / c),
                -0.5 * b1 * v,
                0.5 * b1,
            ],
        ];
        Eigen {
            left,
            right,
            lambda: [u - c, u, u, u + c],
        }
    }

    /// y-direction eigensystem; mirror image of [`Euler::eigensystem4_x`]
    /// with the roles of `u` and `v` (and the momentum slots) exchanged.
    pub fn eigensystem4_y(&self, s: &[f64; 4]) -> Eigen<4> {
        let (rho, u, v, p) = self.cons_to_prim4(s);
        let c = self.sound_speed(rho, p);
        let h = (s[3] + p) / rho;
        let q2 = u * u + v * v;
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * q2;
        let right = [
            [1.0, 1.0, 0.0, 1.0],
            [u, u, 1.0, u],
            [v - c, v, 0.0, v + c],
            [h - v * c, 0.5 * q2, u, h + v * c],
        ];
        let left = [
            [
                0.5 * (b2 + v / c),
                -0.5 * b1 * u,
                -0.5 * (b1 * v + 1.0 / c),
                0.5 * b1,
            ],
            [1.0 - b2, b1 * u, b1 * v, -b1],
            [-u, 1.0, 0.0, 0.0],
            [
                0.5 * (b2 - v / c),
                -0.5 * b1 * u,
                -0.5 * (b1 * v - 1.0 / c),
                0.5 * b1,
            ],
        ];
        Eigen {
            left,
            right,
            lambda: [v - c, v, v, v + c],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_state3(rng: &mut ChaCha8Rng, gas: &Euler) -> [f64; 3] {
        gas.prim_to_cons3(
            rng.gen_range(0.1..5.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(0.1..10.0),
        )
    }

    fn random_state4(rng: &mut ChaCha8Rng, gas: &Euler) -> [f64; 4] {
        gas.prim_to_cons4(
            rng.gen_range(0.1..5.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(0.1..10.0),
        )
    }

    #[test]
    fn scalar_models() {
        assert_eq!(ScalarModel::Advection.flux(2.5), 2.5);
        assert_eq!(ScalarModel::Advection.speed(-7.0), 1.0);
        assert_eq!(ScalarModel::Burgers.flux(3.0), 4.5);
        assert_eq!(ScalarModel::Burgers.speed(-3.0), 3.0);
    }

    #[test]
    fn lf_split_recombines_and_upwinds() {
        let (fp, fm) = lf_split(4.5, 3.0, 3.0);
        assert_eq!(fp + fm, 4.5);
        // Burgers with alpha >= |u|: f+ nondecreasing, f- nonincreasing
        let model = ScalarModel::Burgers;
        let alpha = 2.0;
        let mut prev = f64::NEG_INFINITY;
        let mut prev_m = f64::INFINITY;
        for i in 0..=100 {
            let u = -2.0 + 4.0 * i as f64 / 100.0;
            let (p, m) = lf_split(model.flux(u), u, alpha);
            assert!(p >= prev - 1e-12);
            assert!(m <= prev_m + 1e-12);
            prev = p;
            prev_m = m;
        }
    }

    #[test]
    fn prim_cons_roundtrip() {
        let gas = Euler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let (rho, u, p) = (
                rng.gen_range(0.01..10.0),
                rng.gen_range(-5.0..5.0),
                rng.gen_range(0.01..100.0),
            );
            let s = gas.prim_to_cons3(rho, u, p);
            let (r2, u2, p2) = gas.cons_to_prim3(&s);
            assert_relative_eq!(r2, rho, max_relative = 1e-14);
            assert_relative_eq!(u2, u, max_relative = 1e-13);
            assert_relative_eq!(p2, p, max_relative = 1e-12);

            let v = rng.gen_range(-5.0..5.0);
            let s4 = gas.prim_to_cons4(rho, u, v, p);
            let (r4, u4, v4, p4) = gas.cons_to_prim4(&s4);
            assert_relative_eq!(r4, rho, max_relative = 1e-14);
            assert_relative_eq!(u4, u, max_relative = 1e-13);
            assert_relative_eq!(v4, v, max_relative = 1e-13);
            assert_relative_eq!(p4, p, max_relative = 1e-12);
        }
    }

    #[test]
    fn flux_values() {
        let gas = Euler::default();
        // rho=2, u=3, p=5: E = 12.5 + 9 = 21.5
        let s = gas.prim_to_cons3(2.0, 3.0, 5.0);
        assert_relative_eq!(s[2], 21.5, max_relative = 1e-14);
        let f = gas.flux3(&s);
        assert_relative_eq!(f[0], 6.0, max_relative = 1e-14);
        assert_relative_eq!(f[1], 23.0, max_relative = 1e-14);
        assert_relative_eq!(f[2], 79.5, max_relative = 1e-14);
        assert_relative_eq!(gas.sound_speed(2.0, 5.0), 3.5f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(gas.max_speed3(&s), 3.0 + 3.5f64.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn flux4_reduces_to_flux3() {
        // zero transverse velocity: x-flux carries the 1D flux
        let gas = Euler::default();
        let s3 = gas.prim_to_cons3(1.2, -0.7, 2.3);
        let s4 = gas.prim_to_cons4(1.2, -0.7, 0.0, 2.3);
        let f3 = gas.flux3(&s3);
        let f4 = gas.flux4_x(&s4);
        assert_relative_eq!(f4[0], f3[0], max_relative = 1e-14);
        assert_relative_eq!(f4[1], f3[1], max_relative = 1e-14);
        assert_eq!(f4[2], 0.0);
        assert_relative_eq!(f4[3], f3[2], max_relative = 1e-14);
    }

    #[test]
    fn flux_y_is_permuted_flux_x() {
        let gas = Euler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let s = random_state4(&mut rng, &gas);
            let swapped = [s[0], s[2], s[1], s[3]];
            let gy = gas.flux4_y(&s);
            let fx = gas.flux4_x(&swapped);
            let expect = [fx[0], fx[2], fx[1], fx[3]];
            for k in 0..4 {
                assert_relative_eq!(gy[k], expect[k], max_relative = 1e-13, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn eigensystem3_inverse_pair() {
        let gas = Euler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..1000 {
            let e = gas.eigensystem3(&random_state3(&mut rng, &gas));
            for i in 0..3 {
                for j in 0..3 {
                    let dot: f64 = (0..3).map(|k| e.left[i][k] * e.right[k][j]).sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(dot, want, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn eigensystem4_inverse_pairs() {
        let gas = Euler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..1000 {
            let s = random_state4(&mut rng, &gas);
            for e in [gas.eigensystem4_x(&s), gas.eigensystem4_y(&s)] {
                for i in 0..4 {
                    for j in 0..4 {
                        let dot: f64 = (0..4).map(|k| e.left[i][k] * e.right[k][j]).sum();
                        let want = if i == j { 1.0 } else { 0.0 };
                        assert_abs_diff_eq!(dot, want, epsilon = 1e-11);
                    }
                }
            }
        }
    }

    #[test]
    fn eigensystem3_diagonalizes_jacobian() {
        // R diag(lambda) L must act like the flux Jacobian: compare with a
        // centred difference of the flux in a random direction.
        let gas = Euler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        for _ in 0..200 {
            let s = random_state3(&mut rng, &gas);
            let e = gas.eigensystem3(&s);
            let dir: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            let h = 1e-5;
            let sp: [f64; 3] = std::array::from_fn(|k| s[k] + h * dir[k]);
            let sm: [f64; 3] = std::array::from_fn(|k| s[k] - h * dir[k]);
            let (fp, fm) = (gas.flux3(&sp), gas.flux3(&sm));
            let fd: [f64; 3] = std::array::from_fn(|k| (fp[k] - fm[k]) / (2.0 * h));

            let mut w = e.to_char(&dir);
            for k in 0..3 {
                w[k] *= e.lambda[k];
            }
            let av = e.from_char(&w);
            for k in 0..3 {
                assert_relative_eq!(av[k], fd[k], max_relative = 1e-5, epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn eigensystem4_diagonalizes_jacobians() {
        let gas = Euler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(46);
        for _ in 0..200 {
            let s = random_state4(&mut rng, &gas);
            let dir: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            let h = 1e-5;
            let sp: [f64; 4] = std::array::from_fn(|k| s[k] + h * dir[k]);
            let sm: [f64; 4] = std::array::from_fn(|k| s[k] - h * dir[k]);
            for (e, flux) in [
                (gas.eigensystem4_x(&s), Euler::flux4_x as fn(&Euler, &[f64; 4]) -> [f64; 4]),
                (gas.eigensystem4_y(&s), Euler::flux4_y as fn(&Euler, &[f64; 4]) -> [f64; 4]),
            ] {
                let (fp, fm) = (flux(&gas, &sp), flux(&gas, &sm));
                let fd: [f64; 4] = std::array::from_fn(|k| (fp[k] - fm[k]) / (2.0 * h));
                let mut w = e.to_char(&dir);
                for k in 0..4 {
                    w[k] *= e.lambda[k];
                }
                let av = e.from_char(&w);
                for k in 0..4 {
                    assert_relative_eq!(av[k], fd[k], max_relative = 1e-5, epsilon = 1e-6);
                }
            }
        }
    }

    #[test]
    fn checks_reject_nonphysical_states() {
        let gas = Euler::default();
        assert!(gas.check3(&gas.prim_to_cons3(1.0, 0.0, 1.0), "x").is_ok());
        assert!(gas.check3(&[-1.0, 0.0, 1.0], "x").is_err());
        assert!(gas.check3(&[1.0, 0.0, -1.0], "x").is_err());
        assert!(gas.check3(&[1.0, f64::NAN, 1.0], "x").is_err());
        assert!(gas.check4(&gas.prim_to_cons4(1.0, 0.0, 0.0, 1.0), "x").is_ok());
        assert!(gas.check4(&[1.0, 5.0, 0.0, 1.0], "x").is_err()); // negative internal energy
        assert!(Euler::new(1.0).is_err());
        assert!(Euler::new(1.4).is_ok());
    }
}
