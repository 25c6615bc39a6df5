//! Exact and reference solutions: closed forms for the scalar problems and
//! an exact Riemann solver for the 1D Euler equations (pressure-function
//! root solve in the style of Toro's book, with a safeguarded Newton
//! iteration bracketed by bisection).

use crate::error::{Error, Result};

/// Exact solution of `u_t + u_x = 0` with `u(x,0) = sin(πx)`.
pub fn advection_exact(x: f64, t: f64) -> f64 {
    (std::f64::consts::PI * (x - t)).sin()
}

/// Exact solution of the Burgers Riemann problem `u(x,0) = 1_{x≤0}`: a
/// right-moving shock at `x = t/2` (boundary inclusive on the left).
pub fn burgers_shock_exact(x: f64, t: f64) -> f64 {
    if x - 0.5 * t <= 0.0 {
        1.0
    } else {
        0.0
    }
}

/// Piecewise-linear interpolation with clamped ends; `xs` must be strictly
/// increasing and as long as `ys`.
pub fn interp_linear(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    debug_assert!(!xs.is_empty());
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[xs.len() - 1] {
        return ys[ys.len() - 1];
    }
    let hi = xs.partition_point(|&v| v < x).max(1);
    let (x0, x1) = (xs[hi - 1], xs[hi]);
    let w = (x - x0) / (x1 - x0);
    ys[hi - 1] * (1.0 - w) + ys[hi] * w
}

/// Wave family on one side of the contact discontinuity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveKind {
    Shock,
    Rarefaction,
}

/// Solved Riemann fan for the 1D Euler equations. States are primitive
/// `[ρ, u, p]` triples.
#[derive(Clone, Copy, Debug)]
pub struct RiemannFan {
    pub gamma: f64,
    pub left: [f64; 3],
    pub right: [f64; 3],
    pub p_star: f64,
    pub u_star: f64,
    pub rho_star_left: f64,
    pub rho_star_right: f64,
    pub left_wave: WaveKind,
    pub right_wave: WaveKind,
}

/// One side of the pressure function and its derivative: the velocity jump
/// carried by the left or right wave if the star pressure were `p`.
fn side_fn(p: f64, rho_k: f64, p_k: f64, gamma: f64) -> (f64, f64) {
    if p > p_k {
        // shock branch (Rankine–Hugoniot)
        let a = 2.0 / ((gamma + 1.0) * rho_k);
        let b = (gamma - 1.0) / (gamma + 1.0) * p_k;
        let q = (a / (p + b)).sqrt();
        ((p - p_k) * q, q * (1.0 - 0.5 * (p - p_k) / (b + p)))
    } else {
        // rarefaction branch (isentrope)
        let c = (gamma * p_k / rho_k).sqrt();
        let z = (gamma - 1.0) / (2.0 * gamma);
        let f = 2.0 * c / (gamma - 1.0) * ((p / p_k).powf(z) - 1.0);
        let df = (p / p_k).powf(-(gamma + 1.0) / (2.0 * gamma)) / (rho_k * c);
        (f, df)
    }
}

fn pressure_fn(p: f64, l: &[f64; 3], r: &[f64; 3], gamma: f64) -> f64 {
    side_fn(p, l[0], l[2], gamma).0 + side_fn(p, r[0], r[2], gamma).0 + (r[1] - l[1])
}

impl RiemannFan {
    /// Residual of the pressure function at the solved `p_star`.
    pub fn residual(&self) -> f64 {
        pressure_fn(self.p_star, &self.left, &self.right, self.gamma).abs()
    }
}

fn check_prim(s: &[f64; 3], side: &str) -> Result<()> {
    if !(s[0].is_finite() && s[0] > 0.0 && s[2].is_finite() && s[2] > 0.0 && s[1].is_finite()) {
        return Err(Error::NonPhysical {
            quantity: "primitive state",
            value: if s[0] <= 0.0 { s[0] } else { s[2] },
            location: format!("{side} Riemann state"),
        });
    }
    Ok(())
}

/// Solve the Riemann problem exactly. `left`/`right` are primitive
/// `[ρ, u, p]` states; fails on vacuum-generating data.
pub fn solve_riemann_euler(left: [f64; 3], right: [f64; 3], gamma: f64) -> Result<RiemannFan> {
    check_prim(&left, "left")?;
    check_prim(&right, "right")?;
    let cl = (gamma * left[2] / left[0]).sqrt();
    let cr = (gamma * right[2] / right[0]).sqrt();
    let du = right[1] - left[1];
    if 2.0 * (cl + cr) / (gamma - 1.0) <= du {
        return Err(Error::Vacuum(format!(
            "data generate vacuum: velocity separation {du} exceeds {}",
            2.0 * (cl + cr) / (gamma - 1.0)
        )));
    }

    // two-rarefaction initial guess
    let z = (gamma - 1.0) / (2.0 * gamma);
    let p_tr = ((cl + cr - 0.5 * (gamma - 1.0) * du)
        / (cl / left[2].powf(z) + cr / right[2].powf(z)))
    .powf(1.0 / z);

    // bracket the root: f is increasing, f(0+) < 0 without vacuum
    let mut lo = 0.0;
    let mut hi = left[2].max(right[2]).max(p_tr).max(1e-12);
    for _ in 0..200 {
        if pressure_fn(hi, &left, &right, gamma) > 0.0 {
            break;
        }
        lo = hi;
        hi *= 2.0;
    }

    let mut p = p_tr.clamp(lo.max(1e-300), hi);
    let scale = 1.0 + cl + cr + du.abs();
    for _ in 0..200 {
        let (fl, dfl) = side_fn(p, left[0], left[2], gamma);
        let (fr, dfr) = side_fn(p, right[0], right[2], gamma);
        let f = fl + fr + du;
        if f > 0.0 {
            hi = p;
        } else {
            lo = p;
        }
        if f.abs() < 1e-15 * scale {
            break;
        }
        let step = f / (dfl + dfr);
        let mut next = p - step;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if next == p {
            break;
        }
        p = next;
    }

    let (fl, _) = side_fn(p, left[0], left[2], gamma);
    let (fr, _) = side_fn(p, right[0], right[2], gamma);
    let u_star = 0.5 * (left[1] + right[1]) + 0.5 * (fr - fl);

    let gr = (gamma - 1.0) / (gamma + 1.0);
    let star_rho = |side: &[f64; 3]| {
        let ratio = p / side[2];
        if p > side[2] {
            side[0] * ((ratio + gr) / (gr * ratio + 1.0))
        } else {
            side[0] * ratio.powf(1.0 / gamma)
        }
    };
    let kind = |p_k: f64| {
        if p > p_k {
            WaveKind::Shock
        } else {
            WaveKind::Rarefaction
        }
    };

    Ok(RiemannFan {
        gamma,
        left,
        right,
        p_star: p,
        u_star,
        rho_star_left: star_rho(&left),
        rho_star_right: star_rho(&right),
        left_wave: kind(left[2]),
        right_wave: kind(right[2]),
    })
}

/// Sample the self-similar solution at `ξ = x/t`, returning `[ρ, u, p]`.
pub fn sample_riemann(fan: &RiemannFan, xi: f64) -> [f64; 3] {
    let g = fan.gamma;
    let z = (g - 1.0) / (2.0 * g);
    if xi <= fan.u_star {
        let [rho, u, p] = fan.left;
        let c = (g * p / rho).sqrt();
        match fan.left_wave {
            WaveKind::Shock => {
                let s = u - c * ((g + 1.0) / (2.0 * g) * fan.p_star / p + z).sqrt();
                if xi < s {
                    fan.left
                } else {
                    [fan.rho_star_left, fan.u_star, fan.p_star]
                }
            }
            WaveKind::Rarefaction => {
                let head = u - c;
                let c_star = c * (fan.p_star / p).powf(z);
                let tail = fan.u_star - c_star;
                if xi <= head {
                    fan.left
                } else if xi >= tail {
                    [fan.rho_star_left, fan.u_star, fan.p_star]
                } else {
                    let f = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * c) * (u - xi);
                    [
                        rho * f.powf(2.0 / (g - 1.0)),
                        2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * u + xi),
                        p * f.powf(2.0 * g / (g - 1.0)),
                    ]
                }
            }
        }
    } else {
        let [rho, u, p] = fan.right;
        let c = (g * p / rho).sqrt();
        match fan.right_wave {
            WaveKind::Shock => {
                let s = u + c * ((g + 1.0) / (2.0 * g) * fan.p_star / p + z).sqrt();
                if xi > s {
                    fan.right
                } else {
                    [fan.rho_star_right, fan.u_star, fan.p_star]
                }
            }
            WaveKind::Rarefaction => {
                let head = u + c;
                let c_star = c * (fan.p_star / p).powf(z);
                let tail = fan.u_star + c_star;
                if xi >= head {
                    fan.right
                } else if xi <= tail {
                    [fan.rho_star_right, fan.u_star, fan.p_star]
                } else {
                    let f = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * c) * (u - xi);
                    [
                        rho * f.powf(2.0 / (g - 1.0)),
                        2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * u + xi),
                        p * f.powf(2.0 * g / (g - 1.0)),
                    ]
                }
            }
        }
    }
}
