//! Registry of benchmark problems.
//!
//! Every entry reproduces its experiment statement verbatim: domain,
//! initial condition, final time, time-step rule, default resolution,
//! boundary treatment, and the kind of reference solution available.

use crate::config::Resolution;
use anyhow::{anyhow, bail, Result};
use weno5_core::{
    fill2_outflow, Centering, Edge, Euler, Field2, Grid1D, Grid2D, ScalarModel, TimeStepRule,
};

/// What kind of reference solution a problem offers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReferenceKind {
    /// Closed-form exact solution evaluated directly.
    ClosedForm,
    /// Exact solution of the Euler Riemann problem (self-similar fan).
    ExactRiemann,
    /// High-resolution run: mapped weights on a 2000-cell grid.
    HighresM2000,
    /// No reference available.
    None,
}

/// Scalar-problem boundary treatment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarBc {
    Periodic,
    Outflow,
}

/// 2D boundary treatment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary2 {
    /// Zero-gradient (free stream) on all four edges.
    OutflowAll,
    /// Double Mach reflection: zero-gradient left/right, mixed
    /// Dirichlet/reflective bottom split at x = 1/6, and a top boundary
    /// following the exact oblique-shock motion.
    DoubleMach,
}

/// The model-specific part of a problem definition.
#[derive(Clone, Copy, Debug)]
pub enum ProblemKind {
    Scalar {
        model: ScalarModel,
        domain: (f64, f64),
        centering: Centering,
        bc: ScalarBc,
        ic: fn(f64) -> f64,
        /// Closed-form exact solution `u(x, t)`, when one exists.
        exact: Option<fn(f64, f64) -> f64>,
    },
    Euler1 {
        domain: (f64, f64),
        /// Primitive initial condition `(rho, u, P)(x)`.
        ic: fn(f64) -> (f64, f64, f64),
        /// Piecewise-constant Riemann data `(left, right)` split at x = 0,
        /// present exactly when the reference is the exact fan.
        riemann: Option<([f64; 3], [f64; 3])>,
    },
    Euler2 {
        domain: (f64, f64, f64, f64),
        /// Primitive initial condition `(rho, u, v, P)(x, y)`.
        ic: fn(f64, f64) -> (f64, f64, f64, f64),
        boundary: Boundary2,
    },
}

/// One benchmark problem.
#[derive(Clone, Copy, Debug)]
pub struct Problem {
    pub name: &'static str,
    pub description: &'static str,
    pub kind: ProblemKind,
    pub t_final: f64,
    pub rule: TimeStepRule,
    pub default_resolution: Resolution,
    pub reference: ReferenceKind,
}

impl Problem {
    pub fn grid1(&self, n: usize) -> Result<Grid1D> {
        match self.kind {
            ProblemKind::Scalar {
                domain, centering, ..
            } => Ok(Grid1D::new(domain.0, domain.1, n, centering)?),
            ProblemKind::Euler1 { domain, .. } => {
                Ok(Grid1D::new(domain.0, domain.1, n, Centering::Cell)?)
            }
            ProblemKind::Euler2 { .. } => bail!("{} is a 2D problem", self.name),
        }
    }

    pub fn grid2(&self, nx: usize, ny: usize) -> Result<Grid2D> {
        match self.kind {
            ProblemKind::Euler2 { domain, .. } => Ok(Grid2D::new(
                domain.0, domain.1, domain.2, domain.3, nx, ny,
            )?),
            _ => bail!("{} is a 1D problem", self.name),
        }
    }

    pub fn is_2d(&self) -> bool {
        matches!(self.kind, ProblemKind::Euler2 { .. })
    }
}

/// Resolution of the high-resolution mapped-weights reference runs.
pub const HIGHRES_REFERENCE_N: usize = 2000;

// --- initial conditions -------------------------------------------------

fn ic_advection(x: f64) -> f64 {
    (std::f64::consts::PI * x).sin()
}

fn exact_advection(x: f64, t: f64) -> f64 {
    weno5_core::advection_exact(x, t)
}

/// Jump-discontinuity data for the weight probe: a smooth profile with a
/// unit jump at x = 0.
fn ic_probe_jump(x: f64) -> f64 {
    let smooth = -(std::f64::consts::PI * x).sin() - 0.5 * x * x * x;
    if x >= 0.0 {
        smooth + 1.0
    } else {
        smooth
    }
}

/// The probe data advected periodically over [-1, 1].
fn exact_probe_jump(x: f64, t: f64) -> f64 {
    let wrapped = (x - t + 1.0).rem_euclid(2.0) - 1.0;
    ic_probe_jump(wrapped)
}

fn ic_burgers(x: f64) -> f64 {
    if x <= 0.0 {
        1.0
    } else {
        0.0
    }
}

fn exact_burgers(x: f64, t: f64) -> f64 {
    weno5_core::burgers_shock_exact(x, t)
}

const SOD_LEFT: [f64; 3] = [1.0, 0.0, 1.0];
const SOD_RIGHT: [f64; 3] = [0.125, 0.0, 0.1];
const LAX_LEFT: [f64; 3] = [0.445, 0.698, 3.528];
const LAX_RIGHT: [f64; 3] = [0.5, 0.0, 0.571];
const ONE23_LEFT: [f64; 3] = [1.0, -2.0, 0.4];
const ONE23_RIGHT: [f64; 3] = [1.0, 2.0, 0.4];

fn split_at_zero(x: f64, left: [f64; 3], right: [f64; 3]) -> (f64, f64, f64) {
    let s = if x <= 0.0 { left } else { right };
    (s[0], s[1], s[2])
}

fn ic_sod(x: f64) -> (f64, f64, f64) {
    split_at_zero(x, SOD_LEFT, SOD_RIGHT)
}

fn ic_lax(x: f64) -> (f64, f64, f64) {
    split_at_zero(x, LAX_LEFT, LAX_RIGHT)
}

fn ic_one23(x: f64) -> (f64, f64, f64) {
    split_at_zero(x, ONE23_LEFT, ONE23_RIGHT)
}

fn shock_entropy(x: f64, k: f64) -> (f64, f64, f64) {
    if x < -4.0 {
        (3.857143, 2.629369, 10.333333)
    } else {
        (1.0 + 0.2 * (k * x).sin(), 0.0, 1.0)
    }
}

fn ic_shock_entropy_k5(x: f64) -> (f64, f64, f64) {
    shock_entropy(x, 5.0)
}

fn ic_shock_entropy_k10(x: f64) -> (f64, f64, f64) {
    shock_entropy(x, 10.0)
}

fn ic_riemann2d(x: f64, y: f64) -> (f64, f64, f64, f64) {
    match (x < 0.8, y < 0.8) {
        (false, false) => (1.5, 0.0, 0.0, 1.5),
        (true, false) => (0.5323, 1.206, 0.0, 0.3),
        (true, true) => (0.138, 1.206, 1.206, 0.029),
        (false, true) => (0.5323, 0.0, 1.206, 0.3),
    }
}

/// Post-shock primitive state of the Mach 10 oblique shock (30 degrees
/// to the x-axis): (8, 8.25 cos θ, -8.25 sin θ, 116.5) with θ = π/6.
pub fn dmr_post_shock_prim() -> (f64, f64, f64, f64) {
    let theta = std::f64::consts::FRAC_PI_6;
    (8.0, 8.25 * theta.cos(), -8.25 * theta.sin(), 116.5)
}

/// Pre-shock (quiescent) primitive state.
pub fn dmr_pre_shock_prim() -> (f64, f64, f64, f64) {
    (1.4, 0.0, 0.0, 1.0)
}

fn ic_dmr(x: f64, y: f64) -> (f64, f64, f64, f64) {
    if x < 1.0 / 6.0 + y / 3.0f64.sqrt() {
        dmr_post_shock_prim()
    } else {
        dmr_pre_shock_prim()
    }
}

/// Shock abscissa of the oblique shock along the top boundary:
/// `x_s(t) = 1/6 + (1 + 20 t)/sqrt(3)` (normal speed 10 at 60 degrees
/// inclination entering through y = 1).
pub fn dmr_top_shock_x(t: f64) -> f64 {
    1.0 / 6.0 + (1.0 + 20.0 * t) / 3.0f64.sqrt()
}

/// Fill all ghost layers for the double Mach reflection problem at stage
/// time `t`. Order matters only in the corners, where the bottom/top
/// rules overwrite the zero-gradient columns with the physical states.
pub fn fill_dmr(u: &mut Field2<4>, grid: &Grid2D, gas: &Euler, t: f64) {
    let (rho, vx, vy, p) = dmr_post_shock_prim();
    let post = gas.prim_to_cons4(rho, vx, vy, p);
    let (rho, vx, vy, p) = dmr_pre_shock_prim();
    let pre = gas.prim_to_cons4(rho, vx, vy, p);

    fill2_outflow(u, Edge::Left);
    fill2_outflow(u, Edge::Right);

    let (nx, ny, ng) = (u.nx(), u.ny(), u.n_ghost());
    let split = 1.0 / 6.0;
    // Bottom: Dirichlet post-shock left of x = 1/6, reflective wall right
    // of it (mirror the interior row, negate the y-momentum).
    for pi in 0..nx + 2 * ng {
        let x = grid.ax + (pi as f64 - ng as f64 + 0.5) * grid.dx();
        for g in 0..ng {
            let ghost = if x < split {
                post
            } else {
                let mut s = u.at_padded(pi, ng + g);
                s[2] = -s[2];
                s
            };
            *u.at_padded_mut(pi, ng - 1 - g) = ghost;
        }
    }
    // Top: exact shock motion; post-shock left of x_s(t), pre-shock right.
    let xs = dmr_top_shock_x(t);
    for pi in 0..nx + 2 * ng {
        let x = grid.ax + (pi as f64 - ng as f64 + 0.5) * grid.dx();
        let ghost = if x < xs { post } else { pre };
        for g in 0..ng {
            *u.at_padded_mut(pi, ng + ny + g) = ghost;
        }
    }
}

/// Fill zero-gradient ghosts on all four edges.
pub fn fill_outflow_all(u: &mut Field2<4>) {
    fill2_outflow(u, Edge::Left);
    fill2_outflow(u, Edge::Right);
    fill2_outflow(u, Edge::Bottom);
    fill2_outflow(u, Edge::Top);
}

// --- the registry --------------------------------------------------------

pub static PROBLEMS: &[Problem] = &[
    Problem {
        name: "advection",
        description: "1D linear advection of sin(pi x) on [-1, 1], periodic, T = 2, \
                      dt = 0.4 dx^{5/3}; the convergence-study problem",
        kind: ProblemKind::Scalar {
            model: ScalarModel::Advection,
            domain: (-1.0, 1.0),
            centering: Centering::Node,
            bc: ScalarBc::Periodic,
            ic: ic_advection,
            exact: Some(exact_advection),
        },
        t_final: 2.0,
        rule: TimeStepRule::CTimesDxPow53(0.4),
        default_resolution: Resolution::OneD(320),
        reference: ReferenceKind::ClosedForm,
    },
    Problem {
        name: "probe-jump",
        description: "1D linear advection of -sin(pi x) - x^3/2 with a unit jump at \
                      x = 0 on [-1, 1], periodic; the weight-probe problem",
        kind: ProblemKind::Scalar {
            model: ScalarModel::Advection,
            domain: (-1.0, 1.0),
            centering: Centering::Cell,
            bc: ScalarBc::Periodic,
            ic: ic_probe_jump,
            exact: Some(exact_probe_jump),
        },
        t_final: 2.0,
        rule: TimeStepRule::CTimesDx(0.4),
        default_resolution: Resolution::OneD(200),
        reference: ReferenceKind::ClosedForm,
    },
    Problem {
        name: "burgers",
        description: "Burgers' equation with step data 1_{x <= 0} on [-1, 1], N = 40, \
                      T = 1, dt = 0.4 dx; right-moving shock at x = t/2",
        kind: ProblemKind::Scalar {
            model: ScalarModel::Burgers,
            domain: (-1.0, 1.0),
            centering: Centering::Cell,
            bc: ScalarBc::Outflow,
            ic: ic_burgers,
            exact: Some(exact_burgers),
        },
        t_final: 1.0,
        rule: TimeStepRule::CTimesDx(0.4),
        default_resolution: Resolution::OneD(40),
        reference: ReferenceKind::ClosedForm,
    },
    Problem {
        name: "sod",
        description: "Sod shock tube (1, 0, 1) / (0.125, 0, 0.1) split at x = 0 on \
                      [-5, 5], N = 200, T = 2, dt = 0.2 dx",
        kind: ProblemKind::Euler1 {
            domain: (-5.0, 5.0),
            ic: ic_sod,
            riemann: Some((SOD_LEFT, SOD_RIGHT)),
        },
        t_final: 2.0,
        rule: TimeStepRule::CTimesDx(0.2),
        default_resolution: Resolution::OneD(200),
        reference: ReferenceKind::ExactRiemann,
    },
    Problem {
        name: "lax",
        description: "Lax shock tube (0.445, 0.698, 3.528) / (0.5, 0, 0.571) split at \
                      x = 0 on [-5, 5], N = 200, T = 1.3, dt = 0.2 dx",
        kind: ProblemKind::Euler1 {
            domain: (-5.0, 5.0),
            ic: ic_lax,
            riemann: Some((LAX_LEFT, LAX_RIGHT)),
        },
        t_final: 1.3,
        rule: TimeStepRule::CTimesDx(0.2),
        default_resolution: Resolution::OneD(200),
        reference: ReferenceKind::ExactRiemann,
    },
    Problem {
        name: "123",
        description: "123 problem (1, -2, 0.4) / (1, 2, 0.4) split at x = 0 on [-5, 5], \
                      N = 200, T = 1, dt = 0.2 dx; strong double rarefaction",
        kind: ProblemKind::Euler1 {
            domain: (-5.0, 5.0),
            ic: ic_one23,
            riemann: Some((ONE23_LEFT, ONE23_RIGHT)),
        },
        t_final: 1.0,
        rule: TimeStepRule::CTimesDx(0.2),
        default_resolution: Resolution::OneD(200),
        reference: ReferenceKind::ExactRiemann,
    },
    Problem {
        name: "shock-entropy-k5",
        description: "Mach 3 shock / entropy-wave interaction, k = 5, on [-5, 5], \
                      N = 200, T = 2, dt = 0.05 dx; reference: mapped weights, N = 2000",
        kind: ProblemKind::Euler1 {
            domain: (-5.0, 5.0),
            ic: ic_shock_entropy_k5,
            riemann: None,
        },
        t_final: 2.0,
        rule: TimeStepRule::CTimesDx(0.05),
        default_resolution: Resolution::OneD(200),
        reference: ReferenceKind::HighresM2000,
    },
    Problem {
        name: "shock-entropy-k10",
        description: "Mach 3 shock / entropy-wave interaction, k = 10, on [-5, 5], \
                      N = 500, T = 2, dt = 0.05 dx; reference: mapped weights, N = 2000",
        kind: ProblemKind::Euler1 {
            domain: (-5.0, 5.0),
            ic: ic_shock_entropy_k10,
            riemann: None,
        },
        t_final: 2.0,
        rule: TimeStepRule::CTimesDx(0.05),
        default_resolution: Resolution::OneD(500),
        reference: ReferenceKind::HighresM2000,
    },
    Problem {
        name: "riemann2d",
        description: "2D Riemann problem with four quadrant states around (0.8, 0.8) \
                      on [0, 1]^2, 200x200, T = 0.8, dt = 0.2 min(dx, dy), free-stream \
                      boundaries",
        kind: ProblemKind::Euler2 {
            domain: (0.0, 1.0, 0.0, 1.0),
            ic: ic_riemann2d,
            boundary: Boundary2::OutflowAll,
        },
        t_final: 0.8,
        rule: TimeStepRule::CTimesMinDxDy(0.2),
        default_resolution: Resolution::TwoD(200, 200),
        reference: ReferenceKind::None,
    },
    Problem {
        name: "dmr",
        description: "Double Mach reflection of a Mach 10 oblique shock on \
                      [0, 4] x [0, 1], 480x119, T = 0.2, dt = 0.005 min(dx, dy)",
        kind: ProblemKind::Euler2 {
            domain: (0.0, 4.0, 0.0, 1.0),
            ic: ic_dmr,
            boundary: Boundary2::DoubleMach,
        },
        t_final: 0.2,
        rule: TimeStepRule::CTimesMinDxDy(0.005),
        default_resolution: Resolution::TwoD(480, 119),
        reference: ReferenceKind::None,
    },
];

/// Look up a problem by name.
pub fn find_problem(name: &str) -> Result<&'static Problem> {
    PROBLEMS.iter().find(|p| p.name == name).ok_or_else(|| {
        let names: Vec<&str> = PROBLEMS.iter().map(|p| p.name).collect();
        anyhow!(
            "unknown problem {name:?} (available: {})",
            names.join(", ")
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn get(name: &str) -> &'static Problem {
        find_problem(name).unwrap()
    }

    #[test]
    fn advection_entry_matches_statement() {
        let p = get("advection");
        assert_eq!(p.t_final, 2.0);
        assert_eq!(p.rule, TimeStepRule::CTimesDxPow53(0.4));
        match p.kind {
            ProblemKind::Scalar {
                model,
                domain,
                centering,
                bc,
                ic,
                exact,
            } => {
                assert_eq!(model, ScalarModel::Advection);
                assert_eq!(domain, (-1.0, 1.0));
                assert_eq!(centering, Centering::Node);
                assert_eq!(bc, ScalarBc::Periodic);
                assert_eq!(ic(0.5), 1.0);
                let e = exact.unwrap();
                assert!((e(0.25, 2.0) - (std::f64::consts::PI * 0.25).sin()).abs() < 1e-15);
            }
            _ => panic!("wrong kind"),
        }
        assert_eq!(p.reference, ReferenceKind::ClosedForm);
    }

    #[test]
    fn probe_grid_hits_the_table_abscissae() {
        let p = get("probe-jump");
        assert_eq!(p.default_resolution, Resolution::OneD(200));
        let g = p.grid1(200).unwrap();
        assert_eq!(g.dx(), 0.01);
        assert!((g.x(99) + 0.005).abs() < 1e-15);
        assert!((g.x(100) - 0.005).abs() < 1e-15);
        // jump sits between cells 99 and 100, and the data is periodic:
        // both endpoint limits evaluate to 0.5
        match p.kind {
            ProblemKind::Scalar { ic, .. } => {
                assert!((ic(-1.0) - 0.5).abs() < 1e-15);
                assert!((ic(1.0) - 0.5).abs() < 1e-15);
                assert_eq!(ic(0.0), 1.0);
                assert!(ic(-1e-12) < 0.5e-9);
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn burgers_entry_matches_statement() {
        let p = get("burgers");
        assert_eq!(p.t_final, 1.0);
        assert_eq!(p.rule, TimeStepRule::CTimesDx(0.4));
        assert_eq!(p.default_resolution, Resolution::OneD(40));
        match p.kind {
            ProblemKind::Scalar {
                model,
                domain,
                bc,
                ic,
                ..
            } => {
                assert_eq!(model, ScalarModel::Burgers);
                assert_eq!(domain, (-1.0, 1.0));
                assert_eq!(bc, ScalarBc::Outflow);
                assert_eq!(ic(0.0), 1.0);
                assert_eq!(ic(1e-12), 0.0);
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn shock_tube_entries_match_statements() {
        for (name, t, left, right) in [
            ("sod", 2.0, SOD_LEFT, SOD_RIGHT),
            ("lax", 1.3, LAX_LEFT, LAX_RIGHT),
            ("123", 1.0, ONE23_LEFT, ONE23_RIGHT),
        ] {
            let p = get(name);
            assert_eq!(p.t_final, t, "{name}");
            assert_eq!(p.rule, TimeStepRule::CTimesDx(0.2), "{name}");
            assert_eq!(p.default_resolution, Resolution::OneD(200), "{name}");
            assert_eq!(p.reference, ReferenceKind::ExactRiemann, "{name}");
            match p.kind {
                ProblemKind::Euler1 {
                    domain,
                    ic,
                    riemann,
                } => {
                    assert_eq!(domain, (-5.0, 5.0), "{name}");
                    assert_eq!(riemann, Some((left, right)), "{name}");
                    // left state applies at x = 0 (the split is x <= 0)
                    assert_eq!(ic(0.0), (left[0], left[1], left[2]), "{name}");
                    assert_eq!(ic(1.0), (right[0], right[1], right[2]), "{name}");
                }
                _ => panic!("wrong kind for {name}"),
            }
        }
    }

    #[test]
    fn shock_entropy_entries_match_statements() {
        for (name, k, n) in [("shock-entropy-k5", 5.0, 200), ("shock-entropy-k10", 10.0, 500)] {
            let p = get(name);
            assert_eq!(p.t_final, 2.0, "{name}");
            assert_eq!(p.rule, TimeStepRule::CTimesDx(0.05), "{name}");
            assert_eq!(p.default_resolution, Resolution::OneD(n), "{name}");
            assert_eq!(p.reference, ReferenceKind::HighresM2000, "{name}");
            match p.kind {
                ProblemKind::Euler1 { ic, riemann, .. } => {
                    assert_eq!(riemann, None, "{name}");
                    assert_eq!(ic(-4.5), (3.857143, 2.629369, 10.333333), "{name}");
                    let (rho, u, pr) = ic(-4.0);
                    assert!((rho - (1.0 + 0.2 * (-4.0 * f64::from(k)).sin())).abs() < 1e-15);
                    assert_eq!((u, pr), (0.0, 1.0));
                }
                _ => panic!("wrong kind for {name}"),
            }
        }
        assert_eq!(HIGHRES_REFERENCE_N, 2000);
    }

    #[test]
    fn riemann2d_entry_matches_statement() {
        let p = get("riemann2d");
        assert_eq!(p.t_final, 0.8);
        assert_eq!(p.rule, TimeStepRule::CTimesMinDxDy(0.2));
        assert_eq!(p.default_resolution, Resolution::TwoD(200, 200));
        match p.kind {
            ProblemKind::Euler2 {
                domain,
                ic,
                boundary,
            } => {
                assert_eq!(domain, (0.0, 1.0, 0.0, 1.0));
                assert_eq!(boundary, Boundary2::OutflowAll);
                assert_eq!(ic(0.9, 0.9), (1.5, 0.0, 0.0, 1.5));
                assert_eq!(ic(0.7, 0.9), (0.5323, 1.206, 0.0, 0.3));
                assert_eq!(ic(0.7, 0.7), (0.138, 1.206, 1.206, 0.029));
                assert_eq!(ic(0.9, 0.7), (0.5323, 0.0, 1.206, 0.3));
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn dmr_entry_matches_statement() {
        let p = get("dmr");
        assert_eq!(p.t_final, 0.2);
        assert_eq!(p.rule, TimeStepRule::CTimesMinDxDy(0.005));
        assert_eq!(p.default_resolution, Resolution::TwoD(480, 119));
        match p.kind {
            ProblemKind::Euler2 {
                domain,
                ic,
                boundary,
            } => {
                assert_eq!(domain, (0.0, 4.0, 0.0, 1.0));
                assert_eq!(boundary, Boundary2::DoubleMach);
                let (rho, u, v, pr) = ic(0.0, 0.0);
                assert_eq!(rho, 8.0);
                assert!((u - 8.25 * (std::f64::consts::PI / 6.0).cos()).abs() < 1e-15);
                assert!((v + 8.25 * (std::f64::consts::PI / 6.0).sin()).abs() < 1e-15);
                assert_eq!(pr, 116.5);
                assert_eq!(ic(3.0, 0.0), (1.4, 0.0, 0.0, 1.0));
                // along y = 1 the interface sits at x = 1/6 + 1/sqrt(3)
                let split = 1.0 / 6.0 + 1.0 / 3.0f64.sqrt();
                assert_eq!(ic(split - 1e-9, 1.0).0, 8.0);
                assert_eq!(ic(split + 1e-9, 1.0).0, 1.4);
            }
            _ => panic!("wrong kind"),
        }
        // the top-boundary shock enters at the same abscissa and moves
        // right with speed 20/sqrt(3)
        assert!((dmr_top_shock_x(0.0) - (1.0 / 6.0 + 1.0 / 3.0f64.sqrt())).abs() < 1e-15);
        let v = (dmr_top_shock_x(0.2) - dmr_top_shock_x(0.1)) / 0.1;
        assert!((v - 20.0 / 3.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn dmr_fill_splits_the_bottom_and_tracks_the_top() {
        let gas = Euler::default();
        let p = get("dmr");
        let grid = p.grid2(48, 12).unwrap();
        let mut u: Field2<4> = Field2::new(48, 12, 3);
        for j in 0..12 {
            for i in 0..48 {
                let (rho, vx, vy, pr) = ic_dmr(grid.x(i), grid.y(j));
                *u.at_mut(i, j) = gas.prim_to_cons4(rho, vx, vy, pr);
            }
        }
        fill_dmr(&mut u, &grid, &gas, 0.0);

        let ng = 3;
        let post = {
            let (rho, vx, vy, pr) = dmr_post_shock_prim();
            gas.prim_to_cons4(rho, vx, vy, pr)
        };
        // bottom-left ghost (x = 0.0417 < 1/6): post-shock Dirichlet
        assert_eq!(u.at_padded(ng, ng - 1), post);
        // bottom ghost right of the split mirrors the first interior row
        // with the y-momentum negated (x = 2.04 at i = 24)
        let interior = u.at(24, 0);
        let ghost = u.at_padded(ng + 24, ng - 1);
        assert_eq!(ghost[0], interior[0]);
        assert_eq!(ghost[1], interior[1]);
        assert_eq!(ghost[2], -interior[2]);
        assert_eq!(ghost[3], interior[3]);
        // deeper ghosts mirror deeper rows
        assert_eq!(u.at_padded(ng + 24, ng - 2)[0], u.at(24, 1)[0]);
        // top ghosts at t = 0: post-shock left of x_s(0) = 0.744,
        // pre-shock right of it
        let pre = {
            let (rho, vx, vy, pr) = dmr_pre_shock_prim();
            gas.prim_to_cons4(rho, vx, vy, pr)
        };
        assert_eq!(u.at_padded(ng, ng + 12), post); // x = 0.0417
        assert_eq!(u.at_padded(ng + 47, ng + 12), pre); // x = 3.96
        // at a later stage time the top split has moved right
        fill_dmr(&mut u, &grid, &gas, 0.1);
        let moved = dmr_top_shock_x(0.1);
        for i in 0..48 {
            let want = if grid.x(i) < moved { post } else { pre };
            assert_eq!(u.at_padded(ng + i, ng + 12), want, "column {i}");
        }
        // left/right ghosts are zero-gradient copies of the edge cells
        assert_eq!(u.at_padded(ng - 1, ng + 5), u.at(0, 5));
        assert_eq!(u.at_padded(ng + 48, ng + 5), u.at(47, 5));
    }

    #[test]
    fn registry_names_are_unique_and_resolvable() {
        let mut names: Vec<&str> = PROBLEMS.iter().map(|p| p.name).collect();
        names.sort_unstable();
        let mut deduped = names.clone();
        deduped.dedup();
        assert_eq!(names, deduped, "duplicate problem names");
        for p in PROBLEMS {
            assert!(std::ptr::eq(find_problem(p.name).unwrap(), p));
        }
        assert!(find_problem("no-such-problem").is_err());
    }
}
