//! In-memory execution of registered problems: sets up the grid, initial
//! condition, and boundary closure, marches to the final time, and
//! converts the state to primitive columns plus an optional reference.

use crate::config::Resolution;
use crate::registry::{
    fill_dmr, fill_outflow_all, Boundary2, Problem, ProblemKind, ReferenceKind, ScalarBc,
    HIGHRES_REFERENCE_N,
};
use anyhow::{bail, Context, Result};
use std::time::Instant;
use weno5_core::{
    advance_euler1, advance_euler2, advance_scalar, interp_linear, sample_riemann,
    solve_riemann_euler, BoundarySpec1, Centering, Euler, Field1, Field2, Grid1D, Grid2D,
    SchemeSpec, TimeStepRule, WeightFamily, N_GHOST,
};

/// A finished scalar run.
pub struct SolvedScalar {
    pub grid: Grid1D,
    /// Row coordinates; node-centered grids repeat the periodic endpoint.
    pub xs: Vec<f64>,
    pub u: Vec<f64>,
    /// Exact solution sampled at `xs`, when the problem has one.
    pub exact: Option<Vec<f64>>,
    pub steps: usize,
    pub wall_seconds: f64,
    pub t_final: f64,
}

/// Reference curve for a 1D Euler run, sampled on the run's grid.
pub struct RefCurve {
    pub rho: Vec<f64>,
    pub u: Vec<f64>,
    pub p: Vec<f64>,
}

/// A finished 1D Euler run in primitive variables.
pub struct SolvedEuler1 {
    pub grid: Grid1D,
    pub xs: Vec<f64>,
    pub rho: Vec<f64>,
    pub u: Vec<f64>,
    pub p: Vec<f64>,
    pub reference: Option<RefCurve>,
    pub steps: usize,
    pub wall_seconds: f64,
    pub t_final: f64,
}

/// A finished 2D Euler run in primitive variables, row-major (`j * nx + i`).
pub struct SolvedEuler2 {
    pub grid: Grid2D,
    pub rho: Vec<f64>,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub p: Vec<f64>,
    pub steps: usize,
    pub wall_seconds: f64,
    pub t_final: f64,
}

pub enum Solved {
    Scalar(SolvedScalar),
    Euler1(SolvedEuler1),
    Euler2(SolvedEuler2),
}

impl Solved {
    pub fn steps(&self) -> usize {
        match self {
            Solved::Scalar(s) => s.steps,
            Solved::Euler1(s) => s.steps,
            Solved::Euler2(s) => s.steps,
        }
    }

    pub fn wall_seconds(&self) -> f64 {
        match self {
            Solved::Scalar(s) => s.wall_seconds,
            Solved::Euler1(s) => s.wall_seconds,
            Solved::Euler2(s) => s.wall_seconds,
        }
    }

    pub fn t_final(&self) -> f64 {
        match self {
            Solved::Scalar(s) => s.t_final,
            Solved::Euler1(s) => s.t_final,
            Solved::Euler2(s) => s.t_final,
        }
    }
}

/// Apply the optional overrides to a problem's time parameters.
pub fn effective_time(
    problem: &Problem,
    t_override: Option<f64>,
    dt_coefficient_override: Option<f64>,
) -> Result<(f64, TimeStepRule)> {
    let t_final = t_override.unwrap_or(problem.t_final);
    if !(t_final.is_finite() && t_final > 0.0) {
        bail!("final time must be positive and finite, got {t_final}");
    }
    let rule = match dt_coefficient_override {
        Some(c) => problem.rule.with_coefficient(c)?,
        None => problem.rule,
    };
    Ok((t_final, rule))
}

/// Run `problem` at `resolution` with `scheme`. `with_reference` controls
/// whether the (possibly expensive) reference solution is computed.
pub fn solve(
    problem: &Problem,
    scheme: &SchemeSpec,
    resolution: Resolution,
    t_override: Option<f64>,
    dt_coefficient_override: Option<f64>,
    with_reference: bool,
) -> Result<Solved> {
    let (t_final, rule) = effective_time(problem, t_override, dt_coefficient_override)?;
    match &problem.kind {
        ProblemKind::Scalar {
            model,
            centering,
            bc,
            ic,
            exact,
            ..
        } => {
            let n = match resolution {
                Resolution::OneD(n) => n,
                Resolution::TwoD(..) => bail!("{} needs a 1D resolution", problem.name),
            };
            let grid = problem.grid1(n)?;
            let mut u: Field1<1> = Field1::new(n, N_GHOST);
            for i in 0..n {
                u.interior_mut()[i] = [ic(grid.x(i))];
            }
            let spec = match bc {
                ScalarBc::Periodic => BoundarySpec1::periodic(),
                ScalarBc::Outflow => BoundarySpec1::outflow(),
            };
            let start = Instant::now();
            let stats = advance_scalar(
                &mut u, &grid, *model, &spec, scheme, &rule, t_final, None, None,
            )
            .with_context(|| format!("running {}", problem.name))?;
            let wall = start.elapsed().as_secs_f64();

            let rows = match centering {
                Centering::Node => n + 1,
                Centering::Cell => n,
            };
            let xs: Vec<f64> = (0..rows)
                .map(|i| grid.a + i as f64 * grid.dx() + cell_offset(&grid))
                .collect();
            let vals: Vec<f64> = (0..rows).map(|i| u.interior()[i % n][0]).collect();
            let exact_vals = exact.map(|e| xs.iter().map(|&x| e(x, t_final)).collect());
            Ok(Solved::Scalar(SolvedScalar {
                grid,
                xs,
                u: vals,
                exact: exact_vals,
                steps: stats.steps,
                wall_seconds: wall,
                t_final,
            }))
        }
        ProblemKind::Euler1 { ic, riemann, .. } => {
            let n = match resolution {
                Resolution::OneD(n) => n,
                Resolution::TwoD(..) => bail!("{} needs a 1D resolution", problem.name),
            };
            let gas = Euler::default();
            let grid = problem.grid1(n)?;
            let mut u: Field1<3> = Field1::new(n, N_GHOST);
            for i in 0..n {
                let (rho, vel, p) = ic(grid.x(i));
                u.interior_mut()[i] = gas.prim_to_cons3(rho, vel, p);
            }
            let spec = BoundarySpec1::outflow();
            let start = Instant::now();
            let stats = advance_euler1(
                &mut u, &grid, &gas, &spec, scheme, &rule, t_final, None,
            )
            .with_context(|| format!("running {}", problem.name))?;
            let wall = start.elapsed().as_secs_f64();

            let xs = grid.xs();
            let mut rho = Vec::with_capacity(n);
            let mut vel = Vec::with_capacity(n);
            let mut p = Vec::with_capacity(n);
            for s in u.interior() {
                let (r, v, q) = gas.cons_to_prim3(s);
                rho.push(r);
                vel.push(v);
                p.push(q);
            }

            let reference = if with_reference {
                match problem.reference {
                    ReferenceKind::ExactRiemann => {
                        let (left, right) = riemann
                            .ok_or_else(|| anyhow::anyhow!("missing Riemann data"))?;
                        Some(exact_fan_curve(left, right, gas.gamma, &xs, t_final)?)
                    }
                    ReferenceKind::HighresM2000 => Some(highres_reference(
                        problem,
                        t_override,
                        dt_coefficient_override,
                        &xs,
                    )?),
                    _ => None,
                }
            } else {
                None
            };

            Ok(Solved::Euler1(SolvedEuler1 {
                grid,
                xs,
                rho,
                u: vel,
                p,
                reference,
                steps: stats.steps,
                wall_seconds: wall,
                t_final,
            }))
        }
        ProblemKind::Euler2 { ic, boundary, .. } => {
            let (nx, ny) = match resolution {
                Resolution::TwoD(nx, ny) => (nx, ny),
                Resolution::OneD(_) => bail!("{} needs an NXxNY resolution", problem.name),
            };
            let gas = Euler::default();
            let grid = problem.grid2(nx, ny)?;
            let mut u: Field2<4> = Field2::new(nx, ny, N_GHOST);
            for j in 0..ny {
                for i in 0..nx {
                    let (rho, vx, vy, p) = ic(grid.x(i), grid.y(j));
                    *u.at_mut(i, j) = gas.prim_to_cons4(rho, vx, vy, p);
                }
            }
            let boundary = *boundary;
            let fill = move |f: &mut Field2<4>, t: f64| match boundary {
                Boundary2::OutflowAll => fill_outflow_all(f),
                Boundary2::DoubleMach => fill_dmr(f, &grid, &gas, t),
            };
            let start = Instant::now();
            let stats = advance_euler2(&mut u, &grid, &gas, scheme, &rule, t_final, &fill, None)
                .with_context(|| format!("running {}", problem.name))?;
            let wall = start.elapsed().as_secs_f64();

            let mut rho = Vec::with_capacity(nx * ny);
            let mut vx = Vec::with_capacity(nx * ny);
            let mut vy = Vec::with_capacity(nx * ny);
            let mut p = Vec::with_capacity(nx * ny);
            for j in 0..ny {
                for i in 0..nx {
                    let (r, a, b, q) = gas.cons_to_prim4(&u.at(i, j));
                    rho.push(r);
                    vx.push(a);
                    vy.push(b);
                    p.push(q);
                }
            }
            Ok(Solved::Euler2(SolvedEuler2 {
                grid,
                rho,
                u: vx,
                v: vy,
                p,
                steps: stats.steps,
                wall_seconds: wall,
                t_final,
            }))
        }
    }
}

fn cell_offset(grid: &Grid1D) -> f64 {
    match grid.centering {
        Centering::Node => 0.0,
        Centering::Cell => 0.5 * grid.dx(),
    }
}

/// Sample the exact Riemann fan at `xs` for time `t` (split at x = 0).
fn exact_fan_curve(
    left: [f64; 3],
    right: [f64; 3],
    gamma: f64,
    xs: &[f64],
    t: f64,
) -> Result<RefCurve> {
    let fan = solve_riemann_euler(left, right, gamma)?;
    let mut rho = Vec::with_capacity(xs.len());
    let mut u = Vec::with_capacity(xs.len());
    let mut p = Vec::with_capacity(xs.len());
    for &x in xs {
        let s = sample_riemann(&fan, x / t);
        rho.push(s[0]);
        u.push(s[1]);
        p.push(s[2]);
    }
    Ok(RefCurve { rho, u, p })
}

/// High-resolution reference with the problem's default time parameters,
/// for callers that share one curve across several runs.
pub fn highres_reference_for(problem: &Problem, xs: &[f64]) -> Result<RefCurve> {
    highres_reference(problem, None, None, xs)
}

/// High-resolution mapped-weights reference: the same problem at
/// N = 2000, linearly interpolated onto the run's coordinates.
fn highres_reference(
    problem: &Problem,
    t_override: Option<f64>,
    dt_coefficient_override: Option<f64>,
    xs: &[f64],
) -> Result<RefCurve> {
    let m = SchemeSpec::preset(WeightFamily::M);
    let solved = solve(
        problem,
        &m,
        Resolution::OneD(HIGHRES_REFERENCE_N),
        t_override,
        dt_coefficient_override,
        false,
    )?;
    let fine = match solved {
        Solved::Euler1(s) => s,
        _ => bail!("high-resolution reference expects a 1D Euler problem"),
    };
    Ok(RefCurve {
        rho: xs
            .iter()
            .map(|&x| interp_linear(&fine.xs, &fine.rho, x))
            .collect(),
        u: xs
            .iter()
            .map(|&x| interp_linear(&fine.xs, &fine.u, x))
            .collect(),
        p: xs
            .iter()
            .map(|&x| interp_linear(&fine.xs, &fine.p, x))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::find_problem;

    #[test]
    fn advection_node_rows_include_the_wrap_point() {
        let p = find_problem("advection").unwrap();
        let scheme = SchemeSpec::preset(WeightFamily::Zr);
        let out = solve(p, &scheme, Resolution::OneD(10), None, None, true).unwrap();
        match out {
            Solved::Scalar(s) => {
                assert_eq!(s.xs.len(), 11);
                assert_eq!(s.u.len(), 11);
                assert_eq!(s.xs[0], -1.0);
                assert_eq!(*s.xs.last().unwrap(), 1.0);
                assert_eq!(s.u[10], s.u[0]);
                let exact = s.exact.unwrap();
                assert_eq!(exact.len(), 11);
                // after one period the exact solution equals the data
                assert!((exact[3] - (std::f64::consts::PI * s.xs[3]).sin()).abs() < 1e-12);
            }
            _ => panic!("wrong variant"),
        }
    }

    #[test]
    fn sod_reference_is_the_exact_fan() {
        let p = find_problem("sod").unwrap();
        let scheme = SchemeSpec::preset(WeightFamily::Zr);
        let out = solve(p, &scheme, Resolution::OneD(40), Some(0.4), None, true).unwrap();
        match out {
            Solved::Euler1(s) => {
                assert_eq!(s.xs.len(), 40);
                let r = s.reference.unwrap();
                // far field equals the initial states at both ends
                assert_eq!((r.rho[0], r.u[0], r.p[0]), (1.0, 0.0, 1.0));
                let last = r.rho.len() - 1;
                assert_eq!((r.rho[last], r.u[last], r.p[last]), (0.125, 0.0, 0.1));
            }
            _ => panic!("wrong variant"),
        }
    }

    #[test]
    fn overrides_validate() {
        let p = find_problem("burgers").unwrap();
        assert!(effective_time(p, Some(-1.0), None).is_err());
        assert!(effective_time(p, None, Some(-0.1)).is_err());
        let (t, rule) = effective_time(p, Some(0.25), Some(0.2)).unwrap();
        assert_eq!(t, 0.25);
        assert_eq!(rule, TimeStepRule::CTimesDx(0.2));
    }

    #[test]
    fn riemann2d_small_run_has_positive_state() {
        let p = find_problem("riemann2d").unwrap();
        let scheme = SchemeSpec::preset(WeightFamily::Zr);
        let out = solve(p, &scheme, Resolution::TwoD(20, 20), Some(0.02), None, true).unwrap();
        match out {
            Solved::Euler2(s) => {
                assert_eq!(s.rho.len(), 400);
                assert!(s.rho.iter().all(|&r| r > 0.0));
                assert!(s.p.iter().all(|&q| q > 0.0));
                assert!(s.steps > 0);
            }
            _ => panic!("wrong variant"),
        }
    }
}
