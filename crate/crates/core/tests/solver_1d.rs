//! End-to-end 1D solver checks: advection accuracy against pinned error
//! values, the Burgers shock case, and a shock-tube run compared with the
//! exact Riemann solution.

use weno5_core::evolve::{advance_euler1, advance_scalar, TimeStepRule};
use weno5_core::mesh::{BoundarySpec1, Centering, Grid1D};
use weno5_core::physics::{Euler, ScalarModel};
use weno5_core::reference::{advection_exact, burgers_shock_exact, sample_riemann, solve_riemann_euler};
use weno5_core::{Field1, SchemeSpec, WeightFamily};

const PI: f64 = std::f64::consts::PI;

/// L1 advection error for one period on the node-centered grid: the norm
/// runs over nodes 0..=N with the periodic endpoint duplicated and the
/// 1/(N+1) divisor.
fn advection_l1(scheme: &SchemeSpec, n: usize) -> f64 {
    let grid = Grid1D::new(-1.0, 1.0, n, Centering::Node).unwrap();
    let mut u = Field1::<1>::new(n, 3);
    for i in 0..n {
        u.interior_mut()[i] = [(PI * grid.x(i)).sin()];
    }
    advance_scalar(
        &mut u,
        &grid,
        ScalarModel::Advection,
        &BoundarySpec1::periodic(),
        scheme,
        &TimeStepRule::CTimesDxPow53(0.4),
        2.0,
        None,
        None,
    )
    .unwrap();
    let mut sum = 0.0;
    for i in 0..=n {
        let num = u.interior()[i % n][0];
        sum += (num - advection_exact(grid.x(0) + i as f64 * grid.dx(), 2.0)).abs();
    }
    sum / (n + 1) as f64
}

#[test]
fn advection_errors_match_pinned_values() {
    // (scheme, N, expected L1): spot values from the full accuracy study,
    // tolerance 5% relative.
    let js = SchemeSpec::preset(WeightFamily::Js);
    let zr = SchemeSpec::preset(WeightFamily::Zr);
    let cases = [
        (&js, 10, 2.81e-2),
        (&js, 20, 1.44e-3),
        (&js, 40, 4.39e-5),
        (&zr, 40, 6.31e-6),
    ];
    let mut errs = std::collections::HashMap::new();
    for (scheme, n, expect) in cases {
        let e = advection_l1(scheme, n);
        errs.insert((scheme.label(), n), e);
        assert!(
            (e - expect).abs() <= 0.05 * expect,
            "{} N={n}: L1 = {e:.6e}, expected {expect:.3e} within 5%",
            scheme.label()
        );
    }
    // order between N=20 and N=40 for JS: expected 5.0301 within 0.05
    let order = (errs[&("js".to_string(), 20)] / errs[&("js".to_string(), 40)]).log2();
    assert!(
        (order - 5.0301).abs() <= 0.05,
        "JS order N=40 came out {order}"
    );
}

fn burgers_run(scheme: &SchemeSpec) -> (Grid1D, Vec<f64>) {
    let n = 40;
    let grid = Grid1D::new(-1.0, 1.0, n, Centering::Cell).unwrap();
    let mut u = Field1::<1>::new(n, 3);
    for i in 0..n {
        u.interior_mut()[i] = [if grid.x(i) <= 0.0 { 1.0 } else { 0.0 }];
    }
    advance_scalar(
        &mut u,
        &grid,
        ScalarModel::Burgers,
        &BoundarySpec1::outflow(),
        scheme,
        &TimeStepRule::CTimesDx(0.4),
        1.0,
        None,
        None,
    )
    .unwrap();
    let vals = u.interior().iter().map(|c| c[0]).collect();
    (grid, vals)
}

fn burgers_l1(grid: &Grid1D, vals: &[f64]) -> f64 {
    let sum: f64 = vals
        .iter()
        .enumerate()
        .map(|(i, &v)| (v - burgers_shock_exact(grid.x(i), 1.0)).abs())
        .sum();
    sum / vals.len() as f64
}

/// Linear-interpolated position where the profile crosses u = 0.5 going down.
fn crossing(grid: &Grid1D, vals: &[f64]) -> f64 {
    for i in 0..vals.len() - 1 {
        if vals[i] >= 0.5 && vals[i + 1] < 0.5 {
            let w = (vals[i] - 0.5) / (vals[i] - vals[i + 1]);
            return grid.x(i) + w * grid.dx();
        }
    }
    panic!("no 0.5 crossing found");
}

#[test]
fn burgers_shock_front_and_dissipation_ordering() {
    let js = SchemeSpec::preset(WeightFamily::Js);
    let z = SchemeSpec::preset(WeightFamily::Z);
    let zr = SchemeSpec::preset(WeightFamily::Zr);

    let (grid, u_js) = burgers_run(&js);
    let (_, u_z) = burgers_run(&z);
    let (_, u_zr) = burgers_run(&zr);

    for vals in [&u_js, &u_z, &u_zr] {
        assert!(vals.iter().all(|&v| (-0.05..=1.05).contains(&v)));
        let x = crossing(&grid, vals);
        assert!(
            (x - 0.5).abs() <= 2.0 * grid.dx(),
            "shock front at {x}, expected 0.5 +/- {}",
            2.0 * grid.dx()
        );
    }

    // cross-implementation oracle values for the L1 errors at T = 1
    let (e_js, e_z, e_zr) = (
        burgers_l1(&grid, &u_js),
        burgers_l1(&grid, &u_z),
        burgers_l1(&grid, &u_zr),
    );
    assert!((e_js - 1.10e-2).abs() <= 0.05 * 1.10e-2, "JS L1 {e_js:.4e}");
    assert!((e_z - 9.08e-3).abs() <= 0.05 * 9.08e-3, "Z L1 {e_z:.4e}");
    assert!((e_zr - 8.34e-3).abs() <= 0.05 * 8.34e-3, "ZR L1 {e_zr:.4e}");
    assert!(e_zr <= e_z && e_z <= e_js, "dissipation ordering violated");
}

fn tube_run(
    left: [f64; 3],
    right: [f64; 3],
    t_final: f64,
    scheme: &SchemeSpec,
) -> (Grid1D, Vec<(f64, f64, f64)>) {
    let n = 200;
    let gas = Euler::default();
    let grid = Grid1D::new(-5.0, 5.0, n, Centering::Cell).unwrap();
    let mut u = Field1::<3>::new(n, 3);
    for i in 0..n {
        let s = if grid.x(i) <= 0.0 { left } else { right };
        u.interior_mut()[i] = gas.prim_to_cons3(s[0], s[1], s[2]);
    }
    advance_euler1(
        &mut u,
        &grid,
        &gas,
        &BoundarySpec1::outflow(),
        scheme,
        &TimeStepRule::CTimesDx(0.2),
        t_final,
        None,
    )
    .unwrap();
    let prim = u
        .interior()
        .iter()
        .map(|c| gas.cons_to_prim3(c))
        .collect();
    (grid, prim)
}

#[test]
fn sod_matches_exact_fan() {
    let left = [1.0, 0.0, 1.0];
    let right = [0.125, 0.0, 0.1];
    let t = 2.0;
    let fan = solve_riemann_euler(left, right, 1.4).unwrap();

    let density_l1 = |scheme: &SchemeSpec| -> f64 {
        let (grid, prim) = tube_run(left, right, t, scheme);
        let mut sum = 0.0;
        for (i, &(rho, _, p)) in prim.iter().enumerate() {
            assert!(rho > 0.0 && p > 0.0, "positivity lost at cell {i}");
            sum += (rho - sample_riemann(&fan, grid.x(i) / t)[0]).abs();
        }
        sum / prim.len() as f64
    };

    let e_zr = density_l1(&SchemeSpec::preset(WeightFamily::Zr));
    let e_js = density_l1(&SchemeSpec::preset(WeightFamily::Js));
    assert!(e_zr < 0.02, "ZR density L1 {e_zr} unexpectedly large");
    assert!(e_zr <= e_js, "ZR ({e_zr}) should not exceed JS ({e_js})");
}

#[test]
fn one23_stays_physical_near_vacuum() {
    let (_, prim) = tube_run(
        [1.0, -2.0, 0.4],
        [1.0, 2.0, 0.4],
        1.0,
        &SchemeSpec::preset(WeightFamily::Zr),
    );
    for (rho, _, p) in prim {
        assert!(rho > 0.0 && p > 0.0);
    }
}
