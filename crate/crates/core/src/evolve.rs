//! Semi-discrete operators and SSP-RK3 time stepping.
//!
//! The semi-discretization is `du_i/dt = L_i = -(f̂_{i+1/2} - f̂_{i-1/2})/Δx`
//! with the numerical flux assembled from a Lax–Friedrichs split: the `f⁺`
//! part is reconstructed with the left-biased stencil, the `f⁻` part with
//! the right-biased (reversed-window) stencil, and the splitting constant
//! `α` is the global maximum wave speed, recomputed each stage.
//!
//! Systems are handled characteristic-wise: per interface, the six-cell
//! neighbourhood of split fluxes is projected onto the characteristic
//! variables of the arithmetic-mean state, reconstructed one field at a
//! time, and projected back. 2D operators apply the 1D machinery
//! dimension-by-dimension (the y-direction via a transposed copy, so both
//! directions sweep contiguous rows and parallelize over them).
//!
//! Interface indexing: interface `k` sits at `x_{k-1/2}`, between cells
//! `k-1` and `k`, for `k = 0..=n`; cell `i` therefore sees interfaces `i`
//! and `i+1`, and with three ghost cells the left-biased window of
//! interface `k` is padded slice `[k..k+5]`, the right-biased one is
//! `[k+1..k+6]` reversed.

use crate::error::{Error, Result};
use crate::field::{Field1, Field2, RkState};
use crate::mesh::{fill_ghosts1, BoundarySpec1, Grid1D, Grid2D};
use crate::physics::{lf_split, Euler, ScalarModel};
use crate::indicators::StencilWindow;
use crate::reconstruct::{weno_face, weno_face_detailed, FaceReconstruction};
use crate::weights::SchemeSpec;
use rayon::prelude::*;

/// Ghost-layer width required by the five-point stencils.
pub const N_GHOST: usize = 3;

/// Per-problem time-step schedule; the step is fixed over a run except for
/// the final step, which is clipped to land on the requested time exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TimeStepRule {
    /// `Δt = c Δx`
    CTimesDx(f64),
    /// `Δt = c Δx^{5/3}` (keeps the temporal error below the fifth-order
    /// spatial error in accuracy studies)
    CTimesDxPow53(f64),
    /// `Δt = c min(Δx, Δy)`
    CTimesMinDxDy(f64),
}

impl TimeStepRule {
    pub fn coefficient(&self) -> f64 {
        match self {
            TimeStepRule::CTimesDx(c)
            | TimeStepRule::CTimesDxPow53(c)
            | TimeStepRule::CTimesMinDxDy(c) => *c,
        }
    }

    pub fn with_coefficient(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "time step coefficient must be positive, got {c}"
            )));
        }
        Ok(match self {
            TimeStepRule::CTimesDx(_) => TimeStepRule::CTimesDx(c),
            TimeStepRule::CTimesDxPow53(_) => TimeStepRule::CTimesDxPow53(c),
            TimeStepRule::CTimesMinDxDy(_) => TimeStepRule::CTimesMinDxDy(c),
        })
    }

    pub fn dt1(&self, dx: f64) -> f64 {
        match self {
            TimeStepRule::CTimesDx(c) => c * dx,
            TimeStepRule::CTimesDxPow53(c) => c * dx.powf(5.0 / 3.0),
            TimeStepRule::CTimesMinDxDy(c) => c * dx,
        }
    }

    pub fn dt2(&self, dx: f64, dy: f64) -> f64 {
        match self {
            TimeStepRule::CTimesDx(c) => c * dx.min(dy),
            TimeStepRule::CTimesDxPow53(c) => c * dx.min(dy).powf(5.0 / 3.0),
            TimeStepRule::CTimesMinDxDy(c) => c * dx.min(dy),
        }
    }

    /// Human-readable form for run metadata, e.g. `dt = 0.4*dx^(5/3)`.
    pub fn describe(&self) -> String {
        match self {
            TimeStepRule::CTimesDx(c) => format!("dt = {c}*dx"),
            TimeStepRule::CTimesDxPow53(c) => format!("dt = {c}*dx^(5/3)"),
            TimeStepRule::CTimesMinDxDy(c) => format!("dt = {c}*min(dx,dy)"),
        }
    }
}

/// Summary of a completed `advance_*` call.
#[derive(Clone, Copy, Debug, Default)]
pub struct StepStats {
    pub steps: usize,
    pub t: f64,
}

/// Scratch storage for [`rk3_step`]; create once per run and reuse.
pub struct Rk3Workspace<S: RkState> {
    u0: S,
    l: S,
}

impl<S: RkState> Rk3Workspace<S> {
    pub fn new(proto: &S) -> Self {
        Rk3Workspace {
            u0: proto.clone(),
            l: proto.clone(),
        }
    }
}

/// One strong-stability-preserving third-order Runge–Kutta step:
///
/// ```text
/// u1 = un + Δt L(un)
/// u2 = 3/4 un + 1/4 u1 + 1/4 Δt L(u1)
/// u  = 1/3 un + 2/3 u2 + 2/3 Δt L(u2)
/// ```
///
/// `rhs(state, stage_time, stage_index, out)` must fill ghosts of `state`
/// at `stage_time` and write the operator into `out`. Stage times are `t`,
/// `t + Δt`, `t + Δt/2`.
pub fn rk3_step<S, F>(u: &mut S, t: f64, dt: f64, ws: &mut Rk3Workspace<S>, mut rhs: F) -> Result<()>
where
    S: RkState,
    F: FnMut(&mut S, f64, usize, &mut S) -> Result<()>,
{
    ws.u0.clone_from(u);

    rhs(u, t, 0, &mut ws.l)?;
    u.axpby(1.0, dt, &ws.l); // u1

    rhs(u, t + dt, 1, &mut ws.l)?;
    u.axpby(0.25, 0.25 * dt, &ws.l);
    u.axpby(1.0, 0.75, &ws.u0); // u2

    rhs(u, t + 0.5 * dt, 2, &mut ws.l)?;
    u.axpby(2.0 / 3.0, 2.0 / 3.0 * dt, &ws.l);
    u.axpby(1.0, 1.0 / 3.0, &ws.u0);
    Ok(())
}

/// Scalar spatial operator. Ghost cells of `u` must already be filled.
///
/// When `record` is given it is cleared and filled with the plus-flux
/// reconstruction of every interface `k = 0..=n` (the left-biased stencil
/// whose centre cell is `k-1`; cell `i`'s own record is entry `i + 1`).
pub fn rhs_scalar(
    u: &Field1<1>,
    grid: &Grid1D,
    model: ScalarModel,
    scheme: &SchemeSpec,
    out: &mut Field1<1>,
    mut record: Option<&mut Vec<FaceReconstruction>>,
) {
    let n = u.n();
    debug_assert_eq!(u.n_ghost(), N_GHOST);
    let p = u.padded();
    let npad = p.len();

    let alpha = p
        .iter()
        .map(|c| model.speed(c[0]))
        .fold(0.0f64, f64::max);

    let mut fp = vec![0.0; npad];
    let mut fm = vec![0.0; npad];
    for (j, c) in p.iter().enumerate() {
        let (a, b) = lf_split(model.flux(c[0]), c[0], alpha);
        fp[j] = a;
        fm[j] = b;
    }

    if let Some(rs) = record.as_mut() {
        rs.clear();
    }
    let mut fhat = vec![0.0; n + 1];
    for (k, h) in fhat.iter_mut().enumerate() {
        let wp = StencilWindow([fp[k], fp[k + 1], fp[k + 2], fp[k + 3], fp[k + 4]]);
        let wm = StencilWindow([fm[k + 5], fm[k + 4], fm[k + 3], fm[k + 2], fm[k + 1]]);
        let plus = if let Some(rs) = record.as_mut() {
            let rec = weno_face_detailed(&wp, scheme);
            rs.push(rec);
            rec.value
        } else {
            weno_face(&wp, scheme)
        };
        *h = plus + weno_face(&wm, scheme);
    }

    let dx = grid.dx();
    for (i, c) in out.interior_mut().iter_mut().enumerate() {
        c[0] = -(fhat[i + 1] - fhat[i]) / dx;
    }
}

/// Locate a non-physical cell for diagnostics after a NaN wave speed.
fn locate_bad_state3(gas: &Euler, p: &[[f64; 3]], t: f64) -> Error {
    for (j, s) in p.iter().enumerate() {
        if let Err(e) = gas.check3(s, &format!("padded cell {j} at t = {t:.6}")) {
            return e;
        }
    }
    Error::NonPhysical {
        quantity: "wave speed",
        value: f64::NAN,
        location: format!("t = {t:.6}"),
    }
}

/// 1D Euler spatial operator, characteristic-wise. Ghosts must be filled.
pub fn rhs_euler1(
    u: &Field1<3>,
    grid: &Grid1D,
    gas: &Euler,
    scheme: &SchemeSpec,
    t: f64,
    out: &mut Field1<3>,
) -> Result<()> {
    let n = u.n();
    debug_assert_eq!(u.n_ghost(), N_GHOST);
    let p = u.padded();
    let npad = p.len();

    // note: f64::max drops NaN operands, so track validity separately
    let mut alpha = 0.0f64;
    let mut speeds_ok = true;
    for s in p {
        let sp = gas.max_speed3(s);
        speeds_ok &= sp.is_finite();
        alpha = alpha.max(sp);
    }
    if !speeds_ok {
        return Err(locate_bad_state3(gas, p, t));
    }

    let mut fp = vec![[0.0; 3]; npad];
    let mut fm = vec![[0.0; 3]; npad];
    for (j, s) in p.iter().enumerate() {
        let f = gas.flux3(s);
        for m in 0..3 {
            let (a, b) = lf_split(f[m], s[m], alpha);
            fp[j][m] = a;
            fm[j][m] = b;
        }
    }

    let mut fhat = vec![[0.0; 3]; n + 1];
    for (k, h) in fhat.iter_mut().enumerate() {
        // interface between padded cells k+2 and k+3
        let avg: [f64; 3] = std::array::from_fn(|m| 0.5 * (p[k + 2][m] + p[k + 3][m]));
        let eig = gas.eigensystem3(&avg);

        // project the six-cell neighbourhood onto characteristic variables
        let mut cp = [[0.0; 3]; 6];
        let mut cm = [[0.0; 3]; 6];
        for j in 0..6 {
            cp[j] = eig.to_char(&fp[k + j]);
            cm[j] = eig.to_char(&fm[k + j]);
        }

        let mut hc = [0.0; 3];
        for (m, hcm) in hc.iter_mut().enumerate() {
            let wp = StencilWindow([cp[0][m], cp[1][m], cp[2][m], cp[3][m], cp[4][m]]);
            let wm = StencilWindow([cm[5][m], cm[4][m], cm[3][m], cm[2][m], cm[1][m]]);
            *hcm = weno_face(&wp, scheme) + weno_face(&wm, scheme);
        }
        *h = eig.from_char(&hc);
    }

    let dx = grid.dx();
    for (i, c) in out.interior_mut().iter_mut().enumerate() {
        for m in 0..3 {
            c[m] = -(fhat[i + 1][m] - fhat[i][m]) / dx;
        }
    }
    Ok(())
}

fn check_finite1<const M: usize>(u: &Field1<M>, step: usize, t: f64) -> Result<()> {
    for (i, c) in u.interior().iter().enumerate() {
        if !c.iter().all(|v| v.is_finite()) {
            return Err(Error::Diverged {
                step,
                t,
                location: format!("cell {i}"),
            });
        }
    }
    Ok(())
}

fn check_finite2(u: &Field2<4>, step: usize, t: f64) -> Result<()> {
    for j in 0..u.ny() {
        for i in 0..u.nx() {
            if !u.at(i, j).iter().all(|v| v.is_finite()) {
                return Err(Error::Diverged {
                    step,
                    t,
                    location: format!("cell ({i}, {j})"),
                });
            }
        }
    }
    Ok(())
}

/// March a scalar problem to `t_final`.
///
/// `stage1` (when given) receives the plus-flux reconstruction records of
/// the very first RK stage, indexed by interface; they depend only on the
/// initial data, not on Δt. `observer` runs after every completed step.
#[allow(clippy::too_many_arguments)]
pub fn advance_scalar(
    u: &mut Field1<1>,
    grid: &Grid1D,
    model: ScalarModel,
    bc: &BoundarySpec1<1>,
    scheme: &SchemeSpec,
    rule: &TimeStepRule,
    t_final: f64,
    mut stage1: Option<&mut Vec<FaceReconstruction>>,
    mut observer: Option<&mut dyn FnMut(usize, f64, &Field1<1>)>,
) -> Result<StepStats> {
    let dt0 = rule.dt1(grid.dx());
    let mut ws = Rk3Workspace::new(u);
    let mut t = 0.0;
    let mut steps = 0;
    while t < t_final {
        let dt = dt0.min(t_final - t);
        let first_step = steps == 0;
        rk3_step(u, t, dt, &mut ws, |s, _st, stage, out| {
            fill_ghosts1(s, bc);
            let record = if first_step && stage == 0 {
                stage1.as_deref_mut()
            } else {
                None
            };
            rhs_scalar(s, grid, model, scheme, out, record);
            Ok(())
        })?;
        t = if dt0 >= t_final - t { t_final } else { t + dt };
        steps += 1;
        check_finite1(u, steps, t)?;
        if let Some(obs) = observer.as_mut() {
            obs(steps, t, u);
        }
    }
    Ok(StepStats { steps, t })
}

/// March a 1D Euler problem to `t_final`.
pub fn advance_euler1(
    u: &mut Field1<3>,
    grid: &Grid1D,
    gas: &Euler,
    bc: &BoundarySpec1<3>,
    scheme: &SchemeSpec,
    rule: &TimeStepRule,
    t_final: f64,
    mut observer: Option<&mut dyn FnMut(usize, f64, &Field1<3>)>,
) -> Result<StepStats> {
    let dt0 = rule.dt1(grid.dx());
    let mut ws = Rk3Workspace::new(u);
    let mut t = 0.0;
    let mut steps = 0;
    while t < t_final {
        let dt = dt0.min(t_final - t);
        rk3_step(u, t, dt, &mut ws, |s, st, _stage, out| {
            fill_ghosts1(s, bc);
            rhs_euler1(s, grid, gas, scheme, st, out)
        })?;
        t = if dt0 >= t_final - t { t_final } else { t + dt };
        steps += 1;
        check_finite1(u, steps, t)?;
        if let Some(obs) = observer.as_mut() {
            obs(steps, t, u);
        }
    }
    Ok(StepStats { steps, t })
}

/// Sweep direction of the 2D operator.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    X,
    Y,
}

/// Row sweeps of one directional operator over a (possibly transposed)
/// field, adding `-(f̂_{k+1} - f̂_k)/d` into `out`'s interior. Rows are
/// processed in parallel; every output cell is written by exactly one
/// task, so results do not depend on scheduling.
fn sweep_rows4(
    u: &Field2<4>,
    d: f64,
    gas: &Euler,
    scheme: &SchemeSpec,
    dir: Dir,
    alpha: f64,
    out: &mut Field2<4>,
) {
    let nx = u.nx();
    let ng = u.n_ghost();
    let stride = u.stride();
    debug_assert_eq!(out.nx(), nx);
    debug_assert_eq!(out.ny(), u.ny());

    let interior_rows: Vec<(usize, &mut [[f64; 4]])> = out
        .padded_mut_slice()
        .chunks_mut(stride)
        .enumerate()
        .skip(ng)
        .take(u.ny())
        .collect();

    interior_rows.into_par_iter().for_each(|(pj, out_row)| {
        let row = u.padded_row(pj);
        let mut fp = vec![[0.0f64; 4]; row.len()];
        let mut fm = vec![[0.0f64; 4]; row.len()];
        for (j, s) in row.iter().enumerate() {
            let f = match dir {
                Dir::X => gas.flux4_x(s),
                Dir::Y => gas.flux4_y(s),
            };
            for m in 0..4 {
                let (a, b) = lf_split(f[m], s[m], alpha);
                fp[j][m] = a;
                fm[j][m] = b;
            }
        }

        let mut prev = [0.0f64; 4];
        for k in 0..=nx {
            let avg: [f64; 4] = std::array::from_fn(|m| 0.5 * (row[k + 2][m] + row[k + 3][m]));
            let eig = match dir {
                Dir::X => gas.eigensystem4_x(&avg),
                Dir::Y => gas.eigensystem4_y(&avg),
            };
            let mut cp = [[0.0; 4]; 6];
            let mut cm = [[0.0; 4]; 6];
            for j in 0..6 {
                cp[j] = eig.to_char(&fp[k + j]);
                cm[j] = eig.to_char(&fm[k + j]);
            }
            let mut hc = [0.0; 4];
            for (m, hcm) in hc.iter_mut().enumerate() {
                let wp = StencilWindow([cp[0][m], cp[1][m], cp[2][m], cp[3][m], cp[4][m]]);
                let wm = StencilWindow([cm[5][m], cm[4][m], cm[3][m], cm[2][m], cm[1][m]]);
                *hcm = weno_face(&wp, scheme) + weno_face(&wm, scheme);
            }
            let h = eig.from_char(&hc);
            if k > 0 {
                let cell = &mut out_row[ng + k - 1];
                for m in 0..4 {
                    cell[m] += -(h[m] - prev[m]) / d;
                }
            }
            prev = h;
        }
    });
}

fn transpose_padded4(u: &Field2<4>, into: &mut Field2<4>) {
    let (w, h) = (u.stride(), u.padded_slice().len() / u.stride());
    debug_assert_eq!(into.stride(), h);
    for pj in 0..h {
        let row = u.padded_row(pj);
        for (pi, s) in row.iter().enumerate() {
            *into.at_padded_mut(pj, pi) = *s;
        }
    }
    debug_assert_eq!(w * h, into.padded_slice().len());
}

/// Scratch buffers for the 2D operator; create once per run.
pub struct Euler2Workspace {
    ut: Field2<4>,
    lt: Field2<4>,
}

impl Euler2Workspace {
    pub fn new(nx: usize, ny: usize) -> Self {
        Euler2Workspace {
            ut: Field2::new(ny, nx, N_GHOST),
            lt: Field2::new(ny, nx, N_GHOST),
        }
    }
}

/// 2D Euler spatial operator `L = Lx + Ly` (dimension-by-dimension).
/// Ghosts of `u` must be filled at the current stage time.
pub fn rhs_euler2(
    u: &Field2<4>,
    grid: &Grid2D,
    gas: &Euler,
    scheme: &SchemeSpec,
    t: f64,
    ws: &mut Euler2Workspace,
    out: &mut Field2<4>,
) -> Result<()> {
    // note: f64::max drops NaN operands, so track validity separately
    let mut alpha_x = 0.0f64;
    let mut alpha_y = 0.0f64;
    let mut speeds_ok = true;
    for s in u.padded_slice() {
        let (sx, sy) = (gas.max_speed4_x(s), gas.max_speed4_y(s));
        speeds_ok &= sx.is_finite() && sy.is_finite();
        alpha_x = alpha_x.max(sx);
        alpha_y = alpha_y.max(sy);
    }
    if !speeds_ok {
        for (j, s) in u.padded_slice().iter().enumerate() {
            gas.check4(s, &format!("padded index {j} at t = {t:.6}"))?;
        }
        return Err(Error::NonPhysical {
            quantity: "wave speed",
            value: f64::NAN,
            location: format!("t = {t:.6}"),
        });
    }

    for c in out.padded_mut_slice() {
        *c = [0.0; 4];
    }
    sweep_rows4(u, grid.dx(), gas, scheme, Dir::X, alpha_x, out);

    transpose_padded4(u, &mut ws.ut);
    for c in ws.lt.padded_mut_slice() {
        *c = [0.0; 4];
    }
    sweep_rows4(&ws.ut, grid.dy(), gas, scheme, Dir::Y, alpha_y, &mut ws.lt);

    // add the transposed y-contribution back
    let ng = N_GHOST;
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let add = ws.lt.at_padded(j + ng, i + ng);
            let cell = out.at_mut(i, j);
            for m in 0..4 {
                cell[m] += add[m];
            }
        }
    }
    Ok(())
}

/// March a 2D Euler problem to `t_final`. `fill` writes all ghost cells
/// for a given stage time (it owns the boundary logic, which several
/// problems make time-dependent).
#[allow(clippy::too_many_arguments)]
pub fn advance_euler2(
    u: &mut Field2<4>,
    grid: &Grid2D,
    gas: &Euler,
    scheme: &SchemeSpec,
    rule: &TimeStepRule,
    t_final: f64,
    fill: &dyn Fn(&mut Field2<4>, f64),
    mut observer: Option<&mut dyn FnMut(usize, f64, &Field2<4>)>,
) -> Result<StepStats> {
    let dt0 = rule.dt2(grid.dx(), grid.dy());
    let mut ws = Rk3Workspace::new(u);
    let mut ws2 = Euler2Workspace::new(grid.nx, grid.ny);
    let mut t = 0.0;
    let mut steps = 0;
    while t < t_final {
        let dt = dt0.min(t_final - t);
        rk3_step(u, t, dt, &mut ws, |s, st, _stage, out| {
            fill(s, st);
            rhs_euler2(s, grid, gas, scheme, st, &mut ws2, out)
        })?;
        t = if dt0 >= t_final - t { t_final } else { t + dt };
        steps += 1;
        check_finite2(u, steps, t)?;
        if let Some(obs) = observer.as_mut() {
            obs(steps, t, u);
        }
    }
    Ok(StepStats { steps, t })
}
