//! Weight probe: records the nonlinear weights of the plus-flux
//! reconstruction on the step-data advection problem, cell by cell.
//!
//! The reading is taken at the first evaluation of the spatial operator
//! (stage 1 of the first RK step), which depends only on the initial data
//! and not on the step size. The triple reported "at x_i" belongs to the
//! left-biased stencil centred on cell i, i.e. the reconstruction at
//! interface i+1/2. An alternative reading after one completed RK step is
//! available behind a flag.

use crate::config::Resolution;
use crate::registry::{find_problem, Problem, ProblemKind, ScalarBc};
use anyhow::{bail, Context, Result};
use std::path::{Path, PathBuf};
use weno5_core::{
    advance_scalar, fill_ghosts1, rhs_scalar, BoundarySpec1, FaceReconstruction, Field1, Grid1D,
    SchemeSpec, TimeStepRule, WeightTriple, N_GHOST,
};

/// The eight abscissae tabulated around the jump.
pub const PROBE_ABSCISSAE: [f64; 8] = [
    -0.035, -0.025, -0.015, -0.005, 0.005, 0.015, 0.025, 0.035,
];

/// The four abscissae whose stencils straddle the jump (the discontinuity
/// cases, in stencil order).
pub const DISCONTINUITY_ABSCISSAE: [f64; 4] = [-0.015, -0.005, 0.005, 0.015];

/// Name of the registered problem the probe runs on.
pub const PROBE_PROBLEM: &str = "probe-jump";

/// Weights of the plus-flux reconstruction for every cell of the probe grid.
pub struct ProbeCurve {
    pub grid: Grid1D,
    /// Cell centers.
    pub xs: Vec<f64>,
    /// `triples[i]` is the weight triple at interface i+1/2.
    pub triples: Vec<WeightTriple>,
}

/// Record the probe weights for one scheme. With `post_step` the reading
/// is taken at the start of the second RK step instead (i.e. after one
/// completed step of size given by the problem's rule).
pub fn probe_weights(scheme: &SchemeSpec, post_step: bool) -> Result<ProbeCurve> {
    let problem = find_problem(PROBE_PROBLEM)?;
    probe_weights_on(problem, scheme, post_step)
}

/// As [`probe_weights`] but on an explicit registry entry (must be a
/// periodic scalar problem).
pub fn probe_weights_on(
    problem: &Problem,
    scheme: &SchemeSpec,
    post_step: bool,
) -> Result<ProbeCurve> {
    let (model, ic) = match &problem.kind {
        ProblemKind::Scalar {
            model,
            bc: ScalarBc::Periodic,
            ic,
            ..
        } => (*model, *ic),
        _ => bail!("{} is not a periodic scalar problem", problem.name),
    };
    let n = match problem.default_resolution {
        Resolution::OneD(n) => n,
        Resolution::TwoD(..) => bail!("{} is not one-dimensional", problem.name),
    };
    let grid = problem.grid1(n)?;
    let bc = BoundarySpec1::periodic();

    let mut u: Field1<1> = Field1::new(n, N_GHOST);
    for i in 0..n {
        u.interior_mut()[i] = [ic(grid.x(i))];
    }

    let mut records: Vec<FaceReconstruction> = Vec::new();
    if post_step {
        // one completed RK step, then read stage 1 of the next
        let dt = match problem.rule {
            TimeStepRule::CTimesDx(c) => c * grid.dx(),
            other => bail!("unexpected step rule {other:?} for the probe problem"),
        };
        advance_scalar(
            &mut u, &grid, model, &bc, scheme, &problem.rule, dt, None, None,
        )
        .context("probe pre-step")?;
    }
    fill_ghosts1(&mut u, &bc);
    let mut out: Field1<1> = Field1::new(n, N_GHOST);
    rhs_scalar(&u, &grid, model, scheme, &mut out, Some(&mut records));

    // interface records k = 0..=n; cell i owns entry i+1
    let triples = records[1..=n].iter().map(|r| r.weights).collect();
    Ok(ProbeCurve {
        grid,
        xs: grid.xs(),
        triples,
    })
}

/// Look up the triple for the cell centered at `x`, validating that `x`
/// is a cell center of the probe grid.
pub fn triple_at(curve: &ProbeCurve, x: f64) -> Result<WeightTriple> {
    let dx = curve.grid.dx();
    let pos = (x - curve.xs[0]) / dx;
    let i = pos.round();
    if !(0.0..curve.xs.len() as f64).contains(&i) || (pos - i).abs() * dx > 1e-9 {
        bail!(
            "abscissa not on grid: {x} is not a cell center of [{}, {}] with dx = {dx}",
            curve.grid.a,
            curve.grid.b
        );
    }
    Ok(curve.triples[i as usize])
}

fn fmt_p(p: f64) -> String {
    if p.fract() == 0.0 && p.abs() < 1e15 {
        format!("{}", p as i64)
    } else {
        format!("{p}")
    }
}

/// Write the probe artifact set into `out_dir`:
/// `table2.csv` (JS/M/Z at the eight tabulated abscissae), `table4.csv`
/// (ZR at each requested p), and full-domain `weights_*.csv` curves (the
/// figure data). Returns the paths written.
pub fn emit_probe_artifacts(
    out_dir: &Path,
    ps: &[f64],
    post_step: bool,
) -> Result<Vec<PathBuf>> {
    use crate::emit::{fmt_g17, write_csv};
    use weno5_core::WeightFamily;

    if ps.is_empty() {
        bail!("probe needs at least one p value");
    }
    std::fs::create_dir_all(out_dir)
        .with_context(|| format!("creating {}", out_dir.display()))?;
    let mut written = Vec::new();

    let families = [WeightFamily::Js, WeightFamily::M, WeightFamily::Z];
    let base: Vec<(String, ProbeCurve)> = families
        .iter()
        .map(|&f| {
            let curve = probe_weights(&SchemeSpec::preset(f), post_step)?;
            Ok((f.label().to_string(), curve))
        })
        .collect::<Result<_>>()?;
    let zr: Vec<(String, ProbeCurve)> = ps
        .iter()
        .map(|&p| {
            let scheme = SchemeSpec::preset(WeightFamily::Zr).with_p(p)?;
            let curve = probe_weights(&scheme, post_step)?;
            Ok((format!("zr_p{}", fmt_p(p)), curve))
        })
        .collect::<Result<_>>()?;

    let table_rows = |curves: &[(String, ProbeCurve)]| -> Result<Vec<Vec<String>>> {
        PROBE_ABSCISSAE
            .iter()
            .map(|&x| {
                let mut row = vec![fmt_g17(x)];
                for (_, curve) in curves {
                    let t = triple_at(curve, x)?;
                    row.extend(t.as_array().iter().map(|&w| fmt_g17(w)));
                }
                Ok(row)
            })
            .collect()
    };
    let table_header = |curves: &[(String, ProbeCurve)]| -> Vec<String> {
        let mut h = vec!["x".to_string()];
        for (label, _) in curves {
            for k in 0..3 {
                h.push(format!("{label}_w{k}"));
            }
        }
        h
    };

    for (name, curves) in [("table2.csv", &base), ("table4.csv", &zr)] {
        let header = table_header(curves);
        let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
        let path = out_dir.join(name);
        write_csv(&path, &header_refs, &table_rows(curves)?)?;
        written.push(path);
    }

    for (label, curve) in base.iter().chain(&zr) {
        let rows: Vec<Vec<String>> = curve
            .xs
            .iter()
            .zip(&curve.triples)
            .map(|(&x, t)| {
                let mut row = vec![fmt_g17(x)];
                row.extend(t.as_array().iter().map(|&w| fmt_g17(w)));
                row
            })
            .collect();
        let path = out_dir.join(format!("weights_{label}.csv"));
        write_csv(&path, &["x", "w0", "w1", "w2"], &rows)?;
        written.push(path);
    }
    Ok(written)
}
