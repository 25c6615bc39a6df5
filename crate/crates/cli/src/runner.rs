//! Experiment runner: executes a registered problem and writes its
//! artifact directory (solution CSV, reference CSV when available, norm
//! summary, and a key=value metadata sidecar).

use crate::config::Resolution;
use crate::emit::{fmt_g17, write_csv, write_kv};
use crate::norms::error_norms;
use crate::registry::{Problem, ProblemKind, ReferenceKind, PROBLEMS};
use crate::solve::{effective_time, solve, RefCurve, Solved, SolvedEuler2};
use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use std::path::{Path, PathBuf};
use std::process::Command;
use weno5_core::{SchemeSpec, TimeStepRule, WeightFamily};

/// Build a scheme from its family name plus optional parameter overrides.
pub fn parse_scheme(name: &str, p: Option<f64>, epsilon: Option<f64>) -> Result<SchemeSpec> {
    let family: WeightFamily = name.trim().parse()?;
    let mut spec = SchemeSpec::preset(family);
    if let Some(p) = p {
        spec = spec.with_p(p)?;
    }
    if let Some(eps) = epsilon {
        spec = spec.with_eps(eps)?;
    }
    Ok(spec)
}

/// Short directory-name label for a scheme: the family name, plus `p` and
/// `eps` suffixes when they differ from the family's defaults.
pub fn scheme_label(spec: &SchemeSpec) -> String {
    let preset = SchemeSpec::preset(spec.family);
    let mut label = spec.family.label().to_string();
    if spec.family != WeightFamily::Linear {
        if spec.p != preset.p {
            if spec.p.fract() == 0.0 && spec.p.abs() < 1e15 {
                label.push_str(&format!("_p{}", spec.p as i64));
            } else {
                label.push_str(&format!("_p{}", spec.p).replace('.', "_"));
            }
        }
        if spec.eps != preset.eps {
            label.push_str(&format!("_eps{:e}", spec.eps));
        }
    }
    label
}

/// Human-readable description of a step rule.
pub fn describe_rule(rule: &TimeStepRule) -> String {
    match rule {
        TimeStepRule::CTimesDx(c) => format!("dt = {c}*dx"),
        TimeStepRule::CTimesDxPow53(c) => format!("dt = {c}*dx^(5/3)"),
        TimeStepRule::CTimesMinDxDy(c) => format!("dt = {c}*min(dx,dy)"),
    }
}

/// `git describe` of the working tree, or "unknown" outside a repository.
pub fn git_describe() -> String {
    Command::new("git")
        .args(["describe", "--always", "--dirty", "--tags"])
        .output()
        .ok()
        .filter(|o| o.status.success())
        .and_then(|o| String::from_utf8(o.stdout).ok())
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| "unknown".to_string())
}

/// A finished experiment's artifact directory.
pub struct CompletedRun {
    pub dir: PathBuf,
    pub steps: usize,
    pub wall_seconds: f64,
}

/// Run one experiment and write its artifacts under
/// `out_root/<problem>_<scheme>_N<resolution>/`.
pub fn run_experiment(
    problem: &Problem,
    scheme: &SchemeSpec,
    resolution: Resolution,
    t_override: Option<f64>,
    dt_coefficient_override: Option<f64>,
    out_root: &Path,
) -> Result<CompletedRun> {
    run_experiment_with(
        problem,
        scheme,
        resolution,
        t_override,
        dt_coefficient_override,
        out_root,
        None,
    )
}

/// As [`run_experiment`], but a precomputed reference curve may be supplied
/// (the suite shares one high-resolution reference across schemes).
pub fn run_experiment_with(
    problem: &Problem,
    scheme: &SchemeSpec,
    resolution: Resolution,
    t_override: Option<f64>,
    dt_coefficient_override: Option<f64>,
    out_root: &Path,
    shared_reference: Option<&RefCurve>,
) -> Result<CompletedRun> {
    let solved = solve(
        problem,
        scheme,
        resolution,
        t_override,
        dt_coefficient_override,
        shared_reference.is_none(),
    )?;
    write_artifacts(
        problem,
        scheme,
        resolution,
        t_override,
        dt_coefficient_override,
        out_root,
        shared_reference,
        &solved,
    )
}

/// Write the artifact directory for an already-solved run.
#[allow(clippy::too_many_arguments)]
pub fn write_artifacts(
    problem: &Problem,
    scheme: &SchemeSpec,
    resolution: Resolution,
    t_override: Option<f64>,
    dt_coefficient_override: Option<f64>,
    out_root: &Path,
    shared_reference: Option<&RefCurve>,
    solved: &Solved,
) -> Result<CompletedRun> {
    let dir = out_root.join(format!(
        "{}_{}_N{}",
        problem.name,
        scheme_label(scheme),
        resolution.label()
    ));
    std::fs::create_dir_all(&dir)
        .with_context(|| format!("creating run directory {}", dir.display()))?;

    let mut norm_pairs: Vec<(String, String)> = Vec::new();
    match solved {
        Solved::Scalar(s) => {
            let rows: Vec<Vec<String>> = s
                .xs
                .iter()
                .zip(&s.u)
                .map(|(&x, &u)| vec![fmt_g17(x), fmt_g17(u)])
                .collect();
            write_csv(&dir.join("solution.csv"), &["x", "u"], &rows)?;
            if let Some(exact) = &s.exact {
                let rows: Vec<Vec<String>> = s
                    .xs
                    .iter()
                    .zip(exact)
                    .map(|(&x, &u)| vec![fmt_g17(x), fmt_g17(u)])
                    .collect();
                write_csv(&dir.join("reference.csv"), &["x", "u"], &rows)?;
                push_norms(&mut norm_pairs, "u", &s.u, exact)?;
            }
        }
        Solved::Euler1(s) => {
            let rows: Vec<Vec<String>> = (0..s.xs.len())
                .map(|i| {
                    vec![
                        fmt_g17(s.xs[i]),
                        fmt_g17(s.rho[i]),
                        fmt_g17(s.u[i]),
                        fmt_g17(s.p[i]),
                    ]
                })
                .collect();
            write_csv(&dir.join("solution.csv"), &["x", "rho", "u", "p"], &rows)?;
            let reference = match (shared_reference, &s.reference) {
                (Some(r), _) => Some(r),
                (None, Some(r)) => Some(r),
                (None, None) => None,
            };
            if let Some(r) = reference {
                let rows: Vec<Vec<String>> = (0..s.xs.len())
                    .map(|i| {
                        vec![
                            fmt_g17(s.xs[i]),
                            fmt_g17(r.rho[i]),
                            fmt_g17(r.u[i]),
                            fmt_g17(r.p[i]),
                        ]
                    })
                    .collect();
                write_csv(&dir.join("reference.csv"), &["x", "rho", "u", "p"], &rows)?;
                push_norms(&mut norm_pairs, "rho", &s.rho, &r.rho)?;
                push_norms(&mut norm_pairs, "u", &s.u, &r.u)?;
                push_norms(&mut norm_pairs, "p", &s.p, &r.p)?;
            }
        }
        Solved::Euler2(s) => write_euler2_solution(problem, s, &dir)?,
    }

    if !norm_pairs.is_empty() {
        write_kv(&dir.join("norms.txt"), &norm_pairs)?;
    }

    let (t_final, rule) = effective_time(problem, t_override, dt_coefficient_override)?;
    let meta: Vec<(String, String)> = vec![
        ("problem".into(), problem.name.to_string()),
        ("scheme".into(), scheme.family.label().to_string()),
        ("p".into(), format!("{}", scheme.p)),
        ("epsilon".into(), format!("{:e}", scheme.eps)),
        ("N".into(), resolution.label()),
        ("T".into(), format!("{t_final}")),
        ("dt-rule".into(), describe_rule(&rule)),
        ("steps".into(), solved.steps().to_string()),
        ("wall-seconds".into(), format!("{:.3}", solved.wall_seconds())),
        ("git-describe".into(), git_describe()),
    ];
    write_kv(&dir.join("meta.txt"), &meta)?;

    Ok(CompletedRun {
        dir,
        steps: solved.steps(),
        wall_seconds: solved.wall_seconds(),
    })
}

fn push_norms(
    pairs: &mut Vec<(String, String)>,
    field: &str,
    numeric: &[f64],
    exact: &[f64],
) -> Result<()> {
    let n = error_norms(numeric, exact)?;
    pairs.push((format!("{field}_L1"), fmt_g17(n.l1)));
    pairs.push((format!("{field}_L2"), fmt_g17(n.l2)));
    pairs.push((format!("{field}_Linf"), fmt_g17(n.linf)));
    Ok(())
}

/// 2D solution layout: the double Mach problem is emitted as (x, y, rho)
/// restricted to [0,3]x[0,1] (the region shown in contour plots); other 2D
/// problems emit (x, y, rho, p) over the full domain.
fn write_euler2_solution(problem: &Problem, s: &SolvedEuler2, dir: &Path) -> Result<()> {
    let grid = &s.grid;
    let restrict_x = if problem.name == "dmr" { Some(3.0) } else { None };
    let mut rows = Vec::new();
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let (x, y) = (grid.x(i), grid.y(j));
            if let Some(xmax) = restrict_x {
                if x > xmax {
                    continue;
                }
            }
            let idx = j * grid.nx + i;
            let mut row = vec![fmt_g17(x), fmt_g17(y), fmt_g17(s.rho[idx])];
            if restrict_x.is_none() {
                row.push(fmt_g17(s.p[idx]));
            }
            rows.push(row);
        }
    }
    let header: &[&str] = if restrict_x.is_some() {
        &["x", "y", "rho"]
    } else {
        &["x", "y", "rho", "p"]
    };
    write_csv(&dir.join("solution.csv"), header, &rows)
}

/// Which problems and schemes a suite invocation covers.
#[derive(Default)]
pub struct SuiteSelection {
    pub problems: Option<Vec<String>>,
    pub schemes: Option<Vec<String>>,
}

/// Default scheme set for a problem: every nonlinear family in 1D, the new
/// scheme alone in 2D (matching the published experiments).
fn default_suite_schemes(problem: &Problem) -> Vec<String> {
    if problem.is_2d() {
        vec!["zr".to_string()]
    } else {
        ["js", "m", "z", "zr"].iter().map(|s| s.to_string()).collect()
    }
}

/// Run the full experiment suite (optionally filtered). Problems run
/// concurrently; each run writes only its own directory. Returns the
/// completed runs in registry order.
pub fn run_suite(selection: &SuiteSelection, out_root: &Path) -> Result<Vec<CompletedRun>> {
    if let Some(names) = &selection.problems {
        for name in names {
            crate::registry::find_problem(name)?;
        }
    }
    let chosen: Vec<&'static Problem> = PROBLEMS
        .iter()
        .filter(|p| {
            selection
                .problems
                .as_ref()
                .map_or(true, |names| names.iter().any(|n| n == p.name))
        })
        .collect();
    if chosen.is_empty() {
        bail!("suite selection matches no problems");
    }

    let results: Vec<Vec<CompletedRun>> = chosen
        .par_iter()
        .map(|problem| -> Result<Vec<CompletedRun>> {
            let schemes = match &selection.schemes {
                Some(list) => list.clone(),
                None => default_suite_schemes(problem),
            };
            // share one high-resolution reference across the schemes
            let shared = if problem.reference == ReferenceKind::HighresM2000 {
                let xs = match &problem.kind {
                    ProblemKind::Euler1 { .. } => {
                        let n = match problem.default_resolution {
                            Resolution::OneD(n) => n,
                            Resolution::TwoD(..) => bail!("unexpected 2D default"),
                        };
                        problem.grid1(n)?.xs()
                    }
                    _ => bail!("high-resolution reference on a non-Euler1 problem"),
                };
                Some(crate::solve::highres_reference_for(problem, &xs)?)
            } else {
                None
            };
            schemes
                .iter()
                .map(|name| {
                    let scheme = parse_scheme(name, None, None)?;
                    run_experiment_with(
                        problem,
                        &scheme,
                        problem.default_resolution,
                        None,
                        None,
                        out_root,
                        shared.as_ref(),
                    )
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(results.into_iter().flatten().collect())
}
