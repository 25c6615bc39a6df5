//! Discrete error norms and convergence tables.

use crate::config::Resolution;
use crate::registry::Problem;
use crate::solve::{solve, Solved};
use anyhow::{bail, Result};
use weno5_core::SchemeSpec;

/// Resolutions used by the accuracy study.
pub const STUDY_RESOLUTIONS: [usize; 6] = [10, 20, 40, 80, 160, 320];

/// Discrete L1 / L2 / L-infinity norms of an error vector. The averaging
/// norms divide by the number of samples, so a node-centered comparison
/// over indices 0..=N carries the 1/(N+1) factor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Norms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// Norms of `numeric - exact`; the slices must have equal, nonzero length.
pub fn error_norms(numeric: &[f64], exact: &[f64]) -> Result<Norms> {
    if numeric.len() != exact.len() {
        bail!(
            "norm inputs must have equal length ({} vs {})",
            numeric.len(),
            exact.len()
        );
    }
    if numeric.is_empty() {
        bail!("norm inputs must be nonempty");
    }
    let m = numeric.len() as f64;
    let mut sum_abs = 0.0;
    let mut sum_sq = 0.0;
    let mut max_abs: f64 = 0.0;
    for (&a, &b) in numeric.iter().zip(exact) {
        let e = (a - b).abs();
        sum_abs += e;
        sum_sq += e * e;
        max_abs = max_abs.max(e);
    }
    Ok(Norms {
        l1: sum_abs / m,
        l2: (sum_sq / m).sqrt(),
        linf: max_abs,
    })
}

/// One row of a convergence table. `order_*` is empty on the coarsest row;
/// on refinement from N to 2N it is log2(e_N / e_2N).
#[derive(Clone, Copy, Debug)]
pub struct ConvergenceRow {
    pub n: usize,
    pub norms: Norms,
    pub order_l1: Option<f64>,
    pub order_l2: Option<f64>,
    pub order_linf: Option<f64>,
}

/// Attach observed orders to a sequence of (resolution, norms) pairs.
/// Orders use the log ratio of consecutive errors scaled by the log ratio
/// of resolutions, which reduces to log2(e_N / e_2N) when N doubles.
pub fn convergence_rows(errors: &[(usize, Norms)]) -> Vec<ConvergenceRow> {
    let mut rows = Vec::with_capacity(errors.len());
    for (k, &(n, norms)) in errors.iter().enumerate() {
        let order = |pick: fn(&Norms) -> f64| -> Option<f64> {
            if k == 0 {
                return None;
            }
            let (n_prev, prev) = errors[k - 1];
            let scale = (n as f64 / n_prev as f64).ln();
            Some((pick(&prev) / pick(&norms)).ln() / scale)
        };
        rows.push(ConvergenceRow {
            n,
            norms,
            order_l1: order(|e| e.l1),
            order_l2: order(|e| e.l2),
            order_linf: order(|e| e.linf),
        });
    }
    rows
}

/// Run the accuracy study for one scheme: solve `problem` (which must have
/// a closed-form exact solution) at each resolution and tabulate the norms
/// of the pointwise error.
pub fn convergence_table(
    problem: &Problem,
    scheme: &SchemeSpec,
    resolutions: &[usize],
) -> Result<Vec<ConvergenceRow>> {
    let mut errors = Vec::with_capacity(resolutions.len());
    for &n in resolutions {
        let out = solve(problem, scheme, Resolution::OneD(n), None, None, true)?;
        let s = match out {
            Solved::Scalar(s) => s,
            _ => bail!("convergence study requires a scalar problem"),
        };
        let exact = s
            .exact
            .ok_or_else(|| anyhow::anyhow!("{} has no closed-form solution", problem.name))?;
        errors.push((n, error_norms(&s.u, &exact)?));
    }
    Ok(convergence_rows(&errors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_vectors_have_zero_norms() {
        let v = [1.0, -2.0, 3.5];
        let n = error_norms(&v, &v).unwrap();
        assert_eq!((n.l1, n.l2, n.linf), (0.0, 0.0, 0.0));
    }

    #[test]
    fn unit_error_vector_has_unit_norms() {
        let num = [1.0; 7];
        let exact = [0.0; 7];
        let n = error_norms(&num, &exact).unwrap();
        assert!((n.l1 - 1.0).abs() < 1e-15);
        assert!((n.l2 - 1.0).abs() < 1e-15);
        assert_eq!(n.linf, 1.0);
    }

    #[test]
    fn single_spike_is_averaged_down() {
        // error e at one node out of N+1 = 5: L1 = e/5, L2 = e/sqrt(5), Linf = e
        let num = [0.0, 0.0, 0.25, 0.0, 0.0];
        let exact = [0.0; 5];
        let n = error_norms(&num, &exact).unwrap();
        assert!((n.l1 - 0.05).abs() < 1e-16);
        assert!((n.l2 - 0.25 / 5f64.sqrt()).abs() < 1e-16);
        assert_eq!(n.linf, 0.25);
    }

    #[test]
    fn mismatched_or_empty_inputs_error() {
        assert!(error_norms(&[1.0], &[1.0, 2.0]).is_err());
        assert!(error_norms(&[], &[]).is_err());
    }

    #[test]
    fn orders_recover_a_power_law() {
        let errs: Vec<(usize, Norms)> = [10usize, 20, 40]
            .iter()
            .map(|&n| {
                let e = 3.0 * (n as f64).powi(-5);
                (
                    n,
                    Norms {
                        l1: e,
                        l2: 2.0 * e,
                        linf: 4.0 * e,
                    },
                )
            })
            .collect();
        let rows = convergence_rows(&errs);
        assert!(rows[0].order_l1.is_none());
        for row in &rows[1..] {
            assert!((row.order_l1.unwrap() - 5.0).abs() < 1e-12);
            assert!((row.order_l2.unwrap() - 5.0).abs() < 1e-12);
            assert!((row.order_linf.unwrap() - 5.0).abs() < 1e-12);
        }
    }
}
