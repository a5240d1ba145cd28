//! Complex root isolation for integer polynomials.
//!
//! Multiple roots are split off exactly first (Yun square-free
//! decomposition over the integers), so the numeric iteration only ever
//! sees simple roots and multiplicities come from the decomposition, not
//! from clustering heuristics. Each square-free factor is handed to the
//! simultaneous Aberth-Ehrlich iteration, started from a deterministic
//! configuration on a circle of Cauchy-bound radius; identical inputs
//! therefore produce bit-identical roots.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::unipoly::{self, UniPoly};
use super::SolverError;
use crate::tolerance::ToleranceConfig;

/// Rotating the initial configuration off the axes avoids starting on a
/// symmetry line of polynomials with real coefficients, where the Jacobi
/// sweep can stall in a symmetric deadlock.
const INITIAL_ANGLE_OFFSET: f64 = 0.4;

/// How many trailing per-sweep step sizes a non-convergence error reports.
const TRACE_TAIL: usize = 8;

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// All complex roots of a square-free polynomial given by normalized `f64`
/// coefficients (low to high, nonzero leading coefficient, degree >= 1).
fn aberth(coeffs: &[f64], tol: &ToleranceConfig) -> Result<Vec<Complex64>, SolverError> {
    let n = coeffs.len() - 1;
    if n == 1 {
        return Ok(vec![Complex64::new(-coeffs[0] / coeffs[1], 0.0)]);
    }
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();

    let lc = coeffs[n];
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lc).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64 + INITIAL_ANGLE_OFFSET;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let mut trace = Vec::with_capacity(tol.max_root_iterations);
    for _ in 0..tol.max_root_iterations {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let zk = z[k];
            let dv = horner(&deriv, zk);
            if dv.norm() == 0.0 {
                // Landed on a critical point; nudge deterministically and
                // let the next sweep recover.
                z[k] += Complex64::new(tol.root_convergence.sqrt(), tol.root_convergence.sqrt());
                max_step = f64::MAX;
                continue;
            }
            let newton = horner(coeffs, zk) / dv;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    repulsion += (zk - zj).inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let delta = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[k] -= delta;
            max_step = max_step.max(delta.norm() / (1.0 + z[k].norm()));
        }
        trace.push(max_step);
        if max_step <= tol.root_convergence {
            return Ok(z);
        }
    }
    let tail = trace.len().saturating_sub(TRACE_TAIL);
    Err(SolverError::RootNonConvergence {
        iterations: tol.max_root_iterations,
        recent_steps: trace.split_off(tail),
    })
}

/// All complex roots of `p` with multiplicities, sorted by real then
/// imaginary part. A constant nonzero polynomial has no roots; the zero
/// polynomial is rejected.
pub fn complex_roots(
    p: &UniPoly,
    tol: &ToleranceConfig,
) -> Result<Vec<(Complex64, usize)>, SolverError> {
    if p.is_zero() {
        return Err(SolverError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (factor, multiplicity) in unipoly::squarefree_decomposition(p) {
        let mut coeffs = unipoly::to_f64_normalized(&factor);
        // Coefficients that underflow to zero in f64 drop the numeric
        // degree; the affected roots are beyond f64 range and would never
        // survive residual checks anyway.
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            continue;
        }
        for root in aberth(&coeffs, tol)? {
            out.push((root, multiplicity));
        }
    }
    out.sort_by(|a, b| {
        a.0.re
            .total_cmp(&b.0.re)
            .then_with(|| a.0.im.total_cmp(&b.0.im))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default_profile()
    }

    #[test]
    fn quadratic_with_real_roots() {
        let roots = complex_roots(&p(&[-1, 0, 1]), &tol()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((roots[1].0 - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(roots.iter().all(|&(_, m)| m == 1));
    }

    #[test]
    fn triple_root_recovered_with_multiplicity() {
        // (x-2)^3 = x^3 - 6x^2 + 12x - 8.
        let roots = complex_roots(&p(&[-8, 12, -6, 1]), &tol()).unwrap();
        assert_eq!(roots.len(), 1);
        let (z, m) = roots[0];
        assert_eq!(m, 3);
        assert!((z - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cube_roots_of_unity() {
        let roots = complex_roots(&p(&[-1, 0, 0, 1]), &tol()).unwrap();
        assert_eq!(roots.len(), 3);
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        let expected = [
            Complex64::new(-0.5, -half_sqrt3),
            Complex64::new(-0.5, half_sqrt3),
            Complex64::new(1.0, 0.0),
        ];
        for (found, want) in roots.iter().zip(expected) {
            assert!((found.0 - want).norm() < 1e-12, "found {found:?} want {want}");
        }
    }

    #[test]
    fn squared_quadratic_doubles_multiplicity() {
        // (x^2-1)^2.
        let roots = complex_roots(&p(&[1, 0, -2, 0, 1]), &tol()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|&(_, m)| m == 2));
    }

    #[test]
    fn residuals_vanish_on_a_denser_polynomial() {
        // x^5 - 3x^3 + x - 7: square-free with a mix of real and complex roots.
        let poly = p(&[-7, 1, 0, -3, 0, 1]);
        let roots = complex_roots(&poly, &tol()).unwrap();
        assert_eq!(roots.len(), 5);
        let coeffs = unipoly::to_f64_normalized(&poly);
        for (z, m) in roots {
            assert_eq!(m, 1);
            assert!(horner(&coeffs, z).norm() < 1e-10, "residual too large at {z}");
        }
    }

    #[test]
    fn root_count_matches_degree_with_multiplicity() {
        // x^2 (x-1)^3 (x^2+x+1).
        let poly = p(&[0, 0, 1])
            .mul(&p(&[-1, 1]))
            .mul(&p(&[-1, 1]))
            .mul(&p(&[-1, 1]))
            .mul(&p(&[1, 1, 1]));
        let roots = complex_roots(&poly, &tol()).unwrap();
        let total: usize = roots.iter().map(|&(_, m)| m).sum();
        assert_eq!(total, poly.degree().unwrap());
    }

    #[test]
    fn deterministic_across_calls() {
        let poly = p(&[3, -1, 4, -1, 5, -9, 2]);
        let a = complex_roots(&poly, &tol()).unwrap();
        let b = complex_roots(&poly, &tol()).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.0.re.to_bits(), y.0.re.to_bits());
            assert_eq!(x.0.im.to_bits(), y.0.im.to_bits());
            assert_eq!(x.1, y.1);
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            complex_roots(&UniPoly::zero(), &tol()),
            Err(SolverError::ZeroPolynomial)
        ));
        assert!(complex_roots(&p(&[42]), &tol()).unwrap().is_empty());
    }
}
