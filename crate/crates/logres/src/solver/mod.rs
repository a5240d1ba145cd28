//! Exact-first enumeration of foliation singularities on the projective
//! plane.
//!
//! A degree-`d` homogeneous field on `P^2` has singular locus cut out, in
//! each of the three affine charts, by two chart polynomials. Elimination is
//! exact: both bivariate resultants are computed over the integers by the
//! subresultant remainder sequence, their roots isolated per square-free
//! factor, and candidate pairs certified by scaled residuals after a short
//! Newton refinement. Chart inventories are merged by normalized homogeneous
//! coordinates, so every point is certified in the chart where it is best
//! conditioned. A zero resultant means the chart equations share a factor:
//! the singular locus is not isolated and enumeration refuses to continue.
//!
//! The only numeric trust anchors are the tolerance thresholds recorded in
//! the inventory; everything upstream of root isolation is integer
//! arithmetic. For points whose coordinates reconstruct as Gaussian
//! rationals, divisor membership is additionally corroborated by exact
//! evaluation.

pub mod roots;
pub mod unipoly;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::counts::{self, CountsError};
use crate::foliation::{
    self, check_divisor_polynomial, FoliationError, HomogeneousVectorField, IndexReport,
};
use crate::poly::{GaussianRational, MultiPoly};
use crate::tolerance::ToleranceConfig;

use roots::complex_roots;
use unipoly::{prs_resultant, BiPoly, UniPoly};

/// Candidate pairs with scaled residual above this are mispairings of
/// resultant roots and are dropped without Newton refinement. True zeros
/// arrive with near-machine residuals, three orders below this.
const COARSE_RESIDUAL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("chart {chart} equations share a common factor: the singular locus is not isolated")]
    CommonFactor { chart: usize },
    #[error("the zero polynomial has no meaningful root set")]
    ZeroPolynomial,
    #[error(
        "root iteration failed to converge after {iterations} sweeps \
         (recent relative steps: {recent_steps:?})"
    )]
    RootNonConvergence { iterations: usize, recent_steps: Vec<f64> },
    #[error("enumeration handles the projective plane only, got dimension {0}")]
    UnsupportedDimension(usize),
    #[error("divisor component {index} is not invariant under the field")]
    NonInvariantDivisor { index: usize },
    #[error("inventory carries uncertified multiplicities; count comparison would be meaningless")]
    Inconclusive,
    #[error(transparent)]
    Foliation(#[from] FoliationError),
    #[error(transparent)]
    Counts(#[from] CountsError),
}

/// One singular point of the foliation, certified in a specific chart.
#[derive(Debug, Clone)]
pub struct SingularPoint {
    /// Homogeneous coordinates normalized so the largest-modulus coordinate
    /// is exactly 1 (ties broken toward the lowest index).
    pub coords: [Complex64; 3],
    /// Chart (0, 1, 2) in which the point was certified.
    pub chart: usize,
    /// Affine coordinates in that chart.
    pub affine: [Complex64; 2],
    /// 1 for nondegenerate points; for degenerate points, the multiplicity
    /// read off the eliminating resultants, which the inventory flags as
    /// uncertified.
    pub multiplicity: usize,
    pub nondegenerate: bool,
    pub on_divisor: bool,
    /// Local indices; present exactly at nondegenerate points.
    pub index: Option<IndexReport>,
    /// Which check decided nondegeneracy.
    pub nondegeneracy_decided_by: String,
    /// Which check decided divisor membership.
    pub on_divisor_decided_by: String,
}

/// The full singularity inventory of a field.
#[derive(Debug, Clone)]
pub struct SingularityInventory {
    /// Points sorted by normalized coordinates (real before imaginary,
    /// coordinate by coordinate).
    pub points: Vec<SingularPoint>,
    pub total_with_multiplicity: usize,
    /// Count, with multiplicity, of points on at least one divisor component.
    pub on_divisor: usize,
    /// Count, with multiplicity, of points on no divisor component.
    pub off_divisor: usize,
    /// Set when any point is degenerate; multiplicities are then resultant
    /// readings rather than certified local data.
    pub degenerate_flagged: bool,
}

impl SingularityInventory {
    /// Whether every point is nondegenerate, making counts trustworthy.
    pub fn certified(&self) -> bool {
        !self.degenerate_flagged
    }
}

/// Outcome of checking the enumerated outside-divisor count against the
/// Chern-class prediction.
#[derive(Debug, Clone)]
pub struct CountCheck {
    pub empirical: BigInt,
    pub predicted: BigInt,
    pub inventory: SingularityInventory,
}

impl CountCheck {
    pub fn matches(&self) -> bool {
        self.empirical == self.predicted
    }
}

/// Enumerates all singular points of a plane field, classifying each against
/// the invariant divisor components in `divisor` (which may be empty).
pub fn enumerate_singularities(
    field: &HomogeneousVectorField,
    divisor: &[MultiPoly],
    tol: &ToleranceConfig,
) -> Result<SingularityInventory, SolverError> {
    enumerate_with_chart_order(field, divisor, [0, 1, 2], tol)
}

/// Same enumeration with an explicit chart processing order. The resulting
/// point set does not depend on the order; which chart a shared point is
/// reported from does.
pub fn enumerate_with_chart_order(
    field: &HomogeneousVectorField,
    divisor: &[MultiPoly],
    chart_order: [usize; 3],
    tol: &ToleranceConfig,
) -> Result<SingularityInventory, SolverError> {
    if field.n() != 2 {
        return Err(SolverError::UnsupportedDimension(field.n()));
    }
    {
        let mut seen = [false; 3];
        for &c in &chart_order {
            assert!(c < 3 && !seen[c], "chart order must be a permutation of 0, 1, 2");
            seen[c] = true;
        }
    }
    for (index, f) in divisor.iter().enumerate() {
        if check_divisor_polynomial(f, 3)? == 0 {
            // A nonzero constant cuts out nothing and cannot be a divisor.
            return Err(FoliationError::InvalidDivisor.into());
        }
        if !field.is_invariant(f) {
            return Err(SolverError::NonInvariantDivisor { index });
        }
    }

    let systems: Vec<[MultiPoly; 2]> = (0..3)
        .map(|chart| {
            let mut s = field.affine_chart(chart).into_iter();
            [s.next().expect("two chart equations"), s.next().expect("two chart equations")]
        })
        .collect();

    struct Raw {
        coords: [Complex64; 3],
        chart: usize,
        affine: [Complex64; 2],
        multiplicity_hint: usize,
    }
    let mut merged: Vec<Raw> = Vec::new();
    for &chart in &chart_order {
        for cand in chart_candidates(&systems[chart], chart, tol)? {
            let hom = homogenize_normalized(chart, &cand.affine);
            if !merged.iter().any(|m| same_point(&m.coords, &hom, tol)) {
                merged.push(Raw {
                    coords: hom,
                    chart,
                    affine: cand.affine,
                    multiplicity_hint: cand.multiplicity_hint,
                });
            }
        }
    }

    let mut points = Vec::with_capacity(merged.len());
    for raw in merged {
        let system = &systems[raw.chart];
        let (det, row_norms) = foliation::jacobian_det(&system[..], &raw.affine);
        let nondegenerate = det.norm() > tol.jacobian_threshold * row_norms;
        let multiplicity = if nondegenerate { 1 } else { raw.multiplicity_hint.max(1) };
        let (on_divisor, on_divisor_decided_by) = classify_on_divisor(divisor, &raw.coords, tol);
        points.push(SingularPoint {
            coords: raw.coords,
            chart: raw.chart,
            affine: raw.affine,
            multiplicity,
            nondegenerate,
            on_divisor,
            index: nondegenerate.then(IndexReport::nondegenerate),
            nondegeneracy_decided_by: format!(
                "chart Jacobian determinant vs {:.0e} x row-norm product",
                tol.jacobian_threshold
            ),
            on_divisor_decided_by,
        });
    }
    points.sort_by(|a, b| {
        let key = |p: &SingularPoint| {
            [p.coords[0].re, p.coords[0].im, p.coords[1].re, p.coords[1].im, p.coords[2].re,
             p.coords[2].im]
        };
        let (ka, kb) = (key(a), key(b));
        ka.iter()
            .zip(kb.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    let total_with_multiplicity = points.iter().map(|p| p.multiplicity).sum();
    let on_divisor = points.iter().filter(|p| p.on_divisor).map(|p| p.multiplicity).sum();
    let off_divisor = points.iter().filter(|p| !p.on_divisor).map(|p| p.multiplicity).sum();
    let degenerate_flagged = points.iter().any(|p| !p.nondegenerate);
    Ok(SingularityInventory {
        points,
        total_with_multiplicity,
        on_divisor,
        off_divisor,
        degenerate_flagged,
    })
}

/// The Chern-class prediction for the number of singularities outside the
/// divisor: the normal-crossing count for the divisor's component degrees,
/// or the plane total `d^2 + d + 1` when no divisor is given.
pub fn predicted_outside_count(
    field_degree: u32,
    divisor_degrees: &[u32],
) -> Result<BigInt, SolverError> {
    if divisor_degrees.is_empty() {
        let d = BigInt::from(field_degree);
        return Ok(&d * &d + &d + BigInt::one());
    }
    Ok(counts::count_outside_ncd(2, divisor_degrees, field_degree)?)
}

/// Enumerates, refuses uncertified inventories, and compares the empirical
/// outside-divisor count with the Chern-class prediction.
pub fn verify_outside_count(
    field: &HomogeneousVectorField,
    divisor: &[MultiPoly],
    tol: &ToleranceConfig,
) -> Result<CountCheck, SolverError> {
    let inventory = enumerate_singularities(field, divisor, tol)?;
    if !inventory.certified() {
        return Err(SolverError::Inconclusive);
    }
    let degrees: Vec<u32> = divisor
        .iter()
        .map(|f| f.homogeneous_degree().expect("validated during enumeration"))
        .collect();
    let predicted = predicted_outside_count(field.degree(), &degrees)?;
    let empirical = BigInt::from(inventory.off_divisor);
    Ok(CountCheck { empirical, predicted, inventory })
}

struct ChartCandidate {
    affine: [Complex64; 2],
    multiplicity_hint: usize,
}

/// Certified common zeros of one chart system.
fn chart_candidates(
    system: &[MultiPoly; 2],
    chart: usize,
    tol: &ToleranceConfig,
) -> Result<Vec<ChartCandidate>, SolverError> {
    let [p, q] = system;
    // Shape analysis first: constants and identically-zero equations decide
    // the chart without elimination.
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(SolverError::CommonFactor { chart }),
        (true, false) => {
            return if q.total_degree() == Some(0) {
                Ok(Vec::new())
            } else {
                Err(SolverError::CommonFactor { chart })
            };
        }
        (false, true) => {
            return if p.total_degree() == Some(0) {
                Ok(Vec::new())
            } else {
                Err(SolverError::CommonFactor { chart })
            };
        }
        (false, false) => {}
    }
    if p.total_degree() == Some(0) || q.total_degree() == Some(0) {
        return Ok(Vec::new());
    }
    // Both equations free of the same variable: their zero sets are unions
    // of lines, so any common zero is a whole line.
    for var in 0..2 {
        if degree_in(p, var) == 0 && degree_in(q, var) == 0 {
            let keep = 1 - var;
            let g = unipoly::gcd(&to_unipoly(p, keep), &to_unipoly(q, keep));
            return if g.degree().unwrap_or(0) > 0 {
                Err(SolverError::CommonFactor { chart })
            } else {
                Ok(Vec::new())
            };
        }
    }

    // res eliminating y constrains x and vice versa. A zero resultant in
    // either direction certifies a common factor of positive degree.
    let res_for_x = prs_resultant(&to_bipoly(p, 1), &to_bipoly(q, 1));
    let res_for_y = prs_resultant(&to_bipoly(p, 0), &to_bipoly(q, 0));
    if res_for_x.is_zero() || res_for_y.is_zero() {
        return Err(SolverError::CommonFactor { chart });
    }
    let xs = complex_roots(&unipoly::primitive_part(&res_for_x), tol)?;
    let ys = complex_roots(&unipoly::primitive_part(&res_for_y), tol)?;

    let mut found: Vec<ChartCandidate> = Vec::new();
    for &(x, mx) in &xs {
        for &(y, my) in &ys {
            let mut pt = [x, y];
            if foliation::residual_ratio(&system[..], &pt) > COARSE_RESIDUAL {
                continue;
            }
            newton_refine(system, &mut pt, tol);
            if foliation::residual_ratio(&system[..], &pt) > tol.residual {
                continue;
            }
            let duplicate = found.iter().any(|c| {
                (c.affine[0] - pt[0]).norm() <= tol.merge * (1.0 + pt[0].norm())
                    && (c.affine[1] - pt[1]).norm() <= tol.merge * (1.0 + pt[1].norm())
            });
            if !duplicate {
                // Either resultant multiplicity can be inflated by another
                // point sharing that coordinate; the minimum discards
                // single-coordinate aliasing.
                found.push(ChartCandidate { affine: pt, multiplicity_hint: mx.min(my) });
            }
        }
    }
    Ok(found)
}

/// Newton refinement toward the chart system's zero, keeping the best
/// residual seen in case a step overshoots near a degenerate point.
fn newton_refine(system: &[MultiPoly; 2], pt: &mut [Complex64; 2], tol: &ToleranceConfig) {
    let jac = [
        [system[0].partial_derivative(0), system[0].partial_derivative(1)],
        [system[1].partial_derivative(0), system[1].partial_derivative(1)],
    ];
    let mut best = *pt;
    let mut best_res = foliation::residual_ratio(&system[..], pt);
    for _ in 0..tol.max_newton_iterations {
        if best_res <= tol.newton_target {
            break;
        }
        let f0 = system[0].eval_complex(pt);
        let f1 = system[1].eval_complex(pt);
        let a = jac[0][0].eval_complex(pt);
        let b = jac[0][1].eval_complex(pt);
        let c = jac[1][0].eval_complex(pt);
        let d = jac[1][1].eval_complex(pt);
        let det = a * d - b * c;
        if det.norm() < f64::MIN_POSITIVE {
            break;
        }
        pt[0] -= (f0 * d - f1 * b) / det;
        pt[1] -= (a * f1 - c * f0) / det;
        let res = foliation::residual_ratio(&system[..], pt);
        if res < best_res {
            best_res = res;
            best = *pt;
        }
    }
    *pt = best;
}

/// Highest exponent of `var` across the terms of `p` (0 for constants and
/// the zero polynomial).
fn degree_in(p: &MultiPoly, var: usize) -> u32 {
    p.terms().map(|(m, _)| m.exponents()[var]).max().unwrap_or(0)
}

/// Chart polynomial as a polynomial in variable `outer` with integer
/// polynomial coefficients in the other variable. Denominators are cleared
/// by the positive common denominator, which leaves the zero set unchanged.
fn to_bipoly(p: &MultiPoly, outer: usize) -> BiPoly {
    let inner = 1 - outer;
    let (terms, _denom) = p.integer_terms();
    let mut coeffs: Vec<Vec<BigInt>> = Vec::new();
    for (mono, c) in terms {
        let eo = mono.exponents()[outer] as usize;
        let ei = mono.exponents()[inner] as usize;
        if coeffs.len() <= eo {
            coeffs.resize_with(eo + 1, Vec::new);
        }
        let row = &mut coeffs[eo];
        if row.len() <= ei {
            row.resize_with(ei + 1, BigInt::zero);
        }
        row[ei] += c;
    }
    BiPoly::from_coeffs(coeffs.into_iter().map(UniPoly::from_coeffs).collect())
}

/// A chart polynomial that only involves variable `var`, as a univariate
/// integer polynomial.
fn to_unipoly(p: &MultiPoly, var: usize) -> UniPoly {
    let (terms, _denom) = p.integer_terms();
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (mono, c) in terms {
        let e = mono.exponents()[var] as usize;
        if coeffs.len() <= e {
            coeffs.resize_with(e + 1, BigInt::zero);
        }
        coeffs[e] += c;
    }
    UniPoly::from_coeffs(coeffs)
}

/// Exact modulus ties between coordinates (common at rational points like
/// (1 : -1 : w)) must resolve to the same pivot in every chart, or the two
/// representatives differ by a global phase and the merge misses them.
/// Rounding noise in the modulus comparison is absorbed by this slack.
const PIVOT_TIE_SLACK: f64 = 1e-9;

/// Homogeneous coordinates of a chart point, scaled so a largest-modulus
/// coordinate is exactly 1; near-ties pick the lowest index. Pinning the
/// pivot to exactly 1 removes rounding residue from the division.
fn homogenize_normalized(chart: usize, affine: &[Complex64; 2]) -> [Complex64; 3] {
    let hom = foliation::homogenize_point(chart, affine);
    let max = hom.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let pivot = (0..3)
        .find(|&i| hom[i].norm() >= max * (1.0 - PIVOT_TIE_SLACK))
        .expect("chart points have a nonzero coordinate");
    let scale = hom[pivot];
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for i in 0..3 {
        out[i] = hom[i] / scale;
    }
    out[pivot] = Complex64::new(1.0, 0.0);
    out
}

fn same_point(a: &[Complex64; 3], b: &[Complex64; 3], tol: &ToleranceConfig) -> bool {
    a.iter()
        .zip(b.iter())
        .all(|(x, y)| (x - y).norm() <= tol.merge * (1.0 + y.norm()))
}

/// Divisor membership: scaled residual against every component, with the
/// verdict corroborated by exact evaluation whenever all coordinates
/// reconstruct as Gaussian rationals. The exact pass can only confirm the
/// numeric verdict, never overturn it: a reconstruction within snapping
/// tolerance of an irrational coordinate would otherwise smuggle in a wrong
/// exact answer.
fn classify_on_divisor(
    divisor: &[MultiPoly],
    coords: &[Complex64; 3],
    tol: &ToleranceConfig,
) -> (bool, String) {
    if divisor.is_empty() {
        return (false, "no divisor supplied".to_string());
    }
    let numeric_on = divisor.iter().any(|f| {
        f.eval_complex(coords).norm() <= tol.divisor_residual * foliation::residual_scale(f, coords)
    });
    if let Some(exact) = snap_point(coords, tol) {
        let exact_on = divisor.iter().any(|f| f.eval_gaussian(&exact).is_zero());
        if exact_on == numeric_on {
            return (
                numeric_on,
                format!(
                    "scaled residual vs {:.0e}, confirmed by exact evaluation at reconstructed \
                     rational coordinates",
                    tol.divisor_residual
                ),
            );
        }
    }
    (numeric_on, format!("scaled residual vs {:.0e}", tol.divisor_residual))
}

fn snap_point(coords: &[Complex64; 3], tol: &ToleranceConfig) -> Option<Vec<GaussianRational>> {
    let mut out = Vec::with_capacity(3);
    for c in coords {
        let re = snap_rational(c.re, tol.snap_height, tol.snap_tolerance)?;
        let im = snap_rational(c.im, tol.snap_height, tol.snap_tolerance)?;
        out.push(GaussianRational::new(re, im));
    }
    Some(out)
}

/// Best rational reconstruction of `x` by continued-fraction convergents:
/// the first convergent within `tol` whose numerator and denominator stay
/// below `max_height`.
fn snap_rational(x: f64, max_height: u64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let height = BigInt::from(max_height);
    // Convergent recurrences: p_i = a_i p_{i-1} + p_{i-2}, same for q,
    // seeded with (p_{-2}, p_{-1}) = (0, 1) and (q_{-2}, q_{-1}) = (1, 0).
    let (mut p_prev, mut p_curr) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_curr) = (BigInt::one(), BigInt::zero());
    let mut rest = x;
    for _ in 0..64 {
        let floor = rest.floor();
        if floor.abs() > 9e18 {
            return None;
        }
        let a = BigInt::from(floor as i64);
        let p_next = &a * &p_curr + &p_prev;
        let q_next = &a * &q_curr + &q_prev;
        if p_next.magnitude() > height.magnitude() || q_next.magnitude() > height.magnitude() {
            return None;
        }
        let value = BigRational::new(p_next.clone(), q_next.clone());
        if (value.to_f64().unwrap_or(f64::NAN) - x).abs() <= tol {
            return Some(value);
        }
        p_prev = std::mem::replace(&mut p_curr, p_next);
        q_prev = std::mem::replace(&mut q_curr, q_next);
        let frac = rest - floor;
        if frac.abs() < f64::EPSILON {
            return None;
        }
        rest = 1.0 / frac;
    }
    None
}
