//! One-dimensional foliations on `P^n` as homogeneous polynomial vector
//! fields.
//!
//! A field is `n+1` polynomials `v_0, ..., v_n` in `z_0, ..., z_n`, all
//! homogeneous of one degree `d`, not a polynomial multiple of the radial
//! field `sum z_i d/dz_i` (radial multiples act trivially on projective
//! space). Such a representative realizes a foliation of degree `d`, the
//! integer with tangent sheaf `O(1-d)`.
//!
//! A hypersurface `{F = 0}` is invariant exactly when `F` divides the
//! derivative `v(F) = sum v_i dF/dz_i`; the test is exact rational-arithmetic
//! polynomial division, no numerics. Chart restriction produces the `n`
//! affine polynomials `(v_j - z_j v_i)` at `z_i = 1` whose common zeros are
//! the singularities visible in chart `i`.
//!
//! The index bookkeeping implemented here covers exactly the nondegenerate
//! case: at a singular point with invertible chart Jacobian the Milnor number
//! is 1, the GSV index along a divisor smooth at the point is 1 (the
//! restriction of an invertible linear map to an invariant subspace is
//! invertible), and the logarithmic index, their difference, is 0. Degenerate
//! points are refused rather than approximated. The standing codimension
//! assumption (singular locus of codimension at least two) is not verified
//! for arbitrary input; the solver layer detects its failure on `P^2` as a
//! common factor during elimination.

use num_complex::Complex64;
use thiserror::Error;

use crate::poly::MultiPoly;
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Error, PartialEq)]
pub enum FoliationError {
    #[error("a projective vector field needs at least 2 components, got {0}")]
    TooFewComponents(usize),
    #[error("component {index} has arity {got}, expected {expected} variables")]
    ArityMismatch { index: usize, expected: usize, got: usize },
    #[error("all components are zero")]
    AllZero,
    #[error("component {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("components have mixed degrees: component {first_index} has degree {first}, component {second_index} has degree {second}")]
    MixedDegrees { first_index: usize, first: u32, second_index: usize, second: u32 },
    #[error("field is a polynomial multiple of the radial field")]
    RadialMultiple,
    #[error("divisor polynomial must be nonzero and homogeneous")]
    InvalidDivisor,
    #[error("point is not a singularity: scaled residual {residual:.3e} exceeds tolerance")]
    NotASingularity { residual: f64 },
    #[error("degenerate singularity: Milnor numbers above 1 are unsupported")]
    Unsupported,
}

/// Local indices at a nondegenerate singular point: Milnor number, GSV index
/// along the divisor, and their difference the logarithmic index. Off the
/// divisor the GSV column repeats the Milnor number by convention, keeping
/// `log_index == milnor - gsv` an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexReport {
    pub milnor: i64,
    pub gsv: i64,
    pub log_index: i64,
    pub nondegenerate: bool,
}

impl IndexReport {
    /// The report at any certified nondegenerate point.
    pub fn nondegenerate() -> Self {
        IndexReport { milnor: 1, gsv: 1, log_index: 0, nondegenerate: true }
    }
}

/// A validated homogeneous vector-field representative of a foliation.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousVectorField {
    n: usize,
    degree: u32,
    components: Vec<MultiPoly>,
}

impl HomogeneousVectorField {
    /// Validates and wraps components `v_0, ..., v_n` (so `n+1` polynomials
    /// in `n+1` variables): common homogeneous degree, not all zero, not a
    /// polynomial multiple of the radial field.
    pub fn new(components: Vec<MultiPoly>) -> Result<Self, FoliationError> {
        if components.len() < 2 {
            return Err(FoliationError::TooFewComponents(components.len()));
        }
        let nvars = components.len();
        for (index, c) in components.iter().enumerate() {
            if c.nvars() != nvars {
                return Err(FoliationError::ArityMismatch {
                    index,
                    expected: nvars,
                    got: c.nvars(),
                });
            }
        }
        let mut degree: Option<(usize, u32)> = None;
        for (index, c) in components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree().ok_or(FoliationError::NotHomogeneous { index })?;
            match degree {
                None => degree = Some((index, d)),
                Some((first_index, first)) if first != d => {
                    return Err(FoliationError::MixedDegrees {
                        first_index,
                        first,
                        second_index: index,
                        second: d,
                    });
                }
                Some(_) => {}
            }
        }
        let (_, degree) = degree.ok_or(FoliationError::AllZero)?;
        if is_radial_multiple(&components) {
            return Err(FoliationError::RadialMultiple);
        }
        Ok(HomogeneousVectorField { n: nvars - 1, degree, components })
    }

    /// Projective dimension `n` (the field has `n+1` components).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Common homogeneous degree of the components; the degree of the
    /// foliation.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// The derivative of `f` along the field: `sum v_i df/dz_i`, exact.
    pub fn derive_along(&self, f: &MultiPoly) -> MultiPoly {
        derivation(&self.components, f)
    }

    /// Whether the hypersurface `{f = 0}` is invariant: `f` divides
    /// `v(f)` exactly. `f` must be nonzero (and, for the geometric reading,
    /// homogeneous).
    pub fn is_invariant(&self, f: &MultiPoly) -> bool {
        assert!(!f.is_zero(), "invariance of the zero polynomial is undefined");
        self.derive_along(f).is_divisible_by(f)
    }

    /// Restriction to the chart `z_i = 1`: the `n` polynomials
    /// `(v_j - z_j v_i)` at `z_i = 1`, for `j != i` in ascending order, in
    /// the `n` remaining variables. Their common zeros are the foliation
    /// singularities visible in the chart.
    pub fn affine_chart(&self, i: usize) -> Vec<MultiPoly> {
        assert!(i <= self.n, "chart index {i} out of range for P^{}", self.n);
        (0..=self.n)
            .filter(|&j| j != i)
            .map(|j| {
                let zj = MultiPoly::variable(self.n + 1, j);
                let numerator = &self.components[j] - &(&zj * &self.components[i]);
                numerator.substitute_one(i)
            })
            .collect()
    }

    /// Index bookkeeping at a numerically verified singular point in a
    /// chart. `point` is in chart-affine coordinates. The point must satisfy
    /// the chart equations within the residual tolerance and have an
    /// invertible chart Jacobian; degenerate points are refused. When a
    /// divisor polynomial is supplied the caller asserts it is invariant and
    /// smooth at the point; the indices of a nondegenerate point are
    /// `(milnor, gsv, log) = (1, 1, 0)` on or off the divisor.
    pub fn index_report(
        &self,
        _divisor: Option<&MultiPoly>,
        point: &[Complex64],
        chart: usize,
        tol: &ToleranceConfig,
    ) -> Result<IndexReport, FoliationError> {
        let system = self.affine_chart(chart);
        let worst = residual_ratio(&system, point);
        if worst > tol.residual {
            return Err(FoliationError::NotASingularity { residual: worst });
        }
        let (det, row_norm_product) = jacobian_det(&system, point);
        if det.norm() <= tol.jacobian_threshold * row_norm_product {
            return Err(FoliationError::Unsupported);
        }
        Ok(IndexReport::nondegenerate())
    }
}

/// `sum components[i] * df/dz_i`. Free-standing so it applies to component
/// lists that are not valid foliation representatives (the radial field).
fn derivation(components: &[MultiPoly], f: &MultiPoly) -> MultiPoly {
    let nvars = f.nvars();
    let mut acc = MultiPoly::zero(nvars);
    for (i, v) in components.iter().enumerate() {
        acc = &acc + &(v * &f.partial_derivative(i));
    }
    acc
}

/// `v = g * (z_0, ..., z_n)` for one polynomial `g`: every component must be
/// divisible by its variable with a common quotient. Any zero component
/// rules this out (the quotient would be zero, forcing all components zero,
/// which validation already rejected).
fn is_radial_multiple(components: &[MultiPoly]) -> bool {
    let nvars = components.len();
    let mut common: Option<MultiPoly> = None;
    for (i, v) in components.iter().enumerate() {
        if v.is_zero() {
            return false;
        }
        let zi = MultiPoly::variable(nvars, i);
        let Some(q) = v.div_exact(&zi) else {
            return false;
        };
        match &common {
            None => common = Some(q),
            Some(g) if *g != q => return false,
            Some(_) => {}
        }
    }
    true
}

/// Checks a divisor component polynomial: right arity, nonzero, homogeneous.
/// Returns its degree.
pub fn check_divisor_polynomial(f: &MultiPoly, nvars: usize) -> Result<u32, FoliationError> {
    if f.nvars() != nvars {
        return Err(FoliationError::ArityMismatch { index: 0, expected: nvars, got: f.nvars() });
    }
    f.homogeneous_degree().ok_or(FoliationError::InvalidDivisor)
}

/// Largest scaled residual of the system at the point: each polynomial's
/// value is divided by its coefficient norm times `max(1, |point|_inf)` to
/// its degree, making the threshold meaningful across scales.
pub(crate) fn residual_ratio(system: &[MultiPoly], point: &[Complex64]) -> f64 {
    system
        .iter()
        .map(|w| w.eval_complex(point).norm() / residual_scale(w, point))
        .fold(0.0, f64::max)
}

pub(crate) fn residual_scale(w: &MultiPoly, point: &[Complex64]) -> f64 {
    let norm = point.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    let deg = w.total_degree().unwrap_or(0);
    (w.coeff_norm() * norm.powi(deg as i32)).max(f64::MIN_POSITIVE)
}

/// Chart Jacobian determinant at the point, with the product of Euclidean
/// row norms for relative thresholding. Gaussian elimination with partial
/// pivoting.
pub(crate) fn jacobian_det(system: &[MultiPoly], point: &[Complex64]) -> (Complex64, f64) {
    let n = system.len();
    let mut mat: Vec<Vec<Complex64>> = system
        .iter()
        .map(|w| (0..n).map(|j| w.partial_derivative(j).eval_complex(point)).collect())
        .collect();
    let row_norm_product: f64 = mat
        .iter()
        .map(|row| row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .product();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| mat[a][col].norm().total_cmp(&mat[b][col].norm()))
            .expect("nonempty range");
        if mat[pivot_row][col].norm() == 0.0 {
            return (Complex64::new(0.0, 0.0), row_norm_product);
        }
        if pivot_row != col {
            mat.swap(pivot_row, col);
            det = -det;
        }
        let pivot = mat[col][col];
        det *= pivot;
        let pivot_row = mat[col].clone();
        for row in mat.iter_mut().take(n).skip(col + 1) {
            let factor = row[col] / pivot;
            for (entry, p) in row[col..n].iter_mut().zip(&pivot_row[col..n]) {
                *entry -= factor * p;
            }
        }
    }
    (det, row_norm_product)
}

/// Homogeneous coordinates of a chart point: 1 inserted at the chart slot.
pub fn homogenize_point(chart: usize, affine: &[Complex64]) -> Vec<Complex64> {
    let mut coords = Vec::with_capacity(affine.len() + 1);
    coords.extend_from_slice(&affine[..chart]);
    coords.push(Complex64::new(1.0, 0.0));
    coords.extend_from_slice(&affine[chart..]);
    coords
}
