//! Chow ring of complex projective space.
//!
//! The Chow ring of `P^n` is `Z[h]/(h^{n+1})` where `h` is the hyperplane
//! class. A class is stored as its coefficient vector against the basis
//! `1, h, ..., h^n`; products truncate above `h^n`. Integration reads off the
//! top coefficient: the fundamental class satisfies `integral over P^n of
//! h^n = 1`, and on a smooth degree-`k` hypersurface `X` in `P^n` (whose
//! classes we write in the restricted hyperplane class) `integral over X of
//! h^(n-1) = k`.
//!
//! [`TotalChern`] wraps a class with constant term 1, the shape of a total
//! Chern class `c(E) = 1 + c_1 + ...`. Such units invert exactly in the
//! truncated ring, which is what makes Chern classes of virtual differences
//! `E - F` computable as `c(E) * c(F)^(-1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from Chow-ring arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChowError {
    /// Two classes (or a class and an ambient space) live in rings truncated
    /// at different degrees.
    #[error("dimension mismatch: class of dimension {left} combined with dimension {right}")]
    DimensionMismatch { left: usize, right: usize },
    /// A coefficient vector has the wrong length for the stated dimension.
    #[error("coefficient vector has length {got}, dimension {dim} needs {expected}")]
    CoefficientLength { dim: usize, expected: usize, got: usize },
    /// A total Chern class must start with constant term 1.
    #[error("total class must have constant term 1, got {0}")]
    NonUnitConstantTerm(BigInt),
    /// Ambient-space parameters out of range.
    #[error("invalid ambient space: {0}")]
    InvalidAmbient(String),
}

/// Binomial coefficient `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        // The running product of j consecutive ratios is an integer, so this
        // division is exact.
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// An element of `Z[h]/(h^{dim+1})`, the Chow ring of `P^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    dim: usize,
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    /// Builds a class from coefficients of `1, h, ..., h^dim`.
    pub fn from_coeffs(dim: usize, coeffs: Vec<BigInt>) -> Result<Self, ChowError> {
        if coeffs.len() != dim + 1 {
            return Err(ChowError::CoefficientLength {
                dim,
                expected: dim + 1,
                got: coeffs.len(),
            });
        }
        Ok(ChowClass { dim, coeffs })
    }

    /// The zero class.
    pub fn zero(dim: usize) -> Self {
        ChowClass { dim, coeffs: vec![BigInt::zero(); dim + 1] }
    }

    /// The multiplicative unit.
    pub fn one(dim: usize) -> Self {
        Self::h_power_scaled(dim, 0, BigInt::one())
    }

    /// `h^power`; the zero class when `power` exceeds `dim` (then `h^power`
    /// is annihilated by the truncation).
    pub fn h_power(dim: usize, power: usize) -> Self {
        Self::h_power_scaled(dim, power, BigInt::one())
    }

    /// `c * h^power`, truncating to zero above `h^dim`.
    pub fn h_power_scaled(dim: usize, power: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); dim + 1];
        if power <= dim {
            coeffs[power] = c;
        }
        ChowClass { dim, coeffs }
    }

    /// Truncation degree: the class lives in the Chow ring of `P^dim`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `h^i`; zero beyond the truncation degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients of `1, h, ..., h^dim`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check_dim(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ChowClass { dim: self.dim, coeffs })
    }

    pub fn neg(&self) -> ChowClass {
        ChowClass { dim: self.dim, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> ChowClass {
        ChowClass { dim: self.dim, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Product in `Z[h]/(h^{dim+1})`: convolution of coefficients truncated
    /// above `h^dim`.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check_dim(other)?;
        let mut coeffs = vec![BigInt::zero(); self.dim + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.dim {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Ok(ChowClass { dim: self.dim, coeffs })
    }

    fn check_dim(&self, other: &ChowClass) -> Result<(), ChowError> {
        if self.dim != other.dim {
            return Err(ChowError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            let sign_neg = c.sign() == num_bigint::Sign::Minus;
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if i == 0 || !unit_mag {
                write!(f, "{mag}")?;
            }
            if i == 1 {
                write!(f, "h")?;
            } else if i > 1 {
                write!(f, "h^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A Chow class with constant term 1: the shape of a total Chern class.
///
/// The constant-term invariant is established at construction and preserved
/// by every operation here, so inversion never fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalChern(ChowClass);

impl TotalChern {
    /// Wraps a class, requiring constant term 1.
    pub fn new(class: ChowClass) -> Result<Self, ChowError> {
        if !class.coeff(0).is_one() {
            return Err(ChowError::NonUnitConstantTerm(class.coeff(0)));
        }
        Ok(TotalChern(class))
    }

    /// The trivial total class `1`.
    pub fn one(dim: usize) -> Self {
        TotalChern(ChowClass::one(dim))
    }

    /// `(1 + a*h)^m` truncated to the ring of `P^dim`: the total Chern class
    /// of `O(a)^m`.
    pub fn binomial_total(a: i64, m: u32, dim: usize) -> Self {
        let a = BigInt::from(a);
        let mut coeffs = Vec::with_capacity(dim + 1);
        let mut a_pow = BigInt::one();
        for i in 0..=dim {
            coeffs.push(binomial(u64::from(m), i as u64) * &a_pow);
            a_pow *= &a;
        }
        TotalChern(ChowClass { dim, coeffs })
    }

    pub fn class(&self) -> &ChowClass {
        &self.0
    }

    pub fn into_class(self) -> ChowClass {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// Degree-`i` piece, the `i`-th Chern class of whatever the total class
    /// describes.
    pub fn chern(&self, i: usize) -> BigInt {
        self.0.coeff(i)
    }

    pub fn mul(&self, other: &TotalChern) -> Result<TotalChern, ChowError> {
        Ok(TotalChern(self.0.mul(&other.0)?))
    }

    /// Multiplicative inverse in the truncated ring, computed by the
    /// power-series recursion `b_0 = 1`, `b_m = -sum a_j b_(m-j)`.
    pub fn inverse_unit(&self) -> TotalChern {
        let dim = self.0.dim;
        let a = &self.0.coeffs;
        let mut b = vec![BigInt::zero(); dim + 1];
        b[0] = BigInt::one();
        for m in 1..=dim {
            let mut acc = BigInt::zero();
            for j in 1..=m {
                acc += &a[j] * &b[m - j];
            }
            b[m] = -acc;
        }
        TotalChern(ChowClass { dim, coeffs: b })
    }

    /// Total class of the dual: `h` goes to `-h`, negating odd coefficients.
    pub fn dual_total(&self) -> TotalChern {
        let coeffs = self
            .0
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        TotalChern(ChowClass { dim: self.0.dim, coeffs })
    }
}

/// Where a class is integrated: projective space itself or a smooth
/// hypersurface inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// `P^n`; classes live in `Z[h]/(h^{n+1})` and `integral of h^n = 1`.
    Projective { n: usize },
    /// A smooth degree-`degree` hypersurface in `P^n`; classes live in
    /// `Z[h]/(h^n)` and `integral of h^(n-1) = degree`.
    Hypersurface { n: usize, degree: u32 },
}

impl Ambient {
    pub fn projective(n: usize) -> Result<Self, ChowError> {
        if n == 0 {
            return Err(ChowError::InvalidAmbient("projective space needs n >= 1".into()));
        }
        Ok(Ambient::Projective { n })
    }

    pub fn hypersurface(n: usize, degree: u32) -> Result<Self, ChowError> {
        if n == 0 {
            return Err(ChowError::InvalidAmbient("hypersurface ambient needs n >= 1".into()));
        }
        if degree == 0 {
            return Err(ChowError::InvalidAmbient("hypersurface degree must be >= 1".into()));
        }
        Ok(Ambient::Hypersurface { n, degree })
    }

    /// Truncation degree of classes on this space (its complex dimension).
    pub fn class_dim(&self) -> usize {
        match *self {
            Ambient::Projective { n } => n,
            Ambient::Hypersurface { n, .. } => n - 1,
        }
    }

    /// Integrates a top-degree class: the coefficient of the top power of
    /// `h`, times the degree of the hypersurface when on one (restriction of
    /// `h^(n-1)` to a degree-`k` hypersurface has degree `k`).
    pub fn integrate(&self, c: &ChowClass) -> Result<BigInt, ChowError> {
        let dim = self.class_dim();
        if c.dim() != dim {
            return Err(ChowError::DimensionMismatch { left: c.dim(), right: dim });
        }
        match *self {
            Ambient::Projective { .. } => Ok(c.coeff(dim)),
            Ambient::Hypersurface { degree, .. } => Ok(c.coeff(dim) * BigInt::from(degree)),
        }
    }
}

/// Restricts a class on `P^n` to a smooth degree-`degree` hypersurface:
/// truncation to `Z[h]/(h^n)`, paired with the hypersurface ambient that
/// integrates the result.
pub fn restrict(c: &ChowClass, degree: u32) -> Result<(ChowClass, Ambient), ChowError> {
    let n = c.dim();
    if n == 0 {
        return Err(ChowError::InvalidAmbient(
            "cannot restrict a dimension-0 class to a hypersurface".into(),
        ));
    }
    let ambient = Ambient::hypersurface(n, degree)?;
    let coeffs = c.coeffs()[..n].to_vec();
    Ok((ChowClass { dim: n - 1, coeffs }, ambient))
}

/// Top Chern class of a virtual difference `E - L` with `L = O(twist)` a line
/// bundle, integrated over the ambient space:
///
/// `c_top(E - L) = sum over j of c_(top-j)(E) * c_1(L^dual)^j`,
///
/// implemented as the product of the total class of `E` with the geometric
/// series `sum (-twist*h)^j`, integrated. `e` must live in the ambient's ring.
pub fn top_chern_difference(
    e: &TotalChern,
    twist: i64,
    ambient: &Ambient,
) -> Result<BigInt, ChowError> {
    let dim = ambient.class_dim();
    if e.dim() != dim {
        return Err(ChowError::DimensionMismatch { left: e.dim(), right: dim });
    }
    let neg_a = BigInt::from(-twist);
    let mut coeffs = Vec::with_capacity(dim + 1);
    let mut pow = BigInt::one();
    for _ in 0..=dim {
        coeffs.push(pow.clone());
        pow *= &neg_a;
    }
    let series = ChowClass { dim, coeffs };
    ambient.integrate(&e.class().mul(&series)?)
}
