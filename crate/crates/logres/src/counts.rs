//! Closed counts of foliation singularities outside an invariant divisor.
//!
//! For a degree-`d` foliation on `P^n` logarithmic along a smooth invariant
//! hypersurface of degree `k` with only nondegenerate singularities, the
//! number of singular points off the divisor is
//!
//! `delta(k, d, n) = sum over i, j of C(n+1, n-i-j) * (-k)^j * (d-1)^i`,
//!
//! with the convention `0^0 = 1`. The double sum telescopes into the rational
//! closed form `((1-k)^(n+1) - d^(n+1)) / (1-k-d)` and into the alternating
//! sum `sum over i of (-1)^i (k-1)^i d^(n-i)`; the three agree on all valid
//! parameters, and their sign depends only on the parity of `n`:
//!
//! * `n` odd: `sign(delta) = sign(d+1-k)`, so the count vanishes exactly on
//!   the boundary `k = d+1`. A negative value means no foliation realizes the
//!   configuration (the intersection number obstructs existence).
//! * `n` even: `delta >= 0`, vanishing only at `(k, d) = (1, 0)`.
//!
//! [`count_outside_ncd`] generalizes to normal-crossing divisors via the
//! logarithmic-tangent-bundle integral of the [`crate::logchern`] module.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chow::{binomial, top_chern_difference, Ambient};
use crate::logchern::{log_total_ncd, Divisor, LogChernError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountsError {
    #[error("invalid count parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    LogChern(#[from] LogChernError),
}

/// Parameters of the outside-divisor count: divisor degree `k >= 1`,
/// foliation degree `d >= 0`, projective dimension `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountParams {
    k: u32,
    d: u32,
    n: u32,
}

impl CountParams {
    pub fn new(k: u32, d: u32, n: u32) -> Result<Self, CountsError> {
        if k < 1 {
            return Err(CountsError::InvalidParams("divisor degree k must be >= 1".into()));
        }
        if n < 2 {
            return Err(CountsError::InvalidParams(
                "projective dimension n must be >= 2".into(),
            ));
        }
        Ok(CountParams { k, d, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Whether every singularity lies on the invariant divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    SomeOutside,
    AllOnDivisor,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::SomeOutside => write!(f, "SomeOutside"),
            Verdict::AllOnDivisor => write!(f, "AllOnDivisor"),
        }
    }
}

/// Which row of the parity case table the parameters fall in. The short
/// codes 1a/1b (odd `n`) and 2a/2b (even `n`) are the stable labels used in
/// reports; the `b` rows are exactly the vanishing loci.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    /// Odd `n`, `k != d+1`: some singularities off the divisor.
    OddSomeOutside,
    /// Odd `n`, `k = d+1`: the count vanishes.
    OddAllOn,
    /// Even `n`, `(k,d) != (1,0)`: strictly positive count.
    EvenSomeOutside,
    /// Even `n`, `(k,d) = (1,0)`: the count vanishes.
    EvenAllOn,
}

impl CaseLabel {
    pub fn code(&self) -> &'static str {
        match self {
            CaseLabel::OddSomeOutside => "1a",
            CaseLabel::OddAllOn => "1b",
            CaseLabel::EvenSomeOutside => "2a",
            CaseLabel::EvenAllOn => "2b",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// The verdict, its case-table row, and the signed count itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub case_label: CaseLabel,
    pub count: BigInt,
}

/// `pow` with the convention `0^0 = 1` (which `BigInt::pow` already follows).
fn ipow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// The triangular double sum `f(x, y) = sum over i of sum over j of
/// C(n+1, n-i-j) x^j y^i` with `0 <= i <= n`, `0 <= j <= n-i`. Satisfies
/// `(x-y) f(x,y) = (1+x)^(n+1) - (1+y)^(n+1)` and
/// `f(x,x) = (n+1)(1+x)^n`.
pub fn f_eval(x: i64, y: i64, n: u32) -> BigInt {
    let n = n as u64;
    let mut acc = BigInt::zero();
    let mut y_pow = BigInt::one();
    for i in 0..=n {
        let mut x_pow = BigInt::one();
        for j in 0..=(n - i) {
            acc += binomial(n + 1, n - i - j) * &x_pow * &y_pow;
            x_pow *= x;
        }
        y_pow *= y;
    }
    acc
}

/// The count as the literal double sum `f(-k, d-1)`: the ground-truth form.
pub fn delta_sum(p: &CountParams) -> BigInt {
    f_eval(-i64::from(p.k), i64::from(p.d) - 1, p.n)
}

/// The count by the rational closed form
/// `((1-k)^(n+1) - d^(n+1)) / (1-k-d)`, falling back to [`delta_sum`] on the
/// degenerate line `1-k-d = 0` (where the formula is the two-variable sum at
/// equal arguments). The division is exact.
pub fn delta_closed(p: &CountParams) -> BigInt {
    let k = i64::from(p.k);
    let d = i64::from(p.d);
    let den = 1 - k - d;
    if den == 0 {
        return delta_sum(p);
    }
    let num = ipow(1 - k, p.n + 1) - ipow(d, p.n + 1);
    let den = BigInt::from(den);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "closed-form division must be exact");
    q
}

/// The count as the alternating sum `sum over i of (-1)^i (k-1)^i d^(n-i)`.
pub fn delta_alternating(p: &CountParams) -> BigInt {
    let k = i64::from(p.k);
    let d = i64::from(p.d);
    let mut acc = BigInt::zero();
    for i in 0..=p.n {
        let term = ipow(k - 1, i) * ipow(d, p.n - i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Applies the parity case table and reports the signed count
/// (via [`delta_sum`]).
pub fn classify(p: &CountParams) -> Classification {
    let count = delta_sum(p);
    let case_label = if p.n % 2 == 1 {
        if p.k == p.d + 1 {
            CaseLabel::OddAllOn
        } else {
            CaseLabel::OddSomeOutside
        }
    } else if (p.k, p.d) == (1, 0) {
        CaseLabel::EvenAllOn
    } else {
        CaseLabel::EvenSomeOutside
    };
    let verdict = if count.is_zero() {
        Verdict::AllOnDivisor
    } else {
        Verdict::SomeOutside
    };
    Classification { verdict, case_label, count }
}

/// Outside-divisor count for a smooth invariant hypersurface of degree `k`:
/// the common value of the three delta forms. Assumes (not checked here) that
/// the divisor is smooth, the foliation is logarithmic along it, and all
/// singularities are nondegenerate.
pub fn count_outside_smooth(p: &CountParams) -> BigInt {
    delta_closed(p)
}

/// Outside-divisor count for a normal-crossing invariant divisor with the
/// given component degrees: the integral over `P^n` of the top Chern class of
/// `T(-log D) - T_F` with `T_F = O(1-d)`.
pub fn count_outside_ncd(n: u32, degrees: &[u32], d: u32) -> Result<BigInt, CountsError> {
    if n < 2 {
        return Err(CountsError::InvalidParams("projective dimension n must be >= 2".into()));
    }
    let div = Divisor::new(n as usize, degrees.to_vec())?;
    let pn = Ambient::projective(n as usize).map_err(LogChernError::from)?;
    let twist = 1 - i64::from(d);
    Ok(top_chern_difference(&log_total_ncd(&div), twist, &pn).map_err(LogChernError::from)?)
}
