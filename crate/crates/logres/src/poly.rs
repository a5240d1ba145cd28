//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a map from exponent vectors to nonzero rational
//! coefficients, ordered by graded lexicographic order (total degree first,
//! then variable-by-variable). That order makes the leading term well defined,
//! which is all the exact division test needs: dividing by a single
//! polynomial, the remainder is zero exactly when every partial leading term
//! is divisible, so divisibility testing can short-circuit.
//!
//! Arities must match when combining polynomials; mixing them is a
//! programming error and panics. Boundary validation of user input happens in
//! the layers above.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exponent vector. Ordered by total degree, ties broken lexicographically
/// (graded lex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference; caller must have checked `self.divides(other)`.
    fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables over the rationals. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::constant(nvars), c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn constant_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, rat_int(c))
    }

    /// The variable `z_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for arity {nvars}");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::from_monomial(nvars, Monomial(exps), BigRational::one())
    }

    pub fn from_monomial(nvars: usize, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.exponents().len(), nvars, "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Highest term in graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.last_key_value()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` when the polynomial is nonzero and every term has degree
    /// `d`; `None` otherwise (the zero polynomial is left undecided).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn assert_same_arity(&self, other: &MultiPoly) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomial arity mismatch: {} vs {}",
            self.nvars, other.nvars
        );
    }

    fn add_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars, "variable index {i} out of range");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - 1;
            Self::add_term(&mut terms, Monomial(exps), c * rat_int(i64::from(e)));
        }
        MultiPoly { nvars: self.nvars, terms }
    }

    /// Substitutes `z_i = 1` and removes the variable, reducing the arity by
    /// one. This is the restriction of a homogeneous polynomial to the
    /// affine chart `z_i != 0`.
    pub fn substitute_one(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars, "variable index {i} out of range");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.remove(i);
            Self::add_term(&mut terms, Monomial(exps), c.clone());
        }
        MultiPoly { nvars: self.nvars - 1, terms }
    }

    /// Exact division: `Some(q)` with `self == q * divisor`, or `None` when
    /// the division leaves a remainder. Panics on a zero divisor.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.assert_same_arity(divisor);
        let (dm, dc) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading_term() {
            // With a single divisor, any non-divisible leading term lands in
            // the remainder for good; divisibility fails immediately.
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_into(rm);
            let qc = rc / &dc;
            let step = MultiPoly::from_monomial(self.nvars, qm.clone(), qc.clone());
            rem = &rem - &(&step * divisor);
            Self::add_term(&mut quot, qm, qc);
        }
        Some(MultiPoly { nvars: self.nvars, terms: quot })
    }

    pub fn is_divisible_by(&self, divisor: &MultiPoly) -> bool {
        self.div_exact(divisor).is_some()
    }

    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "evaluation point arity mismatch");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars, "evaluation point arity mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (x, &e) in point.iter().zip(&m.0) {
                t *= x.powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    pub fn eval_gaussian(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars, "evaluation point arity mismatch");
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = GaussianRational::from_rational(c.clone());
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Sum of the absolute values of the coefficients, as a float. Used to
    /// scale residual tolerances.
    pub fn coeff_norm(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// Clears denominators: the integer-coefficient terms of `m * self`
    /// where `m` is the least common multiple of the coefficient
    /// denominators, together with `m`.
    pub fn integer_terms(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let scaled = c.numer() * (&lcm / c.denom());
                (m.clone(), scaled)
            })
            .collect();
        (terms, lcm)
    }

    /// Canonical text form with the given variable names: terms in
    /// descending graded lex order, explicit `*` between factors, `^` for
    /// exponents above 1. Integer coefficients print bare; non-integer
    /// rationals print as `p/q` (which the CLI grammar does not re-read;
    /// the CLI only ever produces integer coefficients).
    pub fn display_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "variable name count mismatch");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(if mag.is_integer() {
                    mag.numer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                });
            }
            for (name, &e) in names.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("z{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display_with(&refs))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_arity(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            MultiPoly::add_term(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { nvars: self.nvars, terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_arity(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            MultiPoly::add_term(&mut terms, m.clone(), -c.clone());
        }
        MultiPoly { nvars: self.nvars, terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_arity(rhs);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                MultiPoly::add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { nvars: self.nvars, terms }
    }
}

/// A complex number with exact rational real and imaginary parts, for the
/// exact on-divisor confirmation pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn mul(&self, other: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;
    use rand::Rng;

    /// Random polynomial with small integer coefficients, for property
    /// checks. May be zero.
    pub(crate) fn random_poly<R: Rng>(
        rng: &mut R,
        nvars: usize,
        max_degree: u32,
        max_terms: usize,
    ) -> MultiPoly {
        let mut acc = MultiPoly::zero(nvars);
        let terms = rng.random_range(0..=max_terms);
        for _ in 0..terms {
            let exps: Vec<u32> =
                (0..nvars).map(|_| rng.random_range(0..=max_degree)).collect();
            let c = rng.random_range(-9i64..=9);
            let t = MultiPoly::from_monomial(
                nvars,
                Monomial::new(exps),
                BigRational::from_integer(BigInt::from(c)),
            );
            acc = &acc + &t;
        }
        acc
    }

    /// Random homogeneous polynomial of exact degree `degree` (never zero:
    /// one term is forced).
    pub(crate) fn random_homogeneous<R: Rng>(
        rng: &mut R,
        nvars: usize,
        degree: u32,
        extra_terms: usize,
    ) -> MultiPoly {
        let mut acc = MultiPoly::zero(nvars);
        let terms = 1 + rng.random_range(0..=extra_terms);
        for t in 0..terms {
            let mut exps = vec![0u32; nvars];
            let mut remaining = degree;
            for slot in exps[..nvars - 1].iter_mut() {
                let e = rng.random_range(0..=remaining);
                *slot = e;
                remaining -= e;
            }
            exps[nvars - 1] = remaining;
            let mut c = rng.random_range(-9i64..=9);
            if t == 0 && c == 0 {
                c = 1;
            }
            let term = MultiPoly::from_monomial(
                nvars,
                Monomial::new(exps),
                BigRational::from_integer(BigInt::from(c)),
            );
            acc = &acc + &term;
        }
        if acc.is_zero() {
            // Terms may cancel; retry with fresh randomness.
            return random_homogeneous(rng, nvars, degree, extra_terms);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn var(nvars: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(nvars, i)
    }

    #[test]
    fn graded_lex_orders_by_degree_then_vars() {
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        assert!(m(&[1, 0]) < m(&[0, 2]));
        assert!(m(&[0, 1]) < m(&[1, 0]));
        assert!(m(&[1, 1]) < m(&[2, 0]));
        assert!(m(&[2, 0]) > m(&[0, 2]));
    }

    #[test]
    fn arithmetic_expands_products() {
        // (z0 + z1)(z0 - z1) = z0^2 - z1^2
        let (z0, z1) = (var(2, 0), var(2, 1));
        let lhs = &(&z0 + &z1) * &(&z0 - &z1);
        let rhs = &(&z0 * &z0) - &(&z1 * &z1);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn cancellation_drops_terms() {
        let z0 = var(2, 0);
        let d = &z0 - &z0;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn homogeneous_degree_detection() {
        let (z0, z1) = (var(2, 0), var(2, 1));
        let h = &(&z0 * &z0) + &(&z0 * &z1);
        assert_eq!(h.homogeneous_degree(), Some(2));
        let mixed = &h + &z0;
        assert_eq!(mixed.homogeneous_degree(), None);
        assert_eq!(mixed.total_degree(), Some(2));
        assert_eq!(MultiPoly::zero(2).homogeneous_degree(), None);
    }

    #[test]
    fn derivative_of_power() {
        let z0 = var(2, 0);
        let p = z0.pow(4);
        let dp = p.partial_derivative(0);
        assert_eq!(dp, z0.pow(3).scale(&rat_int(4)));
        assert!(p.partial_derivative(1).is_zero());
    }

    #[test]
    fn derivative_satisfies_leibniz_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let f = testutil::random_poly(&mut rng, 3, 3, 5);
            let g = testutil::random_poly(&mut rng, 3, 3, 5);
            for i in 0..3 {
                let lhs = (&f * &g).partial_derivative(i);
                let rhs = &(&f.partial_derivative(i) * &g) + &(&f * &g.partial_derivative(i));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let f = testutil::random_poly(&mut rng, 2, 3, 4);
            let g = testutil::random_poly(&mut rng, 2, 3, 4);
            if g.is_zero() {
                continue;
            }
            let prod = &f * &g;
            let q = prod.div_exact(&g).expect("constructed multiple divides");
            assert_eq!(q, f);
        }
    }

    #[test]
    fn non_multiples_fail_division() {
        let (z0, z1) = (var(2, 0), var(2, 1));
        let f = &z0.pow(2) + &MultiPoly::one(2);
        assert!(f.div_exact(&z1).is_none());
        // x^2 - 1 is divisible by x - 1 but not by x + 2.
        let x2m1 = &z0.pow(2) - &MultiPoly::one(2);
        assert!(x2m1.div_exact(&(&z0 - &MultiPoly::one(2))).is_some());
        assert!(x2m1
            .div_exact(&(&z0 + &MultiPoly::constant_int(2, 2)))
            .is_none());
    }

    #[test]
    fn zero_divided_by_anything_is_zero() {
        let z0 = var(2, 0);
        let q = MultiPoly::zero(2).div_exact(&z0).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn substitute_one_restricts_to_chart() {
        // z1^2 - z0^2 at z0 = 1 becomes x^2 - 1 in the remaining variable.
        let (z0, z1) = (var(3, 0), var(3, 1));
        let f = &z1.pow(2) - &z0.pow(2);
        let g = f.substitute_one(0);
        assert_eq!(g.nvars(), 2);
        let x = var(2, 0);
        assert_eq!(g, &x.pow(2) - &MultiPoly::one(2));
    }

    #[test]
    fn complex_and_rational_evaluation_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let f = testutil::random_poly(&mut rng, 2, 3, 5);
            let p = [rat_int(2) / rat_int(3), rat_int(-1) / rat_int(2)];
            let exact = f.eval_rational(&p);
            let approx = f.eval_complex(&[
                Complex64::new(2.0 / 3.0, 0.0),
                Complex64::new(-0.5, 0.0),
            ]);
            let exact_f = exact.to_f64().unwrap();
            assert!((approx.re - exact_f).abs() <= 1e-9 * (1.0 + exact_f.abs()));
            assert!(approx.im.abs() <= 1e-12);
        }
    }

    #[test]
    fn gaussian_evaluation_matches_complex() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let f = testutil::random_poly(&mut rng, 2, 3, 6);
        let gp = [
            GaussianRational::new(rat_int(1) / rat_int(2), rat_int(1)),
            GaussianRational::new(rat_int(-2), rat_int(1) / rat_int(3)),
        ];
        let exact = f.eval_gaussian(&gp);
        let approx = f.eval_complex(&[gp[0].to_complex(), gp[1].to_complex()]);
        assert!((exact.to_complex() - approx).norm() <= 1e-9 * (1.0 + approx.norm()));
    }

    #[test]
    fn gaussian_multiplication_has_i_squared_minus_one() {
        let i = GaussianRational::new(BigRational::zero(), BigRational::one());
        let i2 = i.mul(&i);
        assert_eq!(i2, GaussianRational::from_rational(-BigRational::one()));
    }

    #[test]
    fn integer_terms_clear_denominators() {
        let z0 = var(1, 0);
        let f = &z0.scale(&(rat_int(1) / rat_int(6))) + &MultiPoly::constant(1, rat_int(1) / rat_int(4));
        let (terms, scale) = f.integer_terms();
        assert_eq!(scale, BigInt::from(12));
        let coeffs: Vec<BigInt> = terms.iter().map(|(_, c)| c.clone()).collect();
        assert_eq!(coeffs, vec![BigInt::from(3), BigInt::from(2)]);
    }

    #[test]
    fn display_is_canonical() {
        let (z0, z1) = (var(2, 0), var(2, 1));
        let f = &(&z1.pow(2) - &z0.pow(2)) + &MultiPoly::constant_int(2, 3);
        assert_eq!(f.to_string(), "-z0^2 + z1^2 + 3");
        let g = &z0.scale(&rat_int(-2)) * &z1;
        assert_eq!(g.to_string(), "-2*z0*z1");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!(MultiPoly::constant_int(2, -7).to_string(), "-7");
    }
}
