//! Chern classes of logarithmic tangent bundles `T(-log D)` on `P^n`.
//!
//! For a divisor `D` with simple normal crossings whose components are smooth
//! hypersurfaces of degrees `k_1, ..., k_N`, the residue exact sequences give
//!
//! `c(T(-log D)) = (1 + h)^(n+1) * prod over m of (1 + k_m h)^(-1)`
//!
//! in the Chow ring of `P^n`. This module computes that class along four
//! independent routes (a closed coefficient formula and a recursion for the
//! smooth case, the series product above, and a literal multi-index expansion
//! of the twisted cotangent classes), plus the Euler characteristic of the
//! complement `P^n minus D` and two integral identities used to cross-check
//! hypersurface restriction against virtual-bundle integration.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chow::{
    binomial, restrict, top_chern_difference, Ambient, ChowClass, ChowError, TotalChern,
};

/// Errors from divisor construction and the identity checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogChernError {
    #[error("divisor needs at least one component")]
    EmptyDivisor,
    #[error("divisor component degrees must be >= 1")]
    ZeroDegree,
    #[error("ambient dimension {got} out of range, need n >= {min}")]
    DimensionOutOfRange { got: usize, min: usize },
    #[error("component removal needs at least two components, got {0}")]
    NeedTwoComponents(usize),
    #[error(transparent)]
    Chow(#[from] ChowError),
}

/// A simple normal crossing divisor in `P^n`: an ordered list of component
/// degrees. Smoothness and transversality of the components are assumptions
/// on the geometry, not checked here; only the numerics enter the classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    n: usize,
    degrees: Vec<u32>,
}

impl Divisor {
    /// A divisor in `P^n` with the given component degrees. Needs `n >= 1`,
    /// at least one component, and every degree `>= 1`.
    pub fn new(n: usize, degrees: Vec<u32>) -> Result<Self, LogChernError> {
        if n == 0 {
            return Err(LogChernError::DimensionOutOfRange { got: 0, min: 1 });
        }
        if degrees.is_empty() {
            return Err(LogChernError::EmptyDivisor);
        }
        if degrees.contains(&0) {
            return Err(LogChernError::ZeroDegree);
        }
        Ok(Divisor { n, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn component_count(&self) -> usize {
        self.degrees.len()
    }

    /// The divisor with the last component removed; needs two components.
    pub fn drop_last(&self) -> Result<Divisor, LogChernError> {
        if self.degrees.len() < 2 {
            return Err(LogChernError::NeedTwoComponents(self.degrees.len()));
        }
        Ok(Divisor { n: self.n, degrees: self.degrees[..self.degrees.len() - 1].to_vec() })
    }
}

/// Chern classes `c_0, ..., c_n` of `T(-log D)` for a smooth degree-`k`
/// hypersurface, by the closed coefficient formula
///
/// `c_l = (sum over j of C(n+1, l-j) * (-1)^j * k^j) * h^l`.
pub fn log_chern_smooth_closed(n: usize, k: u32) -> Vec<ChowClass> {
    let k = BigInt::from(k);
    (0..=n)
        .map(|l| {
            let mut acc = BigInt::zero();
            let mut k_pow = BigInt::one();
            for j in 0..=l {
                let term = binomial((n + 1) as u64, (l - j) as u64) * &k_pow;
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
                k_pow *= &k;
            }
            ChowClass::h_power_scaled(n, l, acc)
        })
        .collect()
}

/// Same classes by the recursion `c_(j+1) = C(n+1, j+1) h^(j+1) - c_j * (k h)`
/// read off the defining exact sequence, with `c_0 = 1`.
pub fn log_chern_smooth_recursive(n: usize, k: u32) -> Vec<ChowClass> {
    let k = BigInt::from(k);
    let mut gammas: Vec<BigInt> = Vec::with_capacity(n + 1);
    gammas.push(BigInt::one());
    for j in 0..n {
        let next = binomial((n + 1) as u64, (j + 1) as u64) - &gammas[j] * &k;
        gammas.push(next);
    }
    gammas
        .into_iter()
        .enumerate()
        .map(|(l, g)| ChowClass::h_power_scaled(n, l, g))
        .collect()
}

/// Total class `c(T(-log D))` as the series product
/// `(1 + h)^(n+1) * prod (1 + k_m h)^(-1)`.
pub fn log_total_ncd(div: &Divisor) -> TotalChern {
    let n = div.n;
    let mut acc = TotalChern::binomial_total(1, (n + 1) as u32, n);
    for &k in &div.degrees {
        let factor = TotalChern::binomial_total(i64::from(k), 1, n).inverse_unit();
        // Same ring throughout, so the product cannot fail.
        acc = acc.mul(&factor).expect("dimensions agree by construction");
    }
    acc
}

/// Total class `c(T(-log D))` by the literal multi-index expansion of the
/// logarithmic cotangent classes,
///
/// `c_i(Omega^1(log D)) = sum over j <= i, |J| = j of
///     c_(i-j)(Omega^1) * prod over m of (k_m h)^(J_m)`,
///
/// where `J` runs over all compositions of `j` into one part per component,
/// followed by dualizing (`h` to `-h`). Independent of [`log_total_ncd`]: no
/// series inversion is involved, every composition is enumerated.
pub fn log_chern_ncd_multiindex(div: &Divisor) -> TotalChern {
    let n = div.n;
    // c(Omega^1) = (1 - h)^(n+1).
    let omega = TotalChern::binomial_total(-1, (n + 1) as u32, n);
    let degrees: Vec<BigInt> = div.degrees.iter().map(|&k| BigInt::from(k)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (i, coeff) in coeffs.iter_mut().enumerate() {
        let mut acc = BigInt::zero();
        for j in 0..=i {
            acc += omega.chern(i - j) * composition_power_sum(&degrees, j);
        }
        *coeff = acc;
    }
    let cotangent_log = TotalChern::new(
        ChowClass::from_coeffs(n, coeffs).expect("coefficient count matches dimension"),
    )
    .expect("constant term is c_0(Omega^1) = 1");
    cotangent_log.dual_total()
}

/// `sum over all compositions J of `total` into `degrees.len()` parts of
/// `prod degrees[m]^(J_m)`, by explicit enumeration.
fn composition_power_sum(degrees: &[BigInt], total: usize) -> BigInt {
    fn rec(degrees: &[BigInt], remaining: usize, partial: BigInt, acc: &mut BigInt) {
        if degrees.len() == 1 {
            *acc += partial * degrees[0].pow(remaining as u32);
            return;
        }
        for j in 0..=remaining {
            rec(
                &degrees[1..],
                remaining - j,
                &partial * degrees[0].pow(j as u32),
                acc,
            );
        }
    }
    let mut acc = BigInt::zero();
    rec(degrees, total, BigInt::one(), &mut acc);
    acc
}

/// Euler characteristic of the complement `P^n minus D`: the integral of the
/// top Chern class of `T(-log D)`.
pub fn euler_complement(div: &Divisor) -> BigInt {
    let total = log_total_ncd(div);
    total.chern(div.n)
}

/// Both sides of the residue identity for a smooth degree-`k` hypersurface
/// `D` in `P^n` and a twist `L = O(a)`:
///
/// left: `integral over P^n of c_n(T(-log D) - L)`;
/// right: `integral over P^n of c_n(T - L)  -  integral over D of
/// c_(n-1)(T restricted - O_D(D) - L restricted)`.
///
/// The two sides agree; callers assert it. Needs `n >= 2`.
pub fn verify_smooth_residue_identity(
    n: usize,
    k: u32,
    a: i64,
) -> Result<(BigInt, BigInt), LogChernError> {
    if n < 2 {
        return Err(LogChernError::DimensionOutOfRange { got: n, min: 2 });
    }
    let div = Divisor::new(n, vec![k])?;
    let pn = Ambient::projective(n)?;

    let log_total = log_total_ncd(&div);
    let lhs = top_chern_difference(&log_total, a, &pn)?;

    let tangent = TotalChern::binomial_total(1, (n + 1) as u32, n);
    let ambient_term = top_chern_difference(&tangent, a, &pn)?;

    // c(T_D) = restriction of (1+h)^(n+1) / (1+kh) by adjunction.
    let normal_inv = TotalChern::binomial_total(i64::from(k), 1, n).inverse_unit();
    let tangent_d_upstairs = tangent.mul(&normal_inv)?;
    let (restricted, on_d) = restrict(tangent_d_upstairs.class(), k)?;
    let tangent_d = TotalChern::new(restricted)?;
    let divisor_term = top_chern_difference(&tangent_d, a, &on_d)?;

    Ok((lhs, ambient_term - divisor_term))
}

/// Both sides of the component-removal identity: for `D = D_1 + ... + D_N`
/// with `N >= 2`, write `D' = D - D_N`. Then
///
/// left: `integral over P^n of c_n(T(-log D) - O(a))`;
/// right: `integral over P^n of c_n(T(-log D') - O(a))  -  integral over D_N
/// of c_(n-1)(T_(D_N)(-log (D' restricted)) - O(a) restricted)`.
///
/// The retained components enter only through the product of their inverse
/// factors, so the right side is invariant under permuting them.
pub fn verify_component_removal(
    div: &Divisor,
    a: i64,
) -> Result<(BigInt, BigInt), LogChernError> {
    let n = div.n;
    if n < 2 {
        return Err(LogChernError::DimensionOutOfRange { got: n, min: 2 });
    }
    let retained = div.drop_last()?;
    let removed_degree = *div.degrees.last().expect("nonempty by invariant");
    let pn = Ambient::projective(n)?;

    let lhs = top_chern_difference(&log_total_ncd(div), a, &pn)?;

    let retained_term = top_chern_difference(&log_total_ncd(&retained), a, &pn)?;

    // Tangent classes of the removed hypersurface, then logarithmic
    // correction by the retained components restricted to it.
    let tangent = TotalChern::binomial_total(1, (n + 1) as u32, n);
    let normal_inv =
        TotalChern::binomial_total(i64::from(removed_degree), 1, n).inverse_unit();
    let (restricted, on_removed) = restrict(tangent.mul(&normal_inv)?.class(), removed_degree)?;
    let mut log_on_removed = TotalChern::new(restricted)?;
    for &k in retained.degrees() {
        let factor = TotalChern::binomial_total(i64::from(k), 1, n - 1).inverse_unit();
        log_on_removed = log_on_removed.mul(&factor)?;
    }
    let removed_term = top_chern_difference(&log_on_removed, a, &on_removed)?;

    Ok((lhs, retained_term - removed_term))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn smooth_paths_agree(n: usize, k: u32) {
        let closed = log_chern_smooth_closed(n, k);
        let recursive = log_chern_smooth_recursive(n, k);
        assert_eq!(closed, recursive, "closed vs recursive at n={n} k={k}");
        let div = Divisor::new(n, vec![k]).unwrap();
        let product = log_total_ncd(&div);
        let multi = log_chern_ncd_multiindex(&div);
        assert_eq!(product, multi, "product vs multi-index at n={n} k={k}");
        for (l, c) in closed.iter().enumerate() {
            assert_eq!(c.coeff(l), product.chern(l), "degree {l} at n={n} k={k}");
        }
    }

    #[test]
    fn smooth_log_classes_on_p2_line() {
        let classes = log_chern_smooth_closed(2, 1);
        assert_eq!(classes[0], ChowClass::one(2));
        assert_eq!(classes[1], ChowClass::h_power_scaled(2, 1, BigInt::from(2)));
        assert_eq!(classes[2], ChowClass::h_power(2, 2));
    }

    #[test]
    fn smooth_log_class_p3_quadric_degree_two() {
        let classes = log_chern_smooth_closed(3, 2);
        assert_eq!(classes[2], ChowClass::h_power_scaled(3, 2, BigInt::from(2)));
    }

    #[test]
    fn all_four_smooth_paths_agree_on_small_grid() {
        for n in 1..=5 {
            for k in 1..=4 {
                smooth_paths_agree(n, k);
            }
        }
    }

    #[test]
    fn ncd_product_matches_multiindex_on_small_grid() {
        for degrees in [vec![1, 1], vec![2, 1], vec![2, 3], vec![1, 1, 2], vec![3, 2, 1]] {
            for n in 2..=4 {
                let div = Divisor::new(n, degrees.clone()).unwrap();
                assert_eq!(log_total_ncd(&div), log_chern_ncd_multiindex(&div));
            }
        }
    }

    #[test]
    fn first_log_chern_class_counts_components() {
        // c_1 = (n + 1 - sum of degrees) h.
        for (n, degrees) in [(3, vec![2u32, 1]), (4, vec![1, 1, 1]), (2, vec![3])] {
            let sum: u32 = degrees.iter().sum();
            let div = Divisor::new(n, degrees).unwrap();
            let total = log_total_ncd(&div);
            assert_eq!(
                total.chern(1),
                BigInt::from(n as i64 + 1 - i64::from(sum))
            );
        }
    }

    #[test]
    fn euler_complement_reference_values() {
        // Complement of a hyperplane is affine space.
        for n in 2..=6 {
            let div = Divisor::new(n, vec![1]).unwrap();
            assert_eq!(euler_complement(&div), BigInt::one(), "n={n}");
        }
        // Conic, cubic, and quadric-surface complements.
        assert_eq!(euler_complement(&Divisor::new(2, vec![2]).unwrap()), BigInt::from(1));
        assert_eq!(euler_complement(&Divisor::new(2, vec![3]).unwrap()), BigInt::from(3));
        assert_eq!(euler_complement(&Divisor::new(3, vec![2]).unwrap()), BigInt::from(0));
        // Two lines in the plane leave C x C*.
        assert_eq!(euler_complement(&Divisor::new(2, vec![1, 1]).unwrap()), BigInt::from(0));
    }

    #[test]
    fn two_lines_in_plane_total_class() {
        let div = Divisor::new(2, vec![1, 1]).unwrap();
        let total = log_total_ncd(&div);
        assert_eq!(
            total.class(),
            &ChowClass::from_coeffs(2, vec![1.into(), 1.into(), 0.into()]).unwrap()
        );
    }

    #[test]
    fn residue_identity_line_in_plane_untwisted() {
        let (lhs, rhs) = verify_smooth_residue_identity(2, 1, 0).unwrap();
        assert_eq!(lhs, BigInt::from(1));
        assert_eq!(rhs, BigInt::from(1));
    }

    #[test]
    fn residue_identity_holds_on_small_grid() {
        for n in 2..=4 {
            for k in 1..=3 {
                for a in -3i64..=3 {
                    let (lhs, rhs) = verify_smooth_residue_identity(n, k, a).unwrap();
                    assert_eq!(lhs, rhs, "n={n} k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn residue_identity_rejects_low_dimension() {
        assert!(matches!(
            verify_smooth_residue_identity(1, 1, 0),
            Err(LogChernError::DimensionOutOfRange { got: 1, min: 2 })
        ));
    }

    #[test]
    fn component_removal_quadric_plus_plane_in_p3() {
        let div = Divisor::new(3, vec![2, 1]).unwrap();
        let (lhs, rhs) = verify_component_removal(&div, 1).unwrap();
        assert_eq!(lhs, BigInt::from(-2));
        assert_eq!(rhs, BigInt::from(-2));
    }

    #[test]
    fn component_removal_two_lines_untwisted() {
        let div = Divisor::new(2, vec![1, 1]).unwrap();
        let (lhs, rhs) = verify_component_removal(&div, 0).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, BigInt::from(0));
    }

    #[test]
    fn component_removal_needs_two_components() {
        let div = Divisor::new(3, vec![2]).unwrap();
        assert!(matches!(
            verify_component_removal(&div, 0),
            Err(LogChernError::NeedTwoComponents(1))
        ));
    }

    #[test]
    fn component_removal_rhs_invariant_under_retained_permutation() {
        let a = -2;
        let base = Divisor::new(4, vec![2, 3, 1, 2]).unwrap();
        let (_, rhs_base) = verify_component_removal(&base, a).unwrap();
        for degrees in [vec![3, 2, 1, 2], vec![1, 3, 2, 2], vec![2, 1, 3, 2]] {
            let div = Divisor::new(4, degrees).unwrap();
            let (lhs, rhs) = verify_component_removal(&div, a).unwrap();
            assert_eq!(rhs, rhs_base);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn removal_chain_telescopes_to_euler_of_projective_space() {
        // Peeling components one at a time at twist 0 connects the Euler
        // characteristic of the complement back to chi(P^n) = n + 1.
        for degrees in [vec![1u32, 2, 3], vec![2, 2], vec![1, 1, 1, 2]] {
            let n = 3;
            let mut prefix = degrees.clone();
            while prefix.len() >= 2 {
                let div = Divisor::new(n, prefix.clone()).unwrap();
                let (lhs, rhs) = verify_component_removal(&div, 0).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(lhs, euler_complement(&div));
                prefix.pop();
            }
            let (lhs, rhs) = verify_smooth_residue_identity(n, prefix[0], 0).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs, euler_complement(&Divisor::new(n, prefix).unwrap()));
        }
    }

    #[test]
    fn divisor_construction_validates() {
        assert!(matches!(Divisor::new(2, vec![]), Err(LogChernError::EmptyDivisor)));
        assert!(matches!(Divisor::new(2, vec![1, 0]), Err(LogChernError::ZeroDegree)));
        assert!(matches!(
            Divisor::new(0, vec![1]),
            Err(LogChernError::DimensionOutOfRange { got: 0, min: 1 })
        ));
    }
}
