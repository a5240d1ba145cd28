//! Exact intersection theory on complex projective space, applied to counting
//! singularities of one-dimensional holomorphic foliations.
//!
//! The crate is layered bottom-up:
//!
//! * [`chow`]: the Chow ring `Z[h]/(h^{n+1})` of `P^n`, integration against the
//!   fundamental class, restriction to hypersurfaces, and top Chern classes of
//!   virtual bundle differences. All coefficients are arbitrary-precision.
//! * [`logchern`]: Chern classes of logarithmic tangent bundles along smooth
//!   and normal-crossing divisors, Euler characteristics of complements, and
//!   the residue identities that relate them.
//! * [`counts`]: the closed count of foliation singularities lying outside an
//!   invariant divisor, in its three equivalent forms, plus the parity
//!   classification of when all singularities sit on the divisor.
//! * [`poly`]: sparse multivariate polynomials over the rationals, the exact
//!   arithmetic backing the foliation layer.
//! * [`foliation`]: homogeneous polynomial vector fields, divisor invariance,
//!   affine charts, and local index bookkeeping at singular points.
//! * [`solver`]: certified enumeration of foliation singularities on the
//!   projective plane by resultant elimination and simultaneous root finding,
//!   and the empirical-versus-predicted count comparison.
//! * [`tolerance`]: the single configuration record of every numeric threshold
//!   used by the solver, so each floating-point verdict names its tolerance.

pub mod chow;
pub mod counts;
pub mod foliation;
pub mod logchern;
pub mod poly;
pub mod solver;
pub mod tolerance;
