//! Every numeric threshold used by the solver, in one record.
//!
//! The exact layer (polynomial arithmetic, Chow-ring integrals) never
//! consults these. The numeric layer (root finding, point merging, on-divisor
//! classification, nondegeneracy) makes each of its verdicts against exactly
//! one named field here, so a report can say which threshold decided what.

/// Named tolerance profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Default,
    Strict,
}

impl Profile {
    pub fn name(&self) -> &'static str {
        match self {
            Profile::Default => "default",
            Profile::Strict => "strict",
        }
    }
}

/// The thresholds. All comparisons are relative: residuals are scaled by
/// coefficient and point norms before comparison, merges by coordinate
/// magnitude.
#[derive(Debug, Clone, PartialEq)]
pub struct ToleranceConfig {
    /// Which profile this is.
    pub profile: Profile,
    /// Two points closer than this (per normalized homogeneous coordinate)
    /// are the same singularity.
    pub merge: f64,
    /// A point is a certified zero when every chart residual falls below
    /// this, relative to coefficient norm times point-norm power.
    pub residual: f64,
    /// Aberth iteration stops when every root moves less than this,
    /// relative to its magnitude.
    pub root_convergence: f64,
    /// Newton refinement target residual (relative, like `residual`).
    pub newton_target: f64,
    /// A point lies on a divisor component numerically when the scaled
    /// component value falls below this.
    pub divisor_residual: f64,
    /// Jacobian determinant threshold, relative to the product of row norms,
    /// above which a point is certified nondegenerate.
    pub jacobian_threshold: f64,
    /// Rational reconstruction of coordinates only accepts denominators and
    /// numerators up to this height.
    pub snap_height: u64,
    /// Maximum distance between a coordinate and its rational reconstruction
    /// for the exact confirmation pass to engage.
    pub snap_tolerance: f64,
    /// Aberth iteration budget.
    pub max_root_iterations: usize,
    /// Newton refinement iteration budget.
    pub max_newton_iterations: usize,
}

impl ToleranceConfig {
    pub fn default_profile() -> Self {
        ToleranceConfig {
            profile: Profile::Default,
            merge: 1e-8,
            residual: 1e-9,
            root_convergence: 1e-14,
            newton_target: 1e-12,
            divisor_residual: 1e-8,
            jacobian_threshold: 1e-9,
            snap_height: 1_000_000,
            snap_tolerance: 1e-9,
            max_root_iterations: 200,
            max_newton_iterations: 50,
        }
    }

    /// Tighter verdict thresholds for inputs suspected of near-degeneracy;
    /// iteration budgets and convergence targets are unchanged.
    pub fn strict_profile() -> Self {
        ToleranceConfig {
            profile: Profile::Strict,
            merge: 1e-10,
            residual: 1e-11,
            divisor_residual: 1e-10,
            jacobian_threshold: 1e-7,
            ..Self::default_profile()
        }
    }

    /// Looks up a profile by its name (the value of the
    /// `LOGRES_TOLERANCE_PROFILE` environment variable in the CLI).
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "default" => Some(Self::default_profile()),
            "strict" => Some(Self::strict_profile()),
            _ => None,
        }
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self::default_profile()
    }
}
