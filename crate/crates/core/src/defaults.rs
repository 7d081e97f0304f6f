//! Versioned default tolerances shared by the verification checks, the
//! acceptance suite and the CLI. One place, no ad-hoc magic numbers.

/// |ν(t, f(t))| on the cubic boundary (paper table, shift 0).
pub const TABLE_BOUNDARY_ABS: f64 = 1e-8;
/// Per-entry agreement with the off-boundary reference table (shift 2).
pub const TABLE_OFFSET_ABS: f64 = 1e-4;
/// Heat-equation residual |ν_t(FD) − ½ν⁽²⁾| / (1 + |ν|).
pub const HEAT_RESIDUAL: f64 = 1e-4;
/// Step for the finite-difference time derivative in residual checks.
pub const HEAT_FD_STEP: f64 = 1e-4;
/// Normalized residual of the two boundary derivative identities.
pub const REMARK_IDENTITY: f64 = 1e-6;
/// Normalized residual of the φ-ODE master identities.
pub const MASTER_IDENTITY: f64 = 1e-6;
/// First-order boundary ODE residual for the square-root boundary family.
pub const THEOREM2_ODE: f64 = 1e-9;
/// Cubic boundary ODE residual, scaled by (1 + t⁶).
pub const CUBIC_ODE_SCALED: f64 = 1e-12;
/// Max-norm agreement of the finite-difference evolution with the
/// convolution solution on the cubic case.
pub const FD_CUBIC_MAXNORM: f64 = 5e-4;
/// Max-norm agreement of the finite-difference evolution with the linear
/// closed form.
pub const FD_LINEAR_MAXNORM: f64 = 2e-4;
/// Traced-boundary tolerances per case.
pub const TRACE_LINEAR: f64 = 1e-9;
pub const TRACE_AIRY: f64 = 1e-8;
pub const TRACE_CUBIC: f64 = 1e-6;
/// Agreement of the two convolution quadrature methods (absolute).
pub const QUADRATURE_AGREEMENT: f64 = 1e-10;
/// |ν(t, f(t))| along the Rayleigh boundary, relative to max |ν|.
pub const PEARCEY_BOUNDARY_REL: f64 = 1e-6;
/// Evenness of the Pearcey integral in x.
pub const PEARCEY_EVEN: f64 = 1e-12;
/// Dual-order summation agreement for the ₀F₂ series (relative).
pub const HYP_DUAL_SUM: f64 = 1e-13;
/// Airy root agreement with an independent bisection.
pub const AIRY_ROOT_ABS: f64 = 1e-6;
