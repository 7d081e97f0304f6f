//! Scalar special functions: the Gaussian heat kernel, the generalized
//! hypergeometric series ₀F₂, the Airy function Ai with its negative roots,
//! and the Pearcey-type integral.

mod airy;
mod hyp;
mod pearcey;

pub use airy::{airy_ai, airy_ai_and_prime, airy_root, AIRY_AI_ZERO, AIRY_AI_PRIME_ZERO};
pub use hyp::{hyp0f2, hyp0f2_with_cap, SeriesResult, DEFAULT_TERM_CAP};
pub use pearcey::{pearcey_lambda_cutoff, pearcey_nu, pearcey_partial};

use crate::quad::QuadratureError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecialError {
    #[error("series did not converge after {terms} terms (argument too large for f64)")]
    Nonconvergence { terms: usize },
    #[error("invalid series parameter b = {b} (zero or negative integer)")]
    InvalidParameter { b: f64 },
    #[error("fewer than {wanted} roots bracketed in [{lo}, {hi}]")]
    RootNotBracketed { wanted: usize, lo: f64, hi: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Heat kernel `h(t, x) = (2πt)^{−1/2} exp(−x²/2t)`, the fundamental
/// solution of `ν_t = ½ν_xx`. Underflows to 0 for large |x|.
pub fn gauss_kernel(t: f64, x: f64) -> f64 {
    assert!(t > 0.0, "gauss_kernel requires t > 0");
    (-x * x / (2.0 * t)).exp() / (2.0 * std::f64::consts::PI * t).sqrt()
}
