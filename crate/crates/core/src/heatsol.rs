//! Heat-equation solutions ν and their derivatives: the closed-form gallery
//! (linear, Airy, Pearcey) and the convolution
//! `ν(t,y) = ∫ h(t,x) φ(y−x) dx = E[φ(y − √t·Z)]`.
//!
//! Spatial partials are computed by differentiating under the integral
//! (`ν⁽ⁿ⁾ = ∫ h·φ⁽ⁿ⁾`) or analytically for the closed forms; the time
//! derivative is reported as ½ν⁽²⁾, with an independent finite-difference
//! value available so heat-residual checks are not circular.

use crate::heatpoly::heat_poly_real_seq;
use crate::phi_ode::{PhiOdeError, PhiSolution};
use crate::quad::{adaptive_quad, GaussHermite, QuadratureError};
use crate::special::{airy_ai_and_prime, gauss_kernel, pearcey_partial, SpecialError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HeatError {
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("integration window [{lo}, {hi}] leaves the φ domain [{phi_lo}, {phi_hi}]")]
    DomainExceeded {
        lo: f64,
        hi: f64,
        phi_lo: f64,
        phi_hi: f64,
    },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Phi(#[from] PhiOdeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum QuadMethod {
    GaussHermite,
    AdaptiveTruncated,
}

/// Controls for the convolution / Pearcey integrals.
#[derive(Debug, Clone, serde::Serialize)]
pub struct QuadratureConfig {
    pub method: QuadMethod,
    /// Gauss–Hermite order.
    pub nodes: usize,
    /// Truncation half-width L in units of √t for the adaptive method.
    pub half_width_sigmas: f64,
    pub abs_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            method: QuadMethod::GaussHermite,
            nodes: 200,
            half_width_sigmas: 12.0,
            abs_tol: 1e-12,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), HeatError> {
        if self.nodes < 20 {
            return Err(HeatError::InvalidConfig(format!(
                "nodes = {} < 20",
                self.nodes
            )));
        }
        if self.half_width_sigmas < 6.0 {
            return Err(HeatError::InvalidConfig(format!(
                "half_width_sigmas = {} < 6",
                self.half_width_sigmas
            )));
        }
        if !(self.abs_tol > 0.0) {
            return Err(HeatError::InvalidConfig("abs_tol must be positive".into()));
        }
        Ok(())
    }
}

/// A solution of `ν_t = ½ν_xx` with value, spatial partials through
/// order 4 and time derivative.
#[derive(Debug, Clone)]
pub enum HeatSolution {
    /// `ν = x(2πt³)^{−1/2}e^{−x²/2t} + b(2πt)^{−1/2}e^{−x²/2t}`, vanishing
    /// on f(t) = −bt.
    LinearClosedForm { b: f64 },
    /// `ν = exp(t³/12 + tx/2)·Ai(x + t²/4)`, vanishing on f(t) = ξ − t²/4
    /// where ξ is the root_index-th negative Airy root.
    AiryQuadratic { root_index: usize },
    /// The Pearcey-type integral; its zero set obeys the Rayleigh ODE.
    PearceyIntegral { quad: QuadratureConfig },
    /// `ν(t,y) = E[φ(y − √t Z)]`.
    Convolution {
        phi: PhiSolution,
        quad: QuadratureConfig,
        rule: Option<GaussHermite>,
    },
}

impl HeatSolution {
    pub fn linear(b: f64) -> Self {
        HeatSolution::LinearClosedForm { b }
    }

    pub fn airy(root_index: usize) -> Self {
        assert!(root_index >= 1, "Airy root index is 1-based");
        HeatSolution::AiryQuadratic { root_index }
    }

    pub fn pearcey(quad: QuadratureConfig) -> Result<Self, HeatError> {
        quad.validate()?;
        Ok(HeatSolution::PearceyIntegral { quad })
    }

    pub fn convolution(phi: PhiSolution, quad: QuadratureConfig) -> Result<Self, HeatError> {
        quad.validate()?;
        let rule = match quad.method {
            QuadMethod::GaussHermite => Some(GaussHermite::new(quad.nodes)),
            QuadMethod::AdaptiveTruncated => None,
        };
        Ok(HeatSolution::Convolution { phi, quad, rule })
    }

    /// ν(t, x). Requires t > 0 except for the Airy and Pearcey kinds (t ≥ 0).
    pub fn value(&self, t: f64, x: f64) -> Result<f64, HeatError> {
        Ok(self.partials(t, x, 0)?.0[0])
    }

    /// Spatial partials `(ν⁽⁰⁾ … ν⁽ⁿ⁾)` and the time derivative `ν_t = ½ν⁽²⁾`
    /// at (t, x), n ≤ 4.
    pub fn partials(&self, t: f64, x: f64, n: usize) -> Result<(Vec<f64>, f64), HeatError> {
        assert!(n <= 4, "spatial partial order {n} > 4");
        // ν_t needs ν⁽²⁾ regardless of the requested order.
        let m = n.max(2);
        let spatial = match self {
            HeatSolution::LinearClosedForm { b } => linear_partials(*b, t, x, m),
            HeatSolution::AiryQuadratic { .. } => airy_partials(t, x, m),
            HeatSolution::PearceyIntegral { quad } => {
                let mut out = Vec::with_capacity(m + 1);
                for k in 0..=m {
                    out.push(pearcey_partial(k, t, x, quad)?);
                }
                out
            }
            HeatSolution::Convolution { phi, quad, rule } => {
                convolution_partials(phi, quad, rule.as_ref(), t, x, m)?
            }
        };
        let time_deriv = 0.5 * spatial[2];
        let mut spatial = spatial;
        spatial.truncate(n + 1);
        Ok((spatial, time_deriv))
    }

    /// Central finite difference of ν in t, for residual checks against the
    /// construction-side time derivative.
    pub fn time_derivative_fd(&self, t: f64, x: f64, h: f64) -> Result<f64, HeatError> {
        assert!(t - h > 0.0, "finite difference needs t - h > 0");
        Ok((self.value(t + h, x)? - self.value(t - h, x)?) / (2.0 * h))
    }

    /// Normalized heat-equation residual |ν_t(FD) − ½ν⁽²⁾| / (1 + |ν|).
    pub fn heat_residual(&self, t: f64, x: f64, fd_step: f64) -> Result<f64, HeatError> {
        let (spatial, time_deriv) = self.partials(t, x, 2)?;
        let fd = self.time_derivative_fd(t, x, fd_step)?;
        Ok((fd - time_deriv).abs() / (1.0 + spatial[0].abs()))
    }
}

fn linear_partials(b: f64, t: f64, x: f64, n: usize) -> Vec<f64> {
    assert!(t > 0.0, "linear closed form requires t > 0");
    // ∂ₓ e^{−x²/2t} = v_k(−1/2t, −x/t) e^{−x²/2t}; Leibniz for the x· factor.
    let gauss = (-x * x / (2.0 * t)).exp();
    let c3 = (2.0 * std::f64::consts::PI * t.powi(3)).sqrt().recip();
    let c1 = (2.0 * std::f64::consts::PI * t).sqrt().recip();
    let v = heat_poly_real_seq(n, -0.5 / t, -x / t);
    (0..=n)
        .map(|k| {
            let xe_deriv = x * v[k] + if k >= 1 { k as f64 * v[k - 1] } else { 0.0 };
            gauss * (c3 * xe_deriv + b * c1 * v[k])
        })
        .collect()
}

fn airy_partials(t: f64, x: f64, n: usize) -> Vec<f64> {
    assert!(t >= 0.0, "Airy solution requires t >= 0");
    let z = x + t * t / 4.0;
    let (ai, dai) = airy_ai_and_prime(z);
    // Ai^{(k)} via the ODE: Ai″ = z·Ai, so Ai^{(k)} = z·Ai^{(k−2)} + (k−2)·Ai^{(k−3)}.
    let mut d = vec![ai, dai];
    for k in 2..=n {
        let mut next = z * d[k - 2];
        if k >= 3 {
            next += (k - 2) as f64 * d[k - 3];
        }
        d.push(next);
    }
    let envelope = (t * t * t / 12.0 + t * x / 2.0).exp();
    let half_t = t / 2.0;
    (0..=n)
        .map(|k| {
            // Leibniz on e^{tx/2}·Ai: Σ C(k,j) (t/2)^{k−j} Ai^{(j)}
            let mut acc = 0.0;
            let mut binom = 1.0;
            for (j, dj) in d.iter().enumerate().take(k + 1) {
                acc += binom * half_t.powi((k - j) as i32) * dj;
                binom *= (k - j) as f64 / (j + 1) as f64;
            }
            envelope * acc
        })
        .collect()
}

fn convolution_partials(
    phi: &PhiSolution,
    quad: &QuadratureConfig,
    rule: Option<&GaussHermite>,
    t: f64,
    y: f64,
    n: usize,
) -> Result<Vec<f64>, HeatError> {
    assert!(t > 0.0, "convolution requires t > 0");
    let (phi_lo, phi_hi) = phi.domain();
    let check_window = |lo: f64, hi: f64| -> Result<(), HeatError> {
        if lo < phi_lo || hi > phi_hi {
            Err(HeatError::DomainExceeded {
                lo,
                hi,
                phi_lo,
                phi_hi,
            })
        } else {
            Ok(())
        }
    };
    match quad.method {
        QuadMethod::GaussHermite => {
            let rule_owned;
            let rule = match rule {
                Some(r) => r,
                None => {
                    rule_owned = GaussHermite::new(quad.nodes);
                    &rule_owned
                }
            };
            let s = (2.0 * t).sqrt();
            check_window(y - s * rule.max_node(), y + s * rule.max_node())?;
            let mut acc = vec![0.0; n + 1];
            for (&node, &w) in rule.nodes().iter().zip(rule.weights()) {
                let u = y - s * node;
                let d = phi.derivs(u, n)?;
                for (a, dk) in acc.iter_mut().zip(&d) {
                    *a += w * dk;
                }
            }
            let norm = std::f64::consts::PI.sqrt();
            Ok(acc.into_iter().map(|a| a / norm).collect())
        }
        QuadMethod::AdaptiveTruncated => {
            let w = quad.half_width_sigmas * t.sqrt();
            let (lo, hi) = (y - w, y + w);
            check_window(lo, hi)?;
            let mut out = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let integrand = |u: f64| {
                    let d = phi
                        .derivs(u, k)
                        .expect("integration window checked against φ domain");
                    d[k] * gauss_kernel(t, y - u)
                };
                out.push(adaptive_quad(&integrand, lo, hi, quad.abs_tol)?);
            }
            Ok(out)
        }
    }
}

/// `ν(t,x) = x(2πt³)^{−1/2}e^{−x²/2t} + b(2πt)^{−1/2}e^{−x²/2t}`.
pub fn nu_linear(b: f64, t: f64, x: f64) -> f64 {
    assert!(t > 0.0, "nu_linear requires t > 0");
    let gauss = (-x * x / (2.0 * t)).exp();
    let tau = 2.0 * std::f64::consts::PI * t;
    gauss * (x / (tau * t * t).sqrt() + b / tau.sqrt())
}

/// `ν(t,x) = exp(t³/12 + tx/2)·Ai(x + t²/4)`. The root index selects the
/// paired boundary `f(t) = ξ_n − t²/4`; the solution value itself is
/// index-independent.
pub fn nu_airy(root_index: usize, t: f64, x: f64) -> f64 {
    assert!(root_index >= 1, "Airy root index is 1-based");
    assert!(t >= 0.0, "nu_airy requires t >= 0");
    (t * t * t / 12.0 + t * x / 2.0).exp() * airy_ai_and_prime(x + t * t / 4.0).0
}

/// One-shot convolution value; builds its quadrature rule per call. For
/// repeated evaluation construct a [`HeatSolution::convolution`] instead.
pub fn nu_convolution(
    phi: &PhiSolution,
    t: f64,
    y: f64,
    quad: &QuadratureConfig,
) -> Result<f64, HeatError> {
    quad.validate()?;
    Ok(convolution_partials(phi, quad, None, t, y, 0)?[0])
}

/// Spatial partials and time derivative of any solution kind.
pub fn nu_partials(
    sol: &HeatSolution,
    t: f64,
    x: f64,
    n: usize,
) -> Result<(Vec<f64>, f64), HeatError> {
    sol.partials(t, x, n)
}
