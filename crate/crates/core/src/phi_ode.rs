//! The convolving functions φ: dense solutions of the linear ODE families
//!
//! ```text
//! φ″ = (d₀ + d₁x) φ′ + (c₀ + c₁x + c₂x²) φ          (second order)
//! φ‴ = b₂ x² φ                                       (third order, cubic boundary)
//! ```
//!
//! posed at x = 0 and integrated outward over a symmetric-ish domain, with
//! evaluation of φ and its derivatives through order 6. Near the origin a
//! Maclaurin patch (coefficients straight from the ODE recurrence) replaces
//! the interpolant.
//!
//! Growth: the cubic family grows like `exp(c·|x|^{5/3})`, which the
//! Gaussian factor of the convolution always dominates; the integrator
//! aborts at |φ| > 1e280 so a too-wide domain fails loudly instead of
//! overflowing.

use crate::ode::{integrate, DenseSolution, OdeError, OdeOptions, OdeSystem};
use crate::special::{hyp0f2, SpecialError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PhiOdeError {
    #[error("invalid φ specification: {0}")]
    InvalidSpec(String),
    #[error("x = {x} outside the solved domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error(transparent)]
    Ode(#[from] OdeError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// ODE family selector with its coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhiFamily {
    SecondOrder {
        d0: f64,
        d1: f64,
        c0: f64,
        c1: f64,
        c2: f64,
    },
    ThirdOrderCubic {
        b2: f64,
    },
}

impl PhiFamily {
    pub fn order(&self) -> usize {
        match self {
            PhiFamily::SecondOrder { .. } => 2,
            PhiFamily::ThirdOrderCubic { .. } => 3,
        }
    }
}

/// A φ-ODE together with its initial data at x = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiSpec {
    pub family: PhiFamily,
    /// (φ(0), φ′(0)) or (φ(0), φ′(0), φ″(0)) depending on the family order.
    pub init: Vec<f64>,
}

/// φ′(0) of the reference third-order solution: 5^{−3/5}.
pub const EXAMPLE32_SLOPE: f64 = 0.3807307877431757;

impl PhiSpec {
    pub fn second_order(d0: f64, d1: f64, c0: f64, c1: f64, c2: f64, init: [f64; 2]) -> Self {
        PhiSpec {
            family: PhiFamily::SecondOrder { d0, d1, c0, c1, c2 },
            init: init.to_vec(),
        }
    }

    pub fn third_order_cubic(b2: f64, init: [f64; 3]) -> Result<Self, PhiOdeError> {
        if b2 == 0.0 || !b2.is_finite() {
            return Err(PhiOdeError::InvalidSpec("b2 must be nonzero and finite".into()));
        }
        Ok(PhiSpec {
            family: PhiFamily::ThirdOrderCubic { b2 },
            init: init.to_vec(),
        })
    }

    /// The reference cubic-boundary spec: b₂ = −1 with init (0, 5^{−3/5}, 0).
    pub fn example32() -> Self {
        PhiSpec {
            family: PhiFamily::ThirdOrderCubic { b2: -1.0 },
            init: vec![0.0, EXAMPLE32_SLOPE, 0.0],
        }
    }

    /// Canonical initial data for a cubic-boundary φ with general b₂:
    /// φ(0) = φ″(0) = 0 puts the zero curve through the origin with zero
    /// slope, which is what pins the boundary to −b₂/8·t³. The slope keeps
    /// the b₂ = −1 case identical to [`PhiSpec::example32`].
    pub fn cubic_boundary(b2: f64) -> Result<Self, PhiOdeError> {
        Self::third_order_cubic(b2, [0.0, EXAMPLE32_SLOPE, 0.0])
    }

    fn ode_order(&self) -> usize {
        self.family.order()
    }
}

struct SecondOrderSystem {
    d0: f64,
    d1: f64,
    c0: f64,
    c1: f64,
    c2: f64,
}

impl OdeSystem for SecondOrderSystem {
    fn dim(&self) -> usize {
        2
    }
    fn rhs(&self, x: f64, u: &[f64], du: &mut [f64]) {
        let p = self.d0 + self.d1 * x;
        let q = self.c0 + (self.c1 + self.c2 * x) * x;
        du[0] = u[1];
        du[1] = p * u[1] + q * u[0];
    }
    fn rhs_jet(&self, x: f64, u: &[f64], du: &[f64], ddu: &mut [f64]) {
        let p = self.d0 + self.d1 * x;
        let q = self.c0 + (self.c1 + self.c2 * x) * x;
        let dq = self.c1 + 2.0 * self.c2 * x;
        ddu[0] = du[1];
        ddu[1] = self.d1 * u[1] + p * du[1] + dq * u[0] + q * du[0];
    }
}

struct CubicSystem {
    b2: f64,
}

impl OdeSystem for CubicSystem {
    fn dim(&self) -> usize {
        3
    }
    fn rhs(&self, x: f64, u: &[f64], du: &mut [f64]) {
        du[0] = u[1];
        du[1] = u[2];
        du[2] = self.b2 * x * x * u[0];
    }
    fn rhs_jet(&self, x: f64, u: &[f64], du: &[f64], ddu: &mut [f64]) {
        ddu[0] = du[1];
        ddu[1] = du[2];
        ddu[2] = self.b2 * (2.0 * x * u[0] + x * x * du[0]);
    }
}

/// Maclaurin coefficients of φ about 0, generated from the ODE recurrence.
#[derive(Debug, Clone)]
struct TaylorPatch {
    coeffs: Vec<f64>,
    radius: f64,
}

impl TaylorPatch {
    fn build(spec: &PhiSpec) -> Self {
        const N: usize = 56;
        let mut a = vec![0.0_f64; N + 1];
        // a_k = φ^{(k)}(0)/k!
        a[0] = spec.init[0];
        a[1] = spec.init[1];
        match spec.family {
            PhiFamily::SecondOrder { d0, d1, c0, c1, c2 } => {
                // (k+1)(k+2) a_{k+2} = d0 (k+1) a_{k+1} + d1 k a_k
                //                      + c0 a_k + c1 a_{k-1} + c2 a_{k-2}
                for k in 0..=(N - 2) {
                    let kf = k as f64;
                    let mut r = d0 * (kf + 1.0) * a[k + 1] + (d1 * kf + c0) * a[k];
                    if k >= 1 {
                        r += c1 * a[k - 1];
                    }
                    if k >= 2 {
                        r += c2 * a[k - 2];
                    }
                    a[k + 2] = r / ((kf + 1.0) * (kf + 2.0));
                }
            }
            PhiFamily::ThirdOrderCubic { b2 } => {
                a[2] = spec.init[2] / 2.0;
                // (k+1)(k+2)(k+3) a_{k+3} = b2 a_{k-2}
                for k in 0..=(N - 3) {
                    let kf = k as f64;
                    a[k + 3] = if k >= 2 {
                        b2 * a[k - 2] / ((kf + 1.0) * (kf + 2.0) * (kf + 3.0))
                    } else {
                        0.0
                    };
                }
            }
        }
        // Shrink the patch radius until the discarded tail is negligible
        // against the leading data.
        let scale = a.iter().take(4).map(|c| c.abs()).fold(f64::MIN_POSITIVE, f64::max);
        let mut radius = 0.5_f64;
        loop {
            let tail: f64 = a
                .iter()
                .enumerate()
                .skip(N - 6)
                .map(|(k, c)| c.abs() * radius.powi(k as i32))
                .sum();
            if tail < 1e-18 * scale || radius < 1e-3 {
                break;
            }
            radius *= 0.5;
        }
        TaylorPatch { coeffs: a, radius }
    }

    /// d-th derivative at x by term-wise differentiation (|x| ≤ radius).
    fn deriv(&self, x: f64, d: usize) -> f64 {
        let mut acc = 0.0;
        for k in (d..self.coeffs.len()).rev() {
            let mut fall = 1.0;
            for j in 0..d {
                fall *= (k - j) as f64;
            }
            acc = acc * x + self.coeffs[k] * fall;
        }
        acc
    }
}

/// Dense solution of a φ-ODE on an interval containing 0.
#[derive(Debug, Clone)]
pub struct PhiSolution {
    spec: PhiSpec,
    lo: f64,
    hi: f64,
    patch: TaylorPatch,
    left: Option<DenseSolution>,
    right: Option<DenseSolution>,
}

/// Maximum half-width accepted by [`solve_phi`].
pub const MAX_HALF_WIDTH: f64 = 60.0;

/// Integrator tolerances used for every φ build. The controller runs two
/// orders tighter than the delivered accuracy target (1e−12 absolute,
/// 1e−10 relative) so that accumulated global error stays inside it.
pub fn phi_ode_options() -> OdeOptions {
    OdeOptions {
        abs_tol: 1e-13,
        rel_tol: 3e-12,
        ..OdeOptions::default()
    }
}

/// Solve the φ-ODE on `domain = (lo, hi)` with `lo ≤ 0 ≤ hi`.
pub fn solve_phi(spec: &PhiSpec, domain: (f64, f64)) -> Result<PhiSolution, PhiOdeError> {
    solve_phi_with_options(spec, domain, &phi_ode_options())
}

/// As [`solve_phi`] but with caller-controlled integrator options (used by
/// the half-step re-integration check).
pub fn solve_phi_with_options(
    spec: &PhiSpec,
    domain: (f64, f64),
    opts: &OdeOptions,
) -> Result<PhiSolution, PhiOdeError> {
    let (lo, hi) = domain;
    if !(lo <= 0.0 && hi >= 0.0) || lo >= hi {
        return Err(PhiOdeError::InvalidSpec(format!(
            "domain [{lo}, {hi}] must contain 0"
        )));
    }
    if lo < -MAX_HALF_WIDTH || hi > MAX_HALF_WIDTH {
        return Err(PhiOdeError::InvalidSpec(format!(
            "domain half-width exceeds {MAX_HALF_WIDTH}"
        )));
    }
    if spec.init.len() != spec.ode_order() {
        return Err(PhiOdeError::InvalidSpec(format!(
            "init data has {} entries, ODE order is {}",
            spec.init.len(),
            spec.ode_order()
        )));
    }
    if let PhiFamily::ThirdOrderCubic { b2 } = spec.family {
        if b2 == 0.0 {
            return Err(PhiOdeError::InvalidSpec("b2 must be nonzero".into()));
        }
    }

    let run = |x_end: f64| -> Result<Option<DenseSolution>, PhiOdeError> {
        if x_end == 0.0 {
            return Ok(None);
        }
        let sol = match spec.family {
            PhiFamily::SecondOrder { d0, d1, c0, c1, c2 } => integrate(
                &SecondOrderSystem { d0, d1, c0, c1, c2 },
                0.0,
                &spec.init,
                x_end,
                opts,
            )?,
            PhiFamily::ThirdOrderCubic { b2 } => {
                integrate(&CubicSystem { b2 }, 0.0, &spec.init, x_end, opts)?
            }
        };
        Ok(Some(sol))
    };

    Ok(PhiSolution {
        spec: spec.clone(),
        lo,
        hi,
        patch: TaylorPatch::build(spec),
        left: run(lo)?,
        right: run(hi)?,
    })
}

impl PhiSolution {
    pub fn spec(&self) -> &PhiSpec {
        &self.spec
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo - 1e-12 && x <= self.hi + 1e-12
    }

    /// Largest accepted integrator step (for re-integration checks).
    pub fn max_step_used(&self) -> f64 {
        let l = self.left.as_ref().map_or(0.0, |s| s.max_step_used());
        let r = self.right.as_ref().map_or(0.0, |s| s.max_step_used());
        l.max(r)
    }

    fn check_domain(&self, x: f64) -> Result<(), PhiOdeError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(PhiOdeError::OutOfDomain {
                x,
                lo: self.lo,
                hi: self.hi,
            })
        }
    }

    /// State vector (φ, φ′[, φ″]) at x from the dense representation.
    fn state(&self, x: f64) -> Vec<f64> {
        let order = self.spec.ode_order();
        if x.abs() <= self.patch.radius {
            (0..order).map(|d| self.patch.deriv(x, d)).collect()
        } else if x > 0.0 {
            let sol = self.right.as_ref().expect("x > 0 inside domain");
            let mut out = vec![0.0; order];
            sol.state(x.min(self.hi), &mut out);
            out
        } else {
            let sol = self.left.as_ref().expect("x < 0 inside domain");
            let mut out = vec![0.0; order];
            sol.state(x.max(self.lo), &mut out);
            out
        }
    }

    /// φ(x).
    pub fn value(&self, x: f64) -> Result<f64, PhiOdeError> {
        self.check_domain(x)?;
        Ok(self.state(x)[0])
    }

    /// (φ, φ′, …, φ⁽ⁿ⁾) at x, n ≤ 6. Orders above the ODE order follow from
    /// differentiating the ODE, not from numerical differentiation.
    pub fn derivs(&self, x: f64, n: usize) -> Result<Vec<f64>, PhiOdeError> {
        assert!(n <= 6, "derivative order {n} > 6");
        self.check_domain(x)?;
        let mut d = self.state(x);
        d.reserve(n + 1);
        match self.spec.family {
            PhiFamily::SecondOrder { d0, d1, c0, c1, c2 } => {
                // φ^{(m+2)} = P φ^{(m+1)} + (m P′ + Q) φ^{(m)}
                //             + m Q′ φ^{(m−1)} + C(m,2) Q″ φ^{(m−2)}
                let p = d0 + d1 * x;
                let q = c0 + (c1 + c2 * x) * x;
                let dq = c1 + 2.0 * c2 * x;
                while d.len() < n + 1 {
                    let m = d.len() - 2;
                    let mf = m as f64;
                    let mut next = p * d[m + 1] + (mf * d1 + q) * d[m];
                    if m >= 1 {
                        next += mf * dq * d[m - 1];
                    }
                    if m >= 2 {
                        next += mf * (mf - 1.0) * c2 * d[m - 2];
                    }
                    d.push(next);
                }
            }
            PhiFamily::ThirdOrderCubic { b2 } => {
                // φ^{(m+3)} = b₂ (x² φ^{(m)} + 2m x φ^{(m−1)} + m(m−1) φ^{(m−2)})
                while d.len() < n + 1 {
                    let m = d.len() - 3;
                    let mf = m as f64;
                    let mut next = b2 * x * x * d[m];
                    if m >= 1 {
                        next += b2 * 2.0 * mf * x * d[m - 1];
                    }
                    if m >= 2 {
                        next += b2 * mf * (mf - 1.0) * d[m - 2];
                    }
                    d.push(next);
                }
            }
        }
        d.truncate(n + 1);
        Ok(d)
    }

    /// Residual of the interpolated solution in its own ODE at x, using the
    /// interpolant's polynomial derivative for the highest order (an honest
    /// measure of the dense representation, not of the step sequence).
    pub fn ode_residual(&self, x: f64) -> Result<f64, PhiOdeError> {
        self.check_domain(x)?;
        let order = self.spec.ode_order();
        let top = if x.abs() <= self.patch.radius {
            self.patch.deriv(x, order)
        } else {
            let sol = if x > 0.0 {
                self.right.as_ref().expect("x > 0 inside domain")
            } else {
                self.left.as_ref().expect("x < 0 inside domain")
            };
            sol.component_deriv(x.clamp(self.lo, self.hi), order - 1, 1)
        };
        let s = self.state(x);
        let rhs = match self.spec.family {
            PhiFamily::SecondOrder { d0, d1, c0, c1, c2 } => {
                (d0 + d1 * x) * s[1] + (c0 + (c1 + c2 * x) * x) * s[0]
            }
            PhiFamily::ThirdOrderCubic { b2 } => b2 * x * x * s[0],
        };
        Ok(top - rhs)
    }
}

/// (φ, φ′, …, φ⁽ⁿ⁾) at x, n ≤ 6.
pub fn phi_higher_derivs(sol: &PhiSolution, x: f64, n: usize) -> Result<Vec<f64>, PhiOdeError> {
    sol.derivs(x, n)
}

/// The reference solution of `φ‴ = −x²φ`:
/// `φ(x) = x·5^{−3/5}·₀F₂(; 4/5, 6/5; −x⁵/125)`, by direct series summation.
pub fn phi_example32(x: f64) -> Result<f64, PhiOdeError> {
    let z = -x.powi(5) / 125.0;
    let series = hyp0f2(0.8, 1.2, z)?;
    Ok(x * EXAMPLE32_SLOPE * series.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{airy_ai_and_prime, AIRY_AI_PRIME_ZERO, AIRY_AI_ZERO};
    use approx::assert_abs_diff_eq;

    #[test]
    fn trivial_second_order_is_identity_line() {
        // φ″ = 0 with init (0, 1) is exactly φ(x) = x.
        let spec = PhiSpec::second_order(0.0, 0.0, 0.0, 0.0, 0.0, [0.0, 1.0]);
        let sol = solve_phi(&spec, (-5.0, 5.0)).unwrap();
        for &x in &[-4.9, -1.0, 0.0, 0.3, 2.2, 5.0] {
            assert_abs_diff_eq!(sol.value(x).unwrap(), x, epsilon = 1e-14);
            assert!(sol.ode_residual(x).unwrap().abs() < 1e-14);
        }
    }

    #[test]
    fn cosh_closed_form() {
        // φ″ = φ with init (1, 0) is cosh.
        let spec = PhiSpec::second_order(0.0, 0.0, 1.0, 0.0, 0.0, [1.0, 0.0]);
        let sol = solve_phi(&spec, (-6.0, 6.0)).unwrap();
        assert_abs_diff_eq!(sol.value(2.0).unwrap(), 3.7621956910836314, epsilon = 1e-10);
        for &x in &[-5.5, -0.7, 1.3, 4.0] {
            let rel = (sol.value(x).unwrap() - x.cosh()).abs() / x.cosh();
            assert!(rel < 1e-10, "x={x} rel={rel}");
        }
    }

    #[test]
    fn airy_equation_cross_module() {
        // φ″ = xφ with Ai's initial data reproduces airy_ai on [−3, 3].
        let spec =
            PhiSpec::second_order(0.0, 0.0, 0.0, 1.0, 0.0, [AIRY_AI_ZERO, AIRY_AI_PRIME_ZERO]);
        let sol = solve_phi(&spec, (-3.0, 3.0)).unwrap();
        let mut x = -3.0;
        while x <= 3.0 {
            let (ai, dai) = airy_ai_and_prime(x);
            assert_abs_diff_eq!(sol.value(x).unwrap(), ai, epsilon = 1e-9);
            assert_abs_diff_eq!(sol.derivs(x, 1).unwrap()[1], dai, epsilon = 1e-9);
            x += 0.25;
        }
    }

    #[test]
    fn example32_series_ode_cross_validation() {
        let sol = solve_phi(&PhiSpec::example32(), (-6.0, 6.0)).unwrap();
        let mut x = -6.0;
        while x <= 6.0 {
            let series = phi_example32(x).unwrap();
            let ode = sol.value(x).unwrap();
            assert!(
                (series - ode).abs() <= 1e-9 * (1.0 + series.abs()),
                "x={x}: series {series} vs ode {ode}"
            );
            x += 0.3;
        }
    }

    #[test]
    fn example32_point_values() {
        // reference values computed by 30-digit summation
        assert_abs_diff_eq!(phi_example32(0.0).unwrap(), 0.0, epsilon = 1e-300);
        assert_abs_diff_eq!(phi_example32(1.0).unwrap(), 0.3775612350295685, epsilon = 1e-14);
        assert_abs_diff_eq!(phi_example32(2.0).unwrap(), 0.5649063363972419, epsilon = 1e-14);
        assert_abs_diff_eq!(phi_example32(-3.0).unwrap(), -4.0651817801225403, epsilon = 1e-12);
        // not odd: the series argument −x⁵/125 is odd in x
        let asym = phi_example32(1.0).unwrap() + phi_example32(-1.0).unwrap();
        assert_abs_diff_eq!(asym, -0.0063455150366747, epsilon = 1e-13);
        assert!(asym.abs() > 1e-3);
    }

    #[test]
    fn ode_residual_invariant_cubic() {
        let sol = solve_phi(&PhiSpec::example32(), (-8.0, 8.0)).unwrap();
        let mut x = -8.0;
        while x <= 8.0 {
            let phi = sol.value(x).unwrap();
            let res = sol.ode_residual(x).unwrap();
            assert!(
                res.abs() <= 1e-9 * (1.0 + phi.abs()),
                "x={x}: residual {res} vs φ {phi}"
            );
            x += 0.111;
        }
    }

    #[test]
    fn reintegration_at_half_step_agrees() {
        let spec = PhiSpec::example32();
        let sol = solve_phi(&spec, (-6.0, 6.0)).unwrap();
        let opts = OdeOptions {
            max_step: Some(0.5 * sol.max_step_used()),
            ..phi_ode_options()
        };
        let refined = solve_phi_with_options(&spec, (-6.0, 6.0), &opts).unwrap();
        let mut x = -6.0;
        while x <= 6.0 {
            let a = sol.value(x).unwrap();
            let b = refined.value(x).unwrap();
            assert!(
                (a - b).abs() <= 1e-10 * (1.0 + a.abs()),
                "x={x}: {a} vs {b}"
            );
            x += 0.17;
        }
    }

    #[test]
    fn higher_derivatives_by_ode_recursion() {
        let sol = solve_phi(&PhiSpec::example32(), (-6.0, 6.0)).unwrap();
        // at 0: (0, 5^{-3/5}, 0, 0) for n = 3
        let d0 = sol.derivs(0.0, 3).unwrap();
        assert_abs_diff_eq!(d0[0], 0.0, epsilon = 1e-300);
        assert_abs_diff_eq!(d0[1], EXAMPLE32_SLOPE, epsilon = 1e-15);
        assert_abs_diff_eq!(d0[2], 0.0, epsilon = 1e-300);
        assert_abs_diff_eq!(d0[3], 0.0, epsilon = 1e-300);
        // order 4 at x = 1 equals b2 (2φ(1) + φ′(1)) for b2 = −1
        let d1 = sol.derivs(1.0, 4).unwrap();
        assert_abs_diff_eq!(d1[4], -(2.0 * d1[0] + d1[1]), epsilon = 1e-10);
        // reference φ⁗(1) from 30-digit differentiation
        assert_abs_diff_eq!(d1[4], -1.1168519560074063, epsilon = 1e-9);
    }

    #[test]
    fn second_order_third_derivative_formula() {
        let (d0, d1, c0, c1, c2) = (0.3, -0.2, 0.7, 0.4, -0.1);
        let spec = PhiSpec::second_order(d0, d1, c0, c1, c2, [1.0, -0.5]);
        let sol = solve_phi(&spec, (-3.0, 3.0)).unwrap();
        for &x in &[-2.0, 0.1, 1.7] {
            let d = sol.derivs(x, 3).unwrap();
            let expect = (d0 + d1 * x) * d[2]
                + (d1 + c0 + c1 * x + c2 * x * x) * d[1]
                + (c1 + 2.0 * c2 * x) * d[0];
            assert_abs_diff_eq!(d[3], expect, epsilon = 1e-9 * (1.0 + expect.abs()));
        }
    }

    #[test]
    fn linearity_in_initial_data() {
        let mk = |init: [f64; 3]| {
            solve_phi(
                &PhiSpec::third_order_cubic(-1.0, init).unwrap(),
                (-5.0, 5.0),
            )
            .unwrap()
        };
        let u = mk([1.0, 0.0, 0.0]);
        let v = mk([0.0, 1.0, 0.0]);
        let (alpha, beta) = (2.5, -1.25);
        let combo = mk([alpha, beta, 0.0]);
        let mut x = -5.0;
        while x <= 5.0 {
            let want = alpha * u.value(x).unwrap() + beta * v.value(x).unwrap();
            let got = combo.value(x).unwrap();
            assert!(
                (got - want).abs() <= 1e-11 * (1.0 + want.abs()) + 1e-12,
                "x={x}: {got} vs {want}"
            );
            x += 0.37;
        }
    }

    #[test]
    fn wronskian_constant_for_cubic_family() {
        // φ‴ = b₂x²φ has no φ″ term, so the Wronskian of a fundamental
        // system is constant in x.
        let mk = |init: [f64; 3]| {
            solve_phi(
                &PhiSpec::third_order_cubic(-1.0, init).unwrap(),
                (-5.0, 5.0),
            )
            .unwrap()
        };
        let sols = [
            mk([1.0, 0.0, 0.0]),
            mk([0.0, 1.0, 0.0]),
            mk([0.0, 0.0, 1.0]),
        ];
        let wronskian = |x: f64| {
            let c: Vec<Vec<f64>> = sols.iter().map(|s| s.derivs(x, 2).unwrap()).collect();
            c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1])
                - c[1][0] * (c[0][1] * c[2][2] - c[0][2] * c[2][1])
                + c[2][0] * (c[0][1] * c[1][2] - c[0][2] * c[1][1])
        };
        let w0 = wronskian(0.0);
        assert_abs_diff_eq!(w0, 1.0, epsilon = 1e-12);
        let mut x = -5.0;
        while x <= 5.0 {
            assert!(
                (wronskian(x) - w0).abs() <= 1e-8 * w0.abs(),
                "x={x}: W={}",
                wronskian(x)
            );
            x += 0.5;
        }
    }

    #[test]
    fn growth_cap_for_wide_domain() {
        // b2 = 40 grows fast enough to trip the 1e280 cap before ±60.
        let spec = PhiSpec::third_order_cubic(40.0, [1.0, 1.0, 1.0]).unwrap();
        match solve_phi(&spec, (-60.0, 60.0)) {
            Err(PhiOdeError::Ode(OdeError::GrowthOverflow { .. })) => {}
            other => panic!("expected growth overflow, got {other:?}"),
        }
    }

    #[test]
    fn spec_validation() {
        assert!(PhiSpec::third_order_cubic(0.0, [0.0, 1.0, 0.0]).is_err());
        let bad_domain = solve_phi(&PhiSpec::example32(), (1.0, 5.0));
        assert!(matches!(bad_domain, Err(PhiOdeError::InvalidSpec(_))));
        let too_wide = solve_phi(&PhiSpec::example32(), (-80.0, 80.0));
        assert!(matches!(too_wide, Err(PhiOdeError::InvalidSpec(_))));
    }

    #[test]
    fn out_of_domain_evaluation_errors() {
        let sol = solve_phi(&PhiSpec::example32(), (-2.0, 2.0)).unwrap();
        assert!(matches!(
            sol.value(3.0),
            Err(PhiOdeError::OutOfDomain { .. })
        ));
    }
}
