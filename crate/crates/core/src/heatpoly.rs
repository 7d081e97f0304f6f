//! Heat (Hermite-type) polynomials `v_j(s, x)` and the kernel-derivative
//! identity built on them.
//!
//! The sequence is defined by the generating function
//!
//! ```text
//! exp(μx + μ²s) = Σ_{j≥0} v_j(s, x) μ^j / j!
//! ```
//!
//! equivalently by the three-term recurrence `v_{j+1} = x·v_j + 2js·v_{j−1}`
//! with `v₀ = 1`, `v₁ = x`. With `μ = iλ` and `s = t/2` the generating
//! function is the heat kernel's Fourier factor `exp(iλx − λ²t/2)`, so each
//! `x ↦ v_j(t/2, x)` solves `∂_t v = ½ ∂_xx v`.

use num_complex::Complex64;

/// Orders above this would overflow long before being useful.
pub const MAX_ORDER: usize = 64;

/// A single evaluated heat polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatPolyValue {
    pub order: usize,
    pub time_slot: f64,
    pub point: Complex64,
    pub value: Complex64,
}

impl HeatPolyValue {
    pub fn evaluate(order: usize, time_slot: f64, point: Complex64) -> Self {
        HeatPolyValue {
            order,
            time_slot,
            point,
            value: heat_poly(order, time_slot, point),
        }
    }
}

/// `v_j(s, x)` by the three-term recurrence.
///
/// Panics if `j > MAX_ORDER`.
pub fn heat_poly(j: usize, s: f64, x: Complex64) -> Complex64 {
    assert!(j <= MAX_ORDER, "heat polynomial order {j} exceeds {MAX_ORDER}");
    if j == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut prev = Complex64::new(1.0, 0.0);
    let mut cur = x;
    for k in 1..j {
        let next = x * cur + 2.0 * k as f64 * s * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `v_j(s, x)` for real arguments.
pub fn heat_poly_real(j: usize, s: f64, x: f64) -> f64 {
    assert!(j <= MAX_ORDER, "heat polynomial order {j} exceeds {MAX_ORDER}");
    if j == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = x;
    for k in 1..j {
        let next = x * cur + 2.0 * k as f64 * s * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `v_0 .. v_n` at `(s, x)` in one sweep.
pub fn heat_poly_real_seq(n: usize, s: f64, x: f64) -> Vec<f64> {
    assert!(n <= MAX_ORDER, "heat polynomial order {n} exceeds {MAX_ORDER}");
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push(x);
    for k in 1..n {
        let next = x * out[k] + 2.0 * k as f64 * s * out[k - 1];
        out.push(next);
    }
    out
}

/// p-th derivative in `λ` of the kernel factor `exp(iλx − λ²t/2)`:
///
/// ```text
/// d^p/dλ^p exp(iλx − λ²t/2) = v_p(−t/2, ix − λt) · exp(iλx − λ²t/2)
/// ```
pub fn kernel_deriv(p: usize, lambda: f64, t: f64, x: f64) -> Complex64 {
    assert!(t > 0.0, "kernel_deriv requires t > 0");
    let arg = Complex64::new(-lambda * t, x);
    let kernel = Complex64::new(-lambda * lambda * t / 2.0, lambda * x).exp();
    heat_poly(p, -t / 2.0, arg) * kernel
}
