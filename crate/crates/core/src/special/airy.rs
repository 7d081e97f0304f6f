//! Airy function Ai and its negative real roots.
//!
//! Evaluation strategy: Maclaurin series for |x| ≤ 4 (past x ≈ 5 the series
//! loses digits to cancellation), and adaptive ODE integration of
//! `y″ = x·y` outward from ±4 otherwise, seeded with series values. The
//! outward integrations are built once and cached densely. On the positive
//! axis past the cached range Ai has decayed below 3e−19 and 0 is returned.

use std::sync::OnceLock;

use super::SpecialError;
use crate::ode::{integrate, DenseSolution, OdeOptions, OdeSystem};

/// Ai(0) = 3^{−2/3} / Γ(2/3)
pub const AIRY_AI_ZERO: f64 = 0.3550280538878172;
/// Ai′(0) = −3^{−1/3} / Γ(1/3)
pub const AIRY_AI_PRIME_ZERO: f64 = -0.2588194037928068;

const SERIES_SPLIT: f64 = 4.0;
const NEG_CACHE_END: f64 = -44.0;
const POS_CACHE_END: f64 = 16.0;

struct AirySystem;

impl OdeSystem for AirySystem {
    fn dim(&self) -> usize {
        2
    }
    fn rhs(&self, x: f64, u: &[f64], du: &mut [f64]) {
        du[0] = u[1];
        du[1] = x * u[0];
    }
    fn rhs_jet(&self, x: f64, u: &[f64], du: &[f64], ddu: &mut [f64]) {
        ddu[0] = du[1];
        ddu[1] = u[0] + x * du[0];
    }
}

/// Maclaurin evaluation of (Ai, Ai′) from the two fundamental series of
/// `y″ = xy`. Valid (full precision) for |x| ≤ SERIES_SPLIT.
fn airy_series(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // y1 = Σ a_m x^{3m},  a_0 = 1,   a_m = a_{m−1} / ((3m)(3m−1))
    // y2 = Σ b_m x^{3m+1}, b_0 = 1,  b_m = b_{m−1} / ((3m+1)(3m))
    let mut y1 = 1.0;
    let mut dy1 = 0.0;
    let mut y2 = x;
    let mut dy2 = 1.0;
    let mut t1 = 1.0; // a_m x^{3m}
    let mut t2 = x; // b_m x^{3m+1}
    for m in 1..=80 {
        let m3 = 3.0 * m as f64;
        t1 *= x3 / (m3 * (m3 - 1.0));
        t2 *= x3 / ((m3 + 1.0) * m3);
        y1 += t1;
        y2 += t2;
        // derivatives: d/dx x^{3m} = 3m x^{3m-1}, d/dx x^{3m+1} = (3m+1) x^{3m}
        if x != 0.0 {
            dy1 += m3 * t1 / x;
            dy2 += (m3 + 1.0) * t2 / x;
        }
        if t1.abs() < 1e-18 * y1.abs() && t2.abs() < 1e-18 * y2.abs().max(1e-30) {
            break;
        }
    }
    (
        AIRY_AI_ZERO * y1 + AIRY_AI_PRIME_ZERO * y2,
        AIRY_AI_ZERO * dy1 + AIRY_AI_PRIME_ZERO * dy2,
    )
}

fn ode_options() -> OdeOptions {
    OdeOptions {
        abs_tol: 1e-14,
        rel_tol: 1e-12,
        ..OdeOptions::default()
    }
}

fn negative_branch() -> &'static DenseSolution {
    static CACHE: OnceLock<DenseSolution> = OnceLock::new();
    CACHE.get_or_init(|| {
        let (a, da) = airy_series(-SERIES_SPLIT);
        integrate(&AirySystem, -SERIES_SPLIT, &[a, da], NEG_CACHE_END, &ode_options())
            .expect("Airy integration on the oscillatory branch cannot overflow")
    })
}

fn positive_branch() -> &'static DenseSolution {
    static CACHE: OnceLock<DenseSolution> = OnceLock::new();
    CACHE.get_or_init(|| {
        let (a, da) = airy_series(SERIES_SPLIT);
        integrate(&AirySystem, SERIES_SPLIT, &[a, da], POS_CACHE_END, &ode_options())
            .expect("Airy integration over a bounded span")
    })
}

/// (Ai(x), Ai′(x)).
pub fn airy_ai_and_prime(x: f64) -> (f64, f64) {
    if x.abs() <= SERIES_SPLIT {
        airy_series(x)
    } else if x > POS_CACHE_END {
        (0.0, 0.0)
    } else if x > 0.0 {
        let b = positive_branch();
        (b.component(x, 0), b.component(x, 1))
    } else if x >= NEG_CACHE_END {
        let b = negative_branch();
        (b.component(x, 0), b.component(x, 1))
    } else {
        // Outside the cached window; integrate on demand.
        let (a, da) = airy_series(-SERIES_SPLIT);
        let sol = integrate(&AirySystem, -SERIES_SPLIT, &[a, da], x - 1.0, &ode_options())
            .expect("Airy integration on the oscillatory branch cannot overflow");
        (sol.component(x, 0), sol.component(x, 1))
    }
}

/// Ai(x).
pub fn airy_ai(x: f64) -> f64 {
    airy_ai_and_prime(x).0
}

/// n-th negative root of Ai (n ≥ 1, decreasing order), located by scanning
/// `[window_lo, 0]` for sign changes and bisecting each bracket to 1e−12.
pub fn airy_root_in(n: usize, window_lo: f64) -> Result<f64, SpecialError> {
    assert!(n >= 1, "root index is 1-based");
    assert!(window_lo < 0.0);
    let step = 0.05;
    let mut found = 0usize;
    let mut x_hi = 0.0_f64;
    let mut f_hi = airy_ai(x_hi);
    let mut x = -step;
    while x >= window_lo - 1e-12 {
        let f = airy_ai(x);
        if f == 0.0 {
            found += 1;
            if found == n {
                return Ok(x);
            }
        } else if f * f_hi < 0.0 {
            found += 1;
            if found == n {
                return Ok(bisect(x, x_hi, f));
            }
        }
        x_hi = x;
        f_hi = f;
        x -= step;
    }
    Err(SpecialError::RootNotBracketed {
        wanted: n,
        lo: window_lo,
        hi: 0.0,
    })
}

/// n-th negative root of Ai within the default window [−40, 0].
pub fn airy_root(n: usize) -> Result<f64, SpecialError> {
    airy_root_in(n, -40.0)
}

fn bisect(mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let mut s_lo = f_lo;
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-12 {
            return mid;
        }
        let f = airy_ai(mid);
        if f == 0.0 {
            return mid;
        }
        if f * s_lo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            s_lo = f;
        }
    }
    0.5 * (lo + hi)
}
