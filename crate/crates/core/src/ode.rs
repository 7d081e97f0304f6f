//! Adaptive Dormand–Prince 5(4) integration with continuous output.
//!
//! Dense output is a two-point quintic Hermite interpolant per accepted
//! step, built from the state, its derivative (the RHS, free at both ends
//! thanks to FSAL) and the RHS' total x-derivative supplied by
//! [`OdeSystem::rhs_jet`]. Interpolation error is O(h⁶), below the O(h⁵)
//! local error the controller already allows, so evaluating between steps
//! costs no accuracy.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OdeError {
    #[error("solution magnitude exceeded {cap:.3e} at x = {x}")]
    GrowthOverflow { x: f64, cap: f64 },
    #[error("step size controller stalled at x = {x} (h = {h:.3e})")]
    StepFailure { x: f64, h: f64 },
    #[error("invalid integration span [{from}, {to}]")]
    InvalidSpan { from: f64, to: f64 },
}

/// Right-hand side of `u' = F(x, u)` plus the along-solution derivative of
/// `F` needed for quintic dense output.
pub trait OdeSystem {
    fn dim(&self) -> usize;
    /// `du = F(x, u)`.
    fn rhs(&self, x: f64, u: &[f64], du: &mut [f64]);
    /// `ddu = dF/dx (x, u(x))` given the already-computed `du = F(x, u)`.
    fn rhs_jet(&self, x: f64, u: &[f64], du: &[f64], ddu: &mut [f64]);
}

#[derive(Debug, Clone)]
pub struct OdeOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_step: Option<f64>,
    /// Abort with `GrowthOverflow` when any |u_i| exceeds this.
    pub growth_cap: f64,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_step: None,
            growth_cap: 1e280,
            max_steps: 2_000_000,
        }
    }
}

/// One accepted step: quintic polynomial coefficients per component in the
/// local variable θ = (x − a)/h ∈ [0, 1].
#[derive(Debug, Clone)]
struct Segment {
    a: f64,
    h: f64,
    coef: Vec<[f64; 6]>,
}

impl Segment {
    fn eval(&self, c: usize, theta: f64, deriv: usize) -> f64 {
        let p = &self.coef[c];
        let mut acc = 0.0;
        for k in (deriv..6).rev() {
            let mut fall = 1.0;
            for j in 0..deriv {
                fall *= (k - j) as f64;
            }
            acc = acc * theta + fall * p[k];
        }
        acc / self.h.powi(deriv as i32)
    }
}

/// Piecewise-quintic continuous solution on a span `[lo, hi]`.
#[derive(Debug, Clone)]
pub struct DenseSolution {
    lo: f64,
    hi: f64,
    dim: usize,
    /// Sorted ascending by left endpoint.
    segments: Vec<Segment>,
    max_step_used: f64,
}

impl DenseSolution {
    pub fn span(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo - 1e-12 && x <= self.hi + 1e-12
    }

    /// Largest accepted step of the integration that built this solution.
    pub fn max_step_used(&self) -> f64 {
        self.max_step_used
    }

    fn locate(&self, x: f64) -> &Segment {
        debug_assert!(self.contains(x), "x = {x} outside [{}, {}]", self.lo, self.hi);
        let idx = self
            .segments
            .partition_point(|s| s.a + s.h < x)
            .min(self.segments.len() - 1);
        &self.segments[idx]
    }

    /// Value of component `c` at `x`.
    pub fn component(&self, x: f64, c: usize) -> f64 {
        let seg = self.locate(x);
        seg.eval(c, (x - seg.a) / seg.h, 0)
    }

    /// `k`-th x-derivative of component `c` at `x` (k ≤ 3 is meaningful for
    /// a quintic segment).
    pub fn component_deriv(&self, x: f64, c: usize, k: usize) -> f64 {
        let seg = self.locate(x);
        seg.eval(c, (x - seg.a) / seg.h, k)
    }

    /// All components at `x`.
    pub fn state(&self, x: f64, out: &mut [f64]) {
        let seg = self.locate(x);
        let theta = (x - seg.a) / seg.h;
        for (c, slot) in out.iter_mut().enumerate() {
            *slot = seg.eval(c, theta, 0);
        }
    }
}

// Dormand–Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
// 5th-order weights equal the last A row (FSAL); error weights are b - b̂.
const E: [f64; 7] = [
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
];

/// Integrate `system` from `x0` to `x_end` (either direction) starting at
/// `u0`, returning a dense solution over the whole span.
pub fn integrate<S: OdeSystem>(
    system: &S,
    x0: f64,
    u0: &[f64],
    x_end: f64,
    opts: &OdeOptions,
) -> Result<DenseSolution, OdeError> {
    let dim = system.dim();
    assert_eq!(u0.len(), dim);
    if !x0.is_finite() || !x_end.is_finite() || x0 == x_end {
        return Err(OdeError::InvalidSpan { from: x0, to: x_end });
    }
    let dir = (x_end - x0).signum();
    let span = (x_end - x0).abs();

    let mut x = x0;
    let mut u = u0.to_vec();
    let mut k: Vec<Vec<f64>> = vec![vec![0.0; dim]; 7];
    {
        let (first, _) = k.split_at_mut(1);
        system.rhs(x, &u, &mut first[0]);
    }

    let h_cap = opts.max_step.unwrap_or(f64::INFINITY).min(span);
    let mut h = (1e-4 * span).min(h_cap).max(1e-10);
    let mut segments = Vec::new();
    let mut max_step_used = 0.0_f64;
    let mut u_next = vec![0.0; dim];
    let mut stage = vec![0.0; dim];
    let mut ddu0 = vec![0.0; dim];
    let mut ddu1 = vec![0.0; dim];

    let mut steps = 0usize;
    while (x - x_end) * dir < 0.0 {
        steps += 1;
        if steps > opts.max_steps {
            return Err(OdeError::StepFailure { x, h });
        }
        if (x + dir * h - x_end) * dir > 0.0 {
            h = (x_end - x).abs();
        }
        let hs = dir * h;

        // Stages 2..7 (k[0] carried over via FSAL).
        for s in 0..6 {
            for i in 0..dim {
                let mut acc = 0.0;
                for (j, kj) in k.iter().enumerate().take(s + 1) {
                    acc += A[s][j] * kj[i];
                }
                stage[i] = u[i] + hs * acc;
            }
            let xs = x + C[s] * hs;
            let mut out = std::mem::take(&mut k[s + 1]);
            system.rhs(xs, &stage, &mut out);
            k[s + 1] = out;
            if s == 5 {
                u_next.copy_from_slice(&stage);
            }
        }

        // Error norm (RMS of scaled embedded difference).
        let mut err_sq = 0.0;
        for i in 0..dim {
            let mut e = 0.0;
            for (j, kj) in k.iter().enumerate() {
                e += E[j] * kj[i];
            }
            e *= hs;
            let sc = opts.abs_tol + opts.rel_tol * u[i].abs().max(u_next[i].abs());
            err_sq += (e / sc) * (e / sc);
        }
        let err = (err_sq / dim as f64).sqrt();

        if err <= 1.0 {
            // Accept: build the quintic Hermite segment. Endpoint slopes are
            // k1 and k7 (FSAL); curvatures come from the system jet.
            system.rhs_jet(x, &u, &k[0], &mut ddu0);
            system.rhs_jet(x + hs, &u_next, &k[6], &mut ddu1);
            let mut coef = Vec::with_capacity(dim);
            for i in 0..dim {
                let (y0, y1) = (u[i], u_next[i]);
                let d0 = hs * k[0][i];
                let d1 = hs * k[6][i];
                let s0 = hs * hs * ddu0[i];
                let s1 = hs * hs * ddu1[i];
                let r0 = y1 - y0 - d0 - 0.5 * s0;
                let r1 = d1 - d0 - s0;
                let r2 = s1 - s0;
                coef.push([
                    y0,
                    d0,
                    0.5 * s0,
                    10.0 * r0 - 4.0 * r1 + 0.5 * r2,
                    -15.0 * r0 + 7.0 * r1 - r2,
                    6.0 * r0 - 3.0 * r1 + 0.5 * r2,
                ]);
            }
            segments.push(Segment { a: x, h: hs, coef });
            max_step_used = max_step_used.max(h);

            x += hs;
            u.copy_from_slice(&u_next);
            k.swap(0, 6); // FSAL
            for &v in &u {
                if !v.is_finite() || v.abs() > opts.growth_cap {
                    return Err(OdeError::GrowthOverflow { x, cap: opts.growth_cap });
                }
            }
            // Within rounding of the endpoint: done (avoids a sub-ulp step).
            if (x_end - x) * dir < 1e-12 * span {
                break;
            }
        }

        // PI-free standard controller.
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h = (h * factor).min(h_cap);
        if h < 1e-14 * (1.0 + x.abs()) {
            return Err(OdeError::StepFailure { x, h });
        }
    }

    // Segments of a backward run have h < 0 with `a` at the right end.
    // Normalize to forward form so the binary search sees ascending spans.
    let (lo, hi) = if dir > 0.0 { (x0, x_end) } else { (x_end, x0) };
    if dir < 0.0 {
        segments.reverse();
        segments = segments.into_iter().map(remap_backward).collect();
    }

    Ok(DenseSolution {
        lo,
        hi,
        dim,
        segments,
        max_step_used,
    })
}

/// Rewrite a backward segment (`a` at the right end, h < 0) as a forward one
/// by substituting θ → 1 − θ in the polynomial.
fn remap_backward(s: Segment) -> Segment {
    let h = -s.h;
    let a = s.a - h;
    let coef = s
        .coef
        .iter()
        .map(|p| {
            // q(θ) = p(1 − θ): expand (1 − θ)^j binomially.
            let mut q = [0.0; 6];
            for (j, &pj) in p.iter().enumerate() {
                let mut binom = 1.0;
                for (k, slot) in q.iter_mut().enumerate().take(j + 1) {
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    *slot += pj * binom * sign;
                    binom *= (j - k) as f64 / (k + 1) as f64;
                }
            }
            q
        })
        .collect();
    Segment { a, h, coef }
}
