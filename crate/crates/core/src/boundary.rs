//! Boundary curves f(t) and every identity that ties a heat solution to its
//! boundary: the square-root family of the second-order φ-ODE, the cubic
//! boundary of the third-order equation, the Rayleigh-type ODE for the
//! Pearcey zero set, Newton tracing of zero curves, and the residual checks
//! (derivative identities along the boundary, φ-ODE master identities, and
//! the cubic boundary ODE).

use crate::defaults;
use crate::heatsol::{HeatError, HeatSolution};
use crate::ode::{integrate, DenseSolution, OdeError, OdeOptions, OdeSystem};
use crate::phi_ode::{PhiFamily, PhiSpec};
use crate::special::{pearcey_nu, pearcey_partial, SpecialError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundaryError {
    #[error("degenerate boundary family: d1² + 4c2 = 0 (d1 = {d1}, c2 = {c2})")]
    DegenerateFamily { d1: f64, c2: f64 },
    #[error("boundary radicand −1 + d1·t + c2·t² = {radicand} < 0 at t = {t} with C ≠ 0")]
    ComplexBoundary { t: f64, radicand: f64 },
    #[error("fewer than {wanted} zeros of ν(0,·) bracketed in (0, {hi}]")]
    RootNotBracketed { wanted: usize, hi: f64 },
    #[error("Newton continuation lost the root after t = {last_good_t}")]
    NewtonDivergence {
        last_good_t: f64,
        traced: Vec<TracePoint>,
    },
    #[error("t = {t} outside the boundary's domain [{lo}, {hi}]")]
    OutOfRange { t: f64, lo: f64, hi: f64 },
    #[error("operation requires a {expected} solution")]
    WrongKind { expected: &'static str },
    #[error(transparent)]
    Heat(#[from] HeatError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Ode(#[from] OdeError),
}

/// One point of a traced zero curve.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TracePoint {
    pub t: f64,
    pub x: f64,
    /// Implicit-function slope −ν_t/ν⁽¹⁾ at (t, x).
    pub slope: f64,
}

/// The square-root boundary family of the second-order φ-ODE.
#[derive(Debug, Clone, Copy)]
pub struct Theorem2Family {
    pub d0: f64,
    pub d1: f64,
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub big_c: f64,
}

impl Theorem2Family {
    pub fn new(
        d0: f64,
        d1: f64,
        c0: f64,
        c1: f64,
        c2: f64,
        big_c: f64,
    ) -> Result<Self, BoundaryError> {
        let denom = d1 * d1 + 4.0 * c2;
        if denom.abs() <= 1e-14 * (d1 * d1 + 4.0 * c2.abs() + 1.0) {
            return Err(BoundaryError::DegenerateFamily { d1, c2 });
        }
        Ok(Theorem2Family {
            d0,
            d1,
            c0,
            c1,
            c2,
            big_c,
        })
    }

    fn radicand(&self, t: f64) -> f64 {
        -1.0 + self.d1 * t + self.c2 * t * t
    }

    pub fn f(&self, t: f64) -> Result<f64, BoundaryError> {
        let denom = self.d1 * self.d1 + 4.0 * self.c2;
        let linear = (-self.d0 * self.d1 - 2.0 * self.c1
            + (self.c1 * self.d1 - 2.0 * self.c2 * self.d0) * t)
            / denom;
        if self.big_c == 0.0 {
            return Ok(linear);
        }
        let g = self.radicand(t);
        if g < 0.0 {
            return Err(BoundaryError::ComplexBoundary { t, radicand: g });
        }
        Ok(linear + g.sqrt() * self.big_c)
    }

    pub fn df(&self, t: f64) -> Result<f64, BoundaryError> {
        let denom = self.d1 * self.d1 + 4.0 * self.c2;
        let slope = (self.c1 * self.d1 - 2.0 * self.c2 * self.d0) / denom;
        if self.big_c == 0.0 {
            return Ok(slope);
        }
        let g = self.radicand(t);
        if g <= 0.0 {
            return Err(BoundaryError::ComplexBoundary { t, radicand: g });
        }
        let dg = self.d1 + 2.0 * self.c2 * t;
        Ok(slope + self.big_c * dg / (2.0 * g.sqrt()))
    }

    pub fn ddf(&self, t: f64) -> Result<f64, BoundaryError> {
        if self.big_c == 0.0 {
            return Ok(0.0);
        }
        let g = self.radicand(t);
        if g <= 0.0 {
            return Err(BoundaryError::ComplexBoundary { t, radicand: g });
        }
        let dg = self.d1 + 2.0 * self.c2 * t;
        let ddg = 2.0 * self.c2;
        Ok(self.big_c * (ddg / (2.0 * g.sqrt()) - dg * dg / (4.0 * g.powf(1.5))))
    }

    /// Residual of the first-order boundary ODE
    /// `−2f′(1 − d1·t − c2·t²) = d0 + c1·t + (d1 + 2c2·t)·f`.
    pub fn ode_residual(&self, t: f64) -> Result<f64, BoundaryError> {
        let f = self.f(t)?;
        let df = self.df(t)?;
        Ok(
            -2.0 * df * (1.0 - self.d1 * t - self.c2 * t * t)
                - (self.d0 + self.c1 * t + (self.d1 + 2.0 * self.c2 * t) * f),
        )
    }
}

/// A boundary curve with first and second derivatives.
#[derive(Debug, Clone)]
pub enum Boundary {
    /// `f(t) = −b₂/8·t³`.
    Cubic { b2: f64 },
    Theorem2Family(Theorem2Family),
    /// Dense solution of `f″ = 2(f′)³ − t·f′/2 − f/4`.
    RayleighOde { dense: DenseSolution },
    /// Zero curve traced by Newton continuation.
    Traced { points: Vec<TracePoint> },
}

impl Boundary {
    pub fn cubic(b2: f64) -> Self {
        assert!(b2 != 0.0, "cubic boundary needs b2 != 0");
        Boundary::Cubic { b2 }
    }

    pub fn f(&self, t: f64) -> Result<f64, BoundaryError> {
        match self {
            Boundary::Cubic { b2 } => Ok(-(b2 / 8.0) * t * t * t),
            Boundary::Theorem2Family(fam) => fam.f(t),
            Boundary::RayleighOde { dense } => {
                check_span(dense.span(), t)?;
                Ok(dense.component(t, 0))
            }
            Boundary::Traced { points } => traced_eval(points, t, 0),
        }
    }

    pub fn df(&self, t: f64) -> Result<f64, BoundaryError> {
        match self {
            Boundary::Cubic { b2 } => Ok(-(3.0 * b2 / 8.0) * t * t),
            Boundary::Theorem2Family(fam) => fam.df(t),
            Boundary::RayleighOde { dense } => {
                check_span(dense.span(), t)?;
                Ok(dense.component(t, 1))
            }
            Boundary::Traced { points } => traced_eval(points, t, 1),
        }
    }

    pub fn ddf(&self, t: f64) -> Result<f64, BoundaryError> {
        match self {
            Boundary::Cubic { b2 } => Ok(-(6.0 * b2 / 8.0) * t),
            Boundary::Theorem2Family(fam) => fam.ddf(t),
            Boundary::RayleighOde { dense } => {
                check_span(dense.span(), t)?;
                let f = dense.component(t, 0);
                let df = dense.component(t, 1);
                Ok(2.0 * df.powi(3) - 0.5 * t * df - 0.25 * f)
            }
            Boundary::Traced { points } => traced_eval(points, t, 2),
        }
    }

    pub fn trace_points(&self) -> Option<&[TracePoint]> {
        match self {
            Boundary::Traced { points } => Some(points),
            _ => None,
        }
    }
}

fn check_span(span: (f64, f64), t: f64) -> Result<(), BoundaryError> {
    if t < span.0 - 1e-12 || t > span.1 + 1e-12 {
        Err(BoundaryError::OutOfRange {
            t,
            lo: span.0,
            hi: span.1,
        })
    } else {
        Ok(())
    }
}

/// Piecewise cubic Hermite through the traced (t, x, slope) data.
fn traced_eval(points: &[TracePoint], t: f64, deriv: usize) -> Result<f64, BoundaryError> {
    let first = points.first().expect("traced boundary is nonempty");
    let last = points.last().expect("traced boundary is nonempty");
    check_span((first.t, last.t), t)?;
    let idx = points
        .partition_point(|p| p.t < t)
        .clamp(1, points.len() - 1);
    let (a, b) = (&points[idx - 1], &points[idx]);
    let h = b.t - a.t;
    let theta = ((t - a.t) / h).clamp(0.0, 1.0);
    let c0 = a.x;
    let c1 = h * a.slope;
    let c2 = -3.0 * a.x - 2.0 * h * a.slope + 3.0 * b.x - h * b.slope;
    let c3 = 2.0 * a.x + h * a.slope - 2.0 * b.x + h * b.slope;
    Ok(match deriv {
        0 => c0 + theta * (c1 + theta * (c2 + theta * c3)),
        1 => (c1 + theta * (2.0 * c2 + theta * 3.0 * c3)) / h,
        2 => (2.0 * c2 + 6.0 * c3 * theta) / (h * h),
        _ => unreachable!("traced boundary supports derivatives 0..=2"),
    })
}

/// One named residual check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub samples: usize,
}

/// Collection of named residual checks; `pass ⇔ max_residual ≤ tolerance`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn push(
        &mut self,
        name: impl Into<String>,
        max_residual: f64,
        tolerance: f64,
        samples: usize,
    ) {
        self.entries.push(CheckEntry {
            name: name.into(),
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
            samples,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }
}

/// Theorem-2 boundary value at `t` for the given coefficients.
pub fn boundary_theorem2(
    d0: f64,
    d1: f64,
    c0: f64,
    c1: f64,
    c2: f64,
    big_c: f64,
    t: f64,
) -> Result<f64, BoundaryError> {
    Theorem2Family::new(d0, d1, c0, c1, c2, big_c)?.f(t)
}

/// `f(t) = −b₂/8·t³`.
pub fn boundary_cubic(b2: f64, t: f64) -> f64 {
    assert!(b2 != 0.0, "cubic boundary needs b2 != 0");
    -(b2 / 8.0) * t * t * t
}

/// Residual of the cubic-boundary ODE from the third-order construction,
/// for a trial boundary `f(t) = δ·t³`:
///
/// ```text
/// −4f″ + 2f′[4(f′)² + 4b₂t²f′ − 2b₂tf + b₂²t⁴] − b₂f[2b₂t³ + f] − 3b₂t
/// ```
///
/// Expanding gives `−3t(8δ + b₂) + t⁶·δ(216δ² + 59b₂δ + 4b₂²)`, and both
/// coefficients vanish exactly at δ = −b₂/8.
pub fn cubic_boundary_ode_residual(b2: f64, delta: f64, t: f64) -> f64 {
    let f = delta * t * t * t;
    let df = 3.0 * delta * t * t;
    let ddf = 6.0 * delta * t;
    let t2 = t * t;
    let t3 = t2 * t;
    let t4 = t2 * t2;
    -4.0 * ddf
        + 2.0 * df * (4.0 * df * df + 4.0 * b2 * t2 * df - 2.0 * b2 * t * f + b2 * b2 * t4)
        - b2 * f * (2.0 * b2 * t3 + f)
        - 3.0 * b2 * t
}

/// Checks that `f = −b₂/8·t³` annihilates the boundary ODE on the grid,
/// residuals scaled by (1 + t⁶).
pub fn check_cubic_boundary_ode(b2: f64, t_grid: &[f64]) -> VerificationReport {
    assert!(b2 != 0.0, "cubic boundary needs b2 != 0");
    let delta = -b2 / 8.0;
    let max = t_grid
        .iter()
        .map(|&t| cubic_boundary_ode_residual(b2, delta, t).abs() / (1.0 + t.powi(6)))
        .fold(0.0, f64::max);
    let mut report = VerificationReport::default();
    report.push(
        "cubic boundary ODE residual",
        max,
        defaults::CUBIC_ODE_SCALED,
        t_grid.len(),
    );
    report
}

struct RayleighSystem;

impl OdeSystem for RayleighSystem {
    fn dim(&self) -> usize {
        2
    }
    fn rhs(&self, t: f64, u: &[f64], du: &mut [f64]) {
        du[0] = u[1];
        du[1] = 2.0 * u[1].powi(3) - 0.5 * t * u[1] - 0.25 * u[0];
    }
    fn rhs_jet(&self, t: f64, u: &[f64], du: &[f64], ddu: &mut [f64]) {
        ddu[0] = du[1];
        ddu[1] = 6.0 * u[1] * u[1] * du[1] - 0.5 * u[1] - 0.5 * t * du[1] - 0.25 * du[0];
    }
}

/// Construct the Pearcey boundary: start at the `zero_index`-th positive
/// zero of `ν(0,·)`, take the initial slope from the first boundary
/// identity (`f′ = −½ν⁽²⁾/ν⁽¹⁾`), and integrate the Rayleigh-type ODE
/// `f″ = 2(f′)³ − t·f′/2 − f/4` out to `t_max`.
pub fn boundary_rayleigh(
    sol: &HeatSolution,
    zero_index: usize,
    t_max: f64,
) -> Result<Boundary, BoundaryError> {
    let quad = match sol {
        HeatSolution::PearceyIntegral { quad } => quad,
        _ => return Err(BoundaryError::WrongKind { expected: "Pearcey" }),
    };
    assert!(zero_index >= 1, "zero index is 1-based");
    assert!(t_max > 0.0);

    // Bracket the requested zero on the positive axis.
    let window_hi = 14.0;
    let step = 0.05;
    let mut found = 0usize;
    let mut x_prev = 0.0;
    let mut v_prev = pearcey_nu(0.0, x_prev, quad)?;
    let mut x = step;
    let mut root = None;
    while x <= window_hi {
        let v = pearcey_nu(0.0, x, quad)?;
        if v == 0.0 || v * v_prev < 0.0 {
            found += 1;
            if found == zero_index {
                root = Some(refine_pearcey_zero(x_prev, x, quad)?);
                break;
            }
        }
        x_prev = x;
        v_prev = v;
        x += step;
    }
    let f0 = root.ok_or(BoundaryError::RootNotBracketed {
        wanted: zero_index,
        hi: window_hi,
    })?;

    let n1 = pearcey_partial(1, 0.0, f0, quad)?;
    let n2 = pearcey_partial(2, 0.0, f0, quad)?;
    let df0 = -0.5 * n2 / n1;

    let opts = OdeOptions {
        abs_tol: 1e-12,
        rel_tol: 1e-10,
        ..OdeOptions::default()
    };
    let dense = integrate(&RayleighSystem, 0.0, &[f0, df0], t_max, &opts)?;
    Ok(Boundary::RayleighOde { dense })
}

fn refine_pearcey_zero(
    mut lo: f64,
    mut hi: f64,
    quad: &crate::heatsol::QuadratureConfig,
) -> Result<f64, BoundaryError> {
    let mut v_lo = pearcey_nu(0.0, lo, quad)?;
    for _ in 0..70 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-13 {
            return Ok(mid);
        }
        let v = pearcey_nu(0.0, mid, quad)?;
        if v == 0.0 {
            return Ok(mid);
        }
        if v * v_lo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            v_lo = v;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Newton solve of `ν(t, ·) = 0` from `seed`. Returns the root with the
/// implicit-function slope.
fn newton_root(sol: &HeatSolution, t: f64, seed: f64) -> Result<TracePoint, BoundaryError> {
    let mut x = seed;
    for _ in 0..50 {
        let (p, _) = sol.partials(t, x, 1)?;
        if p[1].abs() < 1e-300 {
            break;
        }
        let dx = p[0] / p[1];
        x -= dx;
        if !x.is_finite() {
            break;
        }
        if dx.abs() <= 1e-13 * (1.0 + x.abs()) {
            let (p, _) = sol.partials(t, x, 2)?;
            let slope = -(0.5 * p[2]) / p[1];
            return Ok(TracePoint { t, x, slope });
        }
    }
    Err(BoundaryError::NewtonDivergence {
        last_good_t: t,
        traced: Vec::new(),
    })
}

/// Trace the zero curve of `ν(t, ·)` through the time grid by Newton
/// continuation, halving the time step on divergence (minimum step 1e−5).
/// The returned boundary contains every accepted point (grid points plus
/// any bisection insertions).
pub fn boundary_trace(
    sol: &HeatSolution,
    t_grid: &[f64],
    x_seed: f64,
) -> Result<Boundary, BoundaryError> {
    assert!(t_grid.len() >= 2, "need at least two grid times");
    assert!(
        t_grid.windows(2).all(|w| w[1] > w[0]),
        "time grid must be strictly increasing"
    );
    let mut points: Vec<TracePoint> = Vec::with_capacity(t_grid.len());
    let first =
        newton_root(sol, t_grid[0], x_seed).map_err(|_| BoundaryError::NewtonDivergence {
            last_good_t: t_grid[0],
            traced: Vec::new(),
        })?;
    points.push(first);

    for &t_target in &t_grid[1..] {
        loop {
            let prev = *points.last().expect("at least the seed point");
            if prev.t >= t_target {
                break;
            }
            let dt = t_target - prev.t;
            // Predictor from the implicit-function slope.
            let seed = prev.x + prev.slope * dt;
            match newton_root(sol, t_target, seed) {
                Ok(p) => {
                    points.push(p);
                    break;
                }
                Err(_) if dt > 2e-5 => {
                    let t_mid = prev.t + 0.5 * dt;
                    let seed_mid = prev.x + prev.slope * 0.5 * dt;
                    match newton_root(sol, t_mid, seed_mid) {
                        Ok(p) => points.push(p),
                        Err(_) => {
                            return Err(BoundaryError::NewtonDivergence {
                                last_good_t: prev.t,
                                traced: points,
                            })
                        }
                    }
                }
                Err(_) => {
                    return Err(BoundaryError::NewtonDivergence {
                        last_good_t: prev.t,
                        traced: points,
                    })
                }
            }
        }
    }
    Ok(Boundary::Traced { points })
}

/// Residuals of the two boundary derivative identities
///
/// ```text
/// (i)  f′·ν⁽¹⁾ + ½ν⁽²⁾ = 0
/// (ii) f″·ν⁽¹⁾ + f′(f′·ν⁽²⁾ + ν⁽³⁾) + ¼ν⁽⁴⁾ = 0
/// ```
///
/// evaluated at (t, f(t)) and normalized by |ν⁽¹⁾(t, f(t))| + 1.
pub fn check_remark1(
    sol: &HeatSolution,
    bnd: &Boundary,
    t_grid: &[f64],
) -> Result<VerificationReport, BoundaryError> {
    check_remark1_with_tol(sol, bnd, t_grid, defaults::REMARK_IDENTITY)
}

pub fn check_remark1_with_tol(
    sol: &HeatSolution,
    bnd: &Boundary,
    t_grid: &[f64],
    tol: f64,
) -> Result<VerificationReport, BoundaryError> {
    let mut max_i = 0.0_f64;
    let mut max_ii = 0.0_f64;
    for &t in t_grid {
        let f = bnd.f(t)?;
        let df = bnd.df(t)?;
        let ddf = bnd.ddf(t)?;
        let (p, _) = sol.partials(t, f, 4)?;
        let norm = p[1].abs() + 1.0;
        let r1 = (df * p[1] + 0.5 * p[2]).abs() / norm;
        let r2 = (ddf * p[1] + df * (df * p[2] + p[3]) + 0.25 * p[4]).abs() / norm;
        max_i = max_i.max(r1);
        max_ii = max_ii.max(r2);
    }
    let mut report = VerificationReport::default();
    report.push("boundary identity (i)", max_i, tol, t_grid.len());
    report.push("boundary identity (ii)", max_ii, tol, t_grid.len());
    Ok(report)
}

/// Residuals of the master identities the convolution inherits from the
/// φ-ODE, at arbitrary (t, x) samples (not restricted to the boundary).
///
/// Second order:
///
/// ```text
/// (1 − d₁t − c₂t²)ν⁽²⁾ = (d₀ + d₁x + c₁t + 2c₂tx)ν⁽¹⁾ + (c₀ + c₁x + c₂x² + c₂t)ν⁽⁰⁾
/// ```
///
/// Third order with d₁ = c₂ = b₃ = 0 and the other low-order coefficients
/// fixed to zero, leaving b₂:
///
/// ```text
/// ν⁽³⁾ = b₂t²·ν⁽²⁾ + 2b₂tx·ν⁽¹⁾ + b₂(x² + t)·ν⁽⁰⁾
/// ν⁽⁴⁾ = b₂t²·ν⁽³⁾ + 2b₂tx·ν⁽²⁾ + b₂(x² + 3t)·ν⁽¹⁾ + 2b₂x·ν⁽⁰⁾
/// ```
///
/// The ν⁽⁰⁾ terms drop on the boundary where ν = 0; keeping them makes the
/// identities hold at every (t, x). Residuals are normalized by the largest
/// participating term + 1. The caller guarantees `sol` is the convolution
/// built from `spec`.
pub fn check_master_identity(
    sol: &HeatSolution,
    spec: &PhiSpec,
    samples: &[(f64, f64)],
) -> Result<VerificationReport, BoundaryError> {
    let mut report = VerificationReport::default();
    match spec.family {
        PhiFamily::SecondOrder { d0, d1, c0, c1, c2 } => {
            let mut max_r = 0.0_f64;
            for &(t, x) in samples {
                let (p, _) = sol.partials(t, x, 2)?;
                let lhs = (1.0 - d1 * t - c2 * t * t) * p[2];
                let t1 = (d0 + d1 * x + c1 * t + 2.0 * c2 * t * x) * p[1];
                let t0 = (c0 + c1 * x + c2 * x * x + c2 * t) * p[0];
                let scale = lhs.abs().max(t1.abs()).max(t0.abs()) + 1.0;
                max_r = max_r.max((lhs - t1 - t0).abs() / scale);
            }
            report.push(
                "master identity (second order)",
                max_r,
                defaults::MASTER_IDENTITY,
                samples.len(),
            );
        }
        PhiFamily::ThirdOrderCubic { b2 } => {
            let mut max_cu1 = 0.0_f64;
            let mut max_cu2 = 0.0_f64;
            for &(t, x) in samples {
                let (p, _) = sol.partials(t, x, 4)?;
                let a2 = b2 * t * t * p[2];
                let a1 = 2.0 * b2 * t * x * p[1];
                let a0 = b2 * (x * x + t) * p[0];
                let scale1 = p[3].abs().max(a2.abs()).max(a1.abs()).max(a0.abs()) + 1.0;
                max_cu1 = max_cu1.max((p[3] - a2 - a1 - a0).abs() / scale1);

                let q3 = b2 * t * t * p[3];
                let q2 = 2.0 * b2 * t * x * p[2];
                let q1 = b2 * (x * x + 3.0 * t) * p[1];
                let q0 = 2.0 * b2 * x * p[0];
                let scale2 = p[4]
                    .abs()
                    .max(q3.abs())
                    .max(q2.abs())
                    .max(q1.abs())
                    .max(q0.abs())
                    + 1.0;
                max_cu2 = max_cu2.max((p[4] - q3 - q2 - q1 - q0).abs() / scale2);
            }
            report.push(
                "master identity (third order, order 3)",
                max_cu1,
                defaults::MASTER_IDENTITY,
                samples.len(),
            );
            report.push(
                "master identity (third order, order 4)",
                max_cu2,
                defaults::MASTER_IDENTITY,
                samples.len(),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heatsol::QuadratureConfig;
    use crate::phi_ode::solve_phi;
    use crate::special::airy_root;
    use approx::assert_abs_diff_eq;

    #[test]
    fn theorem2_constant_cases() {
        // d0 = d1 = 1, rest 0, C = 0: f ≡ −1.
        for &t in &[0.0, 0.7, 3.0] {
            assert_abs_diff_eq!(
                boundary_theorem2(1.0, 1.0, 0.0, 0.0, 0.0, 0.0, t).unwrap(),
                -1.0,
                epsilon = 1e-15
            );
        }
        // d1 = 1 alone, C = 0: zero numerator.
        assert_eq!(
            boundary_theorem2(0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 2.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn theorem2_degenerate_family() {
        assert!(matches!(
            boundary_theorem2(0.0, 2.0, 0.0, 0.0, -1.0, 0.0, 1.0),
            Err(BoundaryError::DegenerateFamily { .. })
        ));
    }

    #[test]
    fn theorem2_complex_radicand() {
        // at t = 0 the radicand is −1 < 0
        assert!(matches!(
            boundary_theorem2(0.0, 1.0, 0.0, 0.0, 0.0, 2.0, 0.0),
            Err(BoundaryError::ComplexBoundary { .. })
        ));
        // but fine for t ≥ 1
        assert!(boundary_theorem2(0.0, 1.0, 0.0, 0.0, 0.0, 2.0, 1.5).is_ok());
    }

    #[test]
    fn theorem2_first_order_ode() {
        let cases = [
            (1.0, 1.0, 0.0, 0.0, 0.0, 0.0, vec![0.0, 0.5, 2.0]),
            (0.0, 1.0, 0.0, 0.0, 0.0, 2.0, vec![1.5, 2.0, 3.0]),
            (0.5, 2.0, 0.3, 1.0, 1.0, 1.0, vec![0.6, 1.0, 2.5]),
            (0.0, 0.0, 0.0, 0.0, 1.0, 0.0, vec![0.3, 1.0, 4.0]),
            (1.0, 2.0, 0.0, 1.0, 0.0, 0.5, vec![1.2, 2.0, 3.0]),
        ];
        for (d0, d1, c0, c1, c2, big_c, ts) in cases {
            let fam = Theorem2Family::new(d0, d1, c0, c1, c2, big_c).unwrap();
            for &t in &ts {
                let r = fam.ode_residual(t).unwrap();
                assert!(
                    r.abs() < 1e-9,
                    "coeffs ({d0},{d1},{c0},{c1},{c2},{big_c}) t={t}: {r}"
                );
            }
        }
    }

    #[test]
    fn cubic_boundary_values() {
        assert_abs_diff_eq!(boundary_cubic(-1.0, 0.2), 0.001, epsilon = 1e-18);
        assert_eq!(boundary_cubic(-1.0, 0.0), 0.0);
        assert_abs_diff_eq!(boundary_cubic(8.0, 1.0), -1.0, epsilon = 1e-15);
    }

    #[test]
    fn cubic_boundary_ode_passes_and_fails() {
        for &b2 in &[-1.0, 1.0, 8.0] {
            let grid: Vec<f64> = (0..=20).map(|i| 0.1 * i as f64).collect();
            let report = check_cubic_boundary_ode(b2, &grid);
            assert!(report.all_pass(), "b2={b2}: {report:?}");
            // perturbing δ by 0.1% must break the linear-in-t term
            let delta = -b2 / 8.0 * (1.0 + 1e-3);
            let bad = cubic_boundary_ode_residual(b2, delta, 0.5).abs() / (1.0 + 0.5_f64.powi(6));
            assert!(bad > 1e-12, "b2={b2}: perturbed residual {bad}");
        }
        // residual at t = 0 carries a factor of t
        assert_eq!(cubic_boundary_ode_residual(3.0, -3.0 / 8.0, 0.0), 0.0);
        // wrong delta entirely (δ = 1, b2 = −1): linear term −3t(8δ+b₂) ≠ 0
        assert!(cubic_boundary_ode_residual(-1.0, 1.0, 0.5).abs() > 1.0);
    }

    #[test]
    fn trace_linear_boundary() {
        let sol = HeatSolution::linear(1.0);
        let grid: Vec<f64> = (0..=9).map(|i| 0.1 + 0.1 * i as f64).collect();
        let bnd = boundary_trace(&sol, &grid, -0.05).unwrap();
        for &t in &grid {
            assert_abs_diff_eq!(bnd.f(t).unwrap(), -t, epsilon = 1e-9);
        }
        // slope from the implicit function theorem
        assert_abs_diff_eq!(bnd.df(0.5).unwrap(), -1.0, epsilon = 1e-8);
    }

    #[test]
    fn trace_airy_boundary() {
        let xi1 = airy_root(1).unwrap();
        let sol = HeatSolution::airy(1);
        let grid: Vec<f64> = (0..=8).map(|i| 0.1 + 0.1 * i as f64).collect();
        let bnd = boundary_trace(&sol, &grid, xi1 - 0.01).unwrap();
        for &t in &grid {
            assert_abs_diff_eq!(bnd.f(t).unwrap(), xi1 - t * t / 4.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn traced_implicit_function_consistency() {
        // |f(t+Δ) − f(t) − f′(t)Δ| = O(Δ²): compare Δ and Δ/2.
        let sol = HeatSolution::airy(1);
        let xi1 = airy_root(1).unwrap();
        let grid: Vec<f64> = (0..=40).map(|i| 0.1 + 0.02 * i as f64).collect();
        let bnd = boundary_trace(&sol, &grid, xi1 - 0.01).unwrap();
        let t = 0.5;
        let base = bnd.f(t).unwrap();
        let slope = bnd.df(t).unwrap();
        let d1 = (bnd.f(t + 1e-2).unwrap() - base - slope * 1e-2).abs();
        let d2 = (bnd.f(t + 5e-3).unwrap() - base - slope * 5e-3).abs();
        let ratio = d1 / d2.max(1e-18);
        assert!(
            (2.5..8.0).contains(&ratio) || d1 < 1e-12,
            "ratio {ratio} (d1={d1}, d2={d2})"
        );
    }

    #[test]
    fn remark1_linear_closed_form() {
        let sol = HeatSolution::linear(1.0);
        let grid_trace: Vec<f64> = (0..=19).map(|i| 0.1 + 0.05 * i as f64).collect();
        let bnd = boundary_trace(&sol, &grid_trace, -0.08).unwrap();
        let grid: Vec<f64> = (0..=19).map(|i| 0.1 + 0.045 * i as f64).collect();
        let report = check_remark1(&sol, &bnd, &grid).unwrap();
        assert!(report.all_pass(), "{report:?}");
        for e in &report.entries {
            assert!(e.max_residual < 1e-10, "{e:?}");
        }
    }

    #[test]
    fn remark1_fails_off_zero_set() {
        // Pair the linear solution with a boundary that is not its zero
        // curve: identity (i) must fail.
        let sol = HeatSolution::linear(1.0);
        let wrong = Boundary::cubic(-1.0);
        let grid = [0.2, 0.4, 0.6];
        let report = check_remark1(&sol, &wrong, &grid).unwrap();
        assert!(!report.entries[0].pass, "{report:?}");
    }

    #[test]
    fn master_identity_trivial_second_order() {
        // all-zero coefficients, φ(x) = x: ν(t,y) = y and ν⁽²⁾ ≡ 0.
        let spec = PhiSpec::second_order(0.0, 0.0, 0.0, 0.0, 0.0, [0.0, 1.0]);
        let phi = solve_phi(&spec, (-40.0, 40.0)).unwrap();
        let sol = HeatSolution::convolution(phi, QuadratureConfig::default()).unwrap();
        let samples = [(0.3, 0.5), (0.7, -1.0), (1.0, 2.0)];
        let report = check_master_identity(&sol, &spec, &samples).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn master_identity_cubic_spec() {
        let spec = PhiSpec::example32();
        let phi = solve_phi(&spec, (-34.0, 34.0)).unwrap();
        let sol = HeatSolution::convolution(phi, QuadratureConfig::default()).unwrap();
        let samples = [(0.3, 0.5), (0.2, -0.7), (0.5, 1.5)];
        let report = check_master_identity(&sol, &spec, &samples).unwrap();
        assert!(report.all_pass(), "{report:?}");
        for e in &report.entries {
            assert!(e.max_residual < 1e-7, "{e:?}");
        }
    }

    #[test]
    fn rayleigh_boundary_stays_on_zero_set() {
        let quad = QuadratureConfig::default();
        let sol = HeatSolution::pearcey(quad.clone()).unwrap();
        let bnd = boundary_rayleigh(&sol, 1, 0.5).unwrap();
        // first positive zero of ν(0,·), 25-digit reference
        assert_abs_diff_eq!(bnd.f(0.0).unwrap(), 2.4419679037495579, epsilon = 1e-9);
        assert_abs_diff_eq!(bnd.df(0.0).unwrap(), 0.7299232109987, epsilon = 1e-8);
        let scale = pearcey_nu(0.0, 0.0, &quad).unwrap();
        let mut t = 0.0;
        while t <= 0.5 {
            let v = pearcey_nu(t, bnd.f(t).unwrap(), &quad).unwrap();
            assert!(v.abs() <= 1e-6 * scale, "t={t}: ν = {v}");
            t += 0.05;
        }
    }

    #[test]
    fn rayleigh_zero_function_is_fixed_point_but_not_boundary() {
        // f ≡ 0 solves the ODE exactly yet ν(t, 0) > 0: vanishing on the
        // zero set and solving the ODE are separate checks.
        let quad = QuadratureConfig::default();
        let (f0, df0) = (0.0_f64, 0.0_f64);
        let ode_residual = 2.0 * df0.powi(3) - 0.5 * 0.3 * df0 - 0.25 * f0;
        assert_eq!(ode_residual, 0.0);
        let v = pearcey_nu(0.3, 0.0, &quad).unwrap();
        assert!(v > 1e-3, "ν(0.3, 0) = {v} should be clearly positive");
    }

    #[test]
    fn rayleigh_requires_pearcey_kind() {
        let sol = HeatSolution::linear(1.0);
        assert!(matches!(
            boundary_rayleigh(&sol, 1, 0.5),
            Err(BoundaryError::WrongKind { .. })
        ));
    }

    #[test]
    fn trace_cubic_convolution() {
        let phi = solve_phi(&PhiSpec::example32(), (-30.0, 30.0)).unwrap();
        let sol = HeatSolution::convolution(phi, QuadratureConfig::default()).unwrap();
        let grid: Vec<f64> = (0..=9).map(|i| 0.05 + 0.05 * i as f64).collect();
        let bnd = boundary_trace(&sol, &grid, 0.0).unwrap();
        for &t in &grid {
            let want = t * t * t / 8.0;
            assert!(
                (bnd.f(t).unwrap() - want).abs() < 1e-6,
                "t={t}: {} vs {want}",
                bnd.f(t).unwrap()
            );
        }
    }

    #[test]
    fn report_serializes_to_json() {
        let mut report = VerificationReport::default();
        report.push("example", 1e-9, 1e-6, 5);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"max_residual\""));
        assert!(json.contains("\"pass\":true"));
    }
}
