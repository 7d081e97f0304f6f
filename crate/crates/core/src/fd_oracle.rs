//! Independent Crank–Nicolson solver for the moving-boundary problem, used
//! to cross-validate the analytic and convolution solutions.
//!
//! The coordinate `y = x − f(t)` pins the boundary at `y = 0`, turning the
//! problem into `u_t = ½u_yy + f′(t)·u_y` on the fixed strip `[0, W]` with a
//! homogeneous Dirichlet wall at `y = 0`. One tridiagonal solve per step.

use crate::boundary::{Boundary, BoundaryError};
use crate::heatsol::{HeatError, HeatSolution};
use std::io::Write;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FdError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("tridiagonal system became singular at step {step}")]
    SingularSystem { step: usize },
    #[error(transparent)]
    Heat(#[from] HeatError),
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Discretization parameters for one evolution.
#[derive(Debug, Clone, Copy)]
pub struct FdConfig {
    pub t0: f64,
    pub t1: f64,
    /// Strip width in the boundary-attached coordinate.
    pub width: f64,
    /// Number of spatial intervals (nx + 1 points).
    pub nx: usize,
    /// Number of time steps.
    pub nt: usize,
}

impl FdConfig {
    fn validate(&self) -> Result<(), FdError> {
        if !(self.t1 > self.t0 && self.t0 > 0.0) {
            return Err(FdError::InvalidGrid(format!(
                "need t1 > t0 > 0, got t0 = {}, t1 = {}",
                self.t0, self.t1
            )));
        }
        if !(self.width > 0.0) {
            return Err(FdError::InvalidGrid("width must be positive".into()));
        }
        if self.nx < 64 || self.nt < 64 {
            return Err(FdError::InvalidGrid(format!(
                "need nx ≥ 64 and nt ≥ 64, got nx = {}, nt = {}",
                self.nx, self.nt
            )));
        }
        if self.nx * self.nt > (1 << 24) {
            return Err(FdError::InvalidGrid(format!(
                "nx·nt = {} exceeds the 2^24 cell budget",
                self.nx * self.nt
            )));
        }
        Ok(())
    }
}

/// Far-side closure at `y = W`.
pub enum FarBoundary<'a> {
    /// Dirichlet values from a reference solution: `u(t, W) = ν(t, W + f(t))`.
    Analytic(&'a HeatSolution),
    /// Homogeneous Dirichlet.
    DirichletZero,
    /// Zero flux (`∂u/∂y = 0` via a mirror node).
    ZeroFlux,
}

/// Final state of an evolution on the transformed strip.
#[derive(Debug, Clone)]
pub struct FdGrid {
    pub config: FdConfig,
    /// `values[j] = u(t1, j·Δy)`, j = 0..=nx.
    pub values: Vec<f64>,
}

impl FdGrid {
    pub fn dy(&self) -> f64 {
        self.config.width / self.config.nx as f64
    }

    /// Write the final slice as `t,y,value` rows.
    pub fn to_csv<W: Write>(&self, mut out: W) -> Result<(), FdError> {
        writeln!(out, "t,y,value")?;
        let dy = self.dy();
        for (j, v) in self.values.iter().enumerate() {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", self.config.t1, j as f64 * dy, v)?;
        }
        Ok(())
    }
}

/// Crank–Nicolson evolution of `u_t = ½u_yy + f′(t)u_y` from the initial
/// slice `initial(y)` at `t0` to `t1`. The wall `y = 0` is held at zero
/// (absorbing boundary); the far side follows `far`.
pub fn fd_evolve(
    bnd: &Boundary,
    initial: impl Fn(f64) -> f64,
    far: FarBoundary<'_>,
    config: FdConfig,
) -> Result<FdGrid, FdError> {
    config.validate()?;
    let nx = config.nx;
    let nt = config.nt;
    let dy = config.width / nx as f64;
    let dt = (config.t1 - config.t0) / nt as f64;

    let far_value = |t: f64| -> Result<f64, FdError> {
        match &far {
            FarBoundary::Analytic(sol) => Ok(sol.value(t, config.width + bnd.f(t)?)?),
            FarBoundary::DirichletZero => Ok(0.0),
            FarBoundary::ZeroFlux => Ok(f64::NAN), // unused; handled structurally
        }
    };
    let zero_flux = matches!(far, FarBoundary::ZeroFlux);
    // Unknowns: j = 1..=nx-1 always; j = nx too under zero flux.
    let n_unknown = if zero_flux { nx } else { nx - 1 };

    let mut u = vec![0.0; nx + 1];
    for (j, slot) in u.iter_mut().enumerate() {
        *slot = initial(j as f64 * dy);
    }
    u[0] = 0.0;
    if !zero_flux {
        u[nx] = far_value(config.t0)?;
    }

    // Work arrays for the Thomas solve.
    let mut lower = vec![0.0; n_unknown];
    let mut diag = vec![0.0; n_unknown];
    let mut upper = vec![0.0; n_unknown];
    let mut rhs = vec![0.0; n_unknown];

    let alpha = 0.5 * dt / (dy * dy); // (Δt/2)·(1/Δy²) on ½u_yy gives α/2 below
    for step in 0..nt {
        let t_now = config.t0 + step as f64 * dt;
        let t_next = config.t0 + (step + 1) as f64 * dt;
        let drift_now = bnd.df(t_now)?;
        let drift_next = bnd.df(t_next)?;
        // Stencil weights for A(t)u = ½u_yy + f'(t)u_y, scaled by Δt/2:
        //   sub  = α/2 − β(t)/2,  main = −α,  sup = α/2 + β(t)/2
        // with β(t) = (Δt/2)·f'(t)/(2Δy) · 2 = Δt·f'(t)/(2Δy) … kept explicit below.
        let beta_now = 0.25 * dt * drift_now / dy;
        let beta_next = 0.25 * dt * drift_next / dy;

        let u_far_now = if zero_flux { 0.0 } else { u[nx] };
        let u_far_next = if zero_flux { 0.0 } else { far_value(t_next)? };

        for j in 1..=n_unknown {
            let i = j - 1;
            // Explicit side: (I + (Δt/2)A(t_now)) u^n
            let (um, uc, up) = if zero_flux && j == nx {
                (u[j - 1], u[j], u[j - 1]) // mirror node
            } else {
                let up = if j == nx - 1 && !zero_flux {
                    u_far_now
                } else {
                    u[j + 1]
                };
                (u[j - 1], u[j], up)
            };
            rhs[i] = uc
                + 0.5 * alpha * (um - 2.0 * uc + up)
                + beta_now * (up - um);

            // Implicit side coefficients: (I − (Δt/2)A(t_next))
            if zero_flux && j == nx {
                // mirror: u_{nx+1} = u_{nx-1}: sub gets both neighbor weights
                lower[i] = -(0.5 * alpha - beta_next) - (0.5 * alpha + beta_next);
                diag[i] = 1.0 + alpha;
                upper[i] = 0.0;
            } else {
                lower[i] = -(0.5 * alpha - beta_next);
                diag[i] = 1.0 + alpha;
                upper[i] = -(0.5 * alpha + beta_next);
            }
        }
        // Dirichlet contributions: wall value is 0 (nothing to add); far value
        // moves to the RHS of the last interior row.
        if !zero_flux {
            rhs[n_unknown - 1] += (0.5 * alpha + beta_next) * u_far_next;
        }

        thomas_solve(&lower, &mut diag, &upper, &mut rhs, step)?;

        for j in 1..=n_unknown {
            u[j] = rhs[j - 1];
        }
        u[0] = 0.0;
        if !zero_flux {
            u[nx] = u_far_next;
        }
    }

    Ok(FdGrid { config, values: u })
}

/// In-place Thomas algorithm; `diag` and `rhs` are overwritten, the solution
/// lands in `rhs`.
fn thomas_solve(
    lower: &[f64],
    diag: &mut [f64],
    upper: &[f64],
    rhs: &mut [f64],
    step: usize,
) -> Result<(), FdError> {
    let n = diag.len();
    for i in 1..n {
        if diag[i - 1].abs() < 1e-300 {
            return Err(FdError::SingularSystem { step });
        }
        let w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    if diag[n - 1].abs() < 1e-300 {
        return Err(FdError::SingularSystem { step });
    }
    rhs[n - 1] /= diag[n - 1];
    for i in (0..n - 1).rev() {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
    Ok(())
}
