//! Solutions of the heat equation `ν_t = ½ν_xx` that vanish on moving
//! boundaries `x = f(t)`.
//!
//! The library constructs such solutions three ways and cross-checks them
//! against each other:
//!
//! - closed forms (linear boundary, Airy/quadratic boundary, Pearcey integral),
//! - Gaussian convolution `ν(t,y) = ∫ h(t,x) φ(y−x) dx` of the heat kernel
//!   with an ODE-defined function `φ` ([`phi_ode`]), which vanishes on the
//!   cubic boundary `f(t) = −b₂/8·t³` when `φ‴ = b₂x²φ`,
//! - an independent Crank–Nicolson solver on the boundary-attached
//!   coordinate ([`fd_oracle`]).
//!
//! [`boundary`] holds the boundary families and every residual check tying
//! the pieces together (boundary vanishing, zero-set tracing, the
//! derivative identities along the boundary, and the master identities the
//! convolution inherits from the φ-ODE).

pub mod boundary;
pub mod defaults;
pub mod fd_oracle;
pub mod heatpoly;
pub mod heatsol;
pub mod ode;
pub mod phi_ode;
pub mod quad;
pub mod special;

pub use boundary::{Boundary, VerificationReport};
pub use heatsol::{HeatSolution, QuadMethod, QuadratureConfig};
pub use phi_ode::{PhiFamily, PhiSolution, PhiSpec};
