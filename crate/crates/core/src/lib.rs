//! Construction and verification of asymptotically anti-de Sitter Einstein
//! metrics with prescribed conformal boundary data.
//!
//! The crate is organized around the pipeline
//!
//! 1. [`peeling`]: order-by-order removal of the singular layers of the
//!    gauge-fixed Einstein operator `Q`, producing approximate metrics whose
//!    residual vanishes to a certified power of the boundary-defining
//!    function `x`,
//! 2. [`sobolev`]: the twisted-derivative operator calculus on `(0,1]` with
//!    measure `x dx` and the adapted norms, together with numerically
//!    certified inequalities,
//! 3. [`evolve`]: assembly and time integration of the singular hyperbolic
//!    operators, layered energies, and the Picard iteration for the
//!    quasilinear problem,
//! 4. [`gauge`]: DeTurck one-form diagnostics, constraint residuals and the
//!    gauge-fixed initial data construction.
//!
//! [`logpoly`] provides the exact algebra of finite sums
//! `Σ c_{s,σ} x^s (log x)^σ` underlying the peeling construction, and
//! [`geometry`] the grids, tensor fields and curvature assembly shared by
//! all modules.

pub mod config;
pub mod error;
pub mod geometry;
pub mod logpoly;
pub mod peeling;
pub mod pipeline;
pub mod report;

pub mod evolve;
pub mod gauge;
pub mod sobolev;

pub use error::{AadsError, Result};
