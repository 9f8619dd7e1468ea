//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes named in the
/// module contracts so callers can match on them.
#[derive(Debug, Error)]
pub enum AadsError {
    /// A symbolic expansion left the configured `(s, σ)` window.
    #[error("window overflow: {0}")]
    WindowOverflow(String),

    /// Resonant inversion requested where the construction is undefined
    /// (`p_j(s) = 0` together with `2s + 2 - n = 0`).
    #[error("resonance clash at j={j}, s={s}: p_j(s)=0 and 2s+2-n=0")]
    ResonanceClash { j: usize, s: i64 },

    /// Evaluation outside the admissible domain, e.g. `x <= 0`.
    #[error("domain error: {0}")]
    DomainError(String),

    /// A symbolic element was not invertible in its ring.
    #[error("non-invertible symbolic element: {0}")]
    NonUnit(String),

    /// A metric lost invertibility or its Lorentzian signature.
    #[error("signature lost: {0}")]
    SignatureLost(String),

    /// Boundary data contains modes beyond the configured truncation.
    #[error("mode overflow: {0}")]
    ModeOverflow(String),

    /// An operation was requested outside the annulus where `dx` is a
    /// valid coordinate differential.
    #[error("region error: {0}")]
    RegionError(String),

    /// Spectral differentiation cannot reach the requested order on this grid.
    #[error("differentiation error: {0}")]
    DifferentiationError(String),

    /// The `V_j` projection became singular (corrupt state).
    #[error("V_j split failure: {0}")]
    SplitFailure(String),

    /// Smallness assumptions were violated mid-recursion.
    #[error("smallness violation: {0}")]
    SmallnessViolation(String),

    /// Quadrature received a non-finite integrand.
    #[error("quadrature error: {0}")]
    QuadratureError(String),

    /// Requested derivative count exceeds what the grid resolves.
    #[error("insufficient resolution: {0}")]
    InsufficientResolution(String),

    /// A norm or inequality was requested outside its parameter range.
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    /// Energy blow-up during time integration (CFL violation or
    /// coefficient blow-up).
    #[error("instability: {0}")]
    Instability(String),

    /// Picard iteration failed to contract.
    #[error("no contraction: {0}")]
    NoContraction(String),

    /// Initial data violates the constraint equations beyond tolerance.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    /// Residual underflowed to numerical zero; no order can be fitted.
    #[error("fit error: {0}")]
    FitError(String),

    /// Invalid run configuration.
    #[error("config error: {0}")]
    ConfigError(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, AadsError>;

impl From<serde_json::Error> for AadsError {
    fn from(e: serde_json::Error) -> Self {
        AadsError::Serde(e.to_string())
    }
}
