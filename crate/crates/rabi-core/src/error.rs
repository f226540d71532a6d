//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum RabiError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid atom state: {0}")]
    InvalidState(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// The quadratic disentangling ODEs diverged. The direct generator
    /// integration is mathematically equivalent for observables and does not
    /// suffer from this failure mode.
    #[error(
        "riccati integration diverged at t = {t:.6e} (|X+| exceeded {guard:.0e}); \
         use the direct propagation path"
    )]
    RiccatiBlowUp { t: f64, guard: f64 },

    #[error("fock-space error: {0}")]
    Fock(String),

    #[error("series error: {0}")]
    Series(String),

    #[error("series grids do not match")]
    GridMismatch,

    #[error("unknown engine '{0}'")]
    UnknownEngine(String),

    #[error("engine '{engine}' does not support this initial state: {reason}")]
    UnsupportedInitial {
        engine: &'static str,
        reason: String,
    },
}
