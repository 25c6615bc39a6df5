//! Error type shared by every module in the crate.
//!
//! Solver routines are total for valid inputs; anything else (degenerate
//! grids, non-physical states, diverged runs) is reported through [`Error`]
//! rather than panicking, so the CLI can map failures onto exit codes.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid boundary specification: {0}")]
    InvalidBoundary(String),

    #[error("invalid scheme: {0}")]
    InvalidScheme(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A state with non-positive density or pressure was encountered.
    #[error("non-physical state: {quantity} = {value:.6e} at {location}")]
    NonPhysical {
        quantity: &'static str,
        value: f64,
        location: String,
    },

    /// NaN or infinity showed up in the solution array.
    #[error("solution diverged: non-finite value at {location}, step {step}, t = {t:.6e}")]
    Diverged { step: usize, t: f64, location: String },

    /// Riemann initial data whose rarefactions would open a vacuum region.
    #[error("vacuum-generating Riemann data: {0}")]
    Vacuum(String),

    /// A problem was handed to a solver entry point of the wrong arity/model.
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
}
