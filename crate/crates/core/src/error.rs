use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Variants carry the offending argument formatted as text so the error stays
/// `Clone + PartialEq` and crosses the C boundary as a plain message.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at {0}")]
    Pole(String),
    #[error("zero at {0} (logarithm undefined)")]
    Zero(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular point: {0}")]
    Singularity(String),
    #[error("series does not converge: {0}")]
    Convergence(String),
    #[error("contour passes too close to a zero or pole: {0}")]
    ContourTooClose(String),
    #[error("winding number is not an integer: {0}")]
    NonIntegerWinding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
