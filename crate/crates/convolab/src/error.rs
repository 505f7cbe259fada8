//! Error type shared across the laboratory.
//!
//! Every fallible operation returns [`enum@Error`] through the crate-wide
//! [`Result`] alias. Variants carry human-readable context strings; the
//! stable, machine-checkable part is the variant itself (tests match on it),
//! while the message is free-form diagnostic text.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by grid construction, model constructors, transforms, and
/// the experiment runner.
#[derive(Debug, Error)]
pub enum Error {
    /// A grid was requested with fewer nodes than the minimum needed for the
    /// quadrature and differentiation stencils to make sense.
    #[error("grid too coarse: need at least {min} nodes, got {got}")]
    GridTooCoarse {
        /// Minimum admissible node count.
        min: usize,
        /// Node count that was requested.
        got: usize,
    },

    /// Mismatched discretizations, e.g. a cyclic group order that does not
    /// divide the circle grid size, so group translations would leave the
    /// grid.
    #[error("incompatible grid: {0}")]
    IncompatibleGrid(String),

    /// A Haar/fiber weight that fails positivity on the grid.
    #[error("invalid Haar: {0}")]
    InvalidHaar(String),

    /// A cochain arity outside the range the nerve quadratures support.
    #[error("arity unsupported: {0}")]
    ArityUnsupported(String),

    /// A sequence handed to an extrapolation routine shows no usable decay.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// The frequency window requested from a transform is too close to the
    /// Nyquist limit of the source grid.
    #[error("aliasing risk: {0}")]
    AliasingRisk(String),

    /// Conjugating a vector field through the fiberwise transform did not
    /// produce a field with affine coefficients within tolerance.
    #[error("not linear after conjugation: {0}")]
    NotLinearAfterConjugation(String),

    /// An operation that requires a normalized cochain received one whose
    /// normalization residual exceeds tolerance.
    #[error("not normalized: {0}")]
    NotNormalized(String),

    /// A scale parameter was pushed below what the grid can resolve.
    #[error("resolution exceeded: {0}")]
    ResolutionExceeded(String),

    /// Malformed experiment configuration (syntax or values).
    #[error("config error: {0}")]
    Config(String),

    /// An experiment name that is not registered with the runner.
    #[error("unknown experiment: {0}")]
    UnknownExperiment(String),

    /// Failure writing a report or table to disk.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
