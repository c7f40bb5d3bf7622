use thiserror::Error;

/// Errors produced by the estimation toolkit.
///
/// Variants are grouped by pipeline stage so callers (and the CLI exit-code
/// mapping) can distinguish bad input data from structural rejections and
/// from numerical breakdowns.
#[derive(Debug, Error)]
pub enum Error {
    /// Case or scenario text could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Parsed data violates a case invariant.
    #[error("invalid case: {0}")]
    Validation(String),

    /// A structural check (regularity, detectability, impulse observability)
    /// rejected the model.
    #[error("structural check failed: {0}")]
    Structural(String),

    /// The synthesis problem is infeasible or the solver did not converge.
    #[error("synthesis failed: {0}")]
    Infeasible(String),

    /// Iterative numerics diverged or a matrix was singular where it must not be.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
