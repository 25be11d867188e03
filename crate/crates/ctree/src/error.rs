//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A code or plan parameter violates one of its documented invariants.
    /// The message names the violated invariant.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Caller-supplied data (payload symbols, channel bits) is out of range.
    #[error("invalid input: {0}")]
    Input(String),

    /// A serialized frame does not match the wire format.
    #[error("malformed frame: {0}")]
    Format(String),

    /// A solver was asked for a root outside its solvable domain
    /// (at or above the Shannon limit).
    #[error("outside solvable domain: {0}")]
    Domain(String),

    /// An iterative procedure exhausted its budget before stabilizing.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// Too little or degenerate data for an asymptote fit.
    #[error("fit unavailable: {0}")]
    FitUnavailable(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
