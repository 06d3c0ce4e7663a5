//! Error taxonomy: invalid inputs vs. numerical-certificate failures.

use thiserror::Error;

/// Errors reported by the spectral kernels.
///
/// `Input` marks violated preconditions (bad brackets, unresolved
/// oscillation, malformed geometry).  `Numerical` marks a computation that
/// ran but failed its own convergence or stability certificate; these map
/// to a distinct process exit code in the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
