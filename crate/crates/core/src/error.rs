// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shapes of the supplied data do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// The input violates a precondition of the operation.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// The requested object exists mathematically but not in the chosen
    /// normal form.
    #[error("not representable: {0}")]
    NotRepresentable(String),
    /// Malformed interchange data, located by a JSON path.
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    /// A result failed its own post-condition check.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub(crate) fn ensure_dim(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Dimension(msg()))
    }
}
