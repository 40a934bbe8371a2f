use thiserror::Error;

use crate::qpoly::IntPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse group type {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{divisor} does not divide {dividend} over the integers")]
    Divisibility { dividend: IntPoly, divisor: IntPoly },

    #[error("scalars live in different fields (bond {left} vs bond {right})")]
    FieldMismatch { left: u32, right: u32 },

    /// An internal consistency check on a constructed object failed.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("{what} needs {needed} group elements, over the bound of {bound}")]
    BoundExceeded { what: String, needed: u128, bound: u128 },

    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
