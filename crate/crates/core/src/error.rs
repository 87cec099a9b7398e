use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: dimension mismatches, out-of-range indices,
    /// non-root reflection vectors.
    #[error("input error: {0}")]
    Input(String),

    #[error("invalid cusp triple ({0}, {1}, {2}): Delta = {3} must be positive")]
    InvalidTriple(u32, u32, u32, i128),

    #[error("generator {0} is not a symmetry of f")]
    NotSymmetry(String),

    #[error("generator {0} is not in SL(3,C): exponent sum {1} is not an integer")]
    NotSpecialLinear(String, Rational),

    /// A derived quantity disagrees with an identity that holds for every
    /// valid input; this indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("verification failed [{check}]: {detail}")]
    Verification { check: String, detail: String },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn verification(check: &str, detail: impl Into<String>) -> Self {
        Error::Verification {
            check: check.to_string(),
            detail: detail.into(),
        }
    }
}
