use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::is_usage`] separates malformed text input from well-formed input
/// that falls outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} must be a positive integer")]
    NotPositive(&'static str),

    #[error("{numer}/{denom} is not in lowest terms")]
    NotReduced { numer: BigUint, denom: BigUint },

    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("{what} = {value} is below the minimum of {min}")]
    BelowMinimum {
        what: &'static str,
        value: u64,
        min: u64,
    },

    #[error("{0} is too large to represent")]
    TooLarge(&'static str),

    #[error("invalid slope `{token}`: {reason}")]
    InvalidSlope { token: String, reason: &'static str },

    #[error("invalid word `{token}`: {reason}")]
    InvalidWord { token: String, reason: &'static str },

    #[error("invalid figure style: {0}")]
    InvalidStyle(&'static str),

    #[error("unknown format `{0}` (expected csv or pgm)")]
    UnknownFormat(String),
}

impl Error {
    /// True for syntax errors in user-supplied text.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidSlope { .. } | Error::InvalidWord { .. } | Error::UnknownFormat(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
