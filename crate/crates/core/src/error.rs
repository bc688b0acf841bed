use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is a perfect square; its square root has no periodic expansion")]
    PerfectSquare(BigUint),

    #[error("partial quotients must be positive integers, got {0}")]
    InvalidPart(String),

    #[error("word ({0}) is not palindromic")]
    NotPalindromic(String),

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("continuant identity violated for word ({word}): {detail}")]
    IdentityViolation { word: String, detail: String },

    #[error("word ({0}) admits no radicand: both parity quantities are odd")]
    NoSolution(String),
}
