use thiserror::Error;

/// Errors raised by group, word and search operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("image sequence is not a bijection on 0..{degree}")]
    NotABijection { degree: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("permutation is not an element of the group")]
    NotInGroup,

    #[error("subgroup generators are not contained in the parent group")]
    NotASubgroup,

    #[error("{what} cap exceeded: needed {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("group order does not fit in 128 bits")]
    OrderOverflow,

    #[error("{p} does not divide the group order")]
    PrimeDoesNotDivide { p: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("no applicable path: {0}")]
    NoApplicablePath(String),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("tuple has {found} entries but the word uses {needed} variables")]
    TupleTooShort { needed: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("conjugator identity violated at word {word}")]
    IdentityViolation { word: String },

    #[error("group is not simple: {0}")]
    NotSimple(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
