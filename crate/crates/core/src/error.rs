use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("operation needs a nonzero proper ideal")]
    ZeroOrUnitIdeal,

    #[error("invalid board {m}x{n}: need 1 <= m <= n")]
    InvalidBoard { m: usize, n: usize },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the void complex has no facets")]
    VoidComplex,

    #[error("{0} variables exceed the 64-vertex limit of bit-packed subsets")]
    TooManyVariables(usize),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invariant table incomplete: need powers up to {needed}, have {have}")]
    IncompleteTable { needed: usize, have: usize },
}
