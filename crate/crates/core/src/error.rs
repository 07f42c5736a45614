use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial coefficient requires n >= 0, got n = {0}")]
    NegativeBinomial(i64),

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series must have zero constant term for {0}")]
    NonzeroConstantTerm(&'static str),

    #[error("constant term is not invertible")]
    NonInvertibleConstant,

    #[error("series needs order + 1 = {expected} coefficients, got {got}")]
    BadLength { expected: usize, got: usize },

    #[error("initial sequence of an Euler-Seidel matrix must be nonempty")]
    EmptySequence,

    #[error("truncation order {order} is below the minimum of {min}")]
    OrderTooSmall { order: usize, min: usize },

    #[error("max_n must be at least 1, got {0}")]
    MaxNTooSmall(usize),

    #[error("fixtures cover {have} terms but {needed} are needed")]
    FixturesTooShort { needed: usize, have: usize },

    #[error("unknown identity `{name}`; registered: {}", registered.join(", "))]
    UnknownIdentity {
        name: String,
        registered: Vec<&'static str>,
    },
}
