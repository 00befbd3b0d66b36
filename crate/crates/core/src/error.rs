use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("constant coefficient is zero; deflate zero roots first")]
    ZeroConstantTerm,
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("degenerate Möbius map (vanishing numerator and denominator)")]
    DegenerateMap,
    #[error(
        "node ceiling of {ceiling} exceeded on a degree-{degree} polynomial; \
         the input is probably not square-free"
    )]
    NodeCeilingExceeded { ceiling: u64, degree: usize },
    #[error("interval ({lo}, {hi}) matched {matches} square-free factors, expected exactly one")]
    MultiplicityMismatch {
        lo: String,
        hi: String,
        matches: usize,
    },
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
