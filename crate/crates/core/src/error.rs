use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("operator index {index} out of range for dimension {dim}")]
    OperatorRange { index: usize, dim: usize },
    #[error("truncation exceeded: need dimension {needed}, data available up to {available}")]
    Truncation { needed: usize, available: usize },
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("not a monomorphism: {0}")]
    NotMono(String),
    #[error("size bound exceeded: {0}")]
    TooLarge(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
