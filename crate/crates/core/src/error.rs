use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse scalar {literal:?}: {reason}")]
    ParseScalar { literal: String, reason: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch between operands")]
    FieldMismatch,

    #[error("algebra axiom violated: {0}")]
    AlgebraAxiom(String),

    #[error("bimodule axiom violated: {0}")]
    BimoduleAxiom(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("quiver error: {0}")]
    Quiver(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("invalid split algebra: {0}")]
    InvalidSplit(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
