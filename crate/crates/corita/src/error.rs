use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("action mismatch: {0}")]
    ActionMismatch(String),
    #[error("hypotheses not satisfied: {0}")]
    Hypotheses(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("radical computation needs characteristic 0, got {0}")]
    Characteristic(u32),
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
