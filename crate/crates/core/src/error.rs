use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("not proper for generic parameter values: supply a proper reparametrization")]
    Improper,
    #[error("hypothesis check failed: {0}")]
    Hypothesis(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("complexity guard exceeded: {0}")]
    ComplexityGuard(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
