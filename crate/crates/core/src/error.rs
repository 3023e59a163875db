use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}` in tuple")]
    DuplicateVariable(String),
    #[error("variable `{0}` omitted from tuple")]
    OmittedVariable(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("unknown test `{0}`")]
    UnknownTest(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid value: {0}")]
    InvalidValue(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("fragment violation: {0}")]
    Fragment(String),
    #[error("{0} is out of the domain [0, {1}]")]
    Domain(f64, f64),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("resource guard exceeded: {0}")]
    Guard(String),
    #[error("mode mismatch: {0}")]
    Mode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
