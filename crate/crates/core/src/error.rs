use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("grade mismatch: expected {expected}, found {found}")]
    GradeMismatch { expected: String, found: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size cap exceeded for {what}: estimated {estimate}, cap {cap}")]
    CapExceeded {
        what: &'static str,
        estimate: u128,
        cap: u128,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn grade(expected: impl std::fmt::Debug, found: impl std::fmt::Debug) -> Self {
        Error::GradeMismatch {
            expected: format!("{expected:?}"),
            found: format!("{found:?}"),
        }
    }
}
