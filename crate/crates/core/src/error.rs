use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("exponent overflow in variable x{}", .var + 1)]
    Overflow { var: usize },

    #[error("monomial does not divide: {0}")]
    NotDivisible(String),

    #[error("ideal is not square-free")]
    NotSquareFree,

    #[error("operation undefined on the {0} ideal")]
    Degenerate(&'static str),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("resource budget exceeded: {what} ({needed} > {limit})")]
    Resource {
        what: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }

    pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left, right })
        }
    }
}
