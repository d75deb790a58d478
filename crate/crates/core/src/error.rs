//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    Geometry(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("special function domain error: {0}")]
    SpecFun(String),

    #[error("quadrature failure: {0}")]
    Quadrature(String),

    #[error("linear solver failure: {0}")]
    Solver(String),

    #[error("convolution quadrature failure: {0}")]
    Cq(String),

    #[error("field evaluation failure: {0}")]
    Field(String),

    #[error("acceptance gate failed: {0}")]
    Gate(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("file format error: {0}")]
    Format(String),
}

impl Error {
    /// Machine-readable error category used for CLI exit codes.
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Config(_) | Error::Format(_) | Error::Geometry(_) => ErrorCategory::Config,
            Error::Gate(_) => ErrorCategory::Acceptance,
            Error::Io(_) => ErrorCategory::Config,
            _ => ErrorCategory::Numeric,
        }
    }
}

/// CLI exit-code categories: `Config` → 2, `Numeric` → 3, `Acceptance` → 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Config,
    Numeric,
    Acceptance,
}

impl ErrorCategory {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCategory::Config => 2,
            ErrorCategory::Numeric => 3,
            ErrorCategory::Acceptance => 4,
        }
    }
}
