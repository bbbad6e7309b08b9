use thiserror::Error;

/// Errors raised by ideal arithmetic, polymatroid constructions and the
/// homological machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation undefined on the zero ideal: {0}")]
    ZeroIdeal(&'static str),

    #[error("operation undefined on the unit ideal: {0}")]
    UnitIdeal(&'static str),

    #[error("ideal is not equigenerated")]
    NotEquigenerated,

    #[error("ideal is not polymatroidal")]
    NotPolymatroidal,

    #[error("no linear quotients order exists for this ideal")]
    NoLinearQuotients,

    #[error("graph is not complete multipartite with interval parts")]
    NotCompleteMultipartite,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource budget exhausted: {0}")]
    ResourceExhausted(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
