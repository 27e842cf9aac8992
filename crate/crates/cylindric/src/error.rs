use thiserror::Error;

/// Errors reported by the library.
///
/// Mathematical findings (an identity that fails to hold) are never errors;
/// they are returned as data in a report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {partition} is not in Par({h},{w})")]
    NotInFamily { partition: String, h: usize, w: String },
    #[error("polynomials live in different rings: {0} vs {1} variables")]
    VarMismatch(usize, usize),
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("matrix is not skew-symmetric at ({0},{1})")]
    NotSkew(usize, usize),
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("tableau is not cylindric for (h,w)=({h},{w})")]
    NotCylindric { h: usize, w: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("input outside the domain of the map: {0}")]
    OutOfDomain(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
