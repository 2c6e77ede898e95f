use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("cardinality mismatch: bottom has {bottom} vertices, top has {top}")]
    CardinalityMismatch { bottom: usize, top: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid sign labels: {0}")]
    InvalidLabel(String),

    #[error("invalid specialization point {point}: {reason}")]
    InvalidSpecialization { point: String, reason: String },

    #[error("{what} = {value} exceeds the configured bound {bound}; raise it with PROOK_MAX_K if you have the memory and time")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
