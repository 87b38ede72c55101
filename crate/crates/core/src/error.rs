//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by configuration, generation and decoding.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration field is out of range or inconsistent with others.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Geometry violates an assumption the decoders rely on.
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    /// Rejection sampling failed to produce an admissible draw.
    #[error("rejection sampling exceeded {attempts} attempts ({context})")]
    RejectionCapExceeded { attempts: u64, context: String },

    /// Mismatched dimensions between related objects.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An argument outside the supported domain of an operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Binary or text serialization failure.
    #[error("serialization: {0}")]
    Serialization(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
