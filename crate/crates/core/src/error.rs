use thiserror::Error;

/// Errors raised by the exact-arithmetic and series layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity expected to be rational still carries λ or ξ terms.
    #[error("cancellation failure, residual terms: {0}")]
    CancellationFailure(String),

    #[error("coefficient of exponent {k} requested from a series of order {order}")]
    OutOfOrder { k: usize, order: usize },

    #[error("invalid normalization: {0}")]
    InvalidNormalization(String),

    #[error("graph sums not implemented for (g, n) = ({g}, {n})")]
    UnimplementedRange { g: usize, n: usize },

    /// A term beyond the stored R/T truncation would survive the dimension count.
    #[error("truncation exceeded: {0}")]
    TruncationExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
