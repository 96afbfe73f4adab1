//! Error type shared by every fallible operation in the algebra.

use thiserror::Error;

/// Why an algebra operation refused to produce a result.
///
/// Numeric payloads are pre-rendered strings so the error type stays
/// independent of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Atom construction with a value outside the canonical range `[0, extent)`.
    #[error("value {value} is outside the canonical range [0, {extent})")]
    ValueOutOfRange { value: String, extent: String },

    /// A finite order extent below 1 (orders measure possibility-space size).
    #[error("order extent {extent} is invalid; finite extents must be at least 1")]
    InvalidOrder { extent: String },

    /// Additive operations demand operands of one common order.
    #[error("orders {left} and {right} differ; additive joins require equal orders")]
    OrderMismatch { left: String, right: String },

    /// Multiplicative operands overlap without cancelling: the result would
    /// be entwined, which this operation refuses to build implicitly.
    #[error("operands share atomic support; the multiplicative join would be entwined")]
    EntwinedOperands,

    /// Entwined structures carry no well-defined numeric value or order,
    /// so operations needing either reject them.
    #[error("entwined structures have no numeric evaluation")]
    EntwinedUnsupported,

    /// Multiplicative inversion of a zero-valued infon.
    #[error("a zero-valued infon has no multiplicative inverse")]
    ZeroValueInverse,

    /// Division by a zero-valued infon.
    #[error("cannot divide by a zero-valued infon")]
    ZeroDivisor,

    /// Division where the divisor is not an operand of the dividend's
    /// structure (and the pair is not outright identical).
    #[error("divisor does not appear in the dividend's structure")]
    UnsupportedDivision,

    /// The operation needs a finite order but got an unbounded one.
    #[error("operation requires a finite order")]
    UnboundedOrder,
}

/// Convenience alias used across the workspace.
pub type Result<T> = std::result::Result<T, AlgebraError>;
