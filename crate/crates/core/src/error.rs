use thiserror::Error;

/// Errors raised by the permutation, algebra and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation `{token}`: {reason}")]
    InvalidPermutation { token: String, reason: String },

    #[error("operation `{0}` is undefined on the empty permutation")]
    EmptyPermutation(&'static str),

    #[error("inflation arity mismatch: {points} points but {parts} parts")]
    InflationArity { points: usize, parts: usize },

    #[error("inflation part {0} is empty")]
    EmptyInflationPart(usize),

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("rational function has a pole at 0; cannot expand as a power series")]
    PoleAtZero,

    #[error("power series has zero constant term; not invertible")]
    SeriesNotInvertible,

    #[error(
        "fixed-point iteration did not converge to order {order}: first disagreement at x^{at}"
    )]
    NonContraction { order: usize, at: usize },

    #[error("fixed-point solution has nonzero constant term")]
    NonzeroConstantTerm,

    #[error("singular system: no usable pivot in column {column}")]
    SingularSystem { column: usize },

    #[error("dimension mismatch: matrix is {rows}x{cols}, vector has length {len}")]
    Dimension {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("enumeration level {level} exceeds the member cap of {cap}")]
    ResourceLimit { level: usize, cap: usize },

    #[error("profile count {count} exceeds the cap of {cap}")]
    ProfileExplosion { count: usize, cap: usize },

    #[error("invalid class specification: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
