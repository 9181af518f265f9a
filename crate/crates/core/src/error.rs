//! Error type shared by every module of the crate.

use std::fmt;

use num::BigRational;

/// Everything that can go wrong across the geometry, interval, and
/// covering operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument violated an operation's documented domain
    /// (non-finite coordinate, zero direction, negative scale, ...).
    InvalidArgument(String),
    /// The body is outside the class an operation supports.
    UnsupportedShape(String),
    /// The operation is only available in a specific dimension.
    UnsupportedDimension { expected: usize, got: usize },
    /// A constructor was invoked on a family its theorem does not apply to
    /// (asymmetric body passed to the symmetric path, non-simplex to the
    /// facet-parallel path, ...).
    WrongTheorem(String),
    /// A contiguous union was required but the closed intervals leave a
    /// gap; the witness is the leftmost maximal gap.
    DisconnectedUnion { gap: (BigRational, BigRational) },
    /// Open-interval depth exceeds the allowed bound; the witness is a
    /// point lying in more than `limit` open interiors.
    DepthExceeded {
        depth: usize,
        limit: usize,
        witness: BigRational,
    },
    /// Grid generator invoked with rows packed too closely.
    RowGapTooSmall { required: f64, got: f64 },
    /// An internal certainty failed. This is a bug in the library (or a
    /// falsified lemma), never bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::UnsupportedShape(msg) => write!(f, "unsupported shape: {msg}"),
            Error::UnsupportedDimension { expected, got } => {
                write!(f, "unsupported dimension: expected {expected}, got {got}")
            }
            Error::WrongTheorem(msg) => write!(f, "theorem does not apply: {msg}"),
            Error::DisconnectedUnion { gap } => write!(
                f,
                "union of intervals is not contiguous: gap ({}, {})",
                gap.0, gap.1
            ),
            Error::DepthExceeded {
                depth,
                limit,
                witness,
            } => write!(
                f,
                "open-interval depth {depth} exceeds limit {limit} (witness point {witness})"
            ),
            Error::RowGapTooSmall { required, got } => {
                write!(f, "row gap {got} below required minimum {required}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
