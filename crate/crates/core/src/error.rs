use std::fmt;

use crate::scalar::Rational;

/// Errors produced by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Division of a rational by zero.
    DivisionByZero,
    /// Gaussian elimination found no nonzero pivot for this row.
    SingularMatrix { pivot_row: usize },
    /// An identity name outside the fixed catalog.
    UnknownIdentity(String),
    /// An identity that only holds for integer k was given a non-integer k.
    NonIntegerK { identity: &'static str, k: Rational },
    /// Any other violated precondition (wrong moment kind, bad distribution
    /// parameters, malformed rational syntax, ...).
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::SingularMatrix { pivot_row } => {
                write!(f, "singular matrix: no nonzero pivot for row {pivot_row}")
            }
            Error::UnknownIdentity(name) => write!(f, "unknown identity name: {name}"),
            Error::NonIntegerK { identity, k } => {
                write!(f, "identity {identity} requires integer k, got {k}")
            }
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
