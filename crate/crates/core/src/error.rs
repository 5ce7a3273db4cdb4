//! Error type shared across the engine.

use alloc::string::String;
use core::fmt;

/// Failure modes of the engine. Every operation that can reject its input
/// does so loudly through one of these variants; nothing is silently
/// approximated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A weight sequence is not weakly decreasing within a block.
    InvalidWeight(String),
    /// A partition does not fit the prescribed box, or box parameters are bad.
    BoxViolation(String),
    /// An argument is outside the supported range of the operation.
    OutOfRange(String),
    /// Tensor decomposition was asked for a product outside the supported
    /// rules (rank-2 Clebsch-Gordan, Pieri by the (dual-)standard
    /// representation, rank-2 Cauchy).
    UnsupportedTensorRule(String),
    /// Polynomial division left a remainder where an exact quotient was
    /// required. Signals wrong inputs to a class relation, never a fallback.
    InexactDivision(String),
    /// A class computation produced a negative coefficient.
    NegativeCoefficient(String),
    /// A cross-check that must hold by construction failed; a convention bug
    /// upstream, not a recoverable condition.
    Inconsistency(String),
    /// Unknown variety, relation or node name.
    UnknownName(String),
    /// A pairing was requested between classes of non-complementary degree.
    DegreeMismatch(String),
    /// `j + k` odd in a Calabi-Yau-type test.
    ParityMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWeight(s) => write!(f, "invalid weight: {s}"),
            Error::BoxViolation(s) => write!(f, "box violation: {s}"),
            Error::OutOfRange(s) => write!(f, "out of range: {s}"),
            Error::UnsupportedTensorRule(s) => write!(f, "unsupported tensor rule: {s}"),
            Error::InexactDivision(s) => write!(f, "inexact division: {s}"),
            Error::NegativeCoefficient(s) => write!(f, "negative coefficient: {s}"),
            Error::Inconsistency(s) => write!(f, "inconsistency: {s}"),
            Error::UnknownName(s) => write!(f, "unknown name: {s}"),
            Error::DegreeMismatch(s) => write!(f, "degree mismatch: {s}"),
            Error::ParityMismatch(s) => write!(f, "parity mismatch: {s}"),
        }
    }
}
