//! Error type shared across the crate.

use core::fmt;

use alloc::string::String;

use crate::surface::Slot;

/// Everything that can go wrong when assembling input data or evaluating a
/// decomposition. Arithmetic itself is exact and total; errors arise from
/// inconsistent or incomplete inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graded dimension vector has support outside the degrees a smooth
    /// projective surface allows for the given datum.
    BadDegreeSupport { what: &'static str, max_degree: usize },
    /// Pointwise subtraction of graded dimensions would go negative.
    NegativeQuotient { degree: usize, minuend: usize, subtrahend: usize },
    /// Two labels in one basis collide.
    DuplicateLabel(String),
    /// A basis or matrix does not have the size its context demands.
    DimensionMismatch { what: &'static str, expected: usize, got: usize },
    /// A map's matrix sends a basis vector outside its own degree.
    DegreeMismatch { row: usize, col: usize },
    /// Bases handed to an operation do not coincide with the ones it was
    /// built over.
    BasisMismatch(&'static str),
    /// A query needs a bundle slot the surface does not carry.
    MissingSlot(Slot),
    /// A query needs an explicit basis the slot does not carry.
    MissingBasis(Slot),
    /// A query needs a multiplication table the surface does not carry.
    MissingMultTable { left: Slot, right: Slot, target: Slot },
    /// Preset data conflicts with explicitly supplied dimensions.
    InvalidDims { what: &'static str, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadDegreeSupport { what, max_degree } => {
                write!(f, "{what} must be supported in degrees 0..={max_degree}")
            }
            Error::NegativeQuotient { degree, minuend, subtrahend } => write!(
                f,
                "quotient is negative in degree {degree}: {minuend} - {subtrahend}"
            ),
            Error::DuplicateLabel(label) => write!(f, "duplicate basis label {label:?}"),
            Error::DimensionMismatch { what, expected, got } => {
                write!(f, "{what}: expected size {expected}, got {got}")
            }
            Error::DegreeMismatch { row, col } => write!(
                f,
                "matrix entry ({row}, {col}) maps across distinct degrees"
            ),
            Error::BasisMismatch(what) => write!(f, "basis mismatch: {what}"),
            Error::MissingSlot(slot) => write!(f, "surface carries no bundle in slot {slot}"),
            Error::MissingBasis(slot) => {
                write!(f, "slot {slot} carries no explicit basis")
            }
            Error::MissingMultTable { left, right, target } => write!(
                f,
                "surface carries no multiplication table {left} x {right} -> {target}"
            ),
            Error::InvalidDims { what, detail } => write!(f, "invalid dims for {what}: {detail}"),
        }
    }
}

impl core::error::Error for Error {}
