use core::fmt;

use crate::ring::RingElem;

/// Errors raised by ring, polynomial, and code operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Inverse requested for a non-unit ring element.
    NotAUnit(RingElem),
    /// Two polynomials with different derivation kinds were combined.
    MixedDerivation,
    /// Right division requires the divisor's leading coefficient to be a unit.
    NonUnitLeadingCoefficient(RingElem),
    /// Right division by the zero polynomial.
    DivisionByZeroPolynomial,
    /// Polynomial degree is too large for the requested vector length.
    DegreeTooLarge { degree: usize, length: usize },
    /// The polynomial does not right-divide x^n - 1.
    NotARightDivisor,
    /// The code carries no free-rank witness, so it has no generator matrix here.
    NotFreeCode,
    /// Parity-check construction is only available for even length.
    OddLength(usize),
    /// Enumerating the module span would exceed the configured bound.
    SpanTooLarge { needed: u128, bound: u64 },
    /// Enumerating the Z4 code would exceed the configured bound.
    TooManyCodewords { needed: u128, bound: u64 },
    /// Minimum distance is undefined for the zero code.
    ZeroCode,
    /// Plotkin sum operands have different lengths.
    LengthMismatch { left: usize, right: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit(e) => write!(f, "{e} is not a unit"),
            Error::MixedDerivation => {
                write!(f, "polynomials use different derivation kinds")
            }
            Error::NonUnitLeadingCoefficient(e) => {
                write!(f, "leading coefficient {e} is not a unit")
            }
            Error::DivisionByZeroPolynomial => write!(f, "division by the zero polynomial"),
            Error::DegreeTooLarge { degree, length } => {
                write!(f, "degree {degree} does not fit in a vector of length {length}")
            }
            Error::NotARightDivisor => write!(f, "polynomial does not right-divide x^n - 1"),
            Error::NotFreeCode => write!(f, "code has no free-rank witness"),
            Error::OddLength(n) => {
                write!(f, "parity-check matrix needs even length, got {n}")
            }
            Error::SpanTooLarge { needed, bound } => {
                write!(f, "span enumeration needs {needed} tuples, bound is {bound}")
            }
            Error::TooManyCodewords { needed, bound } => {
                write!(f, "code has {needed} codewords, enumeration bound is {bound}")
            }
            Error::ZeroCode => write!(f, "the zero code has no minimum distance"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for Error {}
