use core::fmt;

use crate::zerodiv::Assessor;

/// Errors raised by the algebra and census operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Requested doubling depth outside `1..=max`.
    DimensionOutOfRange {
        dim_exp: u32,
        max: u32,
    },
    /// Basis index not below the algebra dimension.
    IndexOutOfRange {
        index: usize,
        dim: usize,
    },
    /// Two operands built over algebras of different size.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// An operation that needs a specific algebra got another one.
    WrongAlgebra {
        expected_dim_exp: u32,
        found_dim_exp: u32,
    },
    InvalidAssessor {
        o: usize,
        s: usize,
    },
    NotCoAssessors(Assessor, Assessor),
    NotZeroCoupling,
    NotAnOTrip([usize; 3]),
    NotAStrut(Assessor, Assessor),
    InvalidSignature {
        signature: usize,
    },
    InvalidKite(u8),
    InvalidPosition(usize),
    InvalidLabeling(&'static str),
    /// Moreno's construction needs `(ay)b = -a(yb)`; carries the observed signs.
    NotAntiAssociative {
        left: i8,
        right: i8,
    },
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionOutOfRange { dim_exp, max } => {
                write!(f, "dimension exponent {dim_exp} outside 1..={max}")
            }
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::WrongAlgebra {
                expected_dim_exp,
                found_dim_exp,
            } => write!(
                f,
                "operation needs the 2^{expected_dim_exp}-ions, got 2^{found_dim_exp}-ions"
            ),
            Error::InvalidAssessor { o, s } => write!(f, "({o}, {s}) is not an assessor"),
            Error::NotCoAssessors(a, b) => write!(f, "{a} and {b} are not co-assessors"),
            Error::NotZeroCoupling => f.write_str("diagonals do not multiply to zero"),
            Error::NotAnOTrip(t) => write!(f, "({}, {}, {}) is not an O-trip", t[0], t[1], t[2]),
            Error::NotAStrut(a, b) => write!(f, "{a} and {b} are not strut-opposite"),
            Error::InvalidSignature { signature } => {
                write!(f, "invalid strut signature {signature}")
            }
            Error::InvalidKite(k) => write!(f, "no box-kite with signature {k}"),
            Error::InvalidPosition(p) => write!(f, "cycle position {p} outside 1..=6"),
            Error::InvalidLabeling(why) => write!(f, "invalid Fano labeling: {why}"),
            Error::NotAntiAssociative { left, right } => write!(
                f,
                "units do not anti-associate: (ay)b has sign {left}, a(yb) has sign {right}"
            ),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
