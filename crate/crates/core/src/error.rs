use core::fmt;

use crate::arith::Variable;

/// Errors raised by the combinatorial and arithmetic operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A node `(row, col)` was requested that is not in the diagram.
    NodeOutsideDiagram { row: usize, col: usize },
    /// A beta set or symbol was requested with `L` below the partition length.
    LengthTooSmall { requested: usize, required: usize },
    /// A sequence that is not weakly decreasing was given as a partition.
    NotAPartition,
    /// A permutation that is not a bijection of `{1..m}`.
    InvalidPermutation,
    /// Expansion hit a denominator that does not divide the numerator.
    NotAPolynomial,
    /// Expansion hit a constant with a nontrivial denominator.
    NonIntegerConstant,
    /// A denominator factor evaluates to zero.
    Pole,
    /// The constant's denominator is divisible by the field characteristic.
    ConstantDenominatorVanishes { p: u64 },
    /// Substituting `x` would produce a form in three variables.
    ThreeVariableForm,
    /// Negating `x` in a form `c + v - x` gives a sum of two variables.
    NotNegatable,
    /// The modulus of a prime field is not prime.
    NotPrime { p: u64 },
    /// A specialization does not assign a variable that occurs.
    Unassigned(Variable),
    /// Field elements from different fields were combined.
    FieldMismatch,
    /// Attempt to invert zero.
    DivisionByZero,
    /// An operation's precondition failed.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NodeOutsideDiagram { row, col } => {
                write!(f, "node ({row},{col}) is outside the diagram")
            }
            Error::LengthTooSmall {
                requested,
                required,
            } => write!(f, "L = {requested} is smaller than the length {required}"),
            Error::NotAPartition => f.write_str("parts are not weakly decreasing"),
            Error::InvalidPermutation => f.write_str("not a permutation of 1..m"),
            Error::NotAPolynomial => f.write_str("not a polynomial: division leaves a remainder"),
            Error::NonIntegerConstant => f.write_str("constant is not an integer"),
            Error::Pole => f.write_str("a denominator factor vanishes"),
            Error::ConstantDenominatorVanishes { p } => {
                write!(f, "constant denominator vanishes modulo {p}")
            }
            Error::ThreeVariableForm => {
                f.write_str("substitution would create a form in three variables")
            }
            Error::NotNegatable => f.write_str("form is not a linear form after x -> -x"),
            Error::NotPrime { p } => write!(f, "{p} is not prime"),
            Error::Unassigned(v) => write!(f, "variable {v} is not assigned"),
            Error::FieldMismatch => f.write_str("field elements from different fields"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
