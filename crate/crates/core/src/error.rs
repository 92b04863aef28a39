use core::fmt;

use crate::ring::ValidationReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A generator order outside `2..=2^31`.
    InvalidOrder { index: usize, order: u64 },
    /// A table, vector or matrix has the wrong length.
    Shape {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    /// A coefficient is not reduced modulo its generator order.
    Unreduced {
        what: &'static str,
        position: usize,
        value: u64,
        modulus: u64,
    },
    /// The structure constants break a ring law.
    LawViolation(ValidationReport),
    /// An enumeration would exceed its budget.
    BudgetExceeded { required: u128, budget: u64 },
    DimensionMismatch { left: usize, right: usize },
    /// Powers start at 1; `M^0` is not defined for non-unital rings.
    ZeroExponent,
    NotPrime(u64),
    NotPrimePowerOf { q: u64 },
    NonCommutative,
    /// The ring is too large for a precomputed Cayley table.
    TableTooLarge { card: u128, limit: u64 },
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder { index, order } => {
                write!(f, "generator {index} has order {order}, expected 2..=2^31")
            }
            Error::Shape {
                what,
                expected,
                got,
            } => write!(f, "{what}: expected length {expected}, got {got}"),
            Error::Unreduced {
                what,
                position,
                value,
                modulus,
            } => write!(
                f,
                "{what}: coefficient {value} at position {position} is not reduced mod {modulus}"
            ),
            Error::LawViolation(report) => {
                write!(f, "ring laws violated:")?;
                for v in &report.violations {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration needs {required} operations, budget is {budget}"
            ),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::ZeroExponent => write!(f, "exponent must be at least 1"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotPrimePowerOf { q } => write!(f, "{q} is not a prime power"),
            Error::NonCommutative => write!(f, "ring is not commutative"),
            Error::TableTooLarge { card, limit } => {
                write!(f, "ring of cardinality {card} exceeds the table limit {limit}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
