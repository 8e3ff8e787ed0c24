//! Error type shared by every module in the crate.

use crate::Natural;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Modular operations require a modulus of at least 2.
    #[error("modulus must be at least 2, got {modulus}")]
    InvalidModulus { modulus: Natural },

    /// An operation required two coprime arguments.
    #[error("{left} and {right} are not coprime")]
    NotCoprime { left: Natural, right: Natural },

    /// A value was outside an operation's domain.
    #[error("{0}")]
    InvalidInput(String),

    /// The factorization budget ran out with a composite cofactor left over.
    /// The primes found so far are carried for inspection.
    #[error("factorization budget exhausted; composite cofactor {remaining} remains")]
    FactorBudgetExceeded {
        found: Vec<(Natural, u32)>,
        remaining: Natural,
    },

    /// A digit string of value zero has no corresponding modulus.
    #[error("digit string has value zero; no modulus corresponds to it")]
    ZeroValueString,

    /// A value does not fit in the requested number of digits.
    #[error("value {value} does not fit in {length} base-{base} digits")]
    LengthOverflow {
        value: Natural,
        length: usize,
        base: u64,
    },

    /// A digit string is a repetition of a strictly shorter block.
    #[error("digit string repeats a block of length {word_period}; not a minimal repetend")]
    ReducibleString { word_period: usize },

    /// The string value does not divide base^length - 1, so no modulus exists.
    #[error(
        "{value} does not divide {base}^{length} - 1; the string is not the repetend of any 1/m"
    )]
    NoModulus {
        value: Natural,
        base: u64,
        length: usize,
    },

    /// The operation's hypotheses exclude this input (e.g. odd order where an
    /// even one is required).
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A stated precondition (such as primality) does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two routes that must agree returned different answers.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Stable machine-readable name, used verbatim in CLI error records.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidModulus { .. } => "invalid-modulus",
            Error::NotCoprime { .. } => "not-coprime",
            Error::InvalidInput(_) => "invalid-input",
            Error::FactorBudgetExceeded { .. } => "factorization-budget-exceeded",
            Error::ZeroValueString => "zero-value",
            Error::LengthOverflow { .. } => "overflow-of-target-length",
            Error::ReducibleString { .. } => "reducible-string",
            Error::NoModulus { .. } => "no-modulus",
            Error::NotApplicable(_) => "not-applicable",
            Error::Precondition(_) => "precondition",
            Error::Inconsistency(_) => "internal-inconsistency",
        }
    }
}
