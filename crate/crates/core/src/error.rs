use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence index exceeded the active magnitude ceiling.
    #[error("index {index} exceeds the ceiling {ceiling}")]
    IndexOutOfRange { index: i64, ceiling: i64 },

    /// Membership queries on Fibonacci values require a non-negative value.
    #[error("membership query requires a non-negative value")]
    NegativeValue,

    /// Membership queries on Lucas values require a positive value.
    #[error("membership query requires a positive value")]
    NonPositiveValue,

    /// `ext_gcd(0, 0)` has no positive gcd.
    #[error("gcd of (0, 0) is undefined")]
    BezoutOfZeros,

    /// Modular inversion needs a modulus of at least 2.
    #[error("modulus must be at least 2")]
    InvalidModulus,

    /// Modular inversion needs a positive operand.
    #[error("operand must be positive")]
    InvalidInverseOperand,

    /// Period arithmetic needs a positive base index.
    #[error("period base index must be positive, got {n}")]
    InvalidPeriodBase { n: i64 },

    /// The difference identities require the two index pairs to share a sum.
    #[error("index sums differ: {lhs} != {rhs}")]
    MismatchedIndexSums { lhs: i64, rhs: i64 },

    /// A coefficient/residual query fell outside its valid (l, m, n) domain.
    #[error("no coefficient is defined for (l, m, n) = ({ell}, {m}, {n})")]
    InvalidTriple { ell: i64, m: i64, n: i64 },

    /// Classification and enumeration inputs must sit in the documented ranges.
    #[error("classification is undefined for (m, n) = ({m}, {n})")]
    InvalidClassifyInput { m: i64, n: i64 },

    /// Enumeration needs an upper bound at or above the family's first
    /// classified row.
    #[error("enumeration bound {n_max} is below the minimum {minimum}")]
    InvalidEnumerationBound { n_max: i64, minimum: i64 },

    /// Cross-validation ranges must be non-empty and start inside the
    /// classified rows.
    #[error("validation range [{n_lo}, {n_hi}] is empty or starts below {minimum}")]
    InvalidValidationRange { n_lo: i64, n_hi: i64, minimum: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
