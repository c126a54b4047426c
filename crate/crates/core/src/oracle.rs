//! Brute-force ground truth for the classifier.
//!
//! [`oracle_classify`] answers "is the inverse of the `m`-th value modulo the
//! `n`-th value itself a member of the sequence?" by doing the arithmetic
//! literally: compute both values exactly, invert by extended Euclid, and
//! test membership by walking the sequence upward below the modulus. It
//! deliberately knows nothing about the closed-form case analysis in
//! [`crate::classification`] — no case formulas, no parity shortcuts — so
//! the two can be compared as independent witnesses.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::modular::{mod_inverse, InverseResult};
use crate::sequences::{fib_index, lucas_index, Family, DEFAULT_INDEX_CEILING};

/// What the brute-force computation found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleOutcome {
    /// The inverse residue is the `l`-th member of the family (canonical
    /// index: `l >= 2` for Fib, `l >= 1` for Lucas, plus `l = 0` for the
    /// zero residue that only occurs modulo `F_2 = 1`).
    Solution(i64),
    /// The inverse exists but is not a member of the family.
    NotMember,
    /// `gcd` of the two values exceeds 1, so there is no inverse.
    NonInvertible,
}

/// An [`OracleOutcome`] together with the raw inverse residue, when one
/// exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub outcome: OracleOutcome,
    pub residue: Option<BigInt>,
}

fn member_index(family: Family, v: &BigInt) -> Result<Option<i64>> {
    match family {
        Family::Fib => fib_index(v),
        // The zero residue (modulus 1) is not a positive Lucas value.
        Family::Lucas if v.is_zero() => Ok(None),
        Family::Lucas => lucas_index(v),
    }
}

/// Brute-force verdict for the pair `(m, n)`, under an explicit index
/// ceiling.
///
/// Requires `m >= 0` and `n >= 2`. Everything is computed from first
/// principles; in particular `m` is *not* reduced modulo the period, so the
/// result is meaningful as an independent check on any index reduction done
/// elsewhere.
pub fn oracle_classify_with_ceiling(
    family: Family,
    m: i64,
    n: i64,
    ceiling: i64,
) -> Result<OracleVerdict> {
    if m < 0 || n < 2 {
        return Err(Error::InvalidClassifyInput { m, n });
    }
    let modulus = family.value_with_ceiling(n, ceiling)?;
    let value = family.value_with_ceiling(m, ceiling)?;
    if modulus == BigInt::from(1) {
        // Only F_2 = 1: every residue collapses to 0, which is F_0.
        let residue = BigInt::zero();
        let outcome = match member_index(family, &residue)? {
            Some(ell) => OracleOutcome::Solution(ell),
            None => OracleOutcome::NotMember,
        };
        return Ok(OracleVerdict { outcome, residue: Some(residue) });
    }
    if value.is_zero() {
        // gcd(0, modulus) = modulus > 1.
        return Ok(OracleVerdict { outcome: OracleOutcome::NonInvertible, residue: None });
    }
    match mod_inverse(&value, &modulus)? {
        InverseResult::NonInvertible => {
            Ok(OracleVerdict { outcome: OracleOutcome::NonInvertible, residue: None })
        }
        InverseResult::Residue(residue) => {
            let outcome = match member_index(family, &residue)? {
                Some(ell) => OracleOutcome::Solution(ell),
                None => OracleOutcome::NotMember,
            };
            Ok(OracleVerdict { outcome, residue: Some(residue) })
        }
    }
}

/// Brute-force verdict for the pair `(m, n)`, under the default index
/// ceiling.
pub fn oracle_classify(family: Family, m: i64, n: i64) -> Result<OracleVerdict> {
    oracle_classify_with_ceiling(family, m, n, DEFAULT_INDEX_CEILING)
}
