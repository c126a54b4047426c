//! Exhaustive cross-validation of the classifier against the oracle.
//!
//! [`cross_validate`] sweeps every `(m, n)` pair in the classified window of
//! the chosen rows, asks both [`crate::classification::classify`] (closed
//! form, index arithmetic) and [`crate::oracle::oracle_classify`] (literal
//! big-integer computation), and records every disagreement. A clean report
//! over a wide range is the strongest evidence this crate offers that the
//! case table is right.

use crate::classification::{classify, first_classified_row, Classification};
use crate::error::{Error, Result};
use crate::oracle::{oracle_classify, OracleOutcome, OracleVerdict};
use crate::sequences::Family;

/// A single disagreement between classifier and oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub family: Family,
    pub m: i64,
    pub n: i64,
    pub classified: Classification,
    pub oracle: OracleVerdict,
}

/// Outcome of a [`cross_validate`] sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidationReport {
    pub family: Family,
    pub n_lo: i64,
    pub n_hi: i64,
    /// Number of `(m, n)` pairs compared.
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl CrossValidationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `true` when the closed-form answer names the same outcome (and the same
/// member index, for solutions) as the brute-force one.
pub fn agree(classified: &Classification, oracle: &OracleVerdict) -> bool {
    match (classified, &oracle.outcome) {
        (Classification::Solution { ell, .. }, OracleOutcome::Solution(l)) => ell == l,
        (Classification::NotFibonacci | Classification::NotLucas, OracleOutcome::NotMember) => true,
        (Classification::NonInvertible, OracleOutcome::NonInvertible) => true,
        _ => false,
    }
}

/// Compares classifier and oracle over every `m` in the family window of
/// every row `n_lo <= n <= n_hi`.
///
/// The window is `3 <= m < 4n` for Fib and `2 <= m <= 4n` for Lucas, and
/// `n_lo` must not precede the family's first classified row (4 and 5
/// respectively).
pub fn cross_validate(family: Family, n_lo: i64, n_hi: i64) -> Result<CrossValidationReport> {
    let minimum = first_classified_row(family);
    if n_lo < minimum || n_hi < n_lo {
        return Err(Error::InvalidValidationRange { n_lo, n_hi, minimum });
    }
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for n in n_lo..=n_hi {
        let window = match family {
            Family::Fib => 3..4 * n,
            Family::Lucas => 2..4 * n + 1,
        };
        for m in window {
            let classified = classify(family, m, n)?;
            let oracle = oracle_classify(family, m, n)?;
            checked += 1;
            if !agree(&classified, &oracle) {
                mismatches.push(Mismatch { family, m, n, classified, oracle });
            }
        }
    }
    Ok(CrossValidationReport { family, n_lo, n_hi, checked, mismatches })
}
