//! Closed-form classification of inverse residues.
//!
//! For `n >= 4`, `3 <= m < 4n` the inverse `[F_m^{-1} mod F_n]` is itself a
//! Fibonacci number exactly in seven index patterns (labels `c1`..`c7`), and
//! for `n >= 5`, `2 <= m <= 4n` the Lucas analogue holds in six (`d1`..`d6`):
//!
//! ```text
//! c1: m = n-2,                 l = n - (3 + (-1)^n)/2
//! c2: m in {n-1, n+1, n+2},    l = n - (3 - (-1)^n)/2
//! c3: m = 2n-2,      n odd,    l = 2
//! c4: m in {2n-1, 2n+1, 2n+2}, n even, l = 2
//! c5: m = 3n-2,                l = n - 2
//! c6: m in {3n-1, 3n+1, 3n+2}, l = n - 1
//! c7: m = 4n-1,                l = 2
//!
//! d1: m = (n-+1)/2, n = 1 (mod 4), l = (n+-1)/2   (both sign choices)
//! d2: m = (3n+1)/2, n odd,         l = (n+1)/2
//! d3: m = 2n - (-1)^n,             l = 1
//! d4: m = (5n+1)/2, n = 1 (mod 4), l = (n-1)/2
//! d5: m = (5n-1)/2, n = 1 (mod 4), l = (n+1)/2
//! d6: m = (7n+1)/2, n odd,         l = (n+1)/2
//! ```
//!
//! [`classify_fib`] and [`classify_lucas`] decide membership purely from
//! this index arithmetic — no big integers are touched inside the covered
//! range. Larger `m` are first folded back by the period `4n`; parameters
//! the case table does not cover (tiny `n`, `m` whose reduced value is 2 or
//! below for Fib, 1 for Lucas) are answered by the brute-force oracle and
//! tagged [`CaseLabel::OutsideTheorem`].
//!
//! Invertibility on the non-solution path is also index-only, through the
//! classical gcd laws `gcd(F_a, F_b) = F_{gcd(a, b)}` and `gcd(L_a, L_b) =
//! L_d` when `a/d` and `b/d` are both odd (`d = gcd(a, b)`), else 1 or 2,
//! with 2 exactly when `3 | d`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::modular::reduce_index_mod_period;
use crate::oracle::{oracle_classify_with_ceiling, OracleOutcome};
use crate::sequences::{Family, DEFAULT_INDEX_CEILING};

/// Label of the matched solution pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    /// Answered by the oracle because the case table does not cover the
    /// (possibly reduced) parameters.
    OutsideTheorem,
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CaseLabel::C1 => "c1",
            CaseLabel::C2 => "c2",
            CaseLabel::C3 => "c3",
            CaseLabel::C4 => "c4",
            CaseLabel::C5 => "c5",
            CaseLabel::C6 => "c6",
            CaseLabel::C7 => "c7",
            CaseLabel::D1 => "d1",
            CaseLabel::D2 => "d2",
            CaseLabel::D3 => "d3",
            CaseLabel::D4 => "d4",
            CaseLabel::D5 => "d5",
            CaseLabel::D6 => "d6",
            CaseLabel::OutsideTheorem => "outside_theorem",
        })
    }
}

/// How a pair `(m, n)` classifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// The inverse is the `ell`-th member of the family.
    Solution { ell: i64, case: CaseLabel },
    /// The inverse exists but is not a Fibonacci number.
    NotFibonacci,
    /// The inverse exists but is not a Lucas number.
    NotLucas,
    /// The two values share a factor, so there is no inverse.
    NonInvertible,
}

/// One enumerated solution row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solution {
    pub family: Family,
    pub n: i64,
    pub m: i64,
    pub ell: i64,
    pub case: CaseLabel,
}

/// `(-1)^k` for any machine integer `k`.
fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// All matching `(case, l)` pairs for `3 <= m < 4n`, `n >= 4`, in label
/// order.
fn fib_case_matches(m: i64, n: i64) -> Vec<(CaseLabel, i64)> {
    let mut out = Vec::new();
    if m == n - 2 {
        out.push((CaseLabel::C1, n - (3 + sign(n)) / 2));
    }
    if m == n - 1 || m == n + 1 || m == n + 2 {
        out.push((CaseLabel::C2, n - (3 - sign(n)) / 2));
    }
    if n % 2 == 1 && m == 2 * n - 2 {
        out.push((CaseLabel::C3, 2));
    }
    if n % 2 == 0 && (m == 2 * n - 1 || m == 2 * n + 1 || m == 2 * n + 2) {
        out.push((CaseLabel::C4, 2));
    }
    if m == 3 * n - 2 {
        out.push((CaseLabel::C5, n - 2));
    }
    if m == 3 * n - 1 || m == 3 * n + 1 || m == 3 * n + 2 {
        out.push((CaseLabel::C6, n - 1));
    }
    if m == 4 * n - 1 {
        out.push((CaseLabel::C7, 2));
    }
    out
}

/// All matching `(case, l)` pairs for `2 <= m <= 4n`, `n >= 5`, in label
/// order.
fn lucas_case_matches(m: i64, n: i64) -> Vec<(CaseLabel, i64)> {
    let mut out = Vec::new();
    let odd = n % 2 == 1;
    if n % 4 == 1 {
        if m == (n - 1) / 2 {
            out.push((CaseLabel::D1, (n + 1) / 2));
        }
        if m == (n + 1) / 2 {
            out.push((CaseLabel::D1, (n - 1) / 2));
        }
    }
    if odd && m == (3 * n + 1) / 2 {
        out.push((CaseLabel::D2, (n + 1) / 2));
    }
    if m == 2 * n - sign(n) {
        out.push((CaseLabel::D3, 1));
    }
    if n % 4 == 1 && m == (5 * n + 1) / 2 {
        out.push((CaseLabel::D4, (n - 1) / 2));
    }
    if n % 4 == 1 && m == (5 * n - 1) / 2 {
        out.push((CaseLabel::D5, (n + 1) / 2));
    }
    if odd && m == (7 * n + 1) / 2 {
        out.push((CaseLabel::D6, (n + 1) / 2));
    }
    out
}

/// Every `(case, l, m)` instance a Fib row `n >= 4` contributes, filtered to
/// the window `3 <= m < 4n`.
fn fib_case_instances(n: i64) -> Vec<(CaseLabel, i64, i64)> {
    let e = sign(n);
    let mut v = vec![(CaseLabel::C1, n - (3 + e) / 2, n - 2)];
    for m in [n - 1, n + 1, n + 2] {
        v.push((CaseLabel::C2, n - (3 - e) / 2, m));
    }
    if n % 2 == 1 {
        v.push((CaseLabel::C3, 2, 2 * n - 2));
    } else {
        for m in [2 * n - 1, 2 * n + 1, 2 * n + 2] {
            v.push((CaseLabel::C4, 2, m));
        }
    }
    v.push((CaseLabel::C5, n - 2, 3 * n - 2));
    for m in [3 * n - 1, 3 * n + 1, 3 * n + 2] {
        v.push((CaseLabel::C6, n - 1, m));
    }
    v.push((CaseLabel::C7, 2, 4 * n - 1));
    v.retain(|&(_, _, m)| (3..4 * n).contains(&m));
    v
}

/// Every `(case, l, m)` instance a Lucas row `n >= 5` contributes, filtered
/// to the window `2 <= m <= 4n`.
fn lucas_case_instances(n: i64) -> Vec<(CaseLabel, i64, i64)> {
    let mut v = Vec::new();
    if n % 4 == 1 {
        v.push((CaseLabel::D1, (n + 1) / 2, (n - 1) / 2));
        v.push((CaseLabel::D1, (n - 1) / 2, (n + 1) / 2));
    }
    if n % 2 == 1 {
        v.push((CaseLabel::D2, (n + 1) / 2, (3 * n + 1) / 2));
    }
    v.push((CaseLabel::D3, 1, 2 * n - sign(n)));
    if n % 4 == 1 {
        v.push((CaseLabel::D4, (n - 1) / 2, (5 * n + 1) / 2));
        v.push((CaseLabel::D5, (n + 1) / 2, (5 * n - 1) / 2));
    }
    if n % 2 == 1 {
        v.push((CaseLabel::D6, (n + 1) / 2, (7 * n + 1) / 2));
    }
    v.retain(|&(_, _, m)| (2..=4 * n).contains(&m));
    v
}

/// `gcd(F_m, F_n) > 1`, decided from the indices alone.
fn fib_noninvertible(m: i64, n: i64) -> bool {
    // gcd(F_m, F_n) = F_gcd(m, n), and F_d >= 2 exactly when d = 0 or d >= 3.
    let d = m.gcd(&n);
    d == 0 || d >= 3
}

/// `gcd(L_m, L_n) > 1`, decided from the indices alone.
fn lucas_noninvertible(m: i64, n: i64) -> bool {
    let d = m.gcd(&n);
    if (m / d) % 2 != 0 && (n / d) % 2 != 0 {
        // gcd = L_d, which exceeds 1 for every d except 1 (L_1 = 1).
        d != 1
    } else {
        // gcd is 2 when both values are even (3 | both indices), else 1.
        d % 3 == 0
    }
}

fn check_ceiling(value: i64, ceiling: i64) -> Result<()> {
    if value > ceiling {
        return Err(Error::IndexOutOfRange { index: value, ceiling });
    }
    Ok(())
}

/// Oracle fallback for parameters outside the case table, with the parked
/// period representatives folded down to their small equivalents first.
fn fallback(family: Family, m: i64, n: i64, ceiling: i64) -> Result<Classification> {
    let m = match family {
        Family::Fib if m >= 4 * n => m - 4 * n, // parked classes 0, 1, 2
        Family::Lucas if m == 4 * n + 1 => 1,   // parked class 1
        _ => m,
    };
    let verdict = oracle_classify_with_ceiling(family, m, n, ceiling)?;
    Ok(match verdict.outcome {
        OracleOutcome::Solution(ell) => {
            Classification::Solution { ell, case: CaseLabel::OutsideTheorem }
        }
        OracleOutcome::NotMember => match family {
            Family::Fib => Classification::NotFibonacci,
            Family::Lucas => Classification::NotLucas,
        },
        OracleOutcome::NonInvertible => Classification::NonInvertible,
    })
}

fn take_unique(matches: Vec<(CaseLabel, i64)>, m: i64, n: i64) -> Option<Classification> {
    let &(case, ell) = matches.first()?;
    // The patterns can only overlap at n = 4, m = 10 (c4 and c5), where they
    // agree on l; anything else would be a bug in the table.
    assert!(
        matches.iter().all(|&(_, l)| l == ell),
        "conflicting case matches at (m, n) = ({m}, {n}): {matches:?}"
    );
    Some(Classification::Solution { ell, case })
}

/// Classifies `[F_m^{-1} mod F_n]` for `m >= 2`, `n >= 2`, under an explicit
/// index ceiling.
pub fn classify_fib_with_ceiling(m: i64, n: i64, ceiling: i64) -> Result<Classification> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidClassifyInput { m, n });
    }
    check_ceiling(m, ceiling)?;
    check_ceiling(n, ceiling)?;
    let m = if m >= 4 * n { reduce_index_mod_period(m, n, Family::Fib)? } else { m };
    if n <= 3 || m == 2 || m >= 4 * n {
        return fallback(Family::Fib, m, n, ceiling);
    }
    if let Some(solution) = take_unique(fib_case_matches(m, n), m, n) {
        return Ok(solution);
    }
    Ok(if fib_noninvertible(m, n) {
        Classification::NonInvertible
    } else {
        Classification::NotFibonacci
    })
}

/// Classifies `[F_m^{-1} mod F_n]` for `m >= 2`, `n >= 2`.
pub fn classify_fib(m: i64, n: i64) -> Result<Classification> {
    classify_fib_with_ceiling(m, n, DEFAULT_INDEX_CEILING)
}

/// Classifies `[L_m^{-1} mod L_n]` for `m >= 1`, `n >= 2`, under an explicit
/// index ceiling.
pub fn classify_lucas_with_ceiling(m: i64, n: i64, ceiling: i64) -> Result<Classification> {
    if m < 1 || n < 2 {
        return Err(Error::InvalidClassifyInput { m, n });
    }
    check_ceiling(m, ceiling)?;
    check_ceiling(n, ceiling)?;
    let m = if m > 4 * n { reduce_index_mod_period(m, n, Family::Lucas)? } else { m };
    if n <= 4 || m == 1 || m == 4 * n + 1 {
        return fallback(Family::Lucas, m, n, ceiling);
    }
    if let Some(solution) = take_unique(lucas_case_matches(m, n), m, n) {
        return Ok(solution);
    }
    Ok(if lucas_noninvertible(m, n) {
        Classification::NonInvertible
    } else {
        Classification::NotLucas
    })
}

/// Classifies `[L_m^{-1} mod L_n]` for `m >= 1`, `n >= 2`.
pub fn classify_lucas(m: i64, n: i64) -> Result<Classification> {
    classify_lucas_with_ceiling(m, n, DEFAULT_INDEX_CEILING)
}

/// Family-dispatching form of [`classify_fib`] / [`classify_lucas`].
pub fn classify(family: Family, m: i64, n: i64) -> Result<Classification> {
    match family {
        Family::Fib => classify_fib(m, n),
        Family::Lucas => classify_lucas(m, n),
    }
}

/// The first classified row per family: `n = 4` for Fib, `n = 5` for Lucas.
pub fn first_classified_row(family: Family) -> i64 {
    match family {
        Family::Fib => 4,
        Family::Lucas => 5,
    }
}

/// Every solution with `n <= n_max`, straight from the case formulas.
///
/// No big-integer search is involved: each row's patterns are instantiated,
/// filtered to the family's `m`-window, deduplicated (the c4/c5 overlap at
/// `n = 4` names one and the same solution twice), and sorted by `(n, m, l)`.
pub fn enumerate_solutions(family: Family, n_max: i64) -> Result<Vec<Solution>> {
    let start = first_classified_row(family);
    if n_max < start {
        return Err(Error::InvalidEnumerationBound { n_max, minimum: start });
    }
    check_ceiling(n_max, DEFAULT_INDEX_CEILING)?;
    let mut out = Vec::new();
    for n in start..=n_max {
        let mut rows: Vec<(i64, i64, CaseLabel)> = Vec::new();
        let candidates = match family {
            Family::Fib => fib_case_instances(n),
            Family::Lucas => lucas_case_instances(n),
        };
        for (case, ell, m) in candidates {
            if !rows.iter().any(|&(m0, ell0, _)| (m0, ell0) == (m, ell)) {
                rows.push((m, ell, case));
            }
        }
        rows.sort_unstable_by_key(|&(m, ell, _)| (m, ell));
        out.extend(rows.into_iter().map(|(m, ell, case)| Solution { family, n, m, ell, case }));
    }
    Ok(out)
}

/// One `(n, case)` cell of the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub n: i64,
    pub case: CaseLabel,
    pub count: usize,
}

/// Aggregated counts over an enumeration: per `(n, case)` cell, per row,
/// per case, and in total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionCensus {
    pub family: Family,
    pub n_max: i64,
    pub cells: Vec<CensusRow>,
    pub per_n: Vec<(i64, usize)>,
    pub per_case: Vec<(CaseLabel, usize)>,
    pub total: usize,
}

/// Census of [`enumerate_solutions`] up to `n_max`.
pub fn solution_census(family: Family, n_max: i64) -> Result<SolutionCensus> {
    let solutions = enumerate_solutions(family, n_max)?;
    let mut cells: Vec<CensusRow> = Vec::new();
    let mut per_n: Vec<(i64, usize)> = Vec::new();
    let mut per_case: std::collections::BTreeMap<CaseLabel, usize> = Default::default();
    for s in &solutions {
        match cells.last_mut() {
            Some(cell) if (cell.n, cell.case) == (s.n, s.case) => cell.count += 1,
            _ => cells.push(CensusRow { n: s.n, case: s.case, count: 1 }),
        }
        match per_n.last_mut() {
            Some((n, count)) if *n == s.n => *count += 1,
            _ => per_n.push((s.n, 1)),
        }
        *per_case.entry(s.case).or_default() += 1;
    }
    // Solutions arrive sorted by (n, m, l), so per-(n, case) cells can be
    // interleaved; merge them.
    cells.sort_by_key(|c| (c.n, c.case));
    let mut merged: Vec<CensusRow> = Vec::new();
    for cell in cells {
        match merged.last_mut() {
            Some(last) if (last.n, last.case) == (cell.n, cell.case) => last.count += cell.count,
            _ => merged.push(cell),
        }
    }
    Ok(SolutionCensus {
        family,
        n_max,
        cells: merged,
        per_n,
        per_case: per_case.into_iter().collect(),
        total: solutions.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_classify;

    #[test]
    fn classify_fib_examples() {
        assert_eq!(
            classify_fib(5, 7).unwrap(),
            Classification::Solution { ell: 6, case: CaseLabel::C1 }
        );
        assert_eq!(
            classify_fib(7, 8).unwrap(),
            Classification::Solution { ell: 7, case: CaseLabel::C2 }
        );
        assert_eq!(
            classify_fib(4, 6).unwrap(),
            Classification::Solution { ell: 4, case: CaseLabel::C1 }
        );
        assert_eq!(classify_fib(3, 7).unwrap(), Classification::NotFibonacci);
        assert_eq!(classify_fib(3, 6).unwrap(), Classification::NonInvertible);
        assert_eq!(classify_fib(6, 6).unwrap(), Classification::NonInvertible);
    }

    #[test]
    fn classify_lucas_examples() {
        assert_eq!(
            classify_lucas(2, 5).unwrap(),
            Classification::Solution { ell: 3, case: CaseLabel::D1 }
        );
        assert_eq!(
            classify_lucas(11, 6).unwrap(),
            Classification::Solution { ell: 1, case: CaseLabel::D3 }
        );
        assert_eq!(classify_lucas(7, 6).unwrap(), Classification::NotLucas);
        assert_eq!(
            classify_lucas(8, 5).unwrap(),
            Classification::Solution { ell: 3, case: CaseLabel::D2 }
        );
        assert_eq!(classify_lucas(3, 6).unwrap(), Classification::NonInvertible);
    }

    #[test]
    fn excluded_parameters_fall_back_to_the_oracle() {
        // m = 2: the inverse of F_2 = 1 is always 1 = F_2.
        assert_eq!(
            classify_fib(2, 7).unwrap(),
            Classification::Solution { ell: 2, case: CaseLabel::OutsideTheorem }
        );
        // Tiny n: modulus F_3 = 2, so parity of F_m decides everything.
        assert_eq!(
            classify_fib(5, 3).unwrap(),
            Classification::Solution { ell: 2, case: CaseLabel::OutsideTheorem }
        );
        assert_eq!(classify_fib(6, 3).unwrap(), Classification::NonInvertible);
        // Modulus F_2 = 1 collapses to the zero residue.
        assert_eq!(
            classify_fib(9, 2).unwrap(),
            Classification::Solution { ell: 0, case: CaseLabel::OutsideTheorem }
        );
        // Lucas: m = 1 and the excluded small rows.
        assert_eq!(
            classify_lucas(1, 9).unwrap(),
            Classification::Solution { ell: 1, case: CaseLabel::OutsideTheorem }
        );
        assert_eq!(classify_lucas(5, 4).unwrap(), Classification::NotLucas);
        // Reduced representatives parked above the window: class 1 of 4n.
        assert_eq!(
            classify_lucas(25, 6).unwrap(),
            Classification::Solution { ell: 1, case: CaseLabel::OutsideTheorem }
        );
        // Fib classes 0, 1, 2 of 4n: value 0 shares the whole modulus.
        assert_eq!(classify_fib(20, 5).unwrap(), Classification::NonInvertible);
        assert_eq!(
            classify_fib(21, 5).unwrap(),
            Classification::Solution { ell: 2, case: CaseLabel::OutsideTheorem }
        );
        assert_eq!(
            classify_fib(22, 5).unwrap(),
            Classification::Solution { ell: 2, case: CaseLabel::OutsideTheorem }
        );
    }

    #[test]
    fn input_domain() {
        assert!(classify_fib(1, 5).is_err());
        assert!(classify_fib(5, 1).is_err());
        assert!(classify_lucas(0, 5).is_err());
        assert!(classify_lucas(-3, 5).is_err());
        assert_eq!(
            classify_fib_with_ceiling(50, 5, 40),
            Err(Error::IndexOutOfRange { index: 50, ceiling: 40 })
        );
    }

    #[test]
    fn period_folding_is_coherent() {
        // Far indices classify exactly like their reduced representatives.
        for n in 2..=25i64 {
            for m in 4 * n..=12 * n {
                let direct = classify_fib(m, n).unwrap();
                let reduced = reduce_index_mod_period(m, n, Family::Fib).unwrap();
                assert_eq!(
                    direct,
                    classify_fib(reduced, n).unwrap(),
                    "fib folding at (m={m}, n={n})"
                );
                let direct = classify_lucas(m + 1, n).unwrap();
                let reduced = reduce_index_mod_period(m + 1, n, Family::Lucas).unwrap();
                assert_eq!(
                    direct,
                    classify_lucas(reduced, n).unwrap(),
                    "lucas folding at (m={}, n={n})",
                    m + 1
                );
            }
        }
    }

    #[test]
    fn case_matches_never_disagree_on_ell() {
        for n in 4..=120i64 {
            for m in 3..4 * n {
                let matches = fib_case_matches(m, n);
                assert!(
                    matches.windows(2).all(|w| w[0].1 == w[1].1),
                    "fib cases disagree at (m={m}, n={n}): {matches:?}"
                );
                if n >= 5 {
                    assert!(matches.len() <= 1, "fib overlap at (m={m}, n={n}): {matches:?}");
                }
            }
        }
        for n in 5..=120i64 {
            for m in 2..=4 * n {
                let matches = lucas_case_matches(m, n);
                assert!(matches.len() <= 1, "lucas overlap at (m={m}, n={n}): {matches:?}");
            }
        }
        // The single legitimate double match: n = 4, m = 10 fires c4 and c5
        // with the same solution.
        let matches = fib_case_matches(10, 4);
        assert_eq!(matches.len(), 2);
        assert_eq!(matches[0], (CaseLabel::C4, 2));
        assert_eq!(matches[1], (CaseLabel::C5, 2));
    }

    #[test]
    fn enumeration_counts() {
        let sols = enumerate_solutions(Family::Fib, 8).unwrap();
        let at = |n| sols.iter().filter(|s| s.n == n).count();
        assert_eq!(at(4), 10, "n = 4 loses c1 to the m-window and merges c4/c5");
        assert_eq!(at(5), 10);
        assert_eq!(at(6), 12);
        assert_eq!(at(7), 10);
        assert_eq!(at(8), 12);

        let sols = enumerate_solutions(Family::Lucas, 7).unwrap();
        let at = |n| sols.iter().filter(|s| s.n == n).count();
        assert_eq!(at(5), 7);
        assert_eq!(at(6), 1, "even rows only carry d3");
        assert_eq!(at(7), 3);

        assert!(enumerate_solutions(Family::Fib, 3).is_err());
        assert!(enumerate_solutions(Family::Lucas, 4).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_consistent_with_classify() {
        for family in [Family::Fib, Family::Lucas] {
            let sols = enumerate_solutions(family, 30).unwrap();
            let keys: Vec<_> = sols.iter().map(|s| (s.n, s.m, s.ell)).collect();
            let mut sorted = keys.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(keys, sorted, "{family} enumeration must be sorted and duplicate-free");
            for s in &sols {
                assert_eq!(
                    classify(family, s.m, s.n).unwrap(),
                    Classification::Solution { ell: s.ell, case: s.case },
                    "enumerated row disagrees with classify at {s:?}"
                );
            }
        }
    }

    #[test]
    fn census_examples() {
        let census = solution_census(Family::Fib, 7).unwrap();
        let cell = |n, case| {
            census.cells.iter().find(|c| (c.n, c.case) == (n, case)).map_or(0, |c| c.count)
        };
        assert_eq!(cell(7, CaseLabel::C2), 3);
        assert_eq!(cell(7, CaseLabel::C1), 1);
        assert_eq!(cell(4, CaseLabel::C1), 0);
        assert_eq!(census.per_n.to_vec(), vec![(4, 10), (5, 10), (6, 12), (7, 10)]);
        assert_eq!(census.total, 42);
        assert_eq!(census.cells.iter().map(|c| c.count).sum::<usize>(), 42);
        assert_eq!(census.per_case.iter().map(|(_, c)| c).sum::<usize>(), 42);

        let census = solution_census(Family::Lucas, 6).unwrap();
        assert_eq!(census.per_n.last(), Some(&(6, 1)));
    }

    #[test]
    fn n4_row_agrees_with_the_oracle_exhaustively() {
        // The first Fib row is irregular (window clips c1, c4/c5 merge), so
        // check it value by value.
        let sols = enumerate_solutions(Family::Fib, 4).unwrap();
        for m in 3..16i64 {
            let verdict = oracle_classify(Family::Fib, m, 4).unwrap();
            let enumerated = sols.iter().find(|s| s.m == m);
            match verdict.outcome {
                OracleOutcome::Solution(ell) => {
                    assert_eq!(enumerated.map(|s| s.ell), Some(ell), "missing solution at m={m}");
                }
                _ => assert!(enumerated.is_none(), "phantom solution at m={m}"),
            }
        }
    }
}
