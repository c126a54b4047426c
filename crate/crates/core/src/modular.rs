//! Extended Euclid, modular inverses, and index reduction modulo the
//! period `4n`.
//!
//! Both sequences repeat modulo a fixed member once indices are shifted by
//! `4n`: `F_{a+4n} = F_a (mod F_n)` and `L_{a+4n} = L_a (mod L_n)`. The exact
//! differences are
//!
//! ```text
//! F_{a+4n} - F_a = F_n * L_n * L_{a+2n}
//! L_{a+4n} - L_a = 5 * F_n * F_{a+2n} * L_n
//! ```
//!
//! and [`period_identity_residuals`] exposes them directly so the reduction
//! performed by [`reduce_index_mod_period`] can be audited value by value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sequences::{fib, lucas, Family};

/// Outcome of a modular inversion: either the canonical residue or a proof
/// that none exists. Kept as a dedicated type so "no inverse" can never be
/// confused with a residue of 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseResult {
    /// The unique residue `x` in `[0, b)` with `a x = 1 (mod b)`.
    Residue(BigInt),
    /// `gcd(a, b) > 1`, so no inverse exists.
    NonInvertible,
}

impl InverseResult {
    /// The residue, if the inverse exists.
    pub fn residue(&self) -> Option<&BigInt> {
        match self {
            InverseResult::Residue(r) => Some(r),
            InverseResult::NonInvertible => None,
        }
    }
}

/// Extended Euclidean algorithm.
///
/// Returns `(g, x, y)` with `g = gcd(a, b) > 0` and `a x + b y = g`. Inputs
/// may be negative; `(0, 0)` is rejected since it has no positive gcd.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BezoutOfZeros);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = r0 - &q * &r1;
        let s = s0 - &q * &s1;
        let t = t0 - q * &t1;
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        Ok((-r0, -s0, -t0))
    } else {
        Ok((r0, s0, t0))
    }
}

/// The inverse of `a` modulo `b`, as a residue in `[0, b)`.
///
/// Requires `a >= 1` and `b >= 2`; answers [`InverseResult::NonInvertible`]
/// exactly when `gcd(a, b) > 1`.
pub fn mod_inverse(a: &BigInt, b: &BigInt) -> Result<InverseResult> {
    if b < &BigInt::from(2) {
        return Err(Error::InvalidModulus);
    }
    if !a.is_positive() {
        return Err(Error::InvalidInverseOperand);
    }
    let (g, x, _) = ext_gcd(a, b)?;
    if g.is_one() {
        Ok(InverseResult::Residue(x.mod_floor(b)))
    } else {
        Ok(InverseResult::NonInvertible)
    }
}

/// Reduces `m` to its canonical representative modulo the period `4n`.
///
/// The representative windows differ by family so that each window lines up
/// with the index ranges the classifier handles:
///
/// * `Fib`: `[3, 4n + 2]` — congruence classes 3 through `4n - 1` keep their
///   small representative in `[3, 4n)`; classes 0, 1, 2 (whose values reduce
///   to `F_0 = 0` and `F_1 = F_2 = 1`) are parked just above the window at
///   `4n`, `4n + 1`, `4n + 2`.
/// * `Lucas`: `[2, 4n + 1]` — every class has exactly one representative
///   here, with class 1 (value `L_1 = 1`) parked at `4n + 1`.
///
/// In both cases the sequence value at the returned index is congruent to
/// the value at `m` modulo the `n`-th member of the family.
pub fn reduce_index_mod_period(m: i64, n: i64, family: Family) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidPeriodBase { n });
    }
    let period = 4 * n;
    let base = match family {
        Family::Fib => 3,
        Family::Lucas => 2,
    };
    Ok(base + (m - base).rem_euclid(period))
}

/// The two exact period differences, evaluated literally.
///
/// Returns `(F_{a+4n} - F_a - F_n L_n L_{a+2n}, L_{a+4n} - L_a - 5 F_n F_{a+2n} L_n)`;
/// both entries are zero for every `a` and every `n >= 1`.
pub fn period_identity_residuals(a: i64, n: i64) -> Result<(BigInt, BigInt)> {
    if n < 1 {
        return Err(Error::InvalidPeriodBase { n });
    }
    let fib_side = fib(a + 4 * n)? - fib(a)? - fib(n)? * lucas(n)? * lucas(a + 2 * n)?;
    let lucas_side = lucas(a + 4 * n)? - lucas(a)? - 5 * fib(n)? * fib(a + 2 * n)? * lucas(n)?;
    Ok((fib_side, lucas_side))
}
