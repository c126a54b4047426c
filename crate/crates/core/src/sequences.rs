//! Fibonacci and Lucas numbers over signed indices.
//!
//! Fibonacci numbers use the usual base `F_0 = 0`, `F_1 = 1`. Lucas numbers
//! use the Binet-consistent base `L_0 = 2`, `L_1 = 1`, `L_2 = 3`, so that
//! `L_k = phi^k + psi^k` holds for every `k` (`phi`, `psi` the roots of
//! `x^2 = x + 1`). Both sequences extend to negative indices through
//! `F_{-k} = (-1)^{k+1} F_k` and `L_{-k} = (-1)^k L_k`.
//!
//! Values are computed by fast doubling in `O(log |k|)` big-integer
//! multiplications. Membership queries walk the sequence upward instead, so
//! they stay correct for arbitrarily large inputs without any floating-point
//! index estimate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest index magnitude accepted by default.
///
/// A guard against accidental memory blowups: `F_k` has roughly `0.209 k`
/// decimal digits, so the default ceiling keeps single values around 100 kB.
pub const DEFAULT_INDEX_CEILING: i64 = 1_000_000;

/// The two sequence families handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Fib,
    Lucas,
}

impl Family {
    /// The `k`-th value of the family, under the default index ceiling.
    pub fn value(self, k: i64) -> Result<BigInt> {
        self.value_with_ceiling(k, DEFAULT_INDEX_CEILING)
    }

    /// The `k`-th value of the family, under an explicit index ceiling.
    pub fn value_with_ceiling(self, k: i64, ceiling: i64) -> Result<BigInt> {
        match self {
            Family::Fib => fib_with_ceiling(k, ceiling),
            Family::Lucas => lucas_with_ceiling(k, ceiling),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Fib => "fib",
            Family::Lucas => "lucas",
        })
    }
}

fn check_index(k: i64, ceiling: i64) -> Result<()> {
    if k.checked_abs().is_none_or(|a| a > ceiling) {
        return Err(Error::IndexOutOfRange { index: k, ceiling });
    }
    Ok(())
}

/// `(F_k, F_{k+1})` for `k >= 0` by fast doubling.
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero(); // F_j
    let mut b = BigInt::one(); // F_{j+1}
    for bit in (0..u64::BITS - k.leading_zeros()).rev() {
        // F_{2j} = F_j (2 F_{j+1} - F_j), F_{2j+1} = F_j^2 + F_{j+1}^2
        let even = &a * ((&b << 1u32) - &a);
        let odd = &a * &a + &b * &b;
        if k >> bit & 1 == 0 {
            b = odd;
            a = even;
        } else {
            a = odd;
            b = even + &a;
        }
    }
    (a, b)
}

/// `F_k` for any signed `k` with `|k|` at most `ceiling`.
pub fn fib_with_ceiling(k: i64, ceiling: i64) -> Result<BigInt> {
    check_index(k, ceiling)?;
    let (value, _) = fib_pair(k.unsigned_abs());
    if k < 0 && k % 2 == 0 {
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// `F_k` for any signed `k`, under the default index ceiling.
pub fn fib(k: i64) -> Result<BigInt> {
    fib_with_ceiling(k, DEFAULT_INDEX_CEILING)
}

/// `L_k` for any signed `k` with `|k|` at most `ceiling`.
pub fn lucas_with_ceiling(k: i64, ceiling: i64) -> Result<BigInt> {
    check_index(k, ceiling)?;
    let (a, b) = fib_pair(k.unsigned_abs());
    // L_k = F_{k-1} + F_{k+1} = 2 F_{k+1} - F_k
    let value = (b << 1u32) - a;
    if k < 0 && k % 2 != 0 {
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// `L_k` for any signed `k`, under the default index ceiling.
pub fn lucas(k: i64) -> Result<BigInt> {
    lucas_with_ceiling(k, DEFAULT_INDEX_CEILING)
}

/// The canonical index of `v` in the Fibonacci sequence, if there is one.
///
/// Canonical means index 0 for `v = 0` and the unique index `l >= 2` with
/// `F_l = v` for positive Fibonacci values; in particular `v = 1` answers 2,
/// never 1. Negative values are rejected: every negative-index value already
/// appears, up to sign, at a non-negative index.
pub fn fib_index(v: &BigInt) -> Result<Option<i64>> {
    if v.is_negative() {
        return Err(Error::NegativeValue);
    }
    if v.is_zero() {
        return Ok(Some(0));
    }
    // F_2 = 1, F_3 = 2, ... is strictly increasing.
    let mut index = 2i64;
    let mut cur = BigInt::one();
    let mut next = BigInt::from(2);
    while cur < *v {
        let sum = &cur + &next;
        cur = std::mem::replace(&mut next, sum);
        index += 1;
    }
    Ok((cur == *v).then_some(index))
}

/// The canonical index of `v` in the Lucas sequence, if there is one.
///
/// Canonical means the unique index `l >= 1` with `L_l = v`. The value 2
/// only occurs as `L_0` and therefore answers `None`, as does anything that
/// is not a Lucas value at all; `v <= 0` is rejected.
pub fn lucas_index(v: &BigInt) -> Result<Option<i64>> {
    if !v.is_positive() {
        return Err(Error::NonPositiveValue);
    }
    if v.is_one() {
        return Ok(Some(1));
    }
    // L_2 = 3, L_3 = 4, ... is strictly increasing.
    let mut index = 2i64;
    let mut cur = BigInt::from(3);
    let mut next = BigInt::from(4);
    while cur < *v {
        let sum = &cur + &next;
        cur = std::mem::replace(&mut next, sum);
        index += 1;
    }
    Ok((cur == *v).then_some(index))
}
