//! Product, difference, and inequality identities, plus the coefficient /
//! residual decomposition behind the classifier.
//!
//! The central objects are the integer quotients hiding inside products of
//! sequence members: for admissible `(l, m, n)` there is a coefficient `A`
//! with
//!
//! ```text
//! F_l F_m = A F_n + B,   |B| < F_n - 1
//! ```
//!
//! and likewise `L_l L_m = C L_n + D`. The remainder `B` (resp. `D`) also has
//! a closed piecewise form that depends only on where `m` falls relative to
//! `n`, split into four consecutive index intervals. [`fib_coeff_residual`]
//! and [`lucas_coeff_residual`] evaluate both routes and report them side by
//! side; they agree everywhere, and `B = 1` is exactly the certificate that
//! `F_l` inverts `F_m` modulo `F_n`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::sequences::{fib, lucas};

/// `(-1)^k` as a machine integer, correct for negative `k` too.
fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `F_k` truncated below zero: `F_k` for `k >= 0`, else 0.
pub fn fib_plus(k: i64) -> Result<BigInt> {
    if k < 0 {
        Ok(BigInt::zero())
    } else {
        fib(k)
    }
}

/// `L_k` truncated below zero: `L_k` for `k >= 0`, else 0.
pub fn lucas_plus(k: i64) -> Result<BigInt> {
    if k < 0 {
        Ok(BigInt::zero())
    } else {
        lucas(k)
    }
}

/// Residuals of the three product identities
///
/// ```text
/// L_a L_b   = L_{a+b} + (-1)^b L_{a-b}
/// 5 F_a F_b = L_{a+b} - (-1)^b L_{a-b}
/// F_a F_b   = F_{a+b} - F_{a+b-2} - F_{a-1} F_{b-1}
/// ```
///
/// reported as left-hand side minus right-hand side; all three are zero for
/// every pair of signed indices.
pub fn product_identity_residuals(a: i64, b: i64) -> Result<(BigInt, BigInt, BigInt)> {
    let s = sign(b);
    let lucas_product = lucas(a)? * lucas(b)? - lucas(a + b)? - lucas(a - b)? * s;
    let scaled_fib = 5 * fib(a)? * fib(b)? - lucas(a + b)? + lucas(a - b)? * s;
    let fib_product = fib(a)? * fib(b)? - fib(a + b)? + fib(a + b - 2)? + fib(a - 1)? * fib(b - 1)?;
    Ok((lucas_product, scaled_fib, fib_product))
}

/// Residuals of the three difference identities for index pairs with equal
/// sums (`a + b = c + d`):
///
/// ```text
/// F_a F_b - F_c F_d   = (-1)^{a+1} F_{c-a} F_{d-a}
/// L_a L_b - L_c L_d   = (-1)^a 5 F_{c-a} F_{d-a}
/// 5 F_a F_b - L_c L_d = (-1)^{a+1} L_{c-a} L_{d-a}
/// ```
///
/// again as left minus right; all three are zero whenever the precondition
/// holds, and the precondition is enforced.
pub fn difference_identity_residuals(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
) -> Result<(BigInt, BigInt, BigInt)> {
    if a + b != c + d {
        return Err(Error::MismatchedIndexSums { lhs: a + b, rhs: c + d });
    }
    let s = sign(a);
    let fib_diff = fib(a)? * fib(b)? - fib(c)? * fib(d)? + fib(c - a)? * fib(d - a)? * s;
    let lucas_diff =
        lucas(a)? * lucas(b)? - lucas(c)? * lucas(d)? - 5 * fib(c - a)? * fib(d - a)? * s;
    let mixed_diff =
        5 * fib(a)? * fib(b)? - lucas(c)? * lucas(d)? + lucas(c - a)? * lucas(d - a)? * s;
    Ok((fib_diff, lucas_diff, mixed_diff))
}

/// One guarded inequality per field; a field is `true` when its hypothesis
/// implies the strict bound (vacuously true when the hypothesis fails).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InequalityChecks {
    /// `|F_a F_b| < F_n - 1` whenever `|a| + |b| <= n` and `n >= 5`.
    pub fib_product: bool,
    /// `|5 F_a F_b| < L_n - 1` whenever `|a| + |b| <= n - 1` and `n >= 6`.
    pub scaled_fib_product: bool,
    /// `|L_a| < L_n - 1` whenever `|a| <= n - 1` and `n >= 4` (`b` ignored).
    pub lucas_value: bool,
    /// `|L_a L_b| < L_n - 1` whenever `|a| + |b| <= n - 1`, `n >= 6`, and
    /// `{|a|, |b|}` is not the pair `{0, n - 1}` (there `|L_a L_b| = 2 L_{n-1}`
    /// overshoots the bound, so it is carved out of the hypothesis).
    pub lucas_product: bool,
}

impl InequalityChecks {
    pub fn all_hold(&self) -> bool {
        self.fib_product && self.scaled_fib_product && self.lucas_value && self.lucas_product
    }
}

/// Evaluates the four guarded inequalities at `(a, b, n)`.
pub fn inequality_checks(a: i64, b: i64, n: i64) -> Result<InequalityChecks> {
    let (abs_a, abs_b) = (a.abs(), b.abs());
    let fib_product = if n >= 5 && abs_a + abs_b <= n {
        (fib(a)? * fib(b)?).abs() < fib(n)? - 1i32
    } else {
        true
    };
    let scaled_fib_product = if n >= 6 && abs_a + abs_b < n {
        (fib(a)? * fib(b)? * 5i32).abs() < lucas(n)? - 1i32
    } else {
        true
    };
    let lucas_value = if n >= 4 && abs_a < n { lucas(a)?.abs() < lucas(n)? - 1i32 } else { true };
    let excluded = (abs_a.min(abs_b), abs_a.max(abs_b)) == (0, n - 1);
    let lucas_product = if n >= 6 && abs_a + abs_b < n && !excluded {
        (lucas(a)? * lucas(b)?).abs() < lucas(n)? - 1i32
    } else {
        true
    };
    Ok(InequalityChecks { fib_product, scaled_fib_product, lucas_value, lucas_product })
}

/// Which of the four index intervals `m` fell into.
///
/// For the Fibonacci decomposition (`I*`, each interval open on the left):
/// `I1 = (n-l, n+l]`, `I2 = (n+l, 3n-l]`, `I3 = (3n-l, 3n+l]`,
/// `I4 = (3n+l, 4n)`. For the Lucas decomposition (`J*`, closed on the
/// left): `J1 = [n-l, n+l)`, `J2 = [n+l, 3n-l)`, `J3 = [3n-l, 3n+l)`,
/// `J4 = [3n+l, 4n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalTag {
    I1,
    I2,
    I3,
    I4,
    J1,
    J2,
    J3,
    J4,
}

impl std::fmt::Display for IntervalTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            IntervalTag::I1 => "i1",
            IntervalTag::I2 => "i2",
            IntervalTag::I3 => "i3",
            IntervalTag::I4 => "i4",
            IntervalTag::J1 => "j1",
            IntervalTag::J2 => "j2",
            IntervalTag::J3 => "j3",
            IntervalTag::J4 => "j4",
        })
    }
}

/// A coefficient together with the remainder computed two independent ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffResidualPair {
    /// The integer quotient `A` (resp. `C`).
    pub coeff: BigInt,
    /// Remainder straight from its definition: `F_l F_m - A F_n`.
    pub residual_def: BigInt,
    /// Remainder from the closed piecewise form for the interval `m` is in.
    pub residual_piecewise: BigInt,
    /// The interval that selected the piecewise form.
    pub interval: IntervalTag,
}

/// Coefficient `A` and remainder `B = F_l F_m - A F_n`, both ways.
///
/// Requires `2 <= l < n`, `n >= 5`, and `n - l < m < 4n`; outside that range
/// no interval applies and the query is rejected. The two residual fields
/// agree for every admissible triple and satisfy `|B| < F_n - 1`.
pub fn fib_coeff_residual(ell: i64, m: i64, n: i64) -> Result<CoeffResidualPair> {
    if !(2 <= ell && ell < n && n >= 5 && n - ell < m && m < 4 * n) {
        return Err(Error::InvalidTriple { ell, m, n });
    }
    let coeff = fib(ell + m - n)? - fib_plus(-ell + m - n)? * sign(ell)
        + fib_plus(ell + m - 3 * n)? * sign(n)
        - fib_plus(-ell + m - 3 * n)? * sign(ell + n);
    let residual_def = fib(ell)? * fib(m)? - &coeff * fib(n)?;
    let (interval, residual_piecewise) = if m <= n + ell {
        (IntervalTag::I1, fib(m - n)? * fib(n - ell)? * sign(ell + 1))
    } else if m <= 3 * n - ell {
        (IntervalTag::I2, fib(ell)? * fib(m - 2 * n)? * sign(n))
    } else if m <= 3 * n + ell {
        (IntervalTag::I3, fib(m - 3 * n)? * fib(n - ell)? * sign(ell + n + 1))
    } else {
        (IntervalTag::I4, fib(ell)? * fib(m - 4 * n)?)
    };
    Ok(CoeffResidualPair { coeff, residual_def, residual_piecewise, interval })
}

/// Coefficient `C` and remainder `D = L_l L_m - C L_n`, both ways.
///
/// Requires `1 <= l < n`, `n >= 6`, and `n - l <= m <= 4n`. The two residual
/// fields agree for every admissible triple.
pub fn lucas_coeff_residual(ell: i64, m: i64, n: i64) -> Result<CoeffResidualPair> {
    if !(1 <= ell && ell < n && n >= 6 && n - ell <= m && m <= 4 * n) {
        return Err(Error::InvalidTriple { ell, m, n });
    }
    let coeff = lucas(ell + m - n)? + lucas_plus(-ell + m - n)? * sign(ell)
        - lucas_plus(ell + m - 3 * n)? * sign(n)
        - lucas_plus(-ell + m - 3 * n)? * sign(ell + n);
    let residual_def = lucas(ell)? * lucas(m)? - &coeff * lucas(n)?;
    let (interval, residual_piecewise) = if m < n + ell {
        (IntervalTag::J1, 5 * fib(m - n)? * fib(n - ell)? * sign(ell))
    } else if m < 3 * n - ell {
        (IntervalTag::J2, lucas(ell)? * lucas(m - 2 * n)? * sign(n + 1))
    } else if m < 3 * n + ell {
        (IntervalTag::J3, 5 * fib(m - 3 * n)? * fib(n - ell)? * sign(ell + n + 1))
    } else {
        (IntervalTag::J4, lucas(ell)? * lucas(m - 4 * n)?)
    };
    Ok(CoeffResidualPair { coeff, residual_def, residual_piecewise, interval })
}
