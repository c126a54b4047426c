//! Exact Fibonacci/Lucas arithmetic and the classification of inverse
//! residues between sequence members.
//!
//! The driving question: when is the modular inverse `[F_m^{-1} mod F_n]`
//! itself a Fibonacci number, and likewise `[L_m^{-1} mod L_n]` a Lucas
//! number? The answer is a small, fully explicit case table over the index
//! arithmetic of `(m, n)` — no big-integer work is needed to decide it.
//! This crate implements both the closed-form classifier and an independent
//! brute-force oracle, plus the identity layer (products, differences,
//! period folding, coefficient/remainder decompositions) that makes the
//! case table auditable piece by piece.
//!
//! Conventions, fixed once and used everywhere:
//!
//! * `F_0 = 0`, `F_1 = F_2 = 1`, extended to negative indices by
//!   `F_{-k} = (-1)^{k+1} F_k`;
//! * Lucas numbers are Binet-consistent: `L_0 = 2`, `L_1 = 1`, `L_2 = 3`,
//!   with `L_{-k} = (-1)^k L_k`;
//! * membership uses canonical indices: `l >= 2` for Fibonacci values
//!   (so the value 1 is indexed as `F_2`, never `F_1`) and `l >= 1` for
//!   Lucas values (the value 2 = `L_0` does not count as a member).
//!
//! Module map:
//!
//! * [`sequences`] — values over signed indices, membership queries;
//! * [`modular`] — extended Euclid, inverses, period-`4n` index folding;
//! * [`identities`] — product/difference/inequality identities and the
//!   coefficient/remainder decomposition with its interval classifier;
//! * [`classification`] — the case table, enumeration, census;
//! * [`oracle`] — literal brute-force evaluation of the same question;
//! * [`validation`] — exhaustive classifier-vs-oracle sweeps.
//!
//! ```
//! use fibinv_core::classification::{classify_fib, CaseLabel, Classification};
//!
//! // F_6 = 8 inverts F_5 = 5 modulo F_7 = 13: 8 * 5 = 40 = 3 * 13 + 1.
//! assert_eq!(
//!     classify_fib(5, 7).unwrap(),
//!     Classification::Solution { ell: 6, case: CaseLabel::C1 },
//! );
//! ```

pub mod classification;
pub mod error;
pub mod identities;
pub mod modular;
pub mod oracle;
pub mod sequences;
pub mod validation;

pub use error::{Error, Result};
pub use sequences::Family;
