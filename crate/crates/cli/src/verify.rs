//! The `verify` suites: exhaustive sweeps that report one summary record per
//! run (plus one record per failure, of which a healthy build produces none).

use fibinv_core::classification::first_classified_row;
use fibinv_core::identities::{
    difference_identity_residuals, fib_coeff_residual, inequality_checks, lucas_coeff_residual,
    product_identity_residuals,
};
use fibinv_core::modular::period_identity_residuals;
use fibinv_core::sequences::fib;
use fibinv_core::validation::cross_validate;
use fibinv_core::Family;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::{AppError, Emitter};

fn summary(
    em: &mut Emitter,
    suite: &str,
    params: &[(&str, i64)],
    family: Option<Family>,
    checked: u64,
    failure_key: &str,
    failures: u64,
) -> Result<bool, AppError> {
    let mut table = format!("suite={suite}");
    let mut record = json!({"kind": "verify_summary", "suite": suite});
    if let Some(f) = family {
        table.push_str(&format!(" family={f}"));
        record["family"] = json!(f.to_string());
    }
    for (key, value) in params {
        table.push_str(&format!(" {key}={value}"));
        record[*key] = json!(value);
    }
    table.push_str(&format!(" checked={checked} {failure_key}={failures}"));
    record["checked"] = json!(checked);
    record[failure_key] = json!(failures);
    em.line(table, record)?;
    Ok(failures == 0)
}

pub fn lemma1(em: &mut Emitter, bound: i64) -> Result<bool, AppError> {
    let mut checked = 0u64;
    let mut failures = 0u64;
    for a in -bound..=bound {
        for b in -bound..=bound {
            checked += 1;
            let (p, q, r) = product_identity_residuals(a, b)?;
            if !(p.is_zero() && q.is_zero() && r.is_zero()) {
                failures += 1;
                em.line(
                    format!("FAIL a={a} b={b}"),
                    json!({"kind": "verify_failure", "suite": "lemma1", "a": a, "b": b}),
                )?;
            }
        }
    }
    summary(em, "lemma1", &[("bound", bound)], None, checked, "failures", failures)
}

pub fn lemma2(em: &mut Emitter, bound: i64) -> Result<bool, AppError> {
    let mut checked = 0u64;
    let mut failures = 0u64;
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let d = a + b - c;
                if !(-bound..=bound).contains(&d) {
                    continue;
                }
                checked += 1;
                let (p, q, r) = difference_identity_residuals(a, b, c, d)?;
                if !(p.is_zero() && q.is_zero() && r.is_zero()) {
                    failures += 1;
                    em.line(
                        format!("FAIL a={a} b={b} c={c} d={d}"),
                        json!({"kind": "verify_failure", "suite": "lemma2",
                               "a": a, "b": b, "c": c, "d": d}),
                    )?;
                }
            }
        }
    }
    summary(em, "lemma2", &[("bound", bound)], None, checked, "failures", failures)
}

pub fn lemma3(em: &mut Emitter, bound: i64, n_max: i64) -> Result<bool, AppError> {
    let mut checked = 0u64;
    let mut failures = 0u64;
    for a in -bound..=bound {
        for n in 1..=n_max {
            checked += 1;
            let (p, q) = period_identity_residuals(a, n)?;
            if !(p.is_zero() && q.is_zero()) {
                failures += 1;
                em.line(
                    format!("FAIL a={a} n={n}"),
                    json!({"kind": "verify_failure", "suite": "lemma3", "a": a, "n": n}),
                )?;
            }
        }
    }
    summary(
        em,
        "lemma3",
        &[("bound", bound), ("n_max", n_max)],
        None,
        checked,
        "failures",
        failures,
    )
}

pub fn lemma4(em: &mut Emitter, bound: i64, n_max: i64) -> Result<bool, AppError> {
    let mut checked = 0u64;
    let mut failures = 0u64;
    for a in -bound..=bound {
        for b in -bound..=bound {
            for n in 1..=n_max {
                checked += 1;
                if !inequality_checks(a, b, n)?.all_hold() {
                    failures += 1;
                    em.line(
                        format!("FAIL a={a} b={b} n={n}"),
                        json!({"kind": "verify_failure", "suite": "lemma4",
                               "a": a, "b": b, "n": n}),
                    )?;
                }
            }
        }
    }
    summary(
        em,
        "lemma4",
        &[("bound", bound), ("n_max", n_max)],
        None,
        checked,
        "failures",
        failures,
    )
}

pub fn piecewise(em: &mut Emitter, family: Option<Family>, n_max: i64) -> Result<bool, AppError> {
    let mut clean = true;
    for f in chosen(family) {
        clean &= piecewise_one(em, f, n_max)?;
    }
    Ok(clean)
}

fn piecewise_one(em: &mut Emitter, family: Family, n_max: i64) -> Result<bool, AppError> {
    let mut checked = 0u64;
    let mut failures = 0u64;
    let fail = |em: &mut Emitter, ell: i64, m: i64, n: i64| -> Result<(), AppError> {
        em.line(
            format!("FAIL family={family} l={ell} m={m} n={n}"),
            json!({"kind": "verify_failure", "suite": "piecewise",
                   "family": family.to_string(), "l": ell, "m": m, "n": n}),
        )
    };
    match family {
        Family::Fib => {
            for n in 5..=n_max {
                let bound: BigInt = fib(n)? - 1i32;
                for ell in 2..n {
                    for m in (n - ell + 1)..(4 * n) {
                        checked += 1;
                        let cr = fib_coeff_residual(ell, m, n)?;
                        if cr.residual_def != cr.residual_piecewise
                            || cr.residual_def.abs() >= bound
                        {
                            failures += 1;
                            fail(em, ell, m, n)?;
                        }
                    }
                }
            }
        }
        Family::Lucas => {
            for n in 6..=n_max {
                for ell in 1..n {
                    for m in (n - ell)..=(4 * n) {
                        checked += 1;
                        let cr = lucas_coeff_residual(ell, m, n)?;
                        if cr.residual_def != cr.residual_piecewise {
                            failures += 1;
                            fail(em, ell, m, n)?;
                        }
                    }
                }
            }
        }
    }
    summary(em, "piecewise", &[("n_max", n_max)], Some(family), checked, "failures", failures)
}

pub fn theorem(
    em: &mut Emitter,
    family: Option<Family>,
    n_min: Option<i64>,
    n_max: i64,
) -> Result<bool, AppError> {
    let mut clean = true;
    for f in chosen(family) {
        let n_lo = n_min.unwrap_or_else(|| first_classified_row(f));
        let report = cross_validate(f, n_lo, n_max)?;
        for mm in &report.mismatches {
            em.line(
                format!(
                    "MISMATCH family={} m={} n={} classifier={:?} oracle={:?}",
                    mm.family, mm.m, mm.n, mm.classified, mm.oracle.outcome
                ),
                json!({"kind": "verify_mismatch", "suite": "theorem",
                       "family": mm.family.to_string(), "m": mm.m, "n": mm.n,
                       "classifier": format!("{:?}", mm.classified),
                       "oracle": format!("{:?}", mm.oracle.outcome)}),
            )?;
        }
        clean &= summary(
            em,
            "theorem",
            &[("n_min", n_lo), ("n_max", n_max)],
            Some(f),
            report.checked,
            "mismatches",
            report.mismatches.len() as u64,
        )?;
    }
    Ok(clean)
}

fn chosen(family: Option<Family>) -> Vec<Family> {
    match family {
        Some(f) => vec![f],
        None => vec![Family::Fib, Family::Lucas],
    }
}
