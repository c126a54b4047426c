//! `fibinv` — Fibonacci/Lucas values, inverses among them, and a classifier
//! that decides when such an inverse lands back in the sequence.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fibinv_core::classification::{
    classify_fib_with_ceiling, classify_lucas_with_ceiling, enumerate_solutions, solution_census,
    Classification,
};
use fibinv_core::identities::{fib_coeff_residual, lucas_coeff_residual};
use fibinv_core::modular::{mod_inverse, InverseResult};
use fibinv_core::oracle::oracle_classify_with_ceiling;
use fibinv_core::sequences::DEFAULT_INDEX_CEILING;
use fibinv_core::Family;
use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

mod verify;

const LONG_ABOUT: &str = "\
Computes Fibonacci and Lucas numbers at any signed index, modular inverses of
one member by another, and decides in closed form when such an inverse is
itself a member of the same sequence.

Conventions: F_1 = F_2 = 1 with F_{-k} = (-1)^{k+1} F_k; Lucas numbers use the
Binet-consistent base L_0 = 2, L_1 = 1, L_2 = 3 with L_{-k} = (-1)^k L_k.
Inverse residues live in [0, modulus); operands sharing a factor greater than
one are NONINVERTIBLE. Membership indices are canonical: l >= 2 for Fibonacci
(so the value 1 is always F_2), l >= 1 for Lucas (the value 2 = L_0 is never
reported), and l = 0 only for the zero residue that occurs modulo F_2 = 1.";

#[derive(Parser)]
#[command(name = "fibinv", version, about = "Fibonacci/Lucas inverse classifier", long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for result records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Suppress stdout records; exit codes and --out mirroring still apply.
    #[arg(long, global = true)]
    quiet: bool,

    /// Largest |index| a direct sequence evaluation may touch.
    #[arg(long, global = true, value_name = "CEILING",
          default_value_t = DEFAULT_INDEX_CEILING,
          value_parser = clap::value_parser!(i64).range(2..=100_000_000))]
    max_index: i64,

    /// Mirror every stdout record to this file as well.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fib,
    Lucas,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::Fib => Family::Fib,
            FamilyArg::Lucas => Family::Lucas,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the k-th value of the family (k may be negative).
    Seq {
        family: FamilyArg,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Print the inverse of the m-th value modulo the n-th, or NONINVERTIBLE.
    Inv { family: FamilyArg, m: i64, n: i64 },
    /// Decide whether that inverse is itself a member, in closed form.
    Classify {
        family: FamilyArg,
        m: i64,
        n: i64,
        /// Also print the residue and a coefficient certificate whose
        /// remainder must print 1 for a genuine solution.
        #[arg(long)]
        certify: bool,
    },
    /// List every solution row by row, or tally them per case.
    Enumerate {
        family: FamilyArg,
        /// Last row n to enumerate.
        #[arg(long, value_name = "N")]
        n_max: i64,
        /// Print per-(n, case) tallies instead of the solutions themselves.
        #[arg(long)]
        census: bool,
    },
    /// Run an exhaustive verification suite; exit 0 iff it is clean.
    Verify {
        suite: Suite,
        /// Restrict to one family (piecewise and theorem suites; default both).
        #[arg(long)]
        family: Option<FamilyArg>,
        /// Index half-width for the identity suites.
        #[arg(long, value_name = "B")]
        bound: Option<i64>,
        /// First row n (theorem suite; defaults to the family's first
        /// classified row).
        #[arg(long, value_name = "N", allow_negative_numbers = true)]
        n_min: Option<i64>,
        /// Last row n.
        #[arg(long, value_name = "N", allow_negative_numbers = true)]
        n_max: Option<i64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Product identities on a square grid of signed index pairs.
    Lemma1,
    /// Equal-sum difference identities on a signed index cube.
    Lemma2,
    /// Period-4n congruences, exactly, over a signed index strip.
    Lemma3,
    /// Guarded strict bounds on products of members.
    Lemma4,
    /// Closed piecewise remainder forms against their definitions.
    Piecewise,
    /// Closed-form classifier against the brute-force oracle.
    Theorem,
}

enum AppError {
    Domain(String),
    Usage(String),
}

impl From<fibinv_core::Error> for AppError {
    fn from(e: fibinv_core::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

/// Routes result lines to stdout and, optionally, a mirror file.
struct Emitter {
    format: Format,
    quiet: bool,
    out: Option<File>,
}

impl Emitter {
    fn new(cli: &Cli) -> Result<Self, AppError> {
        let out = cli.out.as_ref().map(File::create).transpose()?;
        Ok(Emitter { format: cli.format, quiet: cli.quiet, out })
    }

    fn line(&mut self, table: String, record: Value) -> Result<(), AppError> {
        let text = match self.format {
            Format::Table => table,
            Format::Jsonl => record.to_string(),
        };
        if !self.quiet {
            // A closed downstream pipe (e.g. `fibinv ... | head`) is a normal
            // way for a run to end, not an error.
            if let Err(e) = writeln!(std::io::stdout(), "{text}") {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    std::process::exit(0);
                }
                return Err(e.into());
            }
        }
        if let Some(f) = &mut self.out {
            writeln!(f, "{text}")?;
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let mut emitter = match Emitter::new(&cli) {
        Ok(e) => e,
        Err(e) => return fail(format, e),
    };
    match run(cli, &mut emitter) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => fail(format, e),
    }
}

fn fail(format: Format, err: AppError) -> ExitCode {
    match err {
        AppError::Domain(msg) => {
            match format {
                Format::Table => eprintln!("error: {msg}"),
                Format::Jsonl => eprintln!("{}", json!({"kind": "error", "message": msg})),
            }
            ExitCode::from(1)
        }
        AppError::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, em: &mut Emitter) -> Result<bool, AppError> {
    let ceiling = cli.max_index;
    match cli.command {
        Command::Seq { family, k } => {
            let family = family.family();
            let v = family.value_with_ceiling(k, ceiling)?;
            em.line(
                v.to_string(),
                json!({"kind": "value", "family": family.to_string(), "k": k, "value": v.to_string()}),
            )?;
            Ok(true)
        }
        Command::Inv { family, m, n } => {
            let family = family.family();
            let a = family.value_with_ceiling(m, ceiling)?;
            let b = family.value_with_ceiling(n, ceiling)?;
            let base = json!({"kind": "inverse", "family": family.to_string(), "m": m, "n": n});
            match mod_inverse(&a, &b)? {
                InverseResult::Residue(r) => em.line(
                    r.to_string(),
                    merged(base, json!({"outcome": "residue", "residue": r.to_string()})),
                )?,
                InverseResult::NonInvertible => em.line(
                    "NONINVERTIBLE".to_string(),
                    merged(base, json!({"outcome": "noninvertible"})),
                )?,
            }
            Ok(true)
        }
        Command::Classify { family, m, n, certify } => {
            let family = family.family();
            let c = match family {
                Family::Fib => classify_fib_with_ceiling(m, n, ceiling)?,
                Family::Lucas => classify_lucas_with_ceiling(m, n, ceiling)?,
            };
            let base =
                json!({"kind": "classification", "family": family.to_string(), "m": m, "n": n});
            let (mut table, mut record) = match c {
                Classification::Solution { ell, case } => (
                    format!("solution l={ell} case={case}"),
                    merged(
                        base,
                        json!({"outcome": "solution", "l": ell, "case": case.to_string()}),
                    ),
                ),
                Classification::NotFibonacci => {
                    ("not_fibonacci".to_string(), merged(base, json!({"outcome": "not_fibonacci"})))
                }
                Classification::NotLucas => {
                    ("not_lucas".to_string(), merged(base, json!({"outcome": "not_lucas"})))
                }
                Classification::NonInvertible => {
                    ("noninvertible".to_string(), merged(base, json!({"outcome": "noninvertible"})))
                }
            };
            if certify {
                let verdict = oracle_classify_with_ceiling(family, m, n, ceiling)?;
                if let Some(r) = &verdict.residue {
                    table.push_str(&format!(" residue={r}"));
                    record["residue"] = Value::String(r.to_string());
                }
                if let Classification::Solution { ell, .. } = c {
                    let (coeff, residual) = certificate(family, ell, m, n, ceiling)?;
                    table.push_str(&format!(" coeff={coeff} residual={residual}"));
                    record["coeff"] = Value::String(coeff.to_string());
                    record["residual"] = Value::String(residual.to_string());
                }
            }
            em.line(table, record)?;
            Ok(true)
        }
        Command::Enumerate { family, n_max, census } => {
            let family = family.family();
            if census {
                let census = solution_census(family, n_max)?;
                for cell in &census.cells {
                    em.line(
                        format!("n={} case={} count={}", cell.n, cell.case, cell.count),
                        json!({"kind": "census_cell", "family": family.to_string(),
                               "n": cell.n, "case": cell.case.to_string(), "count": cell.count}),
                    )?;
                }
                for (case, count) in &census.per_case {
                    em.line(
                        format!("case={case} count={count}"),
                        json!({"kind": "census_case", "family": family.to_string(),
                               "case": case.to_string(), "count": count}),
                    )?;
                }
                em.line(
                    format!("n_max={} total={}", census.n_max, census.total),
                    json!({"kind": "census_total", "family": family.to_string(),
                           "n_max": census.n_max, "total": census.total}),
                )?;
            } else {
                for s in enumerate_solutions(family, n_max)? {
                    em.line(
                        format!("n={} m={} l={} case={}", s.n, s.m, s.ell, s.case),
                        json!({"kind": "solution", "family": family.to_string(),
                               "n": s.n, "m": s.m, "l": s.ell, "case": s.case.to_string()}),
                    )?;
                }
            }
            Ok(true)
        }
        Command::Verify { suite, family, bound, n_min, n_max } => {
            check_suite_flags(suite, family.is_some(), bound, n_min, n_max)?;
            let family = family.map(FamilyArg::family);
            match suite {
                Suite::Lemma1 => verify::lemma1(em, bound.unwrap_or(60)),
                Suite::Lemma2 => verify::lemma2(em, bound.unwrap_or(40)),
                Suite::Lemma3 => verify::lemma3(em, bound.unwrap_or(100), n_max.unwrap_or(60)),
                Suite::Lemma4 => verify::lemma4(em, bound.unwrap_or(30), n_max.unwrap_or(30)),
                Suite::Piecewise => verify::piecewise(em, family, n_max.unwrap_or(80)),
                Suite::Theorem => verify::theorem(em, family, n_min, n_max.unwrap_or(50)),
            }
        }
    }
}

/// Rejects flags that have no meaning for the chosen suite.
fn check_suite_flags(
    suite: Suite,
    family: bool,
    bound: Option<i64>,
    n_min: Option<i64>,
    n_max: Option<i64>,
) -> Result<(), AppError> {
    let reject = |flag: &str, name: &str| {
        Err(AppError::Usage(format!("{flag} does not apply to suite {name}")))
    };
    match suite {
        Suite::Lemma1 | Suite::Lemma2 => {
            let name = if suite == Suite::Lemma1 { "lemma1" } else { "lemma2" };
            if family {
                return reject("--family", name);
            }
            if n_min.is_some() {
                return reject("--n-min", name);
            }
            if n_max.is_some() {
                return reject("--n-max", name);
            }
        }
        Suite::Lemma3 | Suite::Lemma4 => {
            let name = if suite == Suite::Lemma3 { "lemma3" } else { "lemma4" };
            if family {
                return reject("--family", name);
            }
            if n_min.is_some() {
                return reject("--n-min", name);
            }
        }
        Suite::Piecewise => {
            if bound.is_some() {
                return reject("--bound", "piecewise");
            }
            if n_min.is_some() {
                return reject("--n-min", "piecewise");
            }
        }
        Suite::Theorem => {
            if bound.is_some() {
                return reject("--bound", "theorem");
            }
        }
    }
    Ok(())
}

/// Independent `(coefficient, remainder)` certificate for a solution: the
/// closed piecewise route when the triple lies in its window, otherwise
/// division straight from the definition. The remainder is 1 for every
/// genuine solution with modulus > 1.
fn certificate(
    family: Family,
    ell: i64,
    m: i64,
    n: i64,
    ceiling: i64,
) -> Result<(BigInt, BigInt), AppError> {
    let windowed = match family {
        Family::Fib => (2..n).contains(&ell) && n >= 5 && m > n - ell && m < 4 * n,
        Family::Lucas => (1..n).contains(&ell) && n >= 6 && m >= n - ell && m <= 4 * n,
    };
    if windowed {
        let cr = match family {
            Family::Fib => fib_coeff_residual(ell, m, n)?,
            Family::Lucas => lucas_coeff_residual(ell, m, n)?,
        };
        return Ok((cr.coeff, cr.residual_piecewise));
    }
    let vl = family.value_with_ceiling(ell, ceiling)?;
    let vm = family.value_with_ceiling(m, ceiling)?;
    let vn = family.value_with_ceiling(n, ceiling)?;
    let remainder = (&vl * &vm).mod_floor(&vn);
    let coeff = (vl * vm - &remainder) / vn;
    Ok((coeff, remainder))
}

/// Folds `extra`'s fields into `base` (both must be objects).
fn merged(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}
