//! The `wedgewalk` command line: counts, series, verification suites,
//! asymptotic constants, a combined report and the discrepancy ledger.
//!
//! Every subcommand writes to stdout or to `--output`. JSON documents carry
//! `"schema": 1` and encode big integers as strings. Exit codes: 0 success,
//! 1 unexpected verification failure, 2 invalid flags, 3 resource budget.

mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::asymptotics::{
    accuracy_table, constant_a0, constant_b0, constant_halfplane, constant_theta, constants_a1a2,
    free_walk_validation, p_pieces_asymptotics, root_audit, A1A2Method, AsymptoticReport, MAX_DIGITS,
    ROOT_AUDIT_MAX_K,
};
use crate::closedform::{gf_series, GfKind};
use crate::enumerate::{count_walks, ModelKind, WedgeModel};
use crate::error::{Error, Result};
use crate::exact::SeriesJson;
use crate::ledger;

pub use verify::{
    bargraph_check, dyck_check, funceq_points, kernel_root_checks, run_suite, suite, suites, CheckLine,
    Status, SuiteSpec, Verdict,
};

/// Version of every JSON document written by the CLI.
pub const SCHEMA: u32 = 1;

/// Environment variable holding the default working precision in digits.
pub const DIGITS_ENV: &str = "WEDGEWALK_DIGITS";

pub const DEFAULT_DIGITS: usize = 30;

/// Largest walk length accepted by `count` and the fits.
pub const N_BUDGET: usize = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "wedgewalk",
    version,
    about = "Partially directed walks in wedges: counts, series, checks and constants"
)]
pub struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FitMethod {
    Fit,
    Analytic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Constant {
    #[value(name = "A0")]
    A0,
    #[value(name = "A1A2")]
    A1A2,
    #[value(name = "accuracy")]
    Accuracy,
    #[value(name = "theta")]
    Theta,
    #[value(name = "B0")]
    B0,
    #[value(name = "halfplane")]
    Halfplane,
    #[value(name = "p_pieces")]
    PPieces,
    #[value(name = "roots")]
    Roots,
    #[value(name = "free")]
    Free,
    #[value(name = "all")]
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact counts of walks of length 0..=n.
    Count {
        #[arg(long, value_parser = parse_model)]
        model: ModelKind,
        #[arg(long, default_value_t = 1)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Coefficients of an explicit generating function.
    Series {
        /// free, dyck, bargraph:P, sym_f1, sym_g1, asym_h1, asym_k1, halfplane,
        /// theta_sym:A, theta_asym:q|p, f_aya:A, h_aya_raw:A, h_aya_simplified:A
        #[arg(long, value_parser = parse_kind)]
        kind: GfKind,
        #[arg(long, default_value_t = 30)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite from the manifest, or all of them.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Series order; the manifest default when omitted.
        #[arg(long)]
        order: Option<i64>,
    },
    /// Asymptotic constants as JSON reports.
    Asympt {
        #[arg(long = "const", value_enum, ignore_case = true)]
        constant: Constant,
        /// Working precision; defaults to $WEDGEWALK_DIGITS or 30.
        #[arg(long)]
        digits: Option<usize>,
        /// Largest length used by fits and ratios.
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = FitMethod::Fit)]
        method: FitMethod,
        /// Largest k for the root audit.
        #[arg(long, default_value_t = 20)]
        kmax: i64,
    },
    /// Counts, every suite, every constant and the ledger in one JSON document.
    Report {
        #[arg(long)]
        digits: Option<usize>,
        /// Length of the count tables included.
        #[arg(long, default_value_t = 40)]
        n: usize,
    },
    /// Documented discrepancies between printed formulas and enumeration.
    Ledger {
        #[command(subcommand)]
        action: LedgerAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum LedgerAction {
    List,
    Explain { id: String },
}

fn parse_model(s: &str) -> std::result::Result<ModelKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<GfKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Text produced by a command and whether it counts as a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, failed: false }
    }
}

#[derive(Serialize)]
struct Doc<T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: T,
}

fn to_json<T: Serialize>(body: T) -> String {
    let mut s = serde_json::to_string_pretty(&Doc { schema: SCHEMA, body }).expect("documents serialise");
    s.push('\n');
    s
}

/// `$WEDGEWALK_DIGITS`, or the built-in default when unset.
pub fn default_digits() -> Result<usize> {
    match std::env::var(DIGITS_ENV) {
        Err(_) => Ok(DEFAULT_DIGITS),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("{DIGITS_ENV}={v:?} is not a positive integer"))),
    }
}

fn digits_or_default(digits: Option<usize>) -> Result<usize> {
    let d = match digits {
        Some(d) => d,
        None => default_digits()?,
    };
    if d == 0 {
        return Err(Error::Invalid("digits must be positive".into()));
    }
    if d > MAX_DIGITS {
        return Err(Error::Budget(format!("at most {MAX_DIGITS} digits, got {d}")));
    }
    Ok(d)
}

fn check_n(n: usize) -> Result<()> {
    if n > N_BUDGET {
        return Err(Error::Budget(format!(
            "lengths up to {N_BUDGET} are supported, got {n}"
        )));
    }
    Ok(())
}

fn count(model: ModelKind, p: u32, n: usize, format: Format) -> Result<String> {
    check_n(n)?;
    let table = count_walks(WedgeModel::new(model, p)?, n)?;
    Ok(match format {
        Format::Csv => table.to_csv(),
        Format::Json => to_json(&table),
    })
}

fn series(kind: &GfKind, order: i64, format: Format) -> Result<String> {
    let s = gf_series(kind, order)?;
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for n in s.valuation().min(0)..=order {
                let _ = writeln!(out, "{n},{}", s.coeff(n));
            }
            out
        }
        Format::Json => to_json(json!({ "kind": kind.to_string(), "series": SeriesJson::from(s) })),
    })
}

/// Runs the named suite, or every manifest suite for `"all"`.
pub fn verify_suites(name: &str, order: Option<i64>) -> Result<Vec<Verdict>> {
    if name == "all" {
        suites().iter().map(|s| run_suite(&s.name, order)).collect()
    } else {
        Ok(vec![run_suite(name, order)?])
    }
}

fn aggregate(verdicts: &[Verdict]) -> Status {
    if verdicts.iter().any(Verdict::failed) {
        Status::Fail
    } else if verdicts.iter().any(|v| v.status == Status::Reported) {
        Status::Reported
    } else {
        Status::Pass
    }
}

fn reports(rs: impl IntoIterator<Item = AsymptoticReport>) -> Value {
    serde_json::to_value(rs.into_iter().collect::<Vec<_>>()).expect("reports serialise")
}

/// The JSON body for one `--const` choice.
pub fn asympt_value(
    constant: Constant,
    digits: usize,
    nmax: Option<usize>,
    method: FitMethod,
    kmax: i64,
) -> Result<Value> {
    if let Some(n) = nmax {
        check_n(n)?;
    }
    if !(-1..=ROOT_AUDIT_MAX_K).contains(&kmax) {
        return Err(Error::Budget(format!(
            "root audit supports k in -1..={ROOT_AUDIT_MAX_K}, got {kmax}"
        )));
    }
    Ok(match constant {
        Constant::A0 => reports([constant_a0(digits)?]),
        Constant::A1A2 => {
            let m = match method {
                FitMethod::Fit => A1A2Method::Fit,
                FitMethod::Analytic => A1A2Method::Analytic,
            };
            reports(constants_a1a2(m, digits, nmax.unwrap_or(200))?)
        }
        Constant::Accuracy => serde_json::to_value(accuracy_table()?).expect("table serialises"),
        Constant::Theta => reports([constant_theta(digits)?]),
        Constant::B0 => {
            let n = nmax.unwrap_or(400);
            if n < 40 {
                return Err(Error::Invalid(format!("B0 needs --nmax >= 40, got {n}")));
            }
            reports(constant_b0(&[n / 4, n / 2, n], digits)?)
        }
        Constant::Halfplane => reports(constant_halfplane(nmax.unwrap_or(400), digits)?),
        Constant::PPieces => reports(p_pieces_asymptotics(nmax.unwrap_or(200), digits)?),
        Constant::Roots => serde_json::to_value(root_audit(kmax, digits)?).expect("audit serialises"),
        Constant::Free => reports(free_walk_validation(nmax.unwrap_or(120), digits)?),
        Constant::All => {
            let mut all = serde_json::Map::new();
            for c in Constant::value_variants()
                .iter()
                .copied()
                .filter(|&c| c != Constant::All)
            {
                let name = c.to_possible_value().expect("named").get_name().to_string();
                let n = match c {
                    Constant::A1A2
                    | Constant::B0
                    | Constant::Halfplane
                    | Constant::PPieces
                    | Constant::Free => nmax,
                    _ => None,
                };
                all.insert(name, asympt_value(c, digits, n, method, kmax)?);
            }
            Value::Object(all)
        }
    })
}

fn report(digits: usize, n: usize) -> Result<Outcome> {
    check_n(n)?;
    let mut counts = Vec::new();
    for kind in ModelKind::ALL {
        counts.push(count_walks(WedgeModel::new(kind, 1)?, n)?);
    }
    let verdicts = verify_suites("all", None)?;
    let status = aggregate(&verdicts);
    let constants = asympt_value(Constant::All, digits, None, FitMethod::Fit, 20)?;
    let text = to_json(json!({
        "command": "report",
        "digits": digits,
        "status": status,
        "counts": counts,
        "verdicts": verdicts,
        "asymptotics": constants,
        "ledger": ledger::ENTRIES,
    }));
    Ok(Outcome {
        text,
        failed: status == Status::Fail,
    })
}

/// Executes a parsed command and returns its output.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Count { model, p, n, format } => count(*model, *p, *n, *format).map(Outcome::ok),
        Command::Series { kind, order, format } => series(kind, *order, *format).map(Outcome::ok),
        Command::Verify { suite, order } => {
            let verdicts = verify_suites(suite, *order)?;
            let status = aggregate(&verdicts);
            let text = to_json(json!({ "command": "verify", "status": status, "verdicts": verdicts }));
            Ok(Outcome {
                text,
                failed: status == Status::Fail,
            })
        }
        Command::Asympt {
            constant,
            digits,
            nmax,
            method,
            kmax,
        } => {
            let d = digits_or_default(*digits)?;
            let body = asympt_value(*constant, d, *nmax, *method, *kmax)?;
            let name = constant
                .to_possible_value()
                .expect("named")
                .get_name()
                .to_string();
            Ok(Outcome::ok(to_json(
                json!({ "command": "asympt", "const": name, "digits": d, "result": body }),
            )))
        }
        Command::Report { digits, n } => report(digits_or_default(*digits)?, *n),
        Command::Ledger { action } => match action {
            LedgerAction::List => Ok(Outcome::ok(ledger::list())),
            LedgerAction::Explain { id } => ledger::explain(id).map(Outcome::ok),
        },
    }
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) => 2,
        Error::Budget(_) => 3,
        _ => 1,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("wedgewalk: cannot write output: {e}");
                return 1;
            }
            if out.failed {
                eprintln!("wedgewalk: verification failed");
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("wedgewalk: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("wedgewalk").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn count_csv_rows() {
        let out = execute(&parse(&["count", "--model", "symmetric", "--p", "1", "--n", "5"])).unwrap();
        assert_eq!(out.text, "length,count\n0,1\n1,1\n2,3\n3,5\n4,13\n5,27\n");
    }

    #[test]
    fn count_json_uses_strings() {
        let out = execute(&parse(&[
            "count", "--model", "free", "--n", "2", "--format", "json",
        ]))
        .unwrap();
        let v: Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["counts"], json!(["1", "3", "7"]));
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::Invalid(String::new())), 2);
        assert_eq!(exit_code(&Error::Budget(String::new())), 3);
        assert_eq!(exit_code(&Error::DivisionByZero), 1);
        let e = execute(&parse(&["count", "--model", "free", "--n", "5000"])).unwrap_err();
        assert_eq!(exit_code(&e), 3);
        assert_eq!(run(["wedgewalk", "count", "--model", "nowhere", "--n", "3"]), 2);
    }

    #[test]
    fn series_csv_is_exact() {
        let out = execute(&parse(&["series", "--kind", "dyck", "--order", "4"])).unwrap();
        assert_eq!(out.text, "n,coefficient\n0,1\n1,1\n2,2\n3,5\n4,14\n");
    }
}
