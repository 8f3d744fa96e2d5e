//! Command-line front end. [`run`] parses arguments, executes one command
//! and writes either plain text or a versioned JSON report.

mod bench;
mod decimal;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use zetafam_core::coeffs::{family_coeffs, seq_value, FamilyId, SequenceId};
use zetafam_core::families::{
    corpus, eval_identity, export_json, modular_check, test_points, zeta_via, ModularRelationId,
    Suite, VerificationReport, ZetaMethod,
};
use zetafam_core::lambert::PrecisionCtx;

pub use bench::{bench_run, BenchRow};
pub use decimal::truncate_decimal;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "zetafam", version, about = "Odd zeta values through Lambert-series families")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn digits_arg() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(10..)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute ζ(k) to the requested number of decimals.
    Compute {
        #[arg(long)]
        k: i64,
        #[arg(long, env = "ZETA_DEFAULT_DIGITS", default_value_t = 50, value_parser = digits_arg())]
        digits: u32,
        /// A, B, C, D, E, R (Ramanujan) or auto.
        #[arg(long, default_value = "auto")]
        family: String,
    },
    /// Verify a suite of identities or quasi-modular relations.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, env = "ZETA_DEFAULT_DIGITS", default_value_t = 50, value_parser = digits_arg())]
        digits: u32,
    },
    /// Time each applicable family against the merit-4 baseline.
    Bench {
        #[arg(long = "k", value_delimiter = ',', required = true)]
        ks: Vec<i64>,
        #[arg(long, env = "ZETA_DEFAULT_DIGITS", default_value_t = 50, value_parser = digits_arg())]
        digits: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
    },
    /// Print the n-th term of an integer sequence.
    Seq { tag: String, n: u32 },
    /// Print the exact coefficients of a family member.
    Coeffs {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: i64,
    },
    /// Write the identity corpus as JSON ("-" for stdout).
    Export {
        #[arg(long, default_value = "-")]
        path: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Families,
    Fractional,
    K1,
    Derivative,
    Pi,
    Modular,
    All,
}

/// Machine-readable outcome of one command.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: Vec<String>,
    pub results: Value,
    pub timings_ms: BTreeMap<String, f64>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

struct Done {
    report: RunReport,
    text: String,
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn ctx(digits: u32) -> Result<PrecisionCtx, CliError> {
    PrecisionCtx::new(digits).map_err(usage)
}

fn compute(k: i64, digits: u32, family: &str) -> Result<(Value, String, f64), CliError> {
    if k < 3 || k % 2 == 0 {
        return Err(usage(format!("k must be odd and at least 3, got {k}")));
    }
    let method = if family.eq_ignore_ascii_case("auto") {
        ZetaMethod::auto(k).map_err(usage)?
    } else {
        family.parse::<ZetaMethod>().map_err(usage)?
    };
    if !method.supports(k) {
        return Err(usage(format!("family {method} does not cover k = {k}")));
    }
    let c = ctx(digits)?;
    let start = Instant::now();
    let v = zeta_via(method, k, &c).map_err(internal)?;
    let took = ms(start);
    let s = truncate_decimal(&v, digits);
    let res = json!({ "k": k, "digits": digits, "method": method.to_string(), "value": s });
    Ok((res, s, took))
}

fn report_line(r: &VerificationReport) -> (Value, String) {
    let rel = format!("{:.1e}", r.relative_residual());
    let tag = if r.passed { "PASS" } else { "FAIL" };
    (
        json!({ "name": r.name, "passed": r.passed, "relative_residual": rel }),
        format!("{tag} {:<16} relative residual {rel}", r.name),
    )
}

fn modular_reports(c: &PrecisionCtx) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    let points = test_points(c);
    for rel in ModularRelationId::ALL {
        let ks: &[u32] = if rel == ModularRelationId::Qm { &[1, 3, 5, 7] } else { &[3, 5, 7] };
        for (i, z) in points.iter().enumerate() {
            for &k in ks {
                let mut r = modular_check(rel, k, z, c).map_err(internal)?;
                r.name = format!("{rel} k={k} z{i}");
                out.push(r);
            }
        }
    }
    Ok(out)
}

fn verify(suite: SuiteArg, digits: u32) -> Result<(Vec<VerificationReport>, f64), CliError> {
    let c = ctx(digits)?;
    let start = Instant::now();
    let wanted: Option<Suite> = match suite {
        SuiteArg::Families => Some(Suite::Families),
        SuiteArg::Fractional => Some(Suite::Fractional),
        SuiteArg::K1 => Some(Suite::K1),
        SuiteArg::Derivative => Some(Suite::Derivative),
        SuiteArg::Pi => Some(Suite::Pi),
        SuiteArg::Modular | SuiteArg::All => None,
    };
    let mut reports = Vec::new();
    if suite != SuiteArg::Modular {
        for rec in corpus().iter().filter(|r| wanted.is_none_or(|s| r.suite == s)) {
            reports.push(eval_identity(rec, &c).map_err(internal)?);
        }
    }
    if matches!(suite, SuiteArg::Modular | SuiteArg::All) {
        reports.extend(modular_reports(&c)?);
    }
    Ok((reports, ms(start)))
}

fn coeffs_text(family: &str, k: i64) -> Result<(Value, String), CliError> {
    let fam: FamilyId = family.parse().map_err(usage)?;
    let fc = family_coeffs(fam, k).map_err(usage)?;
    let root = if fam.base() == 1 { String::new() } else { format!("·√{}", fam.base()) };
    let mut text = format!("zeta({}) = {}{root}·pi^{}\n", fc.k, fc.pi_coeff, fc.k);
    for (d, c) in &fc.lambert {
        text.push_str(&format!("  + ({c})·S_{}[merit {}]\n", fc.k, fc.merit_of(*d)));
    }
    let value = serde_json::to_value(&fc).map_err(internal)?;
    Ok((value, text.trim_end().to_string()))
}

fn execute(cli: &Cli, argv: Vec<String>) -> Result<Done, CliError> {
    let mut timings = BTreeMap::new();
    let (mut passed, mut failed) = (0, 0);
    let (results, text) = match &cli.command {
        Command::Compute { k, digits, family } => {
            let (res, s, took) = compute(*k, *digits, family)?;
            timings.insert("compute".to_string(), took);
            (res, s)
        }
        Command::Verify { suite, digits } => {
            let (reports, took) = verify(*suite, *digits)?;
            timings.insert("verify".to_string(), took);
            let mut items = Vec::new();
            let mut lines = Vec::new();
            for r in &reports {
                let (v, l) = report_line(r);
                items.push(v);
                lines.push(l);
                if r.passed {
                    passed += 1;
                } else {
                    failed += 1;
                }
            }
            lines.push(format!("{passed} passed, {failed} failed at {digits} digits"));
            (json!({ "digits": digits, "checks": items }), lines.join("\n"))
        }
        Command::Bench { ks, digits, reps } => {
            let c = ctx(*digits)?;
            let rows = bench_run(ks, &c, *reps).map_err(|e| match e {
                bench::BenchError::Usage(m) => CliError::Usage(m),
                bench::BenchError::Internal(m) => CliError::Internal(m),
            })?;
            for r in &rows {
                timings.insert(format!("k={} {}", r.k, r.method), r.median_ms);
            }
            let text = bench::table(&rows);
            let rows: Vec<Value> = rows.iter().map(BenchRow::results_json).collect();
            (json!({ "digits": digits, "rows": rows }), text)
        }
        Command::Seq { tag, n } => {
            let id: SequenceId = tag.parse().map_err(usage)?;
            let v = seq_value(id, *n).map_err(usage)?.to_string();
            (json!({ "tag": id.tag(), "n": n, "value": v }), v)
        }
        Command::Coeffs { family, k } => coeffs_text(family, *k)?,
        Command::Export { path } => {
            let body = export_json(&corpus());
            let n = corpus().len();
            if path.as_os_str() == "-" {
                (json!({ "records": n }), body)
            } else {
                std::fs::write(path, body + "\n").map_err(internal)?;
                let msg = format!("wrote {n} records to {}", path.display());
                (json!({ "records": n, "path": path.display().to_string() }), msg)
            }
        }
    };
    Ok(Done {
        report: RunReport {
            schema: SCHEMA,
            command: argv,
            results,
            timings_ms: timings,
            passed,
            failed,
        },
        text,
    })
}

/// Parse `args` (program name first), execute, write output, return the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let argv = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, argv) {
        Ok(done) => {
            let printed = if cli.json {
                serde_json::to_string_pretty(&done.report).map(|s| writeln!(out, "{s}"))
            } else {
                Ok(writeln!(out, "{}", done.text))
            };
            if !matches!(printed, Ok(Ok(()))) {
                return EXIT_INTERNAL;
            }
            if done.report.failed > 0 {
                EXIT_VERIFY_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let (kind, msg) = match &e {
                CliError::Usage(m) => ("usage error", m),
                CliError::Internal(m) => ("internal error", m),
            };
            let _ = writeln!(err, "zetafam: {kind}: {msg}");
            e.code()
        }
    }
}
