//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use schurkit_core::partition::multipartitions;
use schurkit_core::semisimple::cross_check_criterion;
use schurkit_core::{p_invariant, schur_element, Alphabet, Multipartition, SchurFormula};

use crate::format::{
    factored_latex, factored_text, format_factored, format_report, latex_row, poly_latex,
    poly_text, Format,
};
use crate::json::{
    factored_to_json, multipartition_from_json, multipartition_to_json, poly_to_json,
};
use crate::suites::{run_suite, Suite, SuiteConfig};
use crate::theta::{build_specialization, parse_assignment};

/// Environment variable capping the worker thread count.
pub const THREADS_VAR: &str = "SCHURKIT_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "schurkit",
    version,
    about = "Exact Schur elements of degenerate cyclotomic Hecke algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the m-multipartitions of n in enumeration order.
    Enumerate(SweepArgs),
    /// Compute Schur elements of every m-multipartition of n, or of one.
    Schur(SchurArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Decide semisimplicity of a specialization.
    Semisimple(SemisimpleArgs),
    /// Print the parameter invariant P_H(Q).
    Pinv(SweepArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Level: the number of parameters.
    #[arg(long)]
    pub m: usize,
    /// Size: the number of nodes.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormulaName {
    Product,
    Symbol,
    Cancellation,
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    #[arg(long, required_unless_present = "lambda", conflicts_with = "lambda")]
    pub m: Option<usize>,
    #[arg(long, required_unless_present = "lambda", conflicts_with = "lambda")]
    pub n: Option<usize>,
    /// A single multipartition as JSON, e.g. '[[2,1],[],[1]]'.
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = FormulaName::Cancellation)]
    pub formula: FormulaName,
    /// Symbol length for the symbol formula; defaults to ℓ(Λ).
    #[arg(long = "L")]
    pub length: Option<usize>,
    /// Also print the expanded polynomial.
    #[arg(long)]
    pub expand: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random specializations per field for the criterion suite.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Use F_p as the criterion suite's finite field.
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SemisimpleArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// A parameter value, e.g. `q1=2` or `q2=-1/3`; one per parameter.
    #[arg(long = "set", value_parser = parse_set)]
    pub set: Vec<(usize, BigRational)>,
    /// Work over F_p instead of Q.
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn parse_set(text: &str) -> Result<(usize, BigRational), String> {
    parse_assignment(text).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Counterexample,
}

/// Parses `argv` (program name first), runs the command, and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let threads = match thread_cap(std::env::var(THREADS_VAR).ok().as_deref()) {
        Ok(t) => t,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .expect("thread pool");
    let mut buffer = Vec::new();
    let mut diagnostics = Vec::new();
    let outcome = pool.install(|| dispatch(&cli.command, &mut buffer, &mut diagnostics));
    let _ = err.write_all(&diagnostics);
    let _ = out.write_all(&buffer);
    let _ = out.flush();
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Counterexample) => EXIT_COUNTEREXAMPLE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Reads the thread cap; `None` lets rayon choose.
fn thread_cap(value: Option<&str>) -> Result<Option<usize>, String> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(format!("{THREADS_VAR}={v:?}: expected a positive integer")),
        },
    }
}

fn dispatch(command: &Command, out: &mut Vec<u8>, err: &mut Vec<u8>) -> Result<(), Failure> {
    match command {
        Command::Enumerate(args) => enumerate(args, out),
        Command::Schur(args) => schur(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Semisimple(args) => semisimple(args, out, err),
        Command::Pinv(args) => pinv(args, out),
    }
}

fn require_level(m: usize) -> Result<(), Failure> {
    if m == 0 {
        return Err(Failure::Usage("--m: the level must be at least 1".into()));
    }
    Ok(())
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

fn enumerate(args: &SweepArgs, out: &mut Vec<u8>) -> Result<(), Failure> {
    require_level(args.m)?;
    let all: Vec<Multipartition> = multipartitions(args.m, args.n).collect();
    match args.format {
        Format::Json => {
            let list: Vec<Value> = all.iter().map(multipartition_to_json).collect();
            writeln!(out, "{}", pretty(&Value::Array(list))).expect("in-memory write");
        }
        Format::Text => {
            for lam in &all {
                writeln!(out, "{lam}").expect("in-memory write");
            }
        }
        Format::Latex => {
            for lam in &all {
                writeln!(out, "{}", latex_row(&[lam.to_string()])).expect("in-memory write");
            }
        }
    }
    Ok(())
}

fn schur(args: &SchurArgs, out: &mut Vec<u8>) -> Result<(), Failure> {
    let targets: Vec<Multipartition> = match &args.lambda {
        Some(text) => {
            let value: Value =
                serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--lambda: {e}")))?;
            vec![multipartition_from_json(&value)
                .map_err(|e| Failure::Usage(format!("--lambda: {e}")))?]
        }
        None => {
            let (m, n) = (args.m.expect("required"), args.n.expect("required"));
            require_level(m)?;
            multipartitions(m, n).collect()
        }
    };
    if args.length.is_some() && args.formula != FormulaName::Symbol {
        return Err(Failure::Usage(
            "--L applies only to --formula symbol".into(),
        ));
    }
    if let Some(length) = args.length {
        if let Some(lam) = targets.iter().find(|lam| lam.len() > length) {
            return Err(Failure::Usage(format!(
                "--L {length}: shorter than ℓ({lam}) = {}",
                lam.len()
            )));
        }
    }
    let formula = |lam: &Multipartition| match args.formula {
        FormulaName::Product => SchurFormula::Product,
        FormulaName::Symbol => SchurFormula::Symbol(args.length.unwrap_or(lam.len())),
        FormulaName::Cancellation => SchurFormula::CancellationFree,
    };
    let values = targets
        .par_iter()
        .map(|lam| {
            let s = schur_element(lam, formula(lam))?;
            let poly = if args.expand {
                Some(s.expand_in(Alphabet::params(lam.level()))?)
            } else {
                None
            };
            Ok((s, poly))
        })
        .collect::<Result<Vec<_>, schurkit_core::Error>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;

    let rows = targets.iter().zip(&values);
    match args.format {
        Format::Json => {
            let records: Vec<Value> = rows
                .map(|(lam, (s, poly))| {
                    let mut record = json!({
                        "multipartition": multipartition_to_json(lam),
                        "schur": factored_to_json(s),
                    });
                    if let Some(p) = poly {
                        record["expanded"] = poly_to_json(p);
                    }
                    record
                })
                .collect();
            writeln!(out, "{}", pretty(&Value::Array(records))).expect("in-memory write");
        }
        Format::Text => {
            for (lam, (s, poly)) in rows {
                let mut line = format!("{lam}\t{}", factored_text(s));
                if let Some(p) = poly {
                    line.push('\t');
                    line.push_str(&poly_text(p));
                }
                writeln!(out, "{line}").expect("in-memory write");
            }
        }
        Format::Latex => {
            for (lam, (s, poly)) in rows {
                let mut cells = vec![lam.to_string(), factored_latex(s)];
                cells.extend(poly.as_ref().map(poly_latex));
                writeln!(out, "{}", latex_row(&cells)).expect("in-memory write");
            }
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut Vec<u8>) -> Result<(), Failure> {
    require_level(args.m)?;
    if let Some(p) = args.modulus {
        schurkit_core::Field::prime(p)
            .map_err(|_| Failure::Usage(format!("--mod {p}: not a prime")))?;
    }
    let config = SuiteConfig {
        m: args.m,
        n: args.n,
        seed: args.seed,
        samples: args.samples,
        modulus: args.modulus,
    };
    let outcome = run_suite(args.suite, &config);
    for example in &outcome.counterexamples {
        let line = json!({"suite": args.suite.name(), "counterexample": example});
        writeln!(out, "{line}").expect("in-memory write");
    }
    writeln!(out, "{}", outcome.summary()).expect("in-memory write");
    if outcome.passed() {
        Ok(())
    } else {
        Err(Failure::Counterexample)
    }
}

fn semisimple(args: &SemisimpleArgs, out: &mut Vec<u8>, err: &mut Vec<u8>) -> Result<(), Failure> {
    require_level(args.m)?;
    let theta = build_specialization(args.m, &args.set, args.modulus)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(p) = args.modulus {
        if p as usize <= args.n {
            let _ = writeln!(
                err,
                "warning: p = {p} ≤ n = {}, so n! vanishes in F_{p}",
                args.n
            );
        }
    }
    let report =
        cross_check_criterion(args.m, args.n, &theta).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{}", format_report(&report, args.n, args.format)).expect("in-memory write");
    if report.agreement {
        Ok(())
    } else {
        let _ = writeln!(
            err,
            "error: the criterion and the Schur element scan disagree"
        );
        Err(Failure::Counterexample)
    }
}

fn pinv(args: &SweepArgs, out: &mut Vec<u8>) -> Result<(), Failure> {
    require_level(args.m)?;
    let p = p_invariant(args.m, args.n);
    writeln!(out, "{}", format_factored(&p, args.format)).expect("in-memory write");
    Ok(())
}
