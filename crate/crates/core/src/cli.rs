//! Command-line front end: `list`, `eval`, `expand`, `verify`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain or parameter
//! error, 3 unknown entry, 4 I/O error, 64 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::grid::GridSpec;
use crate::catalog::verify::{oracle_tolerance, verify_default, verify_points, VerificationReport};
use crate::catalog::{catalog, format_complex, parse_complex, ParamSet};
use crate::error::Error;
use crate::spectral::{expand_power, FunctionKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_UNKNOWN_ENTRY: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "hyperlaplace", version, about = "Evaluate and verify closed-form Laplace transforms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog entries with their parameters and conditions.
    List {
        #[arg(long)]
        section: Option<u8>,
    },
    /// Evaluate one entry's closed form.
    Eval {
        entry: String,
        /// name=value pairs; values may be complex, e.g. s=2+1i
        params: Vec<String>,
        /// also integrate the left-hand side numerically
        #[arg(long)]
        oracle: bool,
        /// evaluate even when stated conditions fail
        #[arg(long)]
        relaxed: bool,
        /// comparison tolerance used to pick the oracle tolerance
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Expand kind^exponent(freq·x) into a sum of multiple-angle terms.
    Expand {
        kind: String,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        exponent: u32,
        #[arg(allow_hyphen_values = true)]
        frequency: f64,
        /// also print the Laplace transform at s, given as s=<value>
        #[arg(long)]
        laplace: Option<String>,
    },
    /// Compare closed forms against quadrature on a grid.
    Verify {
        /// entry id, or `all` for every entry on its default grid
        entry: String,
        /// e.g. "α=0;β=0.5,0.8;p=1:2:3"; defaults to the entry's own grid
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// write line-delimited JSON records here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownEntry(_) => EXIT_UNKNOWN_ENTRY,
        _ => EXIT_DOMAIN,
    }
}

/// Parses argv (program name first) and runs. Output goes to the writers.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::List { section } => cmd_list(section, out),
        Command::Eval { entry, params, oracle, relaxed, tol } => cmd_eval(&entry, &params, oracle, relaxed, tol, out, err),
        Command::Expand { kind, exponent, frequency, laplace } => cmd_expand(&kind, exponent, frequency, laplace.as_deref(), out),
        Command::Verify { entry, grid, tol, out: path } => cmd_verify(&entry, grid.as_deref(), tol, path, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Closed) => EXIT_OK,
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "I/O error: {msg}");
            EXIT_IO
        }
    }
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(String),
    /// stdout went away (e.g. piped into `head`); not worth reporting
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Io(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn cmd_list(section: Option<u8>, out: &mut dyn Write) -> CmdResult {
    for e in catalog().entries().iter().filter(|e| section.is_none_or(|s| e.section == s)) {
        let names: Vec<&str> = e.params.iter().map(|p| p.name).collect();
        writeln!(out, "{:<10} Eq. {:<14} ({})  {}", e.id, e.equation, names.join(", "), e.description)?;
        for c in &e.conditions {
            let tag = if c.enforced { "" } else { "  [derivation only, not enforced]" };
            writeln!(out, "{:>12} {}{tag}", "-", c.text)?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_params(items: &[String]) -> Result<ParamSet, Failure> {
    let mut p = ParamSet::new();
    for item in items {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("parameter `{item}` is not name=value")))?;
        p.set(name.trim(), parse_complex(value)?);
    }
    Ok(p)
}

fn cmd_eval(id: &str, params: &[String], oracle: bool, relaxed: bool, tol: f64, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let entry = catalog().get(id)?;
    let p = parse_params(params)?;
    let verdicts = entry.check(&p)?;
    let value = if relaxed { entry.evaluate_relaxed(&p) } else { entry.evaluate(&p) };
    let value = match value {
        Ok(v) => v,
        Err(e) => {
            for v in verdicts.iter().filter(|v| !v.holds) {
                writeln!(err, "condition fails: {}", v.text)?;
            }
            return Err(e.into());
        }
    };
    writeln!(out, "{}", format_complex(value))?;
    writeln!(out, "re = {:?}", value.re)?;
    writeln!(out, "im = {:?}", value.im)?;
    let all = verdicts.iter().all(|v| v.holds || !v.enforced);
    writeln!(out, "conditions: {}", if all { "satisfied" } else { "VIOLATED (relaxed evaluation)" })?;
    for v in &verdicts {
        let mark = if v.holds { "ok" } else { "fails" };
        let tag = if v.enforced { "" } else { " (not enforced)" };
        writeln!(out, "  [{mark}] {}{tag}", v.text)?;
    }
    if oracle {
        let r = entry.oracle(&p, oracle_tolerance(tol))?;
        writeln!(out, "oracle = {} (error estimate {:e}, {} evaluations)", format_complex(r.value), r.error_estimate, r.evaluations)?;
        writeln!(out, "difference = {:e}", (value - r.value).norm())?;
    }
    Ok(EXIT_OK)
}

fn cmd_expand(kind: &str, exponent: u32, frequency: f64, laplace: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let kind: FunctionKind = kind.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let form = expand_power(kind, exponent, frequency)?;
    writeln!(out, "{form}")?;
    if let Some(arg) = laplace {
        let value = arg.strip_prefix("s=").unwrap_or(arg);
        let s = parse_complex(value)?;
        let v = crate::catalog::laplace_spectral(&form, s)?;
        writeln!(out, "{}", format_complex(v))?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(id: &str, grid: Option<&str>, tol: f64, path: Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Failure::Usage(format!("tolerance must be positive, got {tol}")));
    }
    let reports: Vec<VerificationReport> = if id.eq_ignore_ascii_case("all") {
        if grid.is_some() {
            return Err(Failure::Usage("--grid cannot be combined with `all`".into()));
        }
        catalog().entries().iter().map(|e| verify_default(e, tol)).collect()
    } else {
        let entry = catalog().get(id)?;
        match grid {
            Some(text) => {
                let spec = GridSpec::parse(text)?;
                let points = spec.points();
                for p in &points {
                    entry.validate(p)?;
                }
                vec![verify_points(entry, &points, tol, text)]
            }
            None => vec![verify_default(entry, tol)],
        }
    };
    let mut failed = false;
    let mut jsonl = String::new();
    for r in &reports {
        out.write_all(r.to_table().as_bytes())?;
        if r.skip_count() > 0 {
            writeln!(err, "warning: {}: {} point(s) skipped", r.entry, r.skip_count())?;
        }
        failed |= !r.all_passed();
        jsonl.push_str(&r.to_jsonl());
    }
    if let Some(path) = path {
        std::fs::write(&path, jsonl).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}
