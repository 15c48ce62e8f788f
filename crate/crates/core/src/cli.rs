//! Command-line front end.
//!
//! Exit codes: 0 on success or `PASS`, 1 on a verification `FAIL`, 2 on
//! usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::binomial::{theta_difference_via_b, valuation_lemma_b};
use crate::engine::{
    brute_force_search, full_verify, residue_classes_mod_42, Replayer, SolutionPair, Status,
    VerifyConfig,
};
use crate::error::{Error, Result};
use crate::padic::v_p;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "nagell",
    version,
    about = "Exact verification of x^2 + 7 = 2^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn positive() -> clap::builder::RangedU64ValueParser<u64> {
    clap::value_parser!(u64).range(1..)
}

fn parse_bigint(s: &str) -> std::result::Result<BigInt, String> {
    s.parse().map_err(|_| format!("{s:?} is not an integer"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every (x, n) with x >= 0 and x^2 + 7 = 2^n for n up to the bound.
    Search {
        #[arg(long = "max-n", value_parser = positive(), allow_negative_numbers = true)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the odd residues m mod 42 allowed by the mod-7 reduction.
    Residues,
    /// Show theta^m - theta'^m, B_m, the trace and the theta-equation status.
    Theta {
        #[arg(long, value_parser = positive(), allow_negative_numbers = true)]
        m: u64,
    },
    /// Print v_p(n), or (v_7(B_d), v_7(d)) with --b-sum.
    #[command(group(ArgGroup::new("query").required(true).args(["p", "b_sum"])))]
    Valuation {
        #[arg(long, value_parser = positive(), allow_negative_numbers = true, requires = "n")]
        p: Option<u64>,
        #[arg(long, value_parser = parse_bigint, allow_negative_numbers = true, requires = "p")]
        n: Option<BigInt>,
        #[arg(long = "b-sum", value_parser = positive(), allow_negative_numbers = true, conflicts_with = "p")]
        b_sum: Option<u64>,
    },
    /// Run the full verification and write the certificate.
    Verify {
        #[arg(long = "max-n", value_parser = positive(), allow_negative_numbers = true, default_value_t = 1000)]
        max_n: u64,
        #[arg(long = "k-max", value_parser = positive(), allow_negative_numbers = true, default_value_t = 50)]
        k_max: u64,
        #[arg(long = "d-sweep", value_parser = positive(), allow_negative_numbers = true, default_value_t = 500)]
        d_sweep: u64,
        /// Certificate path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate and report whether it still verifies.
    Check {
        #[arg(long)]
        cert: PathBuf,
    },
}

/// JSON shape of `search --format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchOutput {
    pub max_n: u64,
    pub solutions: Vec<SolutionPair>,
}

impl SearchOutput {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }
}

/// Parses `args` (program name first) and runs the command against the
/// process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn usage(err: &mut dyn Write, flag: &str, e: impl std::fmt::Display) -> std::io::Result<i32> {
    writeln!(err, "error: invalid value for '{flag}': {e}")?;
    Ok(EXIT_USAGE)
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cmd {
        Command::Search { max_n, format } => {
            let solutions = brute_force_search(max_n);
            match format {
                Format::Text => {
                    for s in &solutions {
                        writeln!(out, "({}, {})", s.x, s.n)?;
                    }
                }
                Format::Json => {
                    let doc = SearchOutput { max_n, solutions };
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("serializes")
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Residues => {
            let classes: Vec<String> = residue_classes_mod_42()
                .iter()
                .map(u64::to_string)
                .collect();
            writeln!(out, "{}", classes.join(" "))?;
            Ok(EXIT_OK)
        }
        Command::Theta { m } => {
            let t = match theta_difference_via_b(m) {
                Ok(t) => t,
                Err(e) => return usage(err, "--m", e),
            };
            let trace = crate::ring::theta().pow(m).trace();
            writeln!(out, "m = {m}")?;
            writeln!(out, "theta^m - theta'^m = {}", t.difference)?;
            writeln!(out, "  = {} * sqrt(-7)", t.s)?;
            writeln!(out, "B_m = {}", t.b_sum)?;
            writeln!(out, "trace(theta^m) = {trace}")?;
            writeln!(out, "theta equation: {}", t.theta_equation_holds())?;
            Ok(EXIT_OK)
        }
        Command::Valuation { p, n, b_sum } => {
            if let Some(d) = b_sum {
                let (vb, vd) = match valuation_lemma_b(d) {
                    Ok(v) => v,
                    Err(e) => return usage(err, "--b-sum", e),
                };
                writeln!(out, "v_7(B_{d}) = {vb}")?;
                writeln!(out, "v_7({d}) = {vd}")?;
                return Ok(EXIT_OK);
            }
            let (p, n) = (p.expect("required by clap"), n.expect("required by clap"));
            match v_p(p, &n) {
                Ok(v) => {
                    writeln!(out, "v_{p}({n}) = {v}")?;
                    Ok(EXIT_OK)
                }
                Err(e) => usage(err, "--p", e),
            }
        }
        Command::Verify {
            max_n,
            k_max,
            d_sweep,
            out: path,
        } => {
            let config = VerifyConfig {
                n_max: max_n,
                k_max,
                d_sweep,
            };
            let cert = match full_verify(&config) {
                Ok(c) => c,
                Err(e) => {
                    writeln!(err, "verification FAIL: {e}")?;
                    return Ok(EXIT_FAIL);
                }
            };
            let text = cert.to_json();
            match &path {
                Some(p) => {
                    fs::write(p, &text)?;
                    writeln!(out, "status: {}", cert.status)?;
                    writeln!(out, "certificate: {}", p.display())?;
                }
                None => write!(out, "{text}")?,
            }
            if cert.status == Status::Pass {
                Ok(EXIT_OK)
            } else {
                writeln!(
                    err,
                    "verification FAIL: {}",
                    cert.failed_checks().join(", ")
                )?;
                Ok(EXIT_FAIL)
            }
        }
        Command::Check { cert } => {
            let text = fs::read_to_string(&cert)?;
            let report = Replayer::new().check_str(&text);
            writeln!(out, "status: {}", report.status)?;
            if report.status == Status::Pass {
                Ok(EXIT_OK)
            } else {
                for p in report.problems.iter().take(20) {
                    writeln!(err, "{p}")?;
                }
                if report.problems.len() > 20 {
                    writeln!(err, "... {} more", report.problems.len() - 20)?;
                }
                Ok(EXIT_FAIL)
            }
        }
    }
}
