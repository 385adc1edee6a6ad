//! Command-line front end. [`run`] takes the argument list and output sinks
//! so it can be driven from tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::divpow::{colon_inverse_system, InverseSystem};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::resolution::build_resolution;
use crate::verify::{self, check_colon_ideal, full_report, random_trials};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gorlin",
    version,
    about = "Gorenstein-linear resolutions of inverse systems in x, y, z"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the complex for an inverse system read from a JSON file.
    Build {
        #[arg(long)]
        phi: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the symbolic complex over Z[x, y, z, t] (n <= 3).
    Generic {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the verification checks on one inverse system or on random ones.
    Verify {
        /// Inverse system file to verify.
        #[arg(long, conflicts_with_all = ["n", "generic"])]
        phi: Option<PathBuf>,
        /// Verify random specializations of degree 2n - 2.
        #[arg(long, conflicts_with = "generic")]
        n: Option<u32>,
        /// Verify the symbolic complex for this n.
        #[arg(long)]
        generic: Option<u32>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rebuild the four worked n = 3 examples and compare with the stored tables.
    Examples {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The inverse system of (x^n, y^n, z^n) : (x + y + z)^(n-1) and its check.
    Colon {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Rendered {
    text: String,
    code: i32,
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn load(path: &PathBuf) -> Result<InverseSystem> {
    InverseSystem::from_json(&std::fs::read_to_string(path)?)
}

fn build(phi: &InverseSystem, format: Format) -> Result<Rendered> {
    let res = build_resolution(phi)?;
    let text = match format {
        Format::Text => res.to_text(),
        Format::Json => json(&res.to_json())?,
    };
    Ok(Rendered {
        text,
        code: EXIT_OK,
    })
}

fn report_rendered(report: &verify::VerificationReport, format: Format) -> Result<Rendered> {
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => json(report)?,
    };
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Ok(Rendered { text, code })
}

fn execute(command: Command, err: &mut dyn Write) -> Result<(Rendered, Option<PathBuf>)> {
    match command {
        Command::Build { phi, output } => Ok((build(&load(&phi)?, output.format)?, output.out)),
        Command::Generic { n, output } => Ok((
            build(&InverseSystem::generic(n)?, output.format)?,
            output.out,
        )),
        Command::Verify {
            phi,
            n,
            generic,
            trials,
            seed,
            output,
        } => {
            let rendered = match (phi, n, generic) {
                (Some(path), _, _) => {
                    let res = build_resolution(&load(&path)?)?;
                    let report = full_report(&res)?;
                    for c in &report.checks {
                        let _ = writeln!(err, "{}: {:.3?}", c.name, c.elapsed);
                    }
                    report_rendered(&report, output.format)?
                }
                (None, _, Some(g)) => {
                    let res = build_resolution(&InverseSystem::generic(g)?)?;
                    report_rendered(&full_report(&res)?, output.format)?
                }
                (None, Some(n), None) => {
                    let summary = random_trials(n, trials, seed)?;
                    let text = match output.format {
                        Format::Json => json(&summary)?,
                        Format::Text => {
                            let mut t = format!(
                                "n = {}, seed = {}: {} of {} trials verified, {} degenerate draws redrawn\n",
                                summary.n, summary.seed, summary.verified, summary.requested, summary.degenerate
                            );
                            for (trial, name, detail) in &summary.failures {
                                t.push_str(&format!("FAIL trial {trial} {name}: {detail}\n"));
                            }
                            t
                        }
                    };
                    let code = if summary.passed() {
                        EXIT_OK
                    } else {
                        EXIT_CHECK_FAILED
                    };
                    Rendered { text, code }
                }
                (None, None, None) => {
                    return Err(Error::input("verify needs one of --phi, --n or --generic"));
                }
            };
            Ok((rendered, output.out))
        }
        Command::Examples { output } => {
            #[derive(Serialize)]
            struct Entry {
                name: &'static str,
                passed: bool,
                mismatches: Vec<String>,
            }
            let mut entries = Vec::new();
            for f in fixtures::all() {
                let c = f.compare()?;
                entries.push(Entry {
                    name: c.name,
                    passed: c.passed(),
                    mismatches: c.mismatches,
                });
            }
            let code = if entries.iter().all(|e| e.passed) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            let text = match output.format {
                Format::Json => json(&entries)?,
                Format::Text => entries
                    .iter()
                    .map(|e| {
                        let mut line =
                            format!("{} {}\n", if e.passed { "PASS" } else { "FAIL" }, e.name);
                        for m in &e.mismatches {
                            line.push_str(&format!("     {m}\n"));
                        }
                        line
                    })
                    .collect(),
            };
            Ok((Rendered { text, code }, output.out))
        }
        Command::Colon { n, output } => {
            let phi = colon_inverse_system(n)?;
            let check = check_colon_ideal(n)?;
            let code = if check.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            let text = match output.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Colon {
                        inverse_system: crate::divpow::InverseSystemFile,
                        check: verify::CheckResult,
                    }
                    json(&Colon {
                        inverse_system: phi.to_json_file()?,
                        check,
                    })?
                }
                Format::Text => format!(
                    "Phi = {}\n{} {}: {}\n",
                    phi.phi(),
                    if check.passed { "PASS" } else { "FAIL" },
                    check.name,
                    check.detail
                ),
            };
            Ok((Rendered { text, code }, output.out))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegenerateInverseSystem => EXIT_DEGENERATE,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = execute(cli.command, err).and_then(|(rendered, path)| {
        match path {
            Some(p) => std::fs::write(p, &rendered.text)?,
            None => out.write_all(rendered.text.as_bytes())?,
        }
        Ok(rendered.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
