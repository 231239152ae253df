//! Command-line front end for `sslocus-core`.
//!
//! [`run`] is the whole program minus process plumbing: it takes the argument
//! list and two writers and returns the exit code, so tests drive it in
//! process.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use sslocus_core::oracle::{OracleError, DEFAULT_MAX_P};
use sslocus_core::{quasi_isogeny_height, LocalTable, PolarizationIndex};

pub mod report;
pub mod spec_file;
pub mod verification;

pub use report::{describe, DescribeError, DescribeReport};
pub use spec_file::SpecFile;

pub mod exit {
    pub const SUCCESS: u8 = 0;
    /// The report or help text could not be written.
    pub const IO: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const VALIDATION: u8 = 3;
    pub const VERIFICATION: u8 = 4;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "sslocus",
    version,
    about = "Describe supersingular loci of unitary Shimura varieties (m <= 4) and verify their incidence constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe the geometry of a JSON spec file.
    Describe {
        spec_file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recount the incidence constants over GF(p^2) and diff them against the table.
    Verify {
        #[arg(long)]
        p: u64,
        /// Largest p the enumeration accepts.
        #[arg(long, default_value_t = DEFAULT_MAX_P)]
        max_p: u64,
        /// Worker threads for the line census; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<NonZeroUsize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the height m*j of the quasi-isogeny on N^j.
    ConvertHeight {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        m: u32,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub p: u64,
    pub max_p: u64,
    pub jobs: Option<NonZeroUsize>,
    pub format: Format,
}

fn emit(out: &mut dyn Write, text: &str) -> u8 {
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => exit::SUCCESS,
        Err(_) => exit::IO,
    }
}

/// Parses `args` (including the program name) and runs the command.
/// `color` enables ANSI emphasis in text output.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = emit(err, &text);
                exit::USAGE
            } else {
                emit(out, &text)
            };
        }
    };
    match cli.command {
        Command::Describe { spec_file, format } => {
            describe_command(&spec_file, format, out, err, color)
        }
        Command::Verify {
            p,
            max_p,
            jobs,
            format,
        } => verify_command(
            &VerifyOptions {
                p,
                max_p,
                jobs,
                format,
            },
            &LocalTable::standard(),
            out,
            err,
        ),
        Command::ConvertHeight { m, j } => emit(
            out,
            &format!("{}\n", quasi_isogeny_height(m, PolarizationIndex(j))),
        ),
    }
}

pub fn describe_command(
    path: &Path,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
    color: bool,
) -> u8 {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return exit::USAGE;
        }
    };
    let spec = match SpecFile::parse(&text) {
        Ok(spec) => spec,
        Err(e) => {
            let _ = writeln!(err, "error: MalformedSpecFile: {}: {e}", path.display());
            return exit::USAGE;
        }
    };
    let report = match describe(&spec) {
        Ok(report) => report,
        Err(e) => {
            for message in &e.messages {
                let _ = writeln!(err, "error: {message}");
            }
            return exit::VALIDATION;
        }
    };
    match format {
        Format::Text => emit(out, &report.render_text(color)),
        Format::Json => emit(out, &report.render_json()),
    }
}

/// Runs the verification against `table`; exit 4 when any check fails.
pub fn verify_command(
    options: &VerifyOptions,
    table: &LocalTable,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let workers = options.jobs.unwrap_or_else(verification::default_workers);
    let report = match verification::run_verification(options.p, options.max_p, workers, table) {
        Ok(report) => report,
        Err(e @ (OracleError::NotAnOddPrime { .. } | OracleError::BoundExceeded { .. })) => {
            let _ = writeln!(err, "error: {e}");
            return exit::USAGE;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::VERIFICATION;
        }
    };
    let text = match options.format {
        Format::Text => report.to_string(),
        Format::Json => report::render_json(&verification::report_json(&report)),
    };
    let code = emit(out, &text);
    if code != exit::SUCCESS {
        return code;
    }
    if report.all_passed() {
        exit::SUCCESS
    } else {
        for check in report.failures() {
            let _ = writeln!(err, "check failed: {check}");
        }
        exit::VERIFICATION
    }
}
