//! `qspec`: exact checks of Conjecture O and Galkin's bound for Fano
//! complete intersections.
//!
//! Exit codes: 0 when every verdict holds, 1 when a verdict fails (or the
//! requested quantities do not exist for the instance), 2 on invalid input.

mod scan;
mod series;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use qspec_core::report::{ReportDocument, CSV_HEADER};
use qspec_core::{verify_instance, CompleteIntersection};

#[derive(Parser)]
#[command(name = "qspec", version, about = "Exact quantum spectra of Fano complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one complete intersection.
    Check {
        #[arg(long)]
        dim: u32,
        /// Comma-separated degrees, e.g. 2,2,3.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every Fano complete intersection up to the given bounds.
    Scan {
        #[arg(long)]
        max_dim: u32,
        #[arg(long)]
        max_r: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Worker threads (default: number of processors).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Dump the intermediate series and every route to lambda.
    Series {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Json,
    Csv,
    Text,
}

pub(crate) const EXIT_FAIL: u8 = 1;
pub(crate) const EXIT_INVALID: u8 = 2;

pub(crate) fn parse_instance(dim: u32, degrees: Vec<u32>) -> Result<CompleteIntersection, ExitCode> {
    CompleteIntersection::new(dim, degrees).map_err(|err| {
        eprintln!("error: invalid instance: {err}");
        ExitCode::from(EXIT_INVALID)
    })
}

fn run_check(dim: u32, degrees: Vec<u32>, format: Format) -> ExitCode {
    let ci = match parse_instance(dim, degrees) {
        Ok(ci) => ci,
        Err(code) => return code,
    };
    let started = Instant::now();
    let report = verify_instance(&ci);
    let doc = ReportDocument::from_report(&report, Some(started.elapsed().as_millis()));

    let mut stdout = std::io::stdout().lock();
    let written = match format {
        Format::Json => serde_json::to_writer_pretty(&mut stdout, &doc)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(stdout)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut stdout);
            w.write_record(CSV_HEADER)
                .and_then(|_| w.write_record(doc.csv_record()))
                .and_then(|_| w.flush().map_err(csv::Error::from))
                .map_err(std::io::Error::other)
        }
        Format::Text => write!(stdout, "{}", doc.to_text()),
    };
    if let Err(err) = written {
        eprintln!("error: writing report: {err}");
        return ExitCode::from(EXIT_INVALID);
    }
    if doc.passed() {
        ExitCode::SUCCESS
    } else {
        if let Some(d) = &doc.diagnostic {
            eprintln!("diagnostic: {d}");
        }
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { dim, degrees, format } => run_check(dim, degrees, format),
        Command::Scan {
            max_dim,
            max_r,
            format,
            out,
            jobs,
        } => scan::run(max_dim, max_r, format, out.as_deref(), jobs),
        Command::Series { dim, degrees } => series::run(dim, degrees),
    }
}
