use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use qspec_core::report::{RadiusDoc, ReportDocument, ScanDocument, CSV_HEADER};
use qspec_core::{enumerate_fano_cis, verify_instance};

use crate::{Format, EXIT_FAIL, EXIT_INVALID};

/// Rows carry no timing so that repeated scans are byte-identical.
fn collect_rows(max_dim: u32, max_r: u32, jobs: Option<usize>) -> Result<Vec<ReportDocument>, String> {
    let instances: Vec<_> = enumerate_fano_cis(max_dim, max_r).collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| e.to_string())?;
    // indexed parallel iterators keep enumeration order
    Ok(pool.install(|| {
        instances
            .par_iter()
            .map(|ci| ReportDocument::from_report(&verify_instance(ci), None))
            .collect()
    }))
}

fn write_text(out: &mut dyn Write, rows: &[ReportDocument], failures: usize) -> std::io::Result<()> {
    let yes_no = |b: bool| if b { "yes" } else { "NO" };
    writeln!(
        out,
        "{:>3}  {:<16} {:>4}  {:<28} {:<16} {:<6} {:<6} {:<6} lambda",
        "N", "degrees", "rho", "T", "lambda", "O(1)", "O(2)", "galkin"
    )?;
    for row in rows {
        let t = row.radius.as_ref().map(RadiusDoc::compact).unwrap_or_default();
        let v = &row.verdicts;
        writeln!(
            out,
            "{:>3}  {:<16} {:>4}  {:<28} {:<16} {:<6} {:<6} {:<6} {}",
            row.instance.dim,
            row.instance.degrees.join(","),
            row.instance.rho,
            t,
            row.lambda.as_deref().unwrap_or("-"),
            yes_no(v.conj_o_multiplicity_one),
            yes_no(v.conj_o_roots_of_unity),
            yes_no(v.galkin_strict),
            yes_no(v.lambda_consistent),
        )?;
    }
    writeln!(out, "instances: {}, failures: {}", rows.len(), failures)
}

fn write_csv(out: &mut dyn Write, rows: &[ReportDocument]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(std::io::Error::other)?;
    for row in rows {
        w.write_record(row.csv_record()).map_err(std::io::Error::other)?;
    }
    w.flush()
}

pub fn run(max_dim: u32, max_r: u32, format: Format, out: Option<&Path>, jobs: Option<usize>) -> ExitCode {
    if max_dim < 3 {
        eprintln!("error: --max-dim must be at least 3 (got {max_dim})");
        return ExitCode::from(EXIT_INVALID);
    }
    // open the destination before the work so a bad path fails fast
    let mut sink: Box<dyn Write> = match out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(err) => {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(EXIT_INVALID);
            }
        },
        None => Box::new(std::io::stdout().lock()),
    };

    let started = Instant::now();
    let rows = match collect_rows(max_dim, max_r, jobs) {
        Ok(rows) => rows,
        Err(err) => {
            eprintln!("error: thread pool: {err}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let doc = ScanDocument::new(rows);
    let failures = doc.failures();

    let written = match format {
        Format::Json => serde_json::to_writer_pretty(&mut sink, &doc)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(sink)),
        Format::Csv => write_csv(&mut sink, &doc.rows),
        Format::Text => write_text(&mut sink, &doc.rows, failures),
    }
    .and_then(|_| sink.flush());
    if let Err(err) = written {
        eprintln!("error: writing scan output: {err}");
        return ExitCode::from(EXIT_INVALID);
    }

    eprintln!(
        "scanned {} instances, {} failures, {} ms",
        doc.rows.len(),
        failures,
        started.elapsed().as_millis()
    );
    for row in doc.rows.iter().filter(|r| !r.passed()) {
        eprintln!(
            "FAIL N={} degrees={} {}",
            row.instance.dim,
            row.instance.degrees.join(","),
            row.diagnostic.as_deref().unwrap_or("")
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
