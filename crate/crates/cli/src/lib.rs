//! Output records and renderers for the `qkap` binary.

use std::io::{self, Write};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use qkaplansky::checker::Counterexample;
use qkaplansky::{BinaryWord, Bounds, CheckReport, IntPoly, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// One polynomial with its structural flags.
///
/// The zero polynomial is recorded with degree -1 and both flags false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: IndexMap<String, i64>,
    pub degree: i64,
    pub coeffs: Vec<String>,
    pub symmetric: bool,
    pub unimodal: bool,
}

impl OutputRecord {
    pub fn new(family: &str, params: IndexMap<String, i64>, poly: &IntPoly) -> Self {
        Self {
            family: family.to_owned(),
            params,
            degree: poly.degree().map_or(-1, |d| d as i64),
            coeffs: poly.coeffs().iter().map(ToString::to_string).collect(),
            symmetric: poly.is_symmetric().unwrap_or(false),
            unimodal: poly.is_unimodal().unwrap_or(false),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub check: String,
    pub bounds: Bounds,
    pub outcome: Outcome,
    pub counterexamples: Vec<Counterexample>,
    pub instances: u64,
    pub elapsed_ms: u64,
    pub notes: Vec<String>,
}

impl From<&CheckReport> for ReportRecord {
    fn from(r: &CheckReport) -> Self {
        Self {
            check: r.check.to_string(),
            bounds: r.bounds,
            outcome: r.outcome,
            counterexamples: r.counterexamples.clone(),
            instances: r.instances_checked,
            elapsed_ms: r.elapsed.as_millis() as u64,
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRecord {
    pub map: String,
    pub input: String,
    pub output: String,
    pub input_inv: usize,
    pub input_maj: usize,
    pub output_inv: usize,
    pub output_maj: usize,
}

impl BijectionRecord {
    pub fn new(map: &str, input: &BinaryWord, output: &BinaryWord) -> Self {
        Self {
            map: map.to_owned(),
            input: input.to_string(),
            output: output.to_string(),
            input_inv: input.inv(),
            input_maj: input.maj(),
            output_inv: output.inv(),
            output_maj: output.maj(),
        }
    }
}

fn csv_error(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

pub fn render_poly(
    out: &mut dyn Write,
    rec: &OutputRecord,
    poly: &IntPoly,
    fmt: Format,
) -> io::Result<()> {
    match fmt {
        Format::Json => json_line(out, rec),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["exponent", "coefficient"])
                .map_err(csv_error)?;
            for (i, c) in rec.coeffs.iter().enumerate() {
                w.write_record([i.to_string().as_str(), c])
                    .map_err(csv_error)?;
            }
            w.flush()
        }
        Format::Human => {
            let args: Vec<String> = rec.params.values().map(ToString::to_string).collect();
            writeln!(out, "{}({}) = {poly}", rec.family, args.join(", "))?;
            if poly.is_zero() {
                return writeln!(out, "zero polynomial");
            }
            let shape = match poly.unimodality_violation() {
                Ok(None) => "unimodal".to_owned(),
                Ok(Some(i)) => format!("not unimodal (valley at q^{i})"),
                Err(e) => e.to_string(),
            };
            let sym = if rec.symmetric {
                "symmetric"
            } else {
                "not symmetric"
            };
            writeln!(out, "degree {}, {sym}, {shape}", rec.degree)
        }
    }
}

pub fn render_reports(out: &mut dyn Write, reports: &[CheckReport], fmt: Format) -> io::Result<()> {
    let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
    match fmt {
        Format::Json if records.len() == 1 => json_line(out, &records[0]),
        Format::Json => json_line(out, &records),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "check",
                "outcome",
                "instances",
                "counterexamples",
                "elapsed_ms",
            ])
            .map_err(csv_error)?;
            for r in &records {
                w.write_record([
                    r.check.clone(),
                    r.outcome.to_string(),
                    r.instances.to_string(),
                    r.counterexamples.len().to_string(),
                    r.elapsed_ms.to_string(),
                ])
                .map_err(csv_error)?;
            }
            w.flush()
        }
        Format::Human => {
            let width = records
                .iter()
                .map(|r| r.check.len())
                .max()
                .unwrap_or(5)
                .max(5);
            writeln!(
                out,
                "{:<width$}  {:<11}  {:>10}  {:>8}  {:>9}",
                "check", "outcome", "instances", "failures", "time"
            )?;
            for r in &records {
                writeln!(
                    out,
                    "{:<width$}  {:<11}  {:>10}  {:>8}  {:>7}ms",
                    r.check,
                    r.outcome.to_string(),
                    r.instances,
                    r.counterexamples.len(),
                    r.elapsed_ms
                )?;
            }
            for r in &records {
                for note in &r.notes {
                    writeln!(out, "  {}: {note}", r.check)?;
                }
                for c in r.counterexamples.iter().take(5) {
                    let params: Vec<String> =
                        c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(out, "  {}: [{}] {}", r.check, params.join(" "), c.detail)?;
                }
            }
            Ok(())
        }
    }
}

pub fn render_bijection(out: &mut dyn Write, rec: &BijectionRecord, fmt: Format) -> io::Result<()> {
    match fmt {
        Format::Json => json_line(out, rec),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(rec).map_err(csv_error)?;
            w.flush()
        }
        Format::Human => {
            let show = |w: &str| {
                if w.is_empty() {
                    "ε".to_owned()
                } else {
                    w.to_owned()
                }
            };
            writeln!(
                out,
                "{}: {} -> {}",
                rec.map,
                show(&rec.input),
                show(&rec.output)
            )?;
            writeln!(
                out,
                "  input   inv {:>3}  maj {:>3}",
                rec.input_inv, rec.input_maj
            )?;
            writeln!(
                out,
                "  output  inv {:>3}  maj {:>3}",
                rec.output_inv, rec.output_maj
            )
        }
    }
}
