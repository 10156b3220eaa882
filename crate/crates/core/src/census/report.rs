use std::path::Path;

use serde::Serialize;

use super::{Census, VerificationReport};
use crate::error::{invalid, Error, Result};

/// Version of the JSON envelope and CSV column layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" | "txt" => Ok(Format::Text),
            other => Err(invalid("format", format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema_version: u32,
    kind: &'a str,
    data: &'a T,
}

/// `{"schema_version": .., "kind": kind, "data": value}`, pretty-printed.
pub fn to_json<T: Serialize>(kind: &str, value: &T) -> Result<String> {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        kind,
        data: value,
    };
    let mut text = serde_json::to_string_pretty(&envelope).map_err(|e| Error::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Census output. CSV has one row per class with its size and members;
/// text lists only classes with two or more members.
pub fn emit_census(census: &Census, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json("census", census),
        Format::Csv => csv_text(
            &[
                "class",
                "size",
                "vertices",
                "edges",
                "components",
                "spanning_trees",
                "degree_square_sum",
                "charpoly",
                "members",
            ],
            census.classes.iter().enumerate().map(|(i, c)| {
                let inv = &c.invariants;
                vec![
                    i.to_string(),
                    c.members.len().to_string(),
                    inv.n_vertices.to_string(),
                    inv.n_edges.to_string(),
                    inv.n_components.to_string(),
                    inv.spanning_trees.to_string(),
                    inv.degree_square_sum.to_string(),
                    c.key.to_decimal_strings().join(" "),
                    c.members.join(" "),
                ]
            }),
        ),
        Format::Text => {
            let shared: Vec<_> = census.cospectral_classes().collect();
            let mut out = format!(
                "universe: {}\ngraphs: {}\nclasses: {}\nclasses with cospectral mates: {}\n",
                census.universe,
                census.size,
                census.classes.len(),
                shared.len()
            );
            for c in shared {
                out.push_str(&format!("{} [{}]: {}\n", c.members.len(), c.key, c.members.join(" ")));
            }
            Ok(out)
        }
    }
}

/// Verification output. Text is one line per claim.
pub fn emit_reports(reports: &[VerificationReport], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json("verification", &reports),
        Format::Csv => csv_text(
            &["claim", "status", "runtime_ms", "summary", "counterexample"],
            reports.iter().map(|r| {
                vec![
                    r.claim.clone(),
                    r.status.as_str().to_string(),
                    format!("{:.1}", r.runtime_ms),
                    r.summary(),
                    r.counterexample
                        .as_ref()
                        .map(|c| format!("{}: {}", c.graphs.join(" "), c.detail))
                        .unwrap_or_default(),
                ]
            }),
        ),
        Format::Text => Ok(reports
            .iter()
            .map(|r| {
                let mut line = format!(
                    "{:<14} {:<26} {:>9.1} ms  {}",
                    r.status.as_str(),
                    r.claim,
                    r.runtime_ms,
                    r.summary()
                );
                if let Some(c) = &r.counterexample {
                    line.push_str(&format!("; counterexample {} ({})", c.graphs.join(" "), c.detail));
                }
                line.push('\n');
                line
            })
            .collect()),
    }
}

/// Writes to `path`, or to stdout when `path` is `None`.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
