//! Serialization of a [`VerificationReport`] as JSON, CSV or Markdown.
//!
//! All three are deterministic. JSON may carry a `meta` block (tool version
//! and the checksum of the audited listing); pass `None` for the meta to
//! get byte-identical output across versions.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{EntryId, VerificationReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::Usage(format!(
                "unknown report format {other:?} (expected json, csv or markdown)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportMeta {
    pub tool: String,
    pub version: String,
    pub catalog_sha256: String,
}

impl ReportMeta {
    pub fn new(catalog_sha256: impl Into<String>) -> Self {
        ReportMeta {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            catalog_sha256: catalog_sha256.into(),
        }
    }
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<&'a ReportMeta>,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

pub const CSV_HEADER: [&str; 10] = [
    "rank",
    "index",
    "family_ok",
    "tiles_ok",
    "witness_claimed",
    "witness_convention",
    "witness_repaired",
    "rep_claimed",
    "rep_computed",
    "duplicate_of",
];

/// Renders `report`; `format` is one of `json`, `csv`, `markdown`.
pub fn export_report(
    report: &VerificationReport,
    format: &str,
    meta: Option<&ReportMeta>,
) -> Result<String> {
    match format.parse()? {
        ReportFormat::Json => to_json(report, meta),
        ReportFormat::Csv => to_csv(report),
        ReportFormat::Markdown => Ok(to_markdown(report)),
    }
}

fn to_json(report: &VerificationReport, meta: Option<&ReportMeta>) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&JsonDoc { meta, report })
        .map_err(|e| Error::Usage(format!("json serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn opt_id(id: Option<EntryId>) -> String {
    id.map(|i| i.to_string()).unwrap_or_default()
}

fn to_csv(report: &VerificationReport) -> Result<String> {
    let io = |e: csv::Error| Error::Usage(format!("csv serialization failed: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(io)?;
    for e in &report.entries {
        w.write_record([
            e.id.rank.to_string(),
            e.id.index.to_string(),
            e.family_ok.to_string(),
            e.tiles_ok.to_string(),
            e.witness_claimed.clone().unwrap_or_default(),
            e.witness_convention
                .map(|c| c.as_str().to_string())
                .unwrap_or_default(),
            e.witness_repaired.clone().unwrap_or_default(),
            e.rep_claimed.to_string(),
            opt_id(e.rep_computed),
            opt_id(e.duplicate_of),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Usage(format!("csv serialization failed: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn to_markdown(report: &VerificationReport) -> String {
    let s = &report.summary;
    let mut out = String::new();
    let _ = writeln!(out, "# Catalog audit\n");
    for (label, value) in [
        ("Labeled entries", s.labeled_entries),
        ("Representatives", s.representatives),
        ("Distinct tiles", s.distinct_tiles),
        ("Classes", s.classes),
        ("Family check failures", s.family_failures),
        ("Tiling check failures", s.tiling_failures),
        ("Witnesses valid as printed", s.witness_primary),
        ("Witnesses valid as inverse", s.witness_inverse),
        (
            "Witnesses valid left to right",
            s.witness_opposite_composition,
        ),
        ("Witnesses repaired", s.witness_repaired),
        ("No witness exists", s.no_witness_exists),
        ("Representative mismatches", s.representative_mismatches),
        ("Duplicate pairs", s.duplicate_pairs),
        ("Failures", s.failures),
    ] {
        let _ = writeln!(out, "- {label}: {value}");
    }
    for (rank, classes) in &s.per_rank_class_sizes {
        let _ = writeln!(out, "\n## Rank {rank}\n");
        let _ = writeln!(out, "| Representative | Distinct tiles | Labeled entries |");
        let _ = writeln!(out, "|---|---:|---:|");
        for c in classes {
            let rep = c
                .representative
                .map_or("(none listed)".to_string(), |r| r.to_string());
            let _ = writeln!(out, "| {rep} | {} | {} |", c.size, c.labeled);
        }
    }
    let _ = writeln!(out, "\n## Findings\n");
    if s.findings.is_empty() {
        let _ = writeln!(out, "None.");
    }
    for f in &s.findings {
        let _ = writeln!(out, "- {f}");
    }
    out
}
