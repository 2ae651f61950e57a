//! Rendering of command results. Every result carries both its text form and
//! its JSON form, built from the same values.

use hbk_core::catalog::{EntryReport, Summary};
use std::fmt::Display;

use hbk_core::{AnnulusCensus, Explanation, ExteriorVerdict, Verdict};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    /// Wraps `fields` in the versioned envelope shared by all commands.
    pub fn new(command: &str, text: String, fields: Value) -> Self {
        let mut obj = Map::new();
        obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
        obj.insert("command".into(), json!(command));
        if let Value::Object(fields) = fields {
            obj.extend(fields);
        }
        Report {
            text,
            json: Value::Object(obj),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                serde_json::to_string_pretty(&self.json).expect("JSON values serialize")
            }
        }
    }
}

/// Same shape as a verdict: `value (reason; citations)`.
pub fn explained_text(value: &impl Display, why: &Explanation) -> String {
    format!("{value} ({}; {})", why.reason, why.citations.join(", "))
}

pub fn census_json(c: &AnnulusCensus) -> Value {
    json!({ "count": c.count, "slopes": c.slopes })
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({ "status": v.status, "reason": v.reason, "citations": v.citations })
}

pub fn exterior_json(v: &ExteriorVerdict) -> Value {
    json!({ "status": v.status, "reason": v.reason, "citations": v.citations })
}

pub fn entry_report_text(r: &EntryReport) -> String {
    let mut out = format!("{}:", r.name);
    if r.checks.is_empty() {
        out.push_str(" no checkable fields");
    }
    for c in &r.checks {
        out.push_str(&format!(
            "\n  {:<30} {:<4}  engine: {}; expected: {} [{}]",
            c.field, c.outcome, c.engine, c.expected, c.source
        ));
    }
    out
}

pub fn entry_report_json(r: &EntryReport) -> Value {
    json!({ "name": r.name, "failures": r.failures(), "checks": r.checks })
}

pub fn summary_text(s: &Summary) -> String {
    let mut parts: Vec<String> = s.reports.iter().map(entry_report_text).collect();
    if !s.skipped_entries.is_empty() {
        parts.push(format!(
            "literature only, not run: {}",
            s.skipped_entries.join(", ")
        ));
    }
    parts.push(format!(
        "{} passed, {} failed, {} skipped",
        s.passed, s.failed, s.skipped
    ));
    parts.join("\n")
}

pub fn summary_json(s: &Summary) -> Value {
    json!({
        "entries": s.reports.iter().map(entry_report_json).collect::<Vec<_>>(),
        "literature_only": s.skipped_entries,
        "passed": s.passed,
        "failed": s.failed,
        "skipped": s.skipped,
    })
}
