//! `batch`: pairwise comparisons read from a CSV file.
//!
//! Each row is independent. A row that cannot be read, parsed or decided
//! becomes an error record in the report; the run itself only fails when the
//! input file or the output path is unusable.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hbk_core::{equivalent, equivalent_up_to_mirror, exterior_homeomorphic, parse_spec, SpecError};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::report::{exterior_json, verdict_json, Report};

const HEADER: [&str; 3] = ["spec_a", "spec_b", "mode"];

#[derive(Debug, Deserialize)]
struct Row {
    spec_a: String,
    spec_b: String,
    mode: String,
}

struct Outcome {
    text: String,
    json: Value,
    status: String,
}

fn error(kind: &str, message: String) -> Outcome {
    Outcome {
        text: format!("error ({kind}): {message}"),
        json: json!({ "error": { "kind": kind, "message": message } }),
        status: "error".into(),
    }
}

fn spec_error(which: &str, e: SpecError) -> Outcome {
    let kind = match e {
        SpecError::Parse(_) => "parse",
        SpecError::Tangle(_) => "tangle",
    };
    error(kind, format!("{which}: {e}"))
}

fn evaluate(row: &Row) -> Outcome {
    let a = match parse_spec(&row.spec_a) {
        Ok(s) => s,
        Err(e) => return spec_error("spec_a", e),
    };
    let b = match parse_spec(&row.spec_b) {
        Ok(s) => s,
        Err(e) => return spec_error("spec_b", e),
    };
    let verdict = match row.mode.trim() {
        "equiv" => equivalent(&a, &b),
        "mirror" => equivalent_up_to_mirror(&a, &b),
        "exterior" => {
            let v = exterior_homeomorphic(&a, &b);
            return Outcome {
                text: v.to_string(),
                json: exterior_json(&v),
                status: v.status.to_string(),
            };
        }
        other => {
            return error(
                "mode",
                format!("unknown mode `{other}` (expected equiv, mirror or exterior)"),
            )
        }
    };
    match verdict {
        Ok(v) => Outcome {
            text: v.to_string(),
            json: verdict_json(&v),
            status: v.status.to_string(),
        },
        Err(e) => error("engine", e.to_string()),
    }
}

pub fn run(pairs: &Path, out: &Path, format: crate::report::Format) -> Result<Report> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(pairs)
        .with_context(|| format!("opening {}", pairs.display()))?;
    let header = reader.headers().context("reading CSV header")?.clone();
    if header.iter().ne(HEADER) {
        bail!(
            "CSV header must be `{}`, found `{}`",
            HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        );
    }

    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for (i, record) in reader.records().enumerate() {
        let n = i + 1;
        let parsed = record.map_err(|e| e.to_string()).and_then(|r| {
            r.deserialize::<Row>(Some(&header))
                .map_err(|e| e.to_string())
        });
        let (fields, outcome) = match parsed {
            Ok(row) => {
                let o = evaluate(&row);
                (
                    json!({ "spec_a": row.spec_a, "spec_b": row.spec_b, "mode": row.mode }),
                    o,
                )
            }
            Err(e) => (json!({}), error("csv", e)),
        };
        *counts.entry(outcome.status.to_lowercase()).or_default() += 1;
        let mut obj = json!({ "row": n });
        for src in [fields, outcome.json] {
            if let (Value::Object(dst), Value::Object(src)) = (&mut obj, src) {
                dst.extend(src);
            }
        }
        lines.push(format!("row {n}: {}", outcome.text));
        rows.push(obj);
    }

    let summary = counts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ");
    let report = Report::new(
        "batch",
        format!(
            "{} rows: {summary}\nreport written to {}",
            rows.len(),
            out.display()
        ),
        json!({ "row_count": rows.len(), "counts": counts, "out": out.display().to_string() }),
    );
    let body = match format {
        crate::report::Format::Text => lines.join("\n") + "\n",
        crate::report::Format::Json => {
            let doc = Report::new(
                "batch",
                String::new(),
                json!({ "rows": rows, "counts": counts }),
            );
            doc.render(format) + "\n"
        }
    };
    fs::write(out, body).with_context(|| format!("writing {}", out.display()))?;
    Ok(report)
}
