mod batch;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use hbk_core::catalog::Catalog;
use hbk_core::{
    census, cf_eval, cf_expand, endpoint_pairing, equivalent, equivalent_up_to_mirror,
    explain_chirality, explain_symmetry, exterior_homeomorphic, parse_spec, ExteriorStatus,
    Fraction, FractionError, HbkSpec, SpecError, Status, Word,
};
use serde_json::json;

use report::{Format, Report};

/// Exact invariants of genus-two handlebody-knots built by tau-tangle
/// replacement on the handcuff graph 4_1.
#[derive(Debug, Parser)]
#[command(name = "hbk", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a twist word, or expand a fraction into its canonical word.
    Eval {
        /// Comma-separated twist counts, e.g. `2,2`.
        #[arg(allow_hyphen_values = true, required_unless_present = "expand")]
        word: Option<String>,
        #[arg(
            long,
            value_name = "P/Q",
            allow_hyphen_values = true,
            conflicts_with = "word"
        )]
        expand: Option<String>,
    },
    /// Essential annuli of the exterior.
    Census {
        spec: String,
    },
    /// Decide whether two handlebody-knots are equivalent.
    Equiv {
        /// First spec, e.g. `k:0;rational:x:2/5`.
        a: String,
        /// Second spec.
        b: String,
        /// Also allow the mirror image of the second knot.
        #[arg(long, conflicts_with = "exterior")]
        mirror: bool,
        /// Compare exteriors instead of the knots themselves.
        #[arg(long)]
        exterior: bool,
        /// Exit with status 3 when the answer is unknown.
        #[arg(long)]
        strict: bool,
    },
    /// Symmetry group of the handlebody-knot.
    Symmetry {
        spec: String,
    },
    /// Whether the handlebody-knot differs from its mirror image.
    Chirality {
        spec: String,
    },
    /// Inspect and verify the named-knot catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the comparisons listed in a CSV file.
    Batch {
        /// CSV with header `spec_a,spec_b,mode`; mode is equiv, mirror or exterior.
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
    },
    /// Compare the engine with the recorded values.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

const EXIT_PARSE: u8 = 1;
const EXIT_TANGLE: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;
const EXIT_VERIFY: u8 = 4;
const EXIT_OTHER: u8 = 5;

fn spec(text: &str) -> Result<HbkSpec> {
    parse_spec(text).with_context(|| format!("in spec `{text}`"))
}

fn eval(word: Option<String>, expand: Option<String>) -> Result<Report> {
    if let Some(r) = expand {
        let r: Fraction = r.parse()?;
        let w = cf_expand(&r)?;
        return Ok(Report::new(
            "eval",
            format!("{w}"),
            json!({ "value": r, "word": w.to_string(), "layout": w.layout().name() }),
        ));
    }
    let w: Word = word.unwrap_or_default().parse()?;
    let r = cf_eval(&w)?;
    let pairing = endpoint_pairing(&w);
    Ok(Report::new(
        "eval",
        format!("{r}\nlayout: {}; endpoints: {pairing}", w.layout().name()),
        json!({
            "value": r,
            "word": w.to_string(),
            "layout": w.layout().name(),
            "pairing": pairing.to_string(),
            "cone": pairing.is_cone(),
        }),
    ))
}

fn catalog(action: CatalogAction) -> Result<(Report, u8)> {
    let cat = Catalog::load()?;
    Ok(match action {
        CatalogAction::List => {
            let text = cat
                .entries()
                .iter()
                .map(|e| {
                    format!(
                        "{:<6} {:<40} {}",
                        e.name,
                        e.spec_text().unwrap_or("-"),
                        e.figure_ref
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let entries: Vec<_> = cat
                .entries()
                .iter()
                .map(|e| json!({ "name": e.name, "spec": e.spec_text(), "figure_ref": e.figure_ref }))
                .collect();
            (
                Report::new("catalog list", text, json!({ "entries": entries })),
                0,
            )
        }
        CatalogAction::Show { name } => {
            let e = cat.lookup(&name)?;
            let expected = serde_json::to_value(&e.expected)?;
            let mut text = format!(
                "name: {}\nspec: {}\nfigure: {}\nsource: {}",
                e.name,
                e.spec_text().unwrap_or("- (literature only)"),
                e.figure_ref,
                e.source
            );
            if let Some(fields) = expected.as_object() {
                for (field, v) in fields {
                    text.push_str(&format!(
                        "\n{field}: {} [{}]",
                        v["value"],
                        v["source"].as_str().unwrap_or("")
                    ));
                }
            }
            let fields = json!({
                "name": e.name,
                "spec": e.spec_text(),
                "figure_ref": e.figure_ref,
                "source": e.source,
                "expected": expected,
            });
            (Report::new("catalog show", text, fields), 0)
        }
        CatalogAction::Verify {
            name: Some(name), ..
        } => {
            let r = cat.verify(&name)?;
            let code = if r.failures() > 0 { EXIT_VERIFY } else { 0 };
            let report = Report::new(
                "catalog verify",
                report::entry_report_text(&r),
                json!({ "entries": [report::entry_report_json(&r)], "failed": r.failures() }),
            );
            (report, code)
        }
        CatalogAction::Verify { name: None, .. } => {
            let s = cat.verify_all();
            let code = if s.is_clean() { 0 } else { EXIT_VERIFY };
            (
                Report::new(
                    "catalog verify",
                    report::summary_text(&s),
                    report::summary_json(&s),
                ),
                code,
            )
        }
    })
}

fn run(cli: Cli) -> Result<(Report, u8)> {
    Ok(match cli.command {
        Command::Eval { word, expand } => (eval(word, expand)?, 0),
        Command::Census { spec: text } => {
            let s = spec(&text)?;
            let c = census(&s)?;
            let mut fields = report::census_json(&c);
            fields["spec"] = json!(s.to_string());
            (Report::new("census", c.to_string(), fields), 0)
        }
        Command::Equiv {
            a,
            b,
            mirror,
            exterior,
            strict,
        } => {
            let (a, b) = (spec(&a)?, spec(&b)?);
            let (text, fields, unknown) = if exterior {
                let v = exterior_homeomorphic(&a, &b);
                (
                    v.to_string(),
                    report::exterior_json(&v),
                    v.status == ExteriorStatus::Unknown,
                )
            } else {
                let v = if mirror {
                    equivalent_up_to_mirror(&a, &b)?
                } else {
                    equivalent(&a, &b)?
                };
                (
                    v.to_string(),
                    report::verdict_json(&v),
                    v.status == Status::Unknown,
                )
            };
            let mode = if exterior {
                "exterior"
            } else if mirror {
                "mirror"
            } else {
                "equiv"
            };
            let mut fields = fields;
            fields["mode"] = json!(mode);
            fields["spec_a"] = json!(a.to_string());
            fields["spec_b"] = json!(b.to_string());
            let code = if strict && unknown { EXIT_UNKNOWN } else { 0 };
            (Report::new("equiv", text, fields), code)
        }
        Command::Symmetry { spec: text } => {
            let s = spec(&text)?;
            let (g, why) = explain_symmetry(&s);
            let fields = json!({
                "spec": s.to_string(),
                "group": g,
                "reason": why.reason,
                "citations": why.citations,
            });
            (
                Report::new("symmetry", report::explained_text(&g, &why), fields),
                0,
            )
        }
        Command::Chirality { spec: text } => {
            let s = spec(&text)?;
            let (c, why) = explain_chirality(&s)?;
            let fields = json!({
                "spec": s.to_string(),
                "chirality": c,
                "reason": why.reason,
                "citations": why.citations,
            });
            (
                Report::new("chirality", report::explained_text(&c, &why), fields),
                0,
            )
        }
        Command::Catalog { action } => catalog(action)?,
        Command::Batch { pairs, out } => {
            if pairs == out {
                bail!("--out must differ from --pairs");
            }
            (batch::run(&pairs, &out, cli.format)?, 0)
        }
    })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<SpecError>() {
            return match e {
                SpecError::Parse(_) => EXIT_PARSE,
                SpecError::Tangle(_) => EXIT_TANGLE,
            };
        }
        if let Some(FractionError::Parse(_) | FractionError::ParseWord(_)) = cause.downcast_ref() {
            return EXIT_PARSE;
        }
    }
    EXIT_OTHER
}

/// Joins the error chain, dropping causes whose text the previous message
/// already contains.
fn describe(err: &anyhow::Error) -> String {
    let mut out = String::new();
    let mut prev = String::new();
    for cause in err.chain() {
        let msg = cause.to_string();
        if !prev.contains(&msg) {
            if !out.is_empty() {
                out.push_str(": ");
            }
            out.push_str(&msg);
        }
        prev = msg;
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok((report, code)) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(io::stdout().lock(), "{}", report.render(format));
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {}", describe(&err));
            ExitCode::from(exit_code(&err))
        }
    }
}
