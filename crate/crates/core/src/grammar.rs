//! Text forms of tangles and handlebody-knot specs.
//!
//! ```text
//! spec      := "k:" INT ";" tangle
//! tangle    := "rational:" VERTEX ":" FRACTION
//!            | "rational:" VERTEX ":?:" DESCRIPTOR
//!            | "composite:" (VERTEX | "-") ":" [KNOT ("," KNOT)*] ":" DESCRIPTOR [":toroidal"]
//! VERTEX    := "x" | "y" | "z"
//! KNOT      := NAME ("+" | "-" | "=")
//! ```
//!
//! The `?` form records a tangle rational at the vertex whose fraction is not
//! known but which is known not to be `1/n`-rational.

use crate::engine::HbkSpec;
use crate::error::{ParseError, SpecError};
use crate::tangle::{
    validate_rational, CompositeTau, Descriptor, KnotLabel, RationalTau, TauTangle, VertexLabel,
};
use crate::{Fraction, Integer};

/// A `:`-separated field and its byte offset in the original input.
#[derive(Clone, Copy)]
struct Field<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Field<'a> {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError {
            message: message.into(),
            token: self.text.to_string(),
            position: self.at,
        }
    }
}

fn fields(text: &str, base: usize) -> Vec<Field<'_>> {
    let mut at = base;
    text.split(':')
        .map(|t| {
            let f = Field { text: t, at };
            at += t.len() + 1;
            f
        })
        .collect()
}

fn vertex(f: Field<'_>) -> Result<VertexLabel, ParseError> {
    VertexLabel::parse(f.text).ok_or_else(|| f.error("expected vertex x, y or z"))
}

fn descriptor(f: Field<'_>) -> Result<Descriptor, ParseError> {
    Descriptor::parse(f.text).ok_or_else(|| f.error("invalid descriptor"))
}

fn parse_tangle_at(text: &str, base: usize) -> Result<TauTangle, SpecError> {
    let fs = fields(text, base);
    let kind = fs[0];
    match kind.text {
        "rational" => {
            if fs.len() < 3 {
                return Err(kind.error("expected rational:<vertex>:<p>/<q>").into());
            }
            let v = vertex(fs[1])?;
            if fs[2].text == "?" {
                if fs.len() != 4 {
                    return Err(fs[2]
                        .error("expected rational:<vertex>:?:<descriptor>")
                        .into());
                }
                let d = descriptor(fs[3])?;
                return Ok(TauTangle::Rational(RationalTau::unrecorded(v, d)));
            }
            if fs.len() != 3 {
                return Err(fs[3].error("unexpected trailing field").into());
            }
            let r: Fraction = fs[2]
                .text
                .parse()
                .map_err(|e| fs[2].error(format!("invalid fraction ({e})")))?;
            Ok(validate_rational(v, &r)?)
        }
        "composite" => {
            if fs.len() < 4 || fs.len() > 5 {
                return Err(kind
                    .error("expected composite:<vertex|->:<knots>:<descriptor>[:toroidal]")
                    .into());
            }
            let rv = match fs[1].text {
                "-" => None,
                _ => Some(vertex(fs[1])?),
            };
            let mut knots = Vec::new();
            if !fs[2].text.is_empty() {
                let mut at = fs[2].at;
                for k in fs[2].text.split(',') {
                    let field = Field { text: k, at };
                    knots.push(
                        KnotLabel::parse(k).ok_or_else(|| {
                            field.error("expected knot name followed by +, - or =")
                        })?,
                    );
                    at += k.len() + 1;
                }
            }
            let d = descriptor(fs[3])?;
            let atoroidal = match fs.get(4) {
                None => true,
                Some(f) if f.text == "toroidal" => false,
                Some(f) => return Err(f.error("expected `toroidal`").into()),
            };
            Ok(TauTangle::Composite(CompositeTau::new(
                rv, knots, atoroidal, d,
            )))
        }
        _ => Err(kind.error("expected `rational` or `composite`").into()),
    }
}

/// Parses and validates a tangle.
pub fn parse_tangle(text: &str) -> Result<TauTangle, SpecError> {
    parse_tangle_at(text, 0)
}

/// Parses and validates a handlebody-knot spec `k:<int>;<tangle>`.
pub fn parse_spec(text: &str) -> Result<HbkSpec, SpecError> {
    let whole = Field { text, at: 0 };
    let (head, tangle) = text
        .split_once(';')
        .ok_or_else(|| whole.error("expected k:<int>;<tangle>"))?;
    let k_text = head
        .strip_prefix("k:")
        .ok_or_else(|| Field { text: head, at: 0 }.error("expected `k:`"))?;
    let k: Integer = k_text.trim().parse().map_err(|_| {
        Field {
            text: k_text,
            at: 2,
        }
        .error("invalid twist count")
    })?;
    let tau = parse_tangle_at(tangle, head.len() + 1)?;
    Ok(HbkSpec::new(k, tau)?)
}
