//! Named handlebody-knots with their expected invariants, and a verifier that
//! checks the engine against them.
//!
//! The catalog is a TOML document; the shipped copy lives in
//! `data/catalog.toml` and can be replaced at run time through the
//! `HBK_CATALOG` environment variable. Serialization is canonical: loading
//! the shipped file and writing it back reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::{
    census, chirality, equivalent, equivalent_up_to_mirror, exterior_homeomorphic, symmetry_group,
    AnnulusCount, ChiralityVerdict, ExteriorStatus, HbkSpec, SymmetryGroup,
};
use crate::error::{CatalogError, EngineError};
use crate::grammar::parse_spec;
use crate::verdict::Status;
use crate::Fraction;

pub const SCHEMA_VERSION: u32 = 1;
pub const CATALOG_ENV: &str = "HBK_CATALOG";

const SHIPPED: &str = include_str!("../data/catalog.toml");

/// A value together with where it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sourced<T> {
    pub value: T,
    pub source: String,
}

/// Symmetry groups as listed in the literature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    Z1,
    Z2,
    #[serde(rename = "Z2xZ2")]
    Z2xZ2,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Z1 => "Z1",
            Group::Z2 => "Z2",
            Group::Z2xZ2 => "Z2xZ2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chirality {
    Chiral,
    Amphichiral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Count {
    InfinitelyMany,
    Two,
    One,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedCensus {
    pub count: Count,
    pub slopes: Vec<Fraction>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry_pos: Option<Sourced<Group>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry_full: Option<Sourced<Group>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chirality: Option<Sourced<Chirality>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<Sourced<ExpectedCensus>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequivalent_to: Option<Sourced<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequivalent_up_to_mirror_to: Option<Sourced<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exterior_homeo_to: Option<Sourced<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spec: Option<String>,
    figure_ref: String,
    source: String,
    #[serde(default)]
    expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    schema_version: u32,
    entry: Vec<RawEntry>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    /// `None` for literature-only entries.
    pub spec: Option<HbkSpec>,
    pub figure_ref: String,
    pub source: String,
    pub expected: Expected,
    spec_text: Option<String>,
}

impl CatalogEntry {
    pub fn spec_text(&self) -> Option<&str> {
        self.spec_text.as_deref()
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "skip",
        })
    }
}

/// One checked field of an entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: String,
    pub outcome: Outcome,
    pub engine: String,
    pub expected: String,
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub checks: Vec<FieldCheck>,
}

impl EntryReport {
    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.outcome == Outcome::Fail)
            .count()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub reports: Vec<EntryReport>,
    /// Literature-only entries, not run through the engine.
    pub skipped_entries: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn is_clean(&self) -> bool {
        self.failed == 0
    }
}

impl Catalog {
    pub fn from_toml(text: &str) -> Result<Self, CatalogError> {
        let raw: RawCatalog = toml::from_str(text)?;
        if raw.schema_version != SCHEMA_VERSION {
            return Err(CatalogError::SchemaVersion(raw.schema_version));
        }
        let mut seen = BTreeSet::new();
        let mut entries = Vec::with_capacity(raw.entry.len());
        for e in raw.entry {
            if !seen.insert(e.name.clone()) {
                return Err(CatalogError::Duplicate(e.name));
            }
            let spec = match &e.spec {
                Some(s) => Some(parse_spec(s).map_err(|source| CatalogError::InvalidSpec {
                    name: e.name.clone(),
                    source,
                })?),
                None => None,
            };
            entries.push(CatalogEntry {
                name: e.name,
                spec,
                figure_ref: e.figure_ref,
                source: e.source,
                expected: e.expected,
                spec_text: e.spec,
            });
        }
        let catalog = Self { entries };
        for e in &catalog.entries {
            for name in e.referenced_names() {
                if !seen.contains(name) {
                    return Err(CatalogError::UnknownName(name.clone()));
                }
            }
        }
        Ok(catalog)
    }

    pub fn to_toml(&self) -> Result<String, CatalogError> {
        let raw = RawCatalog {
            schema_version: SCHEMA_VERSION,
            entry: self
                .entries
                .iter()
                .map(|e| RawEntry {
                    name: e.name.clone(),
                    spec: e.spec_text.clone(),
                    figure_ref: e.figure_ref.clone(),
                    source: e.source.clone(),
                    expected: e.expected.clone(),
                })
                .collect(),
        };
        Ok(toml::to_string(&raw)?)
    }

    /// The catalog bundled with the crate.
    pub fn shipped() -> Self {
        Self::from_toml(SHIPPED).expect("bundled catalog is valid")
    }

    pub fn shipped_text() -> &'static str {
        SHIPPED
    }

    /// Loads the file named by `HBK_CATALOG`, or the bundled catalog.
    pub fn load() -> Result<Self, CatalogError> {
        match std::env::var_os(CATALOG_ENV) {
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|source| CatalogError::Io {
                    path: path.to_string_lossy().into_owned(),
                    source,
                })?;
                Self::from_toml(&text)
            }
            None => Ok(Self::shipped()),
        }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn lookup(&self, name: &str) -> Result<&CatalogEntry, CatalogError> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
    }

    /// Runs the engine on one entry and compares it with the expected values.
    pub fn verify(&self, name: &str) -> Result<EntryReport, CatalogError> {
        let entry = self.lookup(name)?;
        let spec = entry
            .spec
            .as_ref()
            .ok_or_else(|| CatalogError::MissingSpec(name.to_string()))?;
        let ex = &entry.expected;
        let mut checks = Vec::new();

        if let Some(want) = &ex.census {
            checks.push(check_census(spec, want));
        }

        let chir = chirality(spec);
        if let Some(want) = &ex.chirality {
            let expected = format!("{:?}", want.value);
            checks.push(match &chir {
                Ok(ChiralityVerdict::Unknown) => {
                    skip("chirality", "Unknown", expected, &want.source)
                }
                Ok(got) => {
                    let ok = matches!(
                        (got, want.value),
                        (ChiralityVerdict::Chiral, Chirality::Chiral)
                            | (ChiralityVerdict::Amphichiral, Chirality::Amphichiral)
                    );
                    compare("chirality", ok, got.to_string(), expected, &want.source)
                }
                Err(e) => skip("chirality", &e.to_string(), expected, &want.source),
            });
        }

        let group = symmetry_group(spec);
        if let Some(want) = &ex.symmetry_full {
            checks.push(check_group("symmetry_full", group, want));
        }
        if let Some(want) = &ex.symmetry_pos {
            // The engine's group equals the positive group once every symmetry
            // is known to preserve orientation.
            if matches!(chir, Ok(ChiralityVerdict::Chiral)) {
                checks.push(check_group("symmetry_pos", group, want));
            } else {
                checks.push(skip(
                    "symmetry_pos",
                    "Unknown",
                    want.value.to_string(),
                    &want.source,
                ));
            }
        }

        if let Some(want) = &ex.inequivalent_to {
            for other in &want.value {
                checks.push(self.check_pair(
                    "inequivalent_to",
                    spec,
                    other,
                    &want.source,
                    |a, b| {
                        let v = equivalent(a, b)?;
                        Ok((v.status == Status::Inequivalent, v.to_string()))
                    },
                )?);
            }
        }
        if let Some(want) = &ex.inequivalent_up_to_mirror_to {
            for other in &want.value {
                checks.push(self.check_pair(
                    "inequivalent_up_to_mirror_to",
                    spec,
                    other,
                    &want.source,
                    |a, b| {
                        let v = equivalent_up_to_mirror(a, b)?;
                        Ok((v.status == Status::Inequivalent, v.to_string()))
                    },
                )?);
            }
        }
        if let Some(want) = &ex.exterior_homeo_to {
            for other in &want.value {
                checks.push(self.check_pair(
                    "exterior_homeo_to",
                    spec,
                    other,
                    &want.source,
                    |a, b| {
                        let v = exterior_homeomorphic(a, b);
                        Ok((
                            v.status == ExteriorStatus::True,
                            format!("{:?} ({})", v.status, v.reason),
                        ))
                    },
                )?);
            }
        }

        Ok(EntryReport {
            name: entry.name.clone(),
            checks,
        })
    }

    /// Verifies every entry that has a spec. Pairwise facts are checked from
    /// the entries that list them.
    pub fn verify_all(&self) -> Summary {
        let mut reports = Vec::new();
        let mut skipped_entries = Vec::new();
        for e in &self.entries {
            match self.verify(&e.name) {
                Ok(r) => reports.push(r),
                Err(_) => skipped_entries.push(e.name.clone()),
            }
        }
        let count = |o: Outcome| {
            reports
                .iter()
                .flat_map(|r| &r.checks)
                .filter(|c| c.outcome == o)
                .count()
        };
        Summary {
            passed: count(Outcome::Pass),
            failed: count(Outcome::Fail),
            skipped: count(Outcome::Skip),
            reports,
            skipped_entries,
        }
    }

    fn check_pair(
        &self,
        field: &str,
        spec: &HbkSpec,
        other: &str,
        source: &str,
        test: impl Fn(&HbkSpec, &HbkSpec) -> Result<(bool, String), EngineError>,
    ) -> Result<FieldCheck, CatalogError> {
        let field = format!("{field} {other}");
        let Some(other_spec) = &self.lookup(other)?.spec else {
            return Ok(skip(&field, "no spec", "true".into(), source));
        };
        Ok(match test(spec, other_spec) {
            Ok((ok, shown)) => compare(&field, ok, shown, "true".into(), source),
            Err(e) => compare(&field, false, e.to_string(), "true".into(), source),
        })
    }
}

impl CatalogEntry {
    fn referenced_names(&self) -> impl Iterator<Item = &String> {
        let ex = &self.expected;
        [
            &ex.inequivalent_to,
            &ex.inequivalent_up_to_mirror_to,
            &ex.exterior_homeo_to,
        ]
        .into_iter()
        .flatten()
        .flat_map(|s| s.value.iter())
    }
}

fn compare(field: &str, ok: bool, engine: String, expected: String, source: &str) -> FieldCheck {
    FieldCheck {
        field: field.to_string(),
        outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        engine,
        expected,
        source: source.to_string(),
    }
}

fn skip(field: &str, engine: &str, expected: String, source: &str) -> FieldCheck {
    FieldCheck {
        field: field.to_string(),
        outcome: Outcome::Skip,
        engine: engine.to_string(),
        expected,
        source: source.to_string(),
    }
}

fn check_census(spec: &HbkSpec, want: &Sourced<ExpectedCensus>) -> FieldCheck {
    let mut slopes = want.value.slopes.clone();
    slopes.sort();
    let expected = format!("{:?} {:?}", want.value.count, text_list(&slopes));
    match census(spec) {
        Ok(got) => {
            let count = match got.count {
                AnnulusCount::InfinitelyMany => Count::InfinitelyMany,
                AnnulusCount::Two => Count::Two,
                AnnulusCount::One => Count::One,
            };
            let ok = count == want.value.count && got.slopes == slopes;
            compare("census", ok, got.to_string(), expected, &want.source)
        }
        Err(e) => skip("census", &e.to_string(), expected, &want.source),
    }
}

fn check_group(field: &str, got: SymmetryGroup, want: &Sourced<Group>) -> FieldCheck {
    let expected = want.value.to_string();
    let ok = match got {
        SymmetryGroup::Unknown => return skip(field, "Unknown", expected, &want.source),
        SymmetryGroup::Z1 => want.value == Group::Z1,
        SymmetryGroup::Z2 => want.value == Group::Z2,
    };
    compare(field, ok, got.to_string(), expected, &want.source)
}

fn text_list(v: &[Fraction]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}
