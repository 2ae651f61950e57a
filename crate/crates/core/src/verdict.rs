//! Three-valued verdicts and the citation tags attached to them.

use std::fmt;

use serde::Serialize;

/// Tags naming the result a verdict rests on. Each tag is documented in the
/// README.
pub mod citation {
    /// Fraction class mod Z classifies tangles rational at a given vertex.
    /// Adopted as an assumption.
    pub const FRACTION_INVARIANT: &str = "fraction-class-invariant";
    /// A tangle is rational at no more than one vertex.
    pub const VERTEX_OF_RATIONALITY: &str = "unique-vertex-of-rationality";
    pub const CONSTITUENT_KNOTS: &str = "constituent-knot-chirality";
    pub const RECORDED_DESCRIPTOR: &str = "recorded-descriptor";
    /// The y/z swap of a tangle rational at x is a flip of its rational part.
    pub const STAR_FLIP: &str = "star-flip-symmetry";
    pub const ANNULUS_CENSUS: &str = "annulus-census-trichotomy";
    pub const ANNULUS_SLOPES: &str = "annulus-slopes";
    /// Same-twist equivalence holds iff the tangles agree directly or via star.
    pub const TWISTED_EQUIVALENCE: &str = "twisted-family-equivalence";
    /// The mirror of the k-twisted knot is the (1-k)-twisted knot of the mirror tangle.
    pub const MIRROR_TWIST: &str = "mirror-twist-relation";
    pub const CHIRALITY: &str = "non-1/n-chirality";
    pub const SYMMETRY: &str = "non-1/n-symmetry-group";
    pub const EXTERIOR_TWIST: &str = "twisted-exterior-homeomorphism";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equivalent,
    Inequivalent,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Equivalent => "Equivalent",
            Status::Inequivalent => "Inequivalent",
            Status::Unknown => "Unknown",
        })
    }
}

/// Outcome of an equivalence test, with the reasoning that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub reason: String,
    pub citations: Vec<String>,
}

impl Verdict {
    pub fn new(status: Status, reason: impl Into<String>, citations: &[&str]) -> Self {
        let mut v = Self {
            status,
            reason: reason.into(),
            citations: Vec::new(),
        };
        v.cite(citations);
        v
    }

    pub fn equivalent(reason: impl Into<String>, citations: &[&str]) -> Self {
        Self::new(Status::Equivalent, reason, citations)
    }

    pub fn inequivalent(reason: impl Into<String>, citations: &[&str]) -> Self {
        Self::new(Status::Inequivalent, reason, citations)
    }

    pub fn unknown(reason: impl Into<String>, citations: &[&str]) -> Self {
        Self::new(Status::Unknown, reason, citations)
    }

    /// Appends citation tags, keeping them sorted and unique.
    pub fn cite(&mut self, citations: &[&str]) {
        self.citations
            .extend(citations.iter().map(|c| c.to_string()));
        self.citations.sort();
        self.citations.dedup();
    }

    pub fn with_citations(mut self, citations: &[&str]) -> Self {
        self.cite(citations);
        self
    }

    pub fn prefixed(mut self, prefix: &str) -> Self {
        self.reason = format!("{prefix}; {}", self.reason);
        self
    }

    /// Three-valued disjunction: an `Equivalent` side wins, two
    /// `Inequivalent` sides give `Inequivalent`, anything else is `Unknown`.
    pub fn or(self, other: Verdict) -> Verdict {
        match (self.status, other.status) {
            (Status::Equivalent, _) => self,
            (_, Status::Equivalent) => other,
            (Status::Inequivalent, Status::Inequivalent) => self.merge(other, Status::Inequivalent),
            (Status::Unknown, Status::Inequivalent) => self,
            (Status::Inequivalent, Status::Unknown) => other,
            (Status::Unknown, Status::Unknown) => self.merge(other, Status::Unknown),
        }
    }

    fn merge(mut self, other: Verdict, status: Status) -> Verdict {
        self.status = status;
        if self.reason != other.reason {
            self.reason = format!("{}; {}", self.reason, other.reason);
        }
        self.citations.extend(other.citations);
        self.citations.sort();
        self.citations.dedup();
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}; {})",
            self.status,
            self.reason,
            self.citations.join(", ")
        )
    }
}
