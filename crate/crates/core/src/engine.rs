//! Deciders for the handlebody-knots `V^k_tau`: the neighbourhood of the
//! handcuff graph 4_1, twisted `k` times along the disk bounded by one loop,
//! with a tau-tangle glued in at the trivalent vertex.

use std::fmt;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{EngineError, TangleError};
use crate::tangle::{is_atoroidal, mirror, star, tangle_equiv, RationalFraction, TauTangle};
use crate::verdict::{citation, Status, Verdict};
use crate::{Fraction, Integer};

/// The handlebody-knot `V^k_tau`. The tangle is nontrivial and atoroidal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HbkSpec {
    k: Integer,
    tangle: TauTangle,
}

impl HbkSpec {
    pub fn new(k: impl Into<Integer>, tangle: TauTangle) -> Result<Self, TangleError> {
        if !is_atoroidal(&tangle) {
            return Err(TangleError::NotAtoroidal(tangle.to_string()));
        }
        Ok(Self {
            k: k.into(),
            tangle,
        })
    }

    pub fn k(&self) -> &Integer {
        &self.k
    }

    pub fn tangle(&self) -> &TauTangle {
        &self.tangle
    }
}

impl fmt::Display for HbkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k:{};{}", self.k, self.tangle)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AnnulusCount {
    InfinitelyMany,
    Two,
    One,
}

impl fmt::Display for AnnulusCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnnulusCount::InfinitelyMany => "InfinitelyMany",
            AnnulusCount::Two => "Two",
            AnnulusCount::One => "One",
        })
    }
}

/// Essential annuli of the exterior up to isotopy, with the slopes of the
/// separating ones when there are finitely many. Slopes are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AnnulusCensus {
    pub count: AnnulusCount,
    pub slopes: Vec<Fraction>,
}

impl AnnulusCensus {
    fn new(count: AnnulusCount, mut slopes: Vec<Fraction>) -> Self {
        slopes.sort();
        Self { count, slopes }
    }
}

impl fmt::Display for AnnulusCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.count)?;
        if !self.slopes.is_empty() {
            let s: Vec<String> = self.slopes.iter().map(ToString::to_string).collect();
            write!(f, "; slopes: {}", s.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SymmetryGroup {
    Z1,
    Z2,
    Unknown,
}

impl fmt::Display for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryGroup::Z1 => "Z1",
            SymmetryGroup::Z2 => "Z2",
            SymmetryGroup::Unknown => "Unknown",
        })
    }
}

/// `Amphichiral` exists for completeness; no rule here certifies it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChiralityVerdict {
    Chiral,
    Amphichiral,
    Unknown,
}

impl fmt::Display for ChiralityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiralityVerdict::Chiral => "Chiral",
            ChiralityVerdict::Amphichiral => "Amphichiral",
            ChiralityVerdict::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExteriorStatus {
    True,
    Unknown,
}

impl fmt::Display for ExteriorStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExteriorStatus::True => "True",
            ExteriorStatus::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExteriorVerdict {
    pub status: ExteriorStatus,
    pub reason: String,
    pub citations: Vec<String>,
}

impl fmt::Display for ExteriorVerdict {
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

/// Which case of the annulus trichotomy a tangle falls in.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Family {
    /// `+-1/3`-rational.
    OneThird,
    /// `1/n`-rational with `|n| > 3`.
    OneOverN(Integer),
    /// Not `1/n`-rational.
    Generic,
}

fn family(t: &TauTangle) -> Family {
    match t.one_over_n() {
        Some(n) if n.abs() == Integer::from(3) => Family::OneThird,
        Some(n) => Family::OneOverN(n),
        None => Family::Generic,
    }
}

fn half() -> Fraction {
    Fraction::new(Integer::one(), Integer::from(2)).expect("nonzero denominator")
}

/// Slope `k - 1/2` of the frontier of the Moebius band.
fn mobius_slope(k: &Integer) -> Fraction {
    Fraction::from_integer(k.clone()) - half()
}

/// Slope `4k + (n - 4)/2` of the second annulus of a `1/n`-rational tangle.
fn second_slope(k: &Integer, n: &Integer) -> Fraction {
    let four_k = Fraction::from_integer(Integer::from(4) * k);
    let shift = Fraction::new(n - Integer::from(4), Integer::from(2)).expect("nonzero denominator");
    four_k + shift
}

/// Essential annuli of the exterior of `V^k_tau`.
pub fn census(spec: &HbkSpec) -> Result<AnnulusCensus, EngineError> {
    if let TauTangle::Rational(r) = spec.tangle() {
        if let RationalFraction::Unrecorded(_) = r.fraction() {
            return Err(EngineError::MissingFraction(spec.tangle().to_string()));
        }
    }
    let k = spec.k();
    Ok(match family(spec.tangle()) {
        Family::OneThird => AnnulusCensus::new(AnnulusCount::InfinitelyMany, Vec::new()),
        Family::OneOverN(n) => AnnulusCensus::new(
            AnnulusCount::Two,
            vec![mobius_slope(k), second_slope(k, &n)],
        ),
        Family::Generic => AnnulusCensus::new(AnnulusCount::One, vec![mobius_slope(k)]),
    })
}

/// Decides whether `a` and `b` are equivalent handlebody-knots.
///
/// With equal twist counts the tangles decide it, directly or after a star.
/// Across twist counts only the slope census can separate them.
pub fn equivalent(a: &HbkSpec, b: &HbkSpec) -> Result<Verdict, EngineError> {
    use citation::*;
    if a.k == b.k {
        let direct = tangle_equiv(&a.tangle, &b.tangle);
        let starred = tangle_equiv(&a.tangle, &star(&b.tangle))
            .prefixed("against the star of the second tangle");
        return Ok(direct
            .or(starred)
            .prefixed(&format!("same twist count k={}", a.k))
            .with_citations(&[TWISTED_EQUIVALENCE]));
    }
    let (ca, cb) = (census(a)?, census(b)?);
    let cites = [ANNULUS_CENSUS, ANNULUS_SLOPES];
    if ca.count != cb.count {
        return Ok(Verdict::inequivalent(
            format!("annulus counts differ ({} vs {})", ca.count, cb.count),
            &cites,
        ));
    }
    if ca.count != AnnulusCount::InfinitelyMany && ca.slopes != cb.slopes {
        return Ok(Verdict::inequivalent(
            format!("slope multisets differ ({ca} vs {cb})"),
            &cites,
        ));
    }
    Ok(Verdict::unknown(
        format!(
            "twist counts differ (k={} vs k={}) and the annulus census agrees; the classification only fixes k",
            a.k, b.k
        ),
        &cites,
    ))
}

/// The mirror of `V^k_tau` is `V^(1-k)` of the mirror tangle.
pub fn mirror_spec(spec: &HbkSpec) -> HbkSpec {
    HbkSpec {
        k: Integer::one() - &spec.k,
        tangle: mirror(&spec.tangle),
    }
}

pub fn equivalent_up_to_mirror(a: &HbkSpec, b: &HbkSpec) -> Result<Verdict, EngineError> {
    let direct = equivalent(a, b)?;
    let mirrored = equivalent(a, &mirror_spec(b))?
        .prefixed(&format!("against the mirror {}", mirror_spec(b)))
        .with_citations(&[citation::MIRROR_TWIST]);
    Ok(direct.or(mirrored))
}

/// Reason and citations behind a chirality or symmetry answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Explanation {
    pub reason: String,
    pub citations: Vec<String>,
}

fn explain(reason: impl Into<String>, cites: &[&str]) -> Explanation {
    Explanation {
        reason: reason.into(),
        citations: cites.iter().map(|c| c.to_string()).collect(),
    }
}

pub fn chirality(spec: &HbkSpec) -> Result<ChiralityVerdict, EngineError> {
    explain_chirality(spec).map(|(v, _)| v)
}

pub fn explain_chirality(spec: &HbkSpec) -> Result<(ChiralityVerdict, Explanation), EngineError> {
    use citation::*;
    Ok(match family(spec.tangle()) {
        Family::Generic => (
            ChiralityVerdict::Chiral,
            explain(
                "not 1/n-rational: every homeomorphism between such knots preserves orientation",
                &[CHIRALITY],
            ),
        ),
        Family::OneThird => (
            ChiralityVerdict::Unknown,
            explain(
                "+-1/3-rational: infinitely many annuli, no slope invariant to compare",
                &[ANNULUS_CENSUS],
            ),
        ),
        Family::OneOverN(_) => {
            let own = census(spec)?;
            let mirrored = census(&mirror_spec(spec))?;
            let cites = [ANNULUS_SLOPES, MIRROR_TWIST];
            if own.slopes != mirrored.slopes {
                (
                    ChiralityVerdict::Chiral,
                    explain(
                        format!("slopes differ from the mirror's ({own} vs {mirrored})"),
                        &cites,
                    ),
                )
            } else {
                (
                    ChiralityVerdict::Unknown,
                    explain(format!("slopes agree with the mirror's ({own})"), &cites),
                )
            }
        }
    })
}

/// Symmetry group for tangles that are not `1/n`-rational, where it is the
/// group of the tangle relative to `x`: `Z2` exactly when the tangle matches
/// its star.
pub fn symmetry_group(spec: &HbkSpec) -> SymmetryGroup {
    explain_symmetry(spec).0
}

pub fn explain_symmetry(spec: &HbkSpec) -> (SymmetryGroup, Explanation) {
    use citation::*;
    if family(spec.tangle()) != Family::Generic {
        return (
            SymmetryGroup::Unknown,
            explain("1/n-rational: the group is not determined", &[SYMMETRY]),
        );
    }
    let v = tangle_equiv(spec.tangle(), &star(spec.tangle()));
    let mut citations = v.citations.clone();
    citations.push(SYMMETRY.to_string());
    if v.status == Status::Equivalent && spec.tangle().class_at_x().is_some() {
        citations.push(STAR_FLIP.to_string());
    }
    citations.sort();
    citations.dedup();
    let group = match v.status {
        Status::Equivalent => SymmetryGroup::Z2,
        Status::Inequivalent => SymmetryGroup::Z1,
        Status::Unknown => SymmetryGroup::Unknown,
    };
    let reason = format!("tangle against its star: {} ({})", v.status, v.reason);
    (group, Explanation { reason, citations })
}

/// Twisting along the disk does not change the exterior, so equivalent
/// tangles give homeomorphic exteriors for every pair of twist counts.
pub fn exterior_homeomorphic(a: &HbkSpec, b: &HbkSpec) -> ExteriorVerdict {
    let v = tangle_equiv(&a.tangle, &b.tangle).or(tangle_equiv(&a.tangle, &star(&b.tangle)));
    let mut citations = v.citations.clone();
    citations.push(citation::EXTERIOR_TWIST.to_string());
    citations.sort();
    citations.dedup();
    match v.status {
        Status::Equivalent => ExteriorVerdict {
            status: ExteriorStatus::True,
            reason: format!(
                "tangles agree ({}); twisting preserves the exterior",
                v.reason
            ),
            citations,
        },
        _ => ExteriorVerdict {
            status: ExteriorStatus::Unknown,
            reason: "tangles not known to agree; no exterior invariant separates them here"
                .to_string(),
            citations,
        },
    }
}

/// A nontrivial atoroidal tangle gives an irreducible handlebody-knot.
pub fn is_irreducible(spec: &HbkSpec) -> bool {
    match spec.tangle() {
        TauTangle::Rational(r) => r.class().is_none_or(|c| !c.is_zero()),
        TauTangle::Composite(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_spec;

    fn spec(s: &str) -> HbkSpec {
        parse_spec(s).unwrap()
    }

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn census_examples() {
        assert_eq!(
            census(&spec("k:0;rational:x:1/3")).unwrap().count,
            AnnulusCount::InfinitelyMany
        );
        assert!(census(&spec("k:0;rational:x:1/3"))
            .unwrap()
            .slopes
            .is_empty());
        let c = census(&spec("k:0;rational:x:1/5")).unwrap();
        assert_eq!(c.count, AnnulusCount::Two);
        assert_eq!(c.slopes, vec![fr("-1/2"), fr("1/2")]);
        let c = census(&spec("k:1;rational:x:2/5")).unwrap();
        assert_eq!((c.count, c.slopes), (AnnulusCount::One, vec![fr("1/2")]));
        assert_eq!(c_text("k:0;rational:x:1/5"), "Two; slopes: -1/2, 1/2");
    }

    fn c_text(s: &str) -> String {
        census(&spec(s)).unwrap().to_string()
    }

    #[test]
    fn census_rational_away_from_x_is_generic() {
        let c = census(&spec("k:2;rational:y:1/3")).unwrap();
        assert_eq!((c.count, c.slopes), (AnnulusCount::One, vec![fr("3/2")]));
    }

    #[test]
    fn census_missing_fraction() {
        assert!(matches!(
            census(&spec("k:0;rational:x:?:7_36")),
            Err(EngineError::MissingFraction(_))
        ));
    }

    #[test]
    fn equivalence_examples() {
        let a = spec("k:0;rational:x:1/5");
        assert_eq!(equivalent(&a, &a).unwrap().status, Status::Equivalent);
        assert_eq!(
            equivalent(&a, &spec("k:0;rational:x:1/7")).unwrap().status,
            Status::Inequivalent
        );
        let v = equivalent(&spec("k:0;rational:x:2/5"), &spec("k:1;rational:x:2/5")).unwrap();
        assert_eq!(v.status, Status::Inequivalent);
        assert!(v.reason.contains("slope"));
        let v = equivalent(&spec("k:0;rational:x:1/3"), &spec("k:1;rational:x:1/3")).unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn mirror_spec_examples() {
        assert_eq!(
            mirror_spec(&spec("k:0;rational:x:2/5")),
            spec("k:1;rational:x:3/5")
        );
        assert_eq!(
            mirror_spec(&spec("k:1;rational:x:2/5")),
            spec("k:0;rational:x:3/5")
        );
        let s = spec("k:4;composite:z:trefoil+:d");
        assert_eq!(mirror_spec(&mirror_spec(&s)), s);
        assert_eq!(
            equivalent_up_to_mirror(&s, &mirror_spec(&s))
                .unwrap()
                .status,
            Status::Equivalent
        );
    }

    #[test]
    fn chirality_examples() {
        assert_eq!(
            chirality(&spec("k:0;rational:x:2/5")).unwrap(),
            ChiralityVerdict::Chiral
        );
        assert_eq!(
            chirality(&spec("k:0;composite:z:trefoil+:d")).unwrap(),
            ChiralityVerdict::Chiral
        );
        assert_eq!(
            chirality(&spec("k:0;rational:x:1/5")).unwrap(),
            ChiralityVerdict::Unknown
        );
        assert_eq!(
            chirality(&spec("k:0;rational:x:1/7")).unwrap(),
            ChiralityVerdict::Chiral
        );
        assert_eq!(
            chirality(&spec("k:0;rational:x:1/3")).unwrap(),
            ChiralityVerdict::Unknown
        );
        // 5 - 10k: (k=1, n=-5) is self-mirror as well
        assert_eq!(
            chirality(&spec("k:1;rational:x:-1/5")).unwrap(),
            ChiralityVerdict::Unknown
        );
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(
            symmetry_group(&spec("k:0;rational:x:2/5")),
            SymmetryGroup::Z2
        );
        assert_eq!(
            symmetry_group(&spec("k:0;composite:z:trefoil+:d")),
            SymmetryGroup::Z1
        );
        assert_eq!(
            symmetry_group(&spec("k:0;rational:x:1/3")),
            SymmetryGroup::Unknown
        );
        assert_eq!(
            symmetry_group(&spec("k:0;rational:x:1/5")),
            SymmetryGroup::Unknown
        );
        assert_eq!(
            symmetry_group(&spec("k:3;rational:x:?:7_38")),
            SymmetryGroup::Z2
        );
        // a composite at x cannot be compared with its star
        assert_eq!(
            symmetry_group(&spec("k:0;composite:x:trefoil+:d")),
            SymmetryGroup::Unknown
        );
    }

    #[test]
    fn exterior_examples() {
        let a = spec("k:0;rational:x:1/3");
        assert_eq!(exterior_homeomorphic(&a, &a).status, ExteriorStatus::True);
        assert_eq!(
            exterior_homeomorphic(&a, &spec("k:5;rational:x:1/3")).status,
            ExteriorStatus::True
        );
        assert_eq!(
            exterior_homeomorphic(&a, &spec("k:0;rational:x:2/3")).status,
            ExteriorStatus::Unknown
        );
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&spec("k:0;rational:x:1/3")));
        assert!(is_irreducible(&spec("k:0;composite:z:trefoil+:d")));
    }
}
