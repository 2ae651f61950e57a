//! Symbolic tau-tangles: cones on three boundary points `x`, `y`, `z` in a
//! ball, given either by a vertex of rationality and a fraction class, or as
//! an opaque composite with recorded constituent knots.

use std::fmt;

use num_integer::Integer as _;

use crate::error::TangleError;
use crate::fraction::{is_one_over_n, modz_normalize};
use crate::verdict::{citation, Verdict};
use crate::{Fraction, FractionClass, Integer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    /// The endpoint on the connecting arc of the handcuff graph.
    X,
    Y,
    Z,
}

impl VertexLabel {
    /// Image under the swap of `y` and `z` that fixes `x`.
    pub fn swap_yz(self) -> Self {
        match self {
            VertexLabel::X => VertexLabel::X,
            VertexLabel::Y => VertexLabel::Z,
            VertexLabel::Z => VertexLabel::Y,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "x" => Some(VertexLabel::X),
            "y" => Some(VertexLabel::Y),
            "z" => Some(VertexLabel::Z),
            _ => None,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexLabel::X => "x",
            VertexLabel::Y => "y",
            VertexLabel::Z => "z",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Handedness {
    Plus,
    Minus,
    Amphichiral,
}

/// A knot by name and handedness; `trefoil+` and `trefoil-` are mirror
/// partners, `figure8=` is its own.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotLabel {
    pub name: String,
    pub handedness: Handedness,
}

impl KnotLabel {
    pub fn new(name: impl Into<String>, handedness: Handedness) -> Self {
        Self {
            name: name.into(),
            handedness,
        }
    }

    pub fn mirror_partner(&self) -> Self {
        let handedness = match self.handedness {
            Handedness::Plus => Handedness::Minus,
            Handedness::Minus => Handedness::Plus,
            Handedness::Amphichiral => Handedness::Amphichiral,
        };
        Self {
            name: self.name.clone(),
            handedness,
        }
    }

    pub fn is_amphichiral(&self) -> bool {
        self.handedness == Handedness::Amphichiral
    }

    /// Parses `name+`, `name-` or `name=`.
    pub fn parse(s: &str) -> Option<Self> {
        let (name, sign) = s.split_at(s.len().checked_sub(1)?);
        let handedness = match sign {
            "+" => Handedness::Plus,
            "-" => Handedness::Minus,
            "=" => Handedness::Amphichiral,
            _ => return None,
        };
        let valid = !name.is_empty()
            && name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.');
        valid.then(|| Self::new(name, handedness))
    }
}

impl fmt::Display for KnotLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.handedness {
            Handedness::Plus => '+',
            Handedness::Minus => '-',
            Handedness::Amphichiral => '=',
        };
        write!(f, "{}{sign}", self.name)
    }
}

/// Opaque presentation id, tagged with the mirror and star operations applied
/// to it. Rendered as `~id` when mirrored and `id*` when starred.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Descriptor {
    pub id: String,
    pub mirrored: bool,
    pub starred: bool,
}

impl Descriptor {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            mirrored: false,
            starred: false,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (mirrored, rest) = match s.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (starred, id) = match rest.strip_suffix('*') {
            Some(id) => (true, id),
            None => (false, rest),
        };
        let valid = !id.is_empty()
            && id
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || "_-.".contains(c));
        valid.then(|| Self {
            id: id.to_string(),
            mirrored,
            starred,
        })
    }

    fn mirror(&self) -> Self {
        Self {
            mirrored: !self.mirrored,
            ..self.clone()
        }
    }

    fn star(&self) -> Self {
        Self {
            starred: !self.starred,
            ..self.clone()
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirrored {
            f.write_str("~")?;
        }
        f.write_str(&self.id)?;
        if self.starred {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// Fraction data of a rational tangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RationalFraction {
    Known(FractionClass),
    /// The fraction is not recorded; the tangle is only known not to be
    /// `1/n`-rational.
    Unrecorded(Descriptor),
}

/// Tangle rational at `vertex`: a trivial piece containing the vertex glued
/// along a disk to a rational 2-string tangle with the given fraction class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalTau {
    vertex: VertexLabel,
    fraction: RationalFraction,
}

impl RationalTau {
    pub fn vertex(&self) -> VertexLabel {
        self.vertex
    }

    pub fn fraction(&self) -> &RationalFraction {
        &self.fraction
    }

    pub fn class(&self) -> Option<&FractionClass> {
        match &self.fraction {
            RationalFraction::Known(c) => Some(c),
            RationalFraction::Unrecorded(_) => None,
        }
    }

    /// Tangle rational at `vertex` whose fraction is unrecorded but known not
    /// to be `1/n`.
    pub fn unrecorded(vertex: VertexLabel, descriptor: Descriptor) -> Self {
        Self {
            vertex,
            fraction: RationalFraction::Unrecorded(descriptor),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositeTau {
    rational_vertex: Option<VertexLabel>,
    knots: Vec<KnotLabel>,
    atoroidal: bool,
    descriptor: Descriptor,
}

impl CompositeTau {
    pub fn new(
        rational_vertex: Option<VertexLabel>,
        mut knots: Vec<KnotLabel>,
        atoroidal: bool,
        descriptor: Descriptor,
    ) -> Self {
        knots.sort();
        Self {
            rational_vertex,
            knots,
            atoroidal,
            descriptor,
        }
    }

    pub fn rational_vertex(&self) -> Option<VertexLabel> {
        self.rational_vertex
    }

    /// Constituent knots as a sorted multiset.
    pub fn knots(&self) -> &[KnotLabel] {
        &self.knots
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TauTangle {
    Rational(RationalTau),
    Composite(CompositeTau),
}

impl TauTangle {
    /// Rational tangle with a known class; callers validate the class.
    fn rational_known(vertex: VertexLabel, class: FractionClass) -> Self {
        TauTangle::Rational(RationalTau {
            vertex,
            fraction: RationalFraction::Known(class),
        })
    }

    /// Vertex at which the tangle is rational, if any.
    pub fn rational_vertex(&self) -> Option<VertexLabel> {
        match self {
            TauTangle::Rational(r) => Some(r.vertex),
            TauTangle::Composite(c) => c.rational_vertex,
        }
    }

    /// Fraction class when the tangle is rational at `x` with a recorded
    /// fraction.
    pub fn class_at_x(&self) -> Option<&FractionClass> {
        match self {
            TauTangle::Rational(r) if r.vertex == VertexLabel::X => r.class(),
            _ => None,
        }
    }

    /// `n` when the tangle is `1/n`-rational (rational at `x` in the class of
    /// `1/n`).
    pub fn one_over_n(&self) -> Option<Integer> {
        self.class_at_x().and_then(is_one_over_n)
    }
}

impl fmt::Display for RationalTau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.fraction {
            RationalFraction::Known(c) => write!(f, "rational:{}:{}", self.vertex, c.rep()),
            RationalFraction::Unrecorded(d) => write!(f, "rational:{}:?:{}", self.vertex, d),
        }
    }
}

impl fmt::Display for CompositeTau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vertex = self
            .rational_vertex
            .map_or("-".to_string(), |v| v.to_string());
        let knots: Vec<String> = self.knots.iter().map(ToString::to_string).collect();
        write!(
            f,
            "composite:{vertex}:{}:{}",
            knots.join(","),
            self.descriptor
        )?;
        if !self.atoroidal {
            f.write_str(":toroidal")?;
        }
        Ok(())
    }
}

impl fmt::Display for TauTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauTangle::Rational(r) => r.fmt(f),
            TauTangle::Composite(c) => c.fmt(f),
        }
    }
}

/// Validates a rational tangle at `vertex` with fraction `r`.
///
/// Integral classes are trivial tangles. Classes with an even denominator
/// would join the two disk points to each other and `y` to `z`, so the
/// strands could not form a cone.
pub fn validate_rational(vertex: VertexLabel, r: &Fraction) -> Result<TauTangle, TangleError> {
    let class = modz_normalize(r);
    if class.is_zero() {
        return Err(TangleError::TrivialTangle {
            class: class.to_string(),
        });
    }
    if class.rep().denom().is_even() {
        return Err(TangleError::InvalidConnectivity {
            class: class.to_string(),
        });
    }
    Ok(TauTangle::rational_known(vertex, class))
}

/// Image under an orientation-reversing homeomorphism of the ball.
pub fn mirror(t: &TauTangle) -> TauTangle {
    match t {
        TauTangle::Rational(r) => {
            let fraction = match &r.fraction {
                RationalFraction::Known(c) => RationalFraction::Known(c.negate()),
                RationalFraction::Unrecorded(d) => RationalFraction::Unrecorded(d.mirror()),
            };
            TauTangle::Rational(RationalTau {
                vertex: r.vertex,
                fraction,
            })
        }
        TauTangle::Composite(c) => TauTangle::Composite(CompositeTau::new(
            c.rational_vertex,
            c.knots.iter().map(KnotLabel::mirror_partner).collect(),
            c.atoroidal,
            c.descriptor.mirror(),
        )),
    }
}

/// Image under the orientation-preserving homeomorphism fixing `x` and
/// swapping `y` with `z`.
///
/// For a tangle rational at `x` the swap is a half-turn of the rational
/// 2-string part, which preserves it, so such tangles are fixed.
pub fn star(t: &TauTangle) -> TauTangle {
    match t {
        TauTangle::Rational(r) => TauTangle::Rational(RationalTau {
            vertex: r.vertex.swap_yz(),
            fraction: r.fraction.clone(),
        }),
        TauTangle::Composite(c) => TauTangle::Composite(CompositeTau::new(
            c.rational_vertex.map(VertexLabel::swap_yz),
            c.knots.clone(),
            c.atoroidal,
            c.descriptor.star(),
        )),
    }
}

pub fn is_atoroidal(t: &TauTangle) -> bool {
    match t {
        // the exterior of a rational tangle is a genus-two handlebody
        TauTangle::Rational(_) => true,
        TauTangle::Composite(c) => c.atoroidal,
    }
}

const ASSUMPTION: &str =
    "assumes the fraction class mod Z is a complete invariant of tangles rational at a vertex";

/// Equivalence of tangles under homeomorphisms of the ball fixing `x`, `y`,
/// `z`. Never claims `Equivalent` for distinct composites without identical
/// descriptors.
pub fn tangle_equiv(t1: &TauTangle, t2: &TauTangle) -> Verdict {
    use citation::*;
    use TauTangle::{Composite, Rational};

    if t1.rational_vertex() != t2.rational_vertex() {
        return Verdict::inequivalent(
            format!(
                "vertex of rationality differs ({} vs {})",
                vertex_text(t1.rational_vertex()),
                vertex_text(t2.rational_vertex())
            ),
            &[VERTEX_OF_RATIONALITY],
        );
    }

    match (t1, t2) {
        (Rational(a), Rational(b)) => match (&a.fraction, &b.fraction) {
            (RationalFraction::Known(ca), RationalFraction::Known(cb)) => {
                if ca == cb {
                    Verdict::equivalent(
                        format!("both rational at {} in class {}; {ASSUMPTION}", a.vertex, ca),
                        &[FRACTION_INVARIANT],
                    )
                } else {
                    Verdict::inequivalent(
                        format!("fraction classes differ mod Z ({} vs {})", ca, cb),
                        &[FRACTION_INVARIANT],
                    )
                }
            }
            (RationalFraction::Unrecorded(da), RationalFraction::Unrecorded(db)) if da == db => {
                Verdict::equivalent(
                    format!("identical recorded descriptor {da}"),
                    &[RECORDED_DESCRIPTOR],
                )
            }
            (RationalFraction::Known(c), RationalFraction::Unrecorded(_))
            | (RationalFraction::Unrecorded(_), RationalFraction::Known(c))
                if a.vertex == VertexLabel::X && is_one_over_n(c).is_some() =>
            {
                Verdict::inequivalent(
                    format!("class {c} is 1/n, the unrecorded tangle is declared not 1/n"),
                    &[FRACTION_INVARIANT],
                )
            }
            _ => Verdict::unknown(
                "fraction not recorded for at least one tangle",
                &[FRACTION_INVARIANT],
            ),
        },
        (Composite(a), Composite(b)) => {
            if a.descriptor == b.descriptor && a.knots == b.knots {
                Verdict::equivalent(
                    format!("identical recorded descriptor {}", a.descriptor),
                    &[RECORDED_DESCRIPTOR],
                )
            } else if a.knots != b.knots {
                Verdict::inequivalent(
                    format!(
                        "constituent knots differ ({} vs {})",
                        knots_text(&a.knots),
                        knots_text(&b.knots)
                    ),
                    &[CONSTITUENT_KNOTS],
                )
            } else {
                Verdict::unknown(
                    format!(
                        "distinct descriptors {} and {} with matching invariants",
                        a.descriptor, b.descriptor
                    ),
                    &[RECORDED_DESCRIPTOR],
                )
            }
        }
        _ => Verdict::unknown(
            "rational and composite presentations at the same vertex; the composite's fraction is not recorded",
            &[VERTEX_OF_RATIONALITY],
        ),
    }
}

fn vertex_text(v: Option<VertexLabel>) -> String {
    v.map_or("none".to_string(), |v| v.to_string())
}

fn knots_text(knots: &[KnotLabel]) -> String {
    let v: Vec<String> = knots.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(", "))
}
