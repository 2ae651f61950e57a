//! Exact decision procedures for genus-two handlebody-knots obtained by
//! tau-tangle replacement on the handcuff graph 4_1 and its twisted family.
//!
//! The fraction layer ([`fraction`], [`contfrac`], [`matrix`], [`pairing`]) is
//! generic over an exact integer scalar ([`Int`]); the tangle model and the
//! engine run on the arbitrary-precision aliases defined here.

pub mod catalog;
pub mod contfrac;
pub mod engine;
pub mod error;
pub mod fraction;
pub mod grammar;
pub mod matrix;
pub mod pairing;
pub mod scalar;
pub mod tangle;
pub mod verdict;

pub use contfrac::{cf_eval, cf_expand, Layout, TwistWord};
pub use engine::{
    census, chirality, equivalent, equivalent_up_to_mirror, explain_chirality, explain_symmetry,
    exterior_homeomorphic, is_irreducible, mirror_spec, symmetry_group, AnnulusCensus,
    AnnulusCount, ChiralityVerdict, Explanation, ExteriorStatus, ExteriorVerdict, HbkSpec,
    SymmetryGroup,
};
pub use error::{CatalogError, EngineError, FractionError, ParseError, SpecError, TangleError};
pub use fraction::{is_one_over_n, modz_normalize, GenericFraction, ModZClass};
pub use grammar::{parse_spec, parse_tangle};
pub use matrix::matrix_oracle_eval;
pub use pairing::{endpoint_pairing, EndpointPairing};
pub use scalar::Int;
pub use tangle::{
    is_atoroidal, mirror, star, tangle_equiv, validate_rational, CompositeTau, Descriptor,
    Handedness, KnotLabel, RationalFraction, RationalTau, TauTangle, VertexLabel,
};
pub use verdict::{Status, Verdict};

/// Arbitrary-precision integer used throughout the engine.
pub type Integer = num_bigint::BigInt;
pub type Fraction = GenericFraction<Integer>;
pub type FractionClass = ModZClass<Integer>;
pub type Word = TwistWord<Integer>;

pub type Fraction64 = GenericFraction<i64>;
pub type FractionClass64 = ModZClass<i64>;
pub type Word64 = TwistWord<i64>;
