use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractionError {
    #[error("zero denominator")]
    ZeroDenominator,
    /// A continued fraction hit a vanishing denominator, so the word does not
    /// define a finite tangle fraction.
    #[error("continued fraction has an infinite value")]
    InfiniteValue,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("cannot parse `{0}` as a fraction")]
    Parse(String),
    #[error("cannot parse `{0}` as a twist word")]
    ParseWord(String),
    #[error("layout {layout} does not match word length {len}")]
    LayoutMismatch { layout: &'static str, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("fraction class {class} is integral: the tangle is trivial")]
    TrivialTangle { class: String },
    #[error(
        "fraction class {class} has an even denominator: the strands would close up into a cycle"
    )]
    InvalidConnectivity { class: String },
    #[error("tangle `{0}` is declared toroidal")]
    NotAtoroidal(String),
    #[error(transparent)]
    Fraction(#[from] FractionError),
}

/// Syntax error in the textual tangle or handlebody-knot grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}: `{token}`")]
pub struct ParseError {
    pub message: String,
    pub token: String,
    /// Byte offset of `token` in the input.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid tangle: {0}")]
    Tangle(#[from] TangleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the fraction of rational tangle `{0}` is not recorded")]
    MissingFraction(String),
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("no catalog entry named `{0}`")]
    UnknownName(String),
    #[error("catalog entry `{0}` has no engine spec")]
    MissingSpec(String),
    #[error("catalog entry `{name}`: {source}")]
    InvalidSpec { name: String, source: SpecError },
    #[error("duplicate catalog entry `{0}`")]
    Duplicate(String),
    #[error("unsupported catalog schema version {0}")]
    SchemaVersion(u32),
    #[error("reading catalog {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed catalog: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("serializing catalog: {0}")]
    Serialize(#[from] toml::ser::Error),
}
