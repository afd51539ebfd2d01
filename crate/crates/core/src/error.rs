use thiserror::Error;

/// Everything that can go wrong while ingesting, laying out, colouring or
/// rendering a set system.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid zone json: {0}")]
    Json(String),

    #[error("set label must not be empty")]
    EmptyLabel,

    #[error("element identifier must not be empty")]
    EmptyElement,

    #[error("duplicate set label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown set label {0:?}")]
    UnknownLabel(String),

    #[error("set {0:?} has no members")]
    EmptySet(String),

    #[error("element {0:?} belongs to no set")]
    ElementWithoutSets(String),

    #[error("zone must contain at least one set")]
    EmptySignature,

    #[error("zone {0:?} has zero cardinality")]
    ZeroCardinality(Vec<String>),

    #[error("duplicate zone signature {0:?}")]
    DuplicateSignature(Vec<String>),

    #[error("set system has no zones")]
    NoZones,

    #[error("cannot compare set {0:?} with itself")]
    SelfComparison(String),

    #[error("invalid zone order: {0}")]
    InvalidOrder(String),

    #[error("exact ordering supports at most {max} zones, got {zones}; use the heuristic")]
    TooManyZones { zones: usize, max: usize },

    #[error("requested {requested} colours but there are at most 10 distinguishable hues")]
    TooManyColors { requested: usize },

    #[error("palette needs at least one colour")]
    NoColors,

    #[error(
        "colour separation {threshold} is unattainable for {count} colours; \
         the best achievable minimum distance is {achievable:.2}"
    )]
    SeparationUnattainable {
        count: usize,
        threshold: f64,
        achievable: f64,
    },

    #[error("invalid colour {0:?}: expected #rrggbb")]
    BadColor(String),

    #[error("no colour for set {0:?}")]
    MissingColor(String),

    #[error("invalid style: {0}")]
    InvalidStyle(String),

    #[error("need {needed} sets for this question, only {available} available")]
    TooFewSets { needed: usize, available: usize },

    #[error("invalid question request: {0}")]
    InvalidQuestion(String),

    #[error("a task set needs exactly 12 zone sets, got {0}")]
    TaskSetSize(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
