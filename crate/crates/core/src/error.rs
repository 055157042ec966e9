//! Error type shared by every stage of the pipeline.

use thiserror::Error;

use crate::series::DamageClass;

/// Coarse error category, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Config,
    Data,
    Numeric,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("signal truncated: content ends at {end_s:.3e} s but record is {record_s:.3e} s")]
    Truncation { end_s: f64, record_s: f64 },

    #[error("duplicate dataset key: class {class}, trial {trial}")]
    DuplicateKey { class: DamageClass, trial: u32 },

    #[error("no scenario for class {0}")]
    MissingClass(DamageClass),

    #[error("unsupported Daubechies order {0} (supported: 1..=45)")]
    UnsupportedOrder(usize),

    #[error("signal of length {len} too short for {requested} levels with filter length {filter_len}; maximum feasible depth is {max_depth}")]
    DepthInfeasible {
        len: usize,
        filter_len: usize,
        requested: usize,
        max_depth: usize,
    },

    #[error("periodization requires even length at every level; length {len} fails at level {level}")]
    OddLength { len: usize, level: usize },

    #[error("unknown band {0}")]
    UnknownBand(String),

    #[error("zero-energy {0}")]
    ZeroEnergy(&'static str),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("empty {0}")]
    Empty(&'static str),

    #[error("no baseline pairing for {} series: {}", .0.len(), .0.join(", "))]
    Unpaired(Vec<String>),

    #[error("constant feature `{0}`")]
    ConstantFeature(String),

    #[error("every feature was dropped by selection")]
    AllFeaturesDropped,

    #[error("dimension mismatch: model expects {expected} features, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("class {class} has {rows} rows; stratified split needs at least 2")]
    TooFewRows { class: DamageClass, rows: usize },

    #[error("training needs at least 2 classes, found {0}")]
    TooFewClasses(usize),

    #[error("optimizer did not converge after {iterations} iterations (last change {last_change:.3e})")]
    NotConverged { iterations: usize, last_change: f64 },

    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }

    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            InvalidParameter { .. }
            | MissingClass(_)
            | UnsupportedOrder(_)
            | UnknownBand(_)
            | Truncation { .. }
            | DepthInfeasible { .. } => ErrorKind::Config,
            InvalidSeries(_)
            | DuplicateKey { .. }
            | LengthMismatch { .. }
            | Empty(_)
            | Unpaired(_)
            | DimensionMismatch { .. }
            | TooFewRows { .. }
            | TooFewClasses(_)
            | Serde(_) => ErrorKind::Data,
            OddLength { .. }
            | ZeroEnergy(_)
            | ConstantFeature(_)
            | AllFeaturesDropped
            | NonFinite(_)
            | NotConverged { .. } => ErrorKind::Numeric,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
