//! Guided-wave damage classification for honeycomb sandwich panels.
//!
//! The crate covers the whole offline pipeline: toneburst excitation and a
//! parametric received-signal surrogate, Daubechies wavelet preprocessing,
//! baseline-referenced and baseline-free feature banks, Pearson filtering,
//! five classifiers and permutation importance.

pub mod dsp;
pub mod error;
pub mod features;
pub mod interpret;
pub mod models;
pub mod rng;
pub mod selection;
pub mod series;
pub mod signalgen;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use error::{Error, ErrorKind, Result};
pub use series::{DamageClass, Provenance, SeriesMeta, TimeSeries};
