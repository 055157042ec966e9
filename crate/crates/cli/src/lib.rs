//! Command-line pipeline around `gwclass-core`: configuration, on-disk
//! formats, stage manifests, reports and figures.

pub mod config;
pub mod error;
pub mod io;
pub mod manifest;
pub mod plot;
pub mod report;
pub mod stages;

pub use config::PipelineConfig;
pub use error::{CliError, Result};
pub use stages::{pipeline, Context, PipelineOutcome};
