//! Baseline-referenced and baseline-free feature banks.

mod baseline_free;
mod matrix;
mod time;

pub use baseline_free::{extract_baseline_free, Sf4Variant, BASELINE_FREE_FEATURES};
pub use matrix::{build_feature_matrix, pair_baselines, FeatureMatrix};
pub use time::{extract_time_features, TIME_FEATURES};

use serde::{Deserialize, Serialize};

/// Which feature bank a matrix holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bank {
    #[default]
    #[serde(rename = "baseline")]
    BaselineReferenced,
    BaselineFree,
}

impl Bank {
    pub fn feature_names(self) -> &'static [&'static str] {
        match self {
            Bank::BaselineReferenced => &TIME_FEATURES,
            Bank::BaselineFree => &BASELINE_FREE_FEATURES,
        }
    }
}

/// Feature values in fixed vocabulary order.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub names: &'static [&'static str],
    pub values: Vec<f64>,
}

impl FeatureVector {
    pub fn get(&self, name: &str) -> Option<f64> {
        self.names
            .iter()
            .position(|n| *n == name)
            .map(|i| self.values[i])
    }
}

fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

fn energy(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn peak_to_peak(x: &[f64]) -> f64 {
    let (lo, hi) = x
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    hi - lo
}
