//! Uniformly sampled signals and their acquisition metadata.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The five structural states, in the canonical order used for confusion
/// matrix axes and tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DamageClass {
    Baseline,
    CC,
    LFA,
    HDC,
    TRF,
}

impl DamageClass {
    pub const ALL: [DamageClass; 5] = [
        DamageClass::Baseline,
        DamageClass::CC,
        DamageClass::LFA,
        DamageClass::HDC,
        DamageClass::TRF,
    ];
    pub const COUNT: usize = 5;

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            DamageClass::Baseline => "Baseline",
            DamageClass::CC => "CC",
            DamageClass::LFA => "LFA",
            DamageClass::HDC => "HDC",
            DamageClass::TRF => "TRF",
        }
    }
}

impl fmt::Display for DamageClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DamageClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidSeries(format!("unknown class label `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Synthetic,
    Ingested,
    Augmented,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesMeta {
    pub label: DamageClass,
    pub path_id: String,
    pub trial: u32,
    /// Noise copy index; 0 for parents.
    pub copy: u32,
    pub provenance: Provenance,
}

impl SeriesMeta {
    pub fn new(label: DamageClass, path_id: impl Into<String>, trial: u32) -> Self {
        Self {
            label,
            path_id: path_id.into(),
            trial,
            copy: 0,
            provenance: Provenance::Synthetic,
        }
    }

    /// Stable identifier, also used for file names.
    pub fn key(&self) -> String {
        let path: String = self
            .path_id
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
            .collect();
        format!("{}_{}_t{:03}_c{:02}", self.label, path, self.trial, self.copy)
    }
}

/// A real-valued signal sampled every `dt` seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    samples: Vec<f64>,
    dt: f64,
    pub meta: SeriesMeta,
}

impl TimeSeries {
    pub fn new(samples: Vec<f64>, dt: f64, meta: SeriesMeta) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidSeries(format!(
                "length {} < 2",
                samples.len()
            )));
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidSeries(format!("dt must be positive, got {dt}")));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidSeries(format!("non-finite sample at index {i}")));
        }
        Ok(Self { samples, dt, meta })
    }

    /// Same dt and metadata, new samples.
    pub fn with_samples(&self, samples: Vec<f64>) -> Result<Self> {
        Self::new(samples, self.dt, self.meta.clone())
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration(&self) -> f64 {
        self.dt * self.samples.len() as f64
    }

    pub fn peak(&self) -> f64 {
        self.samples.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn peak_to_peak(&self) -> f64 {
        let (lo, hi) = self
            .samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
        hi - lo
    }
}
