//! Pipeline configuration, read from TOML.

use std::path::{Path, PathBuf};

use gwclass_core::features::{Bank, Sf4Variant};
use gwclass_core::models::{
    ForestParams, Hyperparams, LogisticParams, NaiveBayesParams, SplitSpec, SvmParams, TreeParams, Variant,
};
use gwclass_core::signalgen::{
    default_severity_levels, ExcitationConfig, Jitter, NoiseConfig, Polarity, PropagationScenario, BASELINE_PATH,
};
use gwclass_core::dsp::WaveletSpec;
use gwclass_core::{DamageClass, Error};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PipelineConfig {
    pub master_seed: u64,
    pub excitation: ExcitationSection,
    pub scenarios: ScenarioSection,
    pub noise: NoiseSection,
    pub wavelet: WaveletSpec,
    pub features: FeatureSection,
    pub selection: SelectionSection,
    pub models: ModelSection,
    pub evaluation: EvaluationSection,
    pub importance: ImportanceSection,
    pub sweep: SweepSection,
    pub io: IoSection,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            master_seed: 42,
            excitation: ExcitationSection::default(),
            scenarios: ScenarioSection::default(),
            noise: NoiseSection::default(),
            wavelet: WaveletSpec::default(),
            features: FeatureSection::default(),
            selection: SelectionSection::default(),
            models: ModelSection::default(),
            evaluation: EvaluationSection::default(),
            importance: ImportanceSection::default(),
            sweep: SweepSection::default(),
            io: IoSection::default(),
        }
    }
}

/// Same fields as [`ExcitationConfig`], defaulting to the synthetic
/// 10 MHz record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExcitationSection {
    pub f: f64,
    pub n_cycles: u32,
    pub amplitude: f64,
    pub fs: f64,
    pub record_seconds: f64,
}

impl Default for ExcitationSection {
    fn default() -> Self {
        let e = ExcitationConfig::synthetic();
        Self {
            f: e.f,
            n_cycles: e.n_cycles,
            amplitude: e.amplitude,
            fs: e.fs,
            record_seconds: e.record_seconds,
        }
    }
}

impl From<ExcitationSection> for ExcitationConfig {
    fn from(e: ExcitationSection) -> Self {
        Self {
            f: e.f,
            n_cycles: e.n_cycles,
            amplitude: e.amplitude,
            fs: e.fs,
            record_seconds: e.record_seconds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioSection {
    pub trials_per_class: u32,
    /// Field-wise changes to the calibrated scenario of one class.
    pub overrides: Vec<ScenarioOverride>,
}

impl Default for ScenarioSection {
    fn default() -> Self {
        Self {
            trials_per_class: 20,
            overrides: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioOverride {
    pub class: DamageClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gain: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delay: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub broadening: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub echo_gain: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub echo_delay: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jitter: Option<Jitter>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarity: Option<Polarity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub site_delay_spread: Option<f64>,
}

impl ScenarioOverride {
    fn apply(&self, s: &mut PropagationScenario) {
        macro_rules! set {
            ($($f:ident),*) => { $(if let Some(v) = self.$f { s.$f = v; })* };
        }
        set!(gain, delay, broadening, echo_gain, echo_delay, jitter, polarity, site_delay_spread);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NoiseSection {
    pub beta_n: f64,
    pub copies: u32,
    /// Denoise each parent before adding noise copies. When false the
    /// denoise stage filters the noisy copies instead.
    pub apply_noise_after_denoise: bool,
}

impl Default for NoiseSection {
    fn default() -> Self {
        let n = NoiseConfig::default();
        Self {
            beta_n: n.beta_n,
            copies: n.copies,
            apply_noise_after_denoise: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FeatureSection {
    pub bank: Bank,
    pub sf4: Sf4Variant,
    pub baseline_path: String,
}

impl Default for FeatureSection {
    fn default() -> Self {
        Self {
            bank: Bank::BaselineReferenced,
            sf4: Sf4Variant::Kurtosis,
            baseline_path: BASELINE_PATH.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SelectionSection {
    pub threshold: f64,
}

impl Default for SelectionSection {
    fn default() -> Self {
        Self { threshold: 0.95 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ModelSection {
    pub variants: Vec<Variant>,
    pub logistic: LogisticParams,
    pub svm: SvmParams,
    pub naive_bayes: NaiveBayesParams,
    pub tree: TreeParams,
    pub forest: ForestParams,
}

impl Default for ModelSection {
    fn default() -> Self {
        let h = Hyperparams::default();
        Self {
            variants: Variant::ALL.to_vec(),
            logistic: h.logistic,
            svm: h.svm,
            naive_bayes: h.naive_bayes,
            tree: h.tree,
            forest: h.forest,
        }
    }
}

impl ModelSection {
    pub fn hyperparams(&self) -> Hyperparams {
        Hyperparams {
            logistic: self.logistic,
            svm: self.svm,
            naive_bayes: self.naive_bayes,
            tree: self.tree,
            forest: self.forest,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EvaluationSection {
    pub train_fraction: f64,
    pub stratified: bool,
    pub n_trials: usize,
}

impl Default for EvaluationSection {
    fn default() -> Self {
        Self {
            train_fraction: 0.75,
            stratified: true,
            n_trials: 10,
        }
    }
}

impl EvaluationSection {
    /// The per-trial seed is filled in by the trial runner.
    pub fn split_spec(&self) -> SplitSpec {
        SplitSpec {
            train_fraction: self.train_fraction,
            seed: 0,
            stratified: self.stratified,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ImportanceSection {
    pub repeats: usize,
    /// Model to explain; the best evaluated variant when unset.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<Variant>,
    /// Append a pure-noise column before training as a null reference.
    pub noise_probe: bool,
}

impl Default for ImportanceSection {
    fn default() -> Self {
        Self {
            repeats: 20,
            variant: None,
            noise_probe: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepSection {
    pub levels: Vec<f64>,
}

impl Default for SweepSection {
    fn default() -> Self {
        Self {
            levels: default_severity_levels(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IoSection {
    pub out_dir: PathBuf,
    /// Existing synth or ingest stage directory to use instead of
    /// synthesizing a dataset.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dataset: Option<PathBuf>,
    pub ingest: IngestSchema,
}

impl Default for IoSection {
    fn default() -> Self {
        Self {
            out_dir: PathBuf::from("out"),
            dataset: None,
            ingest: IngestSchema::default(),
        }
    }
}

/// Column names of recordings accepted by `ingest`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IngestSchema {
    pub time_column: String,
    pub amplitude_column: String,
    pub label_column: String,
    pub delimiter: char,
}

impl Default for IngestSchema {
    fn default() -> Self {
        Self {
            time_column: "time".into(),
            amplitude_column: "amplitude".into(),
            label_column: "label".into(),
            delimiter: ',',
        }
    }
}

impl PipelineConfig {
    pub fn from_toml(s: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(s).map_err(|e| CliError::Config(e.to_string()))?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&s)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| CliError::Config(e.to_string()))
    }

    /// SHA-256 of the canonical TOML serialization, ignoring `io.out_dir`.
    pub fn hash(&self) -> Result<String> {
        let mut c = self.clone();
        c.io.out_dir = PathBuf::new();
        Ok(hex::encode(Sha256::digest(c.to_toml()?.as_bytes())))
    }

    pub fn excitation(&self) -> ExcitationConfig {
        self.excitation.into()
    }

    pub fn noise(&self) -> NoiseConfig {
        NoiseConfig {
            beta_n: self.noise.beta_n,
            copies: self.noise.copies,
            seed: self.master_seed,
        }
    }

    /// Calibrated scenarios with the configured overrides applied.
    pub fn scenarios(&self) -> Result<Vec<PropagationScenario>> {
        let mut set = PropagationScenario::calibrated_set();
        let mut seen = [false; DamageClass::COUNT];
        for o in &self.scenarios.overrides {
            if std::mem::replace(&mut seen[o.class.index()], true) {
                return Err(CliError::Config(format!("scenarios.overrides: class {} listed twice", o.class)));
            }
            o.apply(&mut set[o.class.index()]);
        }
        Ok(set)
    }

    /// Checks every section before anything runs.
    pub fn validate(&self) -> Result<()> {
        self.excitation().validate()?;
        for s in self.scenarios()? {
            s.validate()?;
        }
        if self.scenarios.trials_per_class == 0 {
            return Err(Error::invalid("scenarios.trials_per_class", "must be >= 1").into());
        }
        self.noise().validate()?;
        self.wavelet.validate()?;
        let n = self.excitation().n_samples();
        let max = self.wavelet.max_depth(n);
        if self.wavelet.levels > max {
            return Err(Error::DepthInfeasible {
                len: n,
                filter_len: self.wavelet.filter_len(),
                requested: self.wavelet.levels,
                max_depth: max,
            }
            .into());
        }
        let t = self.selection.threshold;
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::invalid("selection.threshold", format!("must be in (0, 1], got {t}")).into());
        }
        if self.models.variants.is_empty() {
            return Err(Error::invalid("models.variants", "must not be empty").into());
        }
        for (i, v) in self.models.variants.iter().enumerate() {
            if self.models.variants[..i].contains(v) {
                return Err(Error::invalid("models.variants", format!("{v} listed twice")).into());
            }
        }
        self.evaluation.split_spec().validate()?;
        if self.evaluation.n_trials == 0 {
            return Err(Error::invalid("evaluation.n_trials", "must be >= 1").into());
        }
        if self.importance.repeats == 0 {
            return Err(Error::invalid("importance.repeats", "must be >= 1").into());
        }
        if self.sweep.levels.is_empty() || self.sweep.levels.iter().any(|s| !(0.0..=1.0).contains(s)) {
            return Err(Error::invalid("sweep.levels", "must be a non-empty list in [0, 1]").into());
        }
        let s = &self.io.ingest;
        let cols = [&s.time_column, &s.amplitude_column, &s.label_column];
        if cols.iter().any(|c| c.is_empty()) || cols[0] == cols[1] || cols[0] == cols[2] || cols[1] == cols[2] {
            return Err(Error::invalid("io.ingest", "column names must be distinct and non-empty").into());
        }
        if !s.delimiter.is_ascii() {
            return Err(Error::invalid("io.ingest.delimiter", "must be an ASCII character").into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_round_trips() {
        let c = PipelineConfig::default();
        let s = c.to_toml().unwrap();
        assert_eq!(PipelineConfig::from_toml(&s).unwrap(), c);
        c.validate().unwrap();
    }

    #[test]
    fn empty_file_is_default() {
        assert_eq!(PipelineConfig::from_toml("").unwrap(), PipelineConfig::default());
    }

    #[test]
    fn partial_excitation_keeps_synthetic_rate() {
        let c = PipelineConfig::from_toml("[excitation]\nn_cycles = 3\n").unwrap();
        assert_eq!(c.excitation.fs, 1e7);
        assert_eq!(c.excitation.n_cycles, 3);
    }

    #[test]
    fn overrides_apply_field_wise() {
        let c = PipelineConfig::from_toml("[[scenarios.overrides]]\nclass = \"CC\"\ngain = 1.5\n").unwrap();
        let s = c.scenarios().unwrap();
        assert_eq!(s[DamageClass::CC.index()].gain, 1.5);
        assert_eq!(s[DamageClass::CC.index()].delay, PropagationScenario::calibrated(DamageClass::CC).delay);
    }

    #[test]
    fn duplicate_override_is_rejected() {
        let t = "[[scenarios.overrides]]\nclass = \"CC\"\n[[scenarios.overrides]]\nclass = \"CC\"\n";
        assert!(PipelineConfig::from_toml(t).unwrap().scenarios().is_err());
    }
}
