//! Five classifiers over feature matrices, plus splitting, scaling and
//! evaluation.

mod eval;
mod forest;
mod logistic;
mod naive_bayes;
mod svm;
mod tree;

pub use eval::{evaluate, repeated_trials, trial_seeds, EvalReport, TrialSummary};
pub use forest::{ForestParams, RandomForest};
pub use logistic::{LogisticOvR, LogisticParams};
pub use naive_bayes::{GaussianNB, NaiveBayesParams};
pub use svm::{LinearSvmOvO, SvmParams};
pub use tree::{DecisionTree, MaxFeatures, Node, TreeParams};

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::FeatureMatrix;
use crate::rng::rng_from;
use crate::series::DamageClass;

pub const MODEL_SCHEMA_VERSION: u32 = 1;

/// Anything that maps a feature row to a class.
pub trait Classifier: Sync {
    fn n_features(&self) -> usize;
    fn predict_row(&self, x: &[f64]) -> DamageClass;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    LogisticOvR,
    LinearSvmOvO,
    GaussianNB,
    DecisionTree,
    RandomForest,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::LogisticOvR,
        Variant::LinearSvmOvO,
        Variant::GaussianNB,
        Variant::DecisionTree,
        Variant::RandomForest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::LogisticOvR => "LogisticOvR",
            Variant::LinearSvmOvO => "LinearSvmOvO",
            Variant::GaussianNB => "GaussianNB",
            Variant::DecisionTree => "DecisionTree",
            Variant::RandomForest => "RandomForest",
        }
    }

    /// Linear models see standardized features.
    pub fn uses_scaling(self) -> bool {
        matches!(self, Variant::LogisticOvR | Variant::LinearSvmOvO)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid("models.variants", format!("unknown variant `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SplitSpec {
    pub train_fraction: f64,
    pub seed: u64,
    pub stratified: bool,
}

impl Default for SplitSpec {
    fn default() -> Self {
        Self {
            train_fraction: 0.75,
            seed: 0,
            stratified: true,
        }
    }
}

impl SplitSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.train_fraction > 0.0 && self.train_fraction < 1.0) {
            return Err(Error::invalid("evaluation.train_fraction", "must be in (0, 1)"));
        }
        Ok(())
    }
}

fn take_count(frac: f64, n: usize) -> usize {
    ((frac * n as f64).round() as usize).clamp(1, n - 1)
}

/// Sorted (train, test) row indices.
pub fn split_indices(labels: &[DamageClass], spec: &SplitSpec) -> Result<(Vec<usize>, Vec<usize>)> {
    spec.validate()?;
    let mut rng = rng_from(spec.seed);
    let mut train = Vec::new();
    let mut test = Vec::new();
    let groups: Vec<Vec<usize>> = if spec.stratified {
        DamageClass::ALL
            .iter()
            .map(|&c| (0..labels.len()).filter(|&i| labels[i] == c).collect::<Vec<_>>())
            .filter(|g| !g.is_empty())
            .collect()
    } else {
        vec![(0..labels.len()).collect()]
    };
    for mut g in groups {
        if g.len() < 2 {
            return Err(match g.first() {
                Some(&i) if spec.stratified => Error::TooFewRows {
                    class: labels[i],
                    rows: g.len(),
                },
                _ => Error::Empty("split input (need at least 2 rows)"),
            });
        }
        g.shuffle(&mut rng);
        let k = take_count(spec.train_fraction, g.len());
        train.extend_from_slice(&g[..k]);
        test.extend_from_slice(&g[k..]);
    }
    train.sort_unstable();
    test.sort_unstable();
    Ok((train, test))
}

pub fn split(fm: &FeatureMatrix, spec: &SplitSpec) -> Result<(FeatureMatrix, FeatureMatrix)> {
    let (tr, te) = split_indices(&fm.labels, spec)?;
    Ok((fm.select_rows(&tr), fm.select_rows(&te)))
}

/// Per-feature affine standardization fitted on training rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scaler {
    pub mean: Vec<f64>,
    /// Population std; constant columns store 1.
    pub std: Vec<f64>,
}

impl Scaler {
    pub fn fit(rows: &[Vec<f64>]) -> Self {
        let d = rows.first().map_or(0, Vec::len);
        let n = rows.len().max(1) as f64;
        let mean: Vec<f64> = (0..d).map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / n).collect();
        let std = (0..d)
            .map(|j| {
                let v = rows.iter().map(|r| (r[j] - mean[j]).powi(2)).sum::<f64>() / n;
                if v > 0.0 { v.sqrt() } else { 1.0 }
            })
            .collect();
        Self { mean, std }
    }

    pub fn transform_row(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(self.mean.iter().zip(&self.std))
            .map(|(v, (m, s))| (v - m) / s)
            .collect()
    }

    pub fn transform(&self, fm: &FeatureMatrix) -> FeatureMatrix {
        FeatureMatrix {
            rows: fm.rows.iter().map(|r| self.transform_row(r)).collect(),
            ..fm.clone()
        }
    }
}

pub fn standardize(train: &FeatureMatrix) -> (FeatureMatrix, Scaler) {
    let s = Scaler::fit(&train.rows);
    (s.transform(train), s)
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Hyperparams {
    pub logistic: LogisticParams,
    pub svm: SvmParams,
    pub naive_bayes: NaiveBayesParams,
    pub tree: TreeParams,
    pub forest: ForestParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", content = "params")]
pub enum Params {
    LogisticOvR(LogisticOvR),
    LinearSvmOvO(LinearSvmOvO),
    GaussianNB(GaussianNB),
    DecisionTree(DecisionTree),
    RandomForest(RandomForest),
}

/// A trained classifier with the scaler captured at training time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Model {
    pub schema_version: u32,
    pub feature_names: Vec<String>,
    pub scaler: Option<Scaler>,
    pub params: Params,
}

impl Model {
    pub fn variant(&self) -> Variant {
        match self.params {
            Params::LogisticOvR(_) => Variant::LogisticOvR,
            Params::LinearSvmOvO(_) => Variant::LinearSvmOvO,
            Params::GaussianNB(_) => Variant::GaussianNB,
            Params::DecisionTree(_) => Variant::DecisionTree,
            Params::RandomForest(_) => Variant::RandomForest,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let m: Model = serde_json::from_str(s)?;
        if m.schema_version != MODEL_SCHEMA_VERSION {
            return Err(Error::invalid(
                "model.schema_version",
                format!("expected {MODEL_SCHEMA_VERSION}, got {}", m.schema_version),
            ));
        }
        Ok(m)
    }

    fn raw_predict(&self, x: &[f64]) -> DamageClass {
        match &self.params {
            Params::LogisticOvR(m) => m.predict_row(x),
            Params::LinearSvmOvO(m) => m.predict_row(x),
            Params::GaussianNB(m) => m.predict_row(x),
            Params::DecisionTree(m) => m.predict_row(x),
            Params::RandomForest(m) => m.predict_row(x),
        }
    }
}

impl Classifier for Model {
    fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    fn predict_row(&self, x: &[f64]) -> DamageClass {
        match &self.scaler {
            Some(s) => self.raw_predict(&s.transform_row(x)),
            None => self.raw_predict(x),
        }
    }
}

/// Class ids present in `labels`, ascending.
pub(crate) fn present_classes(labels: &[DamageClass]) -> Vec<DamageClass> {
    let mut seen = [false; DamageClass::COUNT];
    for l in labels {
        seen[l.index()] = true;
    }
    DamageClass::ALL.iter().copied().filter(|c| seen[c.index()]).collect()
}

/// First index of the maximum; canonical tie-breaking.
pub(crate) fn argmax<I: IntoIterator<Item = f64>>(it: I) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, v) in it.into_iter().enumerate() {
        if v > best.1 {
            best = (i, v);
        }
    }
    best.0
}

pub fn train(variant: Variant, data: &FeatureMatrix, hyper: &Hyperparams, seed: u64) -> Result<Model> {
    if data.n_rows() == 0 {
        return Err(Error::Empty("training set"));
    }
    let classes = present_classes(&data.labels);
    if classes.len() < 2 {
        return Err(Error::TooFewClasses(classes.len()));
    }
    if let Some((i, _)) = data
        .rows
        .iter()
        .enumerate()
        .find(|(_, r)| r.iter().any(|v| !v.is_finite()))
    {
        return Err(Error::NonFinite(format!("training row {i}")));
    }
    let (scaled, scaler) = if variant.uses_scaling() {
        let (s, sc) = standardize(data);
        (s, Some(sc))
    } else {
        (data.clone(), None)
    };
    let (x, y) = (&scaled.rows, &scaled.labels);
    let params = match variant {
        Variant::LogisticOvR => Params::LogisticOvR(LogisticOvR::fit(x, y, &hyper.logistic)?),
        Variant::LinearSvmOvO => Params::LinearSvmOvO(LinearSvmOvO::fit(x, y, &hyper.svm)?),
        Variant::GaussianNB => Params::GaussianNB(GaussianNB::fit(x, y, &hyper.naive_bayes)?),
        Variant::DecisionTree => Params::DecisionTree(DecisionTree::fit(x, y, &hyper.tree, seed)?),
        Variant::RandomForest => Params::RandomForest(RandomForest::fit(x, y, &hyper.forest, seed)?),
    };
    Ok(Model {
        schema_version: MODEL_SCHEMA_VERSION,
        feature_names: data.feature_names.clone(),
        scaler,
        params,
    })
}

pub fn predict<C: Classifier + ?Sized>(model: &C, fm: &FeatureMatrix) -> Result<Vec<DamageClass>> {
    if fm.n_rows() == 0 {
        return Ok(Vec::new());
    }
    if fm.n_features() != model.n_features() {
        return Err(Error::DimensionMismatch {
            expected: model.n_features(),
            got: fm.n_features(),
        });
    }
    Ok(fm.rows.iter().map(|r| model.predict_row(r)).collect())
}
