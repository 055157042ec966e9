use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{predict, split, train, Classifier, Hyperparams, SplitSpec, Variant};
use crate::error::{Error, Result};
use crate::features::FeatureMatrix;
use crate::rng::{derive, Stream};
use crate::series::DamageClass;

/// Confusion rows are true classes, columns predictions, both in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub accuracy: f64,
    pub confusion: [[u32; DamageClass::COUNT]; DamageClass::COUNT],
    pub n_test: usize,
    pub seed: u64,
}

impl EvalReport {
    pub fn from_predictions(truth: &[DamageClass], pred: &[DamageClass], seed: u64) -> Result<Self> {
        if truth.is_empty() {
            return Err(Error::Empty("test set"));
        }
        if truth.len() != pred.len() {
            return Err(Error::LengthMismatch {
                left: truth.len(),
                right: pred.len(),
            });
        }
        let mut confusion = [[0u32; DamageClass::COUNT]; DamageClass::COUNT];
        for (t, p) in truth.iter().zip(pred) {
            confusion[t.index()][p.index()] += 1;
        }
        let hits: u32 = (0..DamageClass::COUNT).map(|i| confusion[i][i]).sum();
        Ok(Self {
            accuracy: hits as f64 / truth.len() as f64,
            confusion,
            n_test: truth.len(),
            seed,
        })
    }

    pub fn row_sums(&self) -> [u32; DamageClass::COUNT] {
        self.confusion.map(|r| r.iter().sum())
    }
}

pub fn evaluate<C: Classifier + ?Sized>(model: &C, test: &FeatureMatrix, seed: u64) -> Result<EvalReport> {
    if test.n_rows() == 0 {
        return Err(Error::Empty("test set"));
    }
    let pred = predict(model, test)?;
    EvalReport::from_predictions(&test.labels, &pred, seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub variant: Variant,
    pub mean: f64,
    /// Population standard deviation over trials.
    pub std: f64,
    pub reports: Vec<EvalReport>,
}

impl TrialSummary {
    pub fn accuracies(&self) -> Vec<f64> {
        self.reports.iter().map(|r| r.accuracy).collect()
    }
}

/// Seeds used by trial `i`: `(split, model)`. Splits do not depend on the
/// variant, so every variant sees the same partitions.
pub fn trial_seeds(master: u64, i: usize) -> (u64, u64) {
    (
        derive(master, Stream::Split, &[i as u64]),
        derive(master, Stream::Model, &[i as u64]),
    )
}

/// `n` independent split/train/evaluate runs.
pub fn repeated_trials(
    variant: Variant,
    fm: &FeatureMatrix,
    hyper: &Hyperparams,
    spec: &SplitSpec,
    n: usize,
    master_seed: u64,
) -> Result<TrialSummary> {
    if n == 0 {
        return Err(Error::invalid("evaluation.n_splits", "must be at least 1"));
    }
    let reports: Vec<EvalReport> = (0..n)
        .into_par_iter()
        .map(|i| {
            let (split_seed, model_seed) = trial_seeds(master_seed, i);
            let (tr, te) = split(fm, &SplitSpec { seed: split_seed, ..*spec })?;
            let model = train(variant, &tr, hyper, model_seed)?;
            evaluate(&model, &te, split_seed)
        })
        .collect::<Result<_>>()?;
    let acc: Vec<f64> = reports.iter().map(|r| r.accuracy).collect();
    let mean = acc.iter().sum::<f64>() / n as f64;
    let std = (acc.iter().map(|a| (a - mean).powi(2)).sum::<f64>() / n as f64).sqrt();
    Ok(TrialSummary {
        variant,
        mean,
        std,
        reports,
    })
}
