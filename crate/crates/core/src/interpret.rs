//! Permutation importance on held-out data.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::FeatureMatrix;
use crate::models::{evaluate, Classifier};
use crate::rng::{child_rng, Stream};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureImportance {
    pub feature: String,
    /// Mean of `baseline_accuracy - permuted_accuracy`.
    pub mean: f64,
    /// Population std over repeats.
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImportanceReport {
    pub features: Vec<FeatureImportance>,
    pub baseline_accuracy: f64,
    pub repeats: usize,
    pub seed: u64,
}

impl ImportanceReport {
    /// Feature names by descending mean drop; ties keep column order.
    pub fn ranking(&self) -> Vec<&str> {
        let mut idx: Vec<usize> = (0..self.features.len()).collect();
        idx.sort_by(|&a, &b| self.features[b].mean.total_cmp(&self.features[a].mean));
        idx.iter().map(|&i| self.features[i].feature.as_str()).collect()
    }

    pub fn get(&self, feature: &str) -> Option<&FeatureImportance> {
        self.features.iter().find(|f| f.feature == feature)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("feature,mean,std\n");
        for f in &self.features {
            s.push_str(&format!("{},{},{}\n", f.feature, f.mean, f.std));
        }
        s
    }
}

/// Column `j` is shuffled `repeats` times with a stream derived from
/// `(seed, j)`; `test` itself is never modified.
pub fn permutation_importance<C: Classifier + ?Sized>(
    model: &C,
    test: &FeatureMatrix,
    repeats: usize,
    seed: u64,
) -> Result<ImportanceReport> {
    if repeats == 0 {
        return Err(Error::invalid("importance.repeats", "must be at least 1"));
    }
    let base = evaluate(model, test, seed)?.accuracy;
    let features = (0..test.n_features())
        .into_par_iter()
        .map(|j| {
            let mut rng = child_rng(seed, Stream::Permutation, &[j as u64]);
            let mut work = test.clone();
            let mut col = test.column(j);
            let mut drops = Vec::with_capacity(repeats);
            for _ in 0..repeats {
                col.shuffle(&mut rng);
                for (r, &v) in work.rows.iter_mut().zip(&col) {
                    r[j] = v;
                }
                drops.push(base - evaluate(model, &work, seed)?.accuracy);
            }
            let n = repeats as f64;
            let mean = drops.iter().sum::<f64>() / n;
            let std = (drops.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / n).sqrt();
            Ok(FeatureImportance {
                feature: test.feature_names[j].clone(),
                mean,
                std,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ImportanceReport {
        features,
        baseline_accuracy: base,
        repeats,
        seed,
    })
}

/// Appends a standard-normal column drawn from `seed`, independent of every
/// label, as a reference for importance that should be zero.
pub fn with_noise_probe(fm: &FeatureMatrix, name: &str, seed: u64) -> Result<FeatureMatrix> {
    if fm.column_index(name).is_some() {
        return Err(Error::invalid("importance.noise_probe", format!("column `{name}` already exists")));
    }
    let mut rng = child_rng(seed, Stream::Probe, &[]);
    let values: Vec<f64> = (0..fm.n_rows()).map(|_| rng.sample(StandardNormal)).collect();
    fm.with_column(name, &values)
}
