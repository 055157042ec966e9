use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::tree::{DecisionTree, MaxFeatures, TreeParams};
use crate::error::{Error, Result};
use crate::rng::{child_rng, Stream};
use crate::series::DamageClass;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ForestParams {
    pub n_trees: usize,
    pub bootstrap: bool,
    pub max_features: MaxFeatures,
    pub max_depth: Option<usize>,
    pub min_samples_leaf: usize,
}

impl Default for ForestParams {
    fn default() -> Self {
        Self {
            n_trees: 100,
            bootstrap: true,
            max_features: MaxFeatures::Sqrt,
            max_depth: None,
            min_samples_leaf: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomForest {
    pub trees: Vec<DecisionTree>,
    /// Features each tree split on.
    pub feature_subsets: Vec<Vec<usize>>,
}

impl RandomForest {
    /// Tree `t` draws its bootstrap sample and split candidates from a
    /// stream derived from `(seed, t)`.
    pub fn fit(x: &[Vec<f64>], y: &[DamageClass], p: &ForestParams, seed: u64) -> Result<Self> {
        if p.n_trees == 0 {
            return Err(Error::invalid("models.forest.n_trees", "must be at least 1"));
        }
        let tp = TreeParams {
            max_depth: p.max_depth,
            min_samples_leaf: p.min_samples_leaf,
            max_features: p.max_features,
        };
        let n = x.len();
        let trees: Vec<DecisionTree> = (0..p.n_trees)
            .into_par_iter()
            .map(|t| {
                let mut rng = child_rng(seed, Stream::Model, &[t as u64]);
                let rows = if p.bootstrap {
                    (0..n).map(|_| rng.random_range(0..n)).collect()
                } else {
                    (0..n).collect()
                };
                DecisionTree::fit_rows(x, y, rows, &tp, rng)
            })
            .collect::<Result<_>>()?;
        let feature_subsets = trees.iter().map(DecisionTree::features_used).collect();
        Ok(Self { trees, feature_subsets })
    }

    /// Majority vote; ties go to the class earlier in canonical order.
    pub fn predict_row(&self, x: &[f64]) -> DamageClass {
        let mut votes = [0usize; DamageClass::COUNT];
        for t in &self.trees {
            votes[t.predict_row(x).index()] += 1;
        }
        let best = votes.iter().copied().max().unwrap_or(0);
        DamageClass::from_index(votes.iter().position(|&v| v == best).unwrap_or(0))
            .unwrap_or(DamageClass::Baseline)
    }
}
