//! JSON reports. None of them carry timestamps or absolute paths, so two
//! runs with the same config and seed produce identical bytes.

use std::collections::BTreeMap;

use gwclass_core::features::Bank;
use gwclass_core::interpret::{FeatureImportance, ImportanceReport};
use gwclass_core::models::{EvalReport, TrialSummary, Variant};
use gwclass_core::selection::{Dropped, SelectionReport};
use gwclass_core::DamageClass;
use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub type Confusion = [[u32; DamageClass::COUNT]; DamageClass::COUNT];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionFile {
    pub schema_version: u32,
    pub bank: Bank,
    pub n_rows: usize,
    pub input_features: Vec<String>,
    pub threshold: f64,
    pub kept: Vec<String>,
    pub dropped: Vec<Dropped>,
}

impl SelectionFile {
    pub fn new(bank: Bank, n_rows: usize, input_features: Vec<String>, rep: SelectionReport) -> Self {
        Self {
            schema_version: REPORT_SCHEMA_VERSION,
            bank,
            n_rows,
            input_features,
            threshold: rep.threshold,
            kept: rep.kept,
            dropped: rep.dropped,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantResult {
    pub variant: Variant,
    pub mean_accuracy: f64,
    pub std_accuracy: f64,
    /// One entry per trial, in trial order.
    pub accuracies: Vec<f64>,
    /// Summed over trials; rows are true classes.
    pub confusion_total: Confusion,
    pub trials: Vec<EvalReport>,
}

impl From<TrialSummary> for VariantResult {
    fn from(t: TrialSummary) -> Self {
        let mut total = [[0u32; DamageClass::COUNT]; DamageClass::COUNT];
        for r in &t.reports {
            for (i, row) in r.confusion.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    total[i][j] += c;
                }
            }
        }
        Self {
            variant: t.variant,
            mean_accuracy: t.mean,
            std_accuracy: t.std,
            accuracies: t.accuracies(),
            confusion_total: total,
            trials: t.reports,
        }
    }
}

/// Highest mean accuracy; ties go to the earlier variant in canonical order.
pub fn best_variant(results: &[VariantResult]) -> Option<Variant> {
    let rank = |v: Variant| Variant::ALL.iter().position(|x| *x == v).unwrap_or(usize::MAX);
    results
        .iter()
        .max_by(|a, b| {
            a.mean_accuracy
                .total_cmp(&b.mean_accuracy)
                .then(rank(b.variant).cmp(&rank(a.variant)))
        })
        .map(|r| r.variant)
}

/// A saved model scored on the held-out part of the first split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeldOutResult {
    pub variant: Variant,
    pub report: EvalReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationFile {
    pub schema_version: u32,
    pub bank: Bank,
    pub features: Vec<String>,
    pub n_rows: usize,
    pub n_trials: usize,
    pub train_fraction: f64,
    pub stratified: bool,
    pub master_seed: u64,
    pub best_variant: Variant,
    pub results: Vec<VariantResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub held_out: Vec<HeldOutResult>,
}

impl EvaluationFile {
    pub fn result(&self, v: Variant) -> Option<&VariantResult> {
        self.results.iter().find(|r| r.variant == v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImportanceFile {
    pub schema_version: u32,
    pub variant: Variant,
    pub repeats: usize,
    pub n_splits: usize,
    /// Name of the injected pure-noise column, if any.
    pub noise_probe: Option<String>,
    /// Mean over splits of the per-split mean drop; `std` is the spread of
    /// the per-split means.
    pub summary: Vec<FeatureImportance>,
    pub ranking: Vec<String>,
    /// How often each feature ranked first in a split.
    pub top_counts: BTreeMap<String, usize>,
    pub splits: Vec<ImportanceReport>,
}

impl ImportanceFile {
    pub fn new(variant: Variant, repeats: usize, noise_probe: Option<String>, splits: Vec<ImportanceReport>) -> Self {
        let names: Vec<String> = splits
            .first()
            .map(|s| s.features.iter().map(|f| f.feature.clone()).collect())
            .unwrap_or_default();
        let k = splits.len() as f64;
        let summary: Vec<FeatureImportance> = names
            .iter()
            .enumerate()
            .map(|(j, name)| {
                let m: Vec<f64> = splits.iter().map(|s| s.features[j].mean).collect();
                let mean = m.iter().sum::<f64>() / k;
                let std = (m.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / k).sqrt();
                FeatureImportance {
                    feature: name.clone(),
                    mean,
                    std,
                }
            })
            .collect();
        let mut top_counts: BTreeMap<String, usize> = names.iter().map(|n| (n.clone(), 0)).collect();
        for s in &splits {
            if let Some(first) = s.ranking().first() {
                *top_counts.entry(first.to_string()).or_default() += 1;
            }
        }
        let agg = ImportanceReport {
            features: summary.clone(),
            baseline_accuracy: 0.0,
            repeats,
            seed: 0,
        };
        let ranking = agg.ranking().into_iter().map(str::to_string).collect();
        Self {
            schema_version: REPORT_SCHEMA_VERSION,
            variant,
            repeats,
            n_splits: splits.len(),
            noise_probe,
            summary,
            ranking,
            top_counts,
            splits,
        }
    }

    pub fn get(&self, feature: &str) -> Option<&FeatureImportance> {
        self.summary.iter().find(|f| f.feature == feature)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepFile {
    pub schema_version: u32,
    pub levels: Vec<f64>,
    pub n_rows: usize,
    pub bank: Bank,
    pub kept: Vec<String>,
    pub dropped: Vec<String>,
    pub n_trials: usize,
    pub master_seed: u64,
    pub best_variant: Variant,
    pub results: Vec<VariantResult>,
}

impl SweepFile {
    pub fn result(&self, v: Variant) -> Option<&VariantResult> {
        self.results.iter().find(|r| r.variant == v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(v: Variant, mean: f64) -> VariantResult {
        VariantResult {
            variant: v,
            mean_accuracy: mean,
            std_accuracy: 0.0,
            accuracies: vec![mean],
            confusion_total: [[0; 5]; 5],
            trials: vec![],
        }
    }

    #[test]
    fn best_variant_breaks_ties_canonically() {
        let r = [result(Variant::RandomForest, 0.9), result(Variant::DecisionTree, 0.9)];
        assert_eq!(best_variant(&r), Some(Variant::DecisionTree));
        let r = [result(Variant::GaussianNB, 0.5), result(Variant::RandomForest, 0.9)];
        assert_eq!(best_variant(&r), Some(Variant::RandomForest));
        assert_eq!(best_variant(&[]), None);
    }

    #[test]
    fn importance_summary_counts_first_places() {
        let split = |a: f64, b: f64| ImportanceReport {
            features: vec![
                FeatureImportance { feature: "A".into(), mean: a, std: 0.0 },
                FeatureImportance { feature: "B".into(), mean: b, std: 0.0 },
            ],
            baseline_accuracy: 1.0,
            repeats: 1,
            seed: 0,
        };
        let f = ImportanceFile::new(Variant::RandomForest, 1, None, vec![split(0.4, 0.1), split(0.2, 0.3), split(0.6, 0.0)]);
        assert_eq!(f.top_counts["A"], 2);
        assert_eq!(f.top_counts["B"], 1);
        assert_eq!(f.ranking, vec!["A", "B"]);
        assert!((f.get("A").unwrap().mean - 0.4).abs() < 1e-15);
    }
}
