use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{extract_baseline_free, extract_time_features, Bank, Sf4Variant};
use crate::error::{Error, Result};
use crate::series::{DamageClass, TimeSeries};

/// Labeled `n x d` feature table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureMatrix {
    pub feature_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<DamageClass>,
    pub bank: Bank,
    /// Path used as reference for the baseline-referenced bank.
    pub baseline_path: Option<String>,
}

impl FeatureMatrix {
    pub fn new(
        feature_names: Vec<String>,
        rows: Vec<Vec<f64>>,
        labels: Vec<DamageClass>,
        bank: Bank,
        baseline_path: Option<String>,
    ) -> Result<Self> {
        if rows.len() != labels.len() {
            return Err(Error::LengthMismatch {
                left: rows.len(),
                right: labels.len(),
            });
        }
        let d = feature_names.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: r.len(),
                });
            }
            if let Some(j) = r.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite(format!("row {i}, feature {}", feature_names[j])));
            }
        }
        Ok(Self {
            feature_names,
            rows,
            labels,
            bank,
            baseline_path,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.feature_names.iter().position(|n| n == name)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self {
            feature_names: cols.iter().map(|&j| self.feature_names[j].clone()).collect(),
            rows: self
                .rows
                .iter()
                .map(|r| cols.iter().map(|&j| r[j]).collect())
                .collect(),
            labels: self.labels.clone(),
            bank: self.bank,
            baseline_path: self.baseline_path.clone(),
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self {
            feature_names: self.feature_names.clone(),
            rows: idx.iter().map(|&i| self.rows[i].clone()).collect(),
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            bank: self.bank,
            baseline_path: self.baseline_path.clone(),
        }
    }

    /// Appends a column.
    pub fn with_column(&self, name: &str, values: &[f64]) -> Result<Self> {
        if values.len() != self.n_rows() {
            return Err(Error::LengthMismatch {
                left: values.len(),
                right: self.n_rows(),
            });
        }
        let mut names = self.feature_names.clone();
        names.push(name.to_string());
        let rows = self
            .rows
            .iter()
            .zip(values)
            .map(|(r, &v)| {
                let mut r = r.clone();
                r.push(v);
                r
            })
            .collect();
        Self::new(names, rows, self.labels.clone(), self.bank, self.baseline_path.clone())
    }

    pub fn class_counts(&self) -> [usize; DamageClass::COUNT] {
        let mut c = [0; DamageClass::COUNT];
        for l in &self.labels {
            c[l.index()] += 1;
        }
        c
    }
}

/// For each series, the index of the reference series on `baseline_path`.
///
/// The reference comes from the pool trial nearest to the series' own trial
/// (ties to the lower trial), lowest copy first, never the series itself.
pub fn pair_baselines(dataset: &[TimeSeries], baseline_path: &str) -> Result<Vec<usize>> {
    let mut pool: BTreeMap<u32, Vec<(u32, usize)>> = BTreeMap::new();
    for (i, s) in dataset.iter().enumerate() {
        if s.meta.path_id == baseline_path {
            pool.entry(s.meta.trial).or_default().push((s.meta.copy, i));
        }
    }
    for v in pool.values_mut() {
        v.sort_unstable();
    }
    let mut trials: Vec<u32> = pool.keys().copied().collect();
    let mut unpaired = Vec::new();
    let mut out = Vec::with_capacity(dataset.len());
    for (i, s) in dataset.iter().enumerate() {
        let t = s.meta.trial;
        trials.sort_by_key(|&p| (p.abs_diff(t), p));
        let found = trials
            .iter()
            .flat_map(|p| pool[p].iter().map(|&(_, j)| j))
            .find(|&j| j != i);
        match found {
            Some(j) => out.push(j),
            None => unpaired.push(s.meta.key()),
        }
    }
    if !unpaired.is_empty() {
        return Err(Error::Unpaired(unpaired));
    }
    Ok(out)
}

/// One feature row per series, columns in vocabulary order.
pub fn build_feature_matrix(
    dataset: &[TimeSeries],
    baseline_path: &str,
    bank: Bank,
    sf4: Sf4Variant,
) -> Result<FeatureMatrix> {
    if dataset.is_empty() {
        return Err(Error::Empty("dataset"));
    }
    let rows: Vec<Vec<f64>> = match bank {
        Bank::BaselineReferenced => {
            let pairs = pair_baselines(dataset, baseline_path)?;
            dataset
                .par_iter()
                .zip(pairs.par_iter())
                .map(|(m, &j)| extract_time_features(m, &dataset[j]).map(|f| f.values))
                .collect::<Result<_>>()?
        }
        Bank::BaselineFree => dataset
            .par_iter()
            .map(|m| extract_baseline_free(m, sf4).map(|f| f.values))
            .collect::<Result<_>>()?,
    };
    FeatureMatrix::new(
        bank.feature_names().iter().map(|s| s.to_string()).collect(),
        rows,
        dataset.iter().map(|s| s.meta.label).collect(),
        bank,
        (bank == Bank::BaselineReferenced).then(|| baseline_path.to_string()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesMeta;

    fn series(label: DamageClass, path: &str, trial: u32, copy: u32, scale: f64) -> TimeSeries {
        let mut meta = SeriesMeta::new(label, path, trial);
        meta.copy = copy;
        let v = (0..16).map(|i| scale * ((i as f64) * 0.7).sin()).collect();
        TimeSeries::new(v, 1e-7, meta).unwrap()
    }

    #[test]
    fn pairing_prefers_same_trial_and_skips_self() {
        let ds = vec![
            series(DamageClass::Baseline, "P3-3*", 0, 0, 1.0),
            series(DamageClass::Baseline, "P3-3*", 0, 1, 1.0),
            series(DamageClass::Baseline, "P3-3*", 2, 0, 1.0),
            series(DamageClass::CC, "P2-2*", 2, 0, 1.3),
            series(DamageClass::CC, "P2-2*", 1, 0, 1.3),
            series(DamageClass::CC, "P2-2*", 9, 0, 1.3),
        ];
        let p = pair_baselines(&ds, "P3-3*").unwrap();
        assert_eq!(p, vec![1, 0, 0, 2, 0, 2]);
    }

    #[test]
    fn missing_pool_lists_every_series() {
        let ds = vec![
            series(DamageClass::CC, "P2-2*", 0, 0, 1.0),
            series(DamageClass::LFA, "P2-2*", 0, 0, 1.0),
        ];
        match pair_baselines(&ds, "P3-3*") {
            Err(Error::Unpaired(v)) => assert_eq!(v.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_dataset_is_error() {
        assert!(matches!(
            build_feature_matrix(&[], "P3-3*", Bank::BaselineFree, Sf4Variant::Kurtosis),
            Err(Error::Empty(_))
        ));
    }

    #[test]
    fn matrix_shapes() {
        let ds = vec![
            series(DamageClass::Baseline, "P3-3*", 0, 0, 1.0),
            series(DamageClass::Baseline, "P3-3*", 0, 1, 1.0),
            series(DamageClass::CC, "P2-2*", 0, 0, 1.3),
        ];
        let r = build_feature_matrix(&ds, "P3-3*", Bank::BaselineReferenced, Sf4Variant::Kurtosis)
            .unwrap();
        assert_eq!((r.n_rows(), r.n_features()), (3, 10));
        assert_eq!(r.baseline_path.as_deref(), Some("P3-3*"));
        let f = build_feature_matrix(&ds, "P3-3*", Bank::BaselineFree, Sf4Variant::Kurtosis).unwrap();
        assert_eq!((f.n_rows(), f.n_features()), (3, 13));
        assert_eq!(f.labels, vec![DamageClass::Baseline, DamageClass::Baseline, DamageClass::CC]);
    }

    #[test]
    fn column_helpers() {
        let m = FeatureMatrix::new(
            vec!["a".into(), "b".into()],
            vec![vec![1.0, 2.0], vec![3.0, 4.0]],
            vec![DamageClass::CC, DamageClass::HDC],
            Bank::BaselineFree,
            None,
        )
        .unwrap();
        assert_eq!(m.column(1), vec![2.0, 4.0]);
        let s = m.select_columns(&[1]);
        assert_eq!(s.feature_names, vec!["b"]);
        let w = m.with_column("noise", &[0.5, 0.6]).unwrap();
        assert_eq!(w.rows[1], vec![3.0, 4.0, 0.6]);
        assert!(m.with_column("x", &[1.0]).is_err());
        assert!(FeatureMatrix::new(vec!["a".into()], vec![vec![f64::NAN]], vec![DamageClass::CC], Bank::BaselineFree, None).is_err());
    }
}
