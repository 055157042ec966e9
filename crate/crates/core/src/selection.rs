//! Pearson-correlation filtering of redundant features.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::FeatureMatrix;

/// Sample Pearson correlation.
///
/// The columns are centred first and the denominator is `sqrt(sxx * syy)`,
/// so `pearson(x, x) == 1` and `pearson(x, -x) == -1` hold exactly.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::Empty("column (need at least 2 values)"));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ConstantFeature(String::new()));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    pub feature_names: Vec<String>,
    /// `None` where a column is constant.
    pub values: Vec<Vec<Option<f64>>>,
}

pub fn correlation_matrix(fm: &FeatureMatrix) -> CorrelationMatrix {
    let d = fm.n_features();
    let cols: Vec<Vec<f64>> = (0..d).map(|j| fm.column(j)).collect();
    let upper: Vec<Vec<Option<f64>>> = (0..d)
        .into_par_iter()
        .map(|i| {
            (0..d)
                .map(|j| if j < i { None } else { pearson(&cols[i], &cols[j]).ok() })
                .collect()
        })
        .collect();
    let values = (0..d)
        .map(|i| (0..d).map(|j| if j < i { upper[j][i] } else { upper[i][j] }).collect())
        .collect();
    CorrelationMatrix {
        feature_names: fm.feature_names.clone(),
        values,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dropped {
    pub feature: String,
    /// Kept feature it correlated with; `None` for constant columns.
    pub representative: Option<String>,
    pub abs_rho: Option<f64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionReport {
    pub kept: Vec<String>,
    pub dropped: Vec<Dropped>,
    pub threshold: f64,
}

/// Greedy pass in column order: a column is dropped when `|rho| >=
/// threshold` against any earlier kept column. Constant columns go first.
pub fn filter_features(fm: &FeatureMatrix, threshold: f64) -> Result<(FeatureMatrix, SelectionReport)> {
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Error::invalid("selection.threshold", format!("must be in (0, 1], got {threshold}")));
    }
    if fm.n_rows() < 2 {
        return Err(Error::Empty("feature matrix (need at least 2 rows)"));
    }
    let corr = correlation_matrix(fm);
    let mut kept: Vec<usize> = Vec::new();
    let mut dropped = Vec::new();
    let constant: Vec<bool> = (0..fm.n_features()).map(|j| corr.values[j][j].is_none()).collect();
    for (j, &is_const) in constant.iter().enumerate() {
        if is_const {
            dropped.push(Dropped {
                feature: fm.feature_names[j].clone(),
                representative: None,
                abs_rho: None,
                reason: "zero variance".into(),
            });
        }
    }
    for j in (0..fm.n_features()).filter(|&j| !constant[j]) {
        // Representative: the kept column with the largest |rho|, earliest on ties.
        let best = kept
            .iter()
            .map(|&k| (k, corr.values[k][j].map_or(0.0, f64::abs)))
            .fold(None::<(usize, f64)>, |acc, (k, r)| match acc {
                Some((_, br)) if br >= r => acc,
                _ => Some((k, r)),
            });
        match best {
            Some((k, r)) if r >= threshold => dropped.push(Dropped {
                feature: fm.feature_names[j].clone(),
                representative: Some(fm.feature_names[k].clone()),
                abs_rho: Some(r),
                reason: "correlated".into(),
            }),
            _ => kept.push(j),
        }
    }
    if kept.is_empty() {
        return Err(Error::AllFeaturesDropped);
    }
    let report = SelectionReport {
        kept: kept.iter().map(|&j| fm.feature_names[j].clone()).collect(),
        dropped,
        threshold,
    };
    Ok((fm.select_columns(&kept), report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::Bank;
    use crate::series::DamageClass;

    fn matrix(cols: &[Vec<f64>]) -> FeatureMatrix {
        let n = cols[0].len();
        FeatureMatrix::new(
            (0..cols.len()).map(|j| format!("f{j}")).collect(),
            (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect(),
            vec![DamageClass::CC; n],
            Bank::BaselineFree,
            None,
        )
        .unwrap()
    }

    #[test]
    fn exact_identities() {
        let x = [0.3, -1.2, 4.4, 2.0, 0.1, -0.7];
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        assert_eq!(pearson(&x, &x).unwrap(), 1.0);
        assert_eq!(pearson(&x, &neg).unwrap(), -1.0);
    }

    #[test]
    fn constant_column_error() {
        assert!(matches!(pearson(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]), Err(Error::ConstantFeature(_))));
    }

    #[test]
    fn duplicate_drops_later_column() {
        let a = vec![1.0, 2.0, 3.0, 5.0];
        let b = vec![4.0, -1.0, 0.5, 2.0];
        let (out, rep) = filter_features(&matrix(&[a.clone(), b, a]), 0.95).unwrap();
        assert_eq!(rep.kept, vec!["f0", "f1"]);
        assert_eq!(rep.dropped.len(), 1);
        assert_eq!(rep.dropped[0].feature, "f2");
        assert_eq!(rep.dropped[0].representative.as_deref(), Some("f0"));
        assert_eq!(out.n_features(), 2);
    }

    #[test]
    fn constant_columns_dropped_with_reason() {
        let a = vec![1.0, 2.0, 3.0, 5.0];
        let (_, rep) = filter_features(&matrix(&[vec![7.0; 4], a]), 0.95).unwrap();
        assert_eq!(rep.kept, vec!["f1"]);
        assert_eq!(rep.dropped[0].reason, "zero variance");
    }

    #[test]
    fn all_constant_is_error() {
        assert!(matches!(
            filter_features(&matrix(&[vec![1.0; 4], vec![2.0; 4]]), 0.95),
            Err(Error::AllFeaturesDropped)
        ));
    }

    #[test]
    fn threshold_bounds() {
        let m = matrix(&[vec![1.0, 2.0, 3.0]]);
        assert!(filter_features(&m, 0.0).is_err());
        assert!(filter_features(&m, 1.0 + 1e-12).is_err());
        assert!(filter_features(&m, 1.0).is_ok());
    }

    #[test]
    fn correlation_matrix_symmetric_unit_diagonal() {
        let m = matrix(&[vec![1.0, 2.0, 4.0, 3.0], vec![0.0, 1.0, 0.5, 2.0], vec![3.0, 3.0, 3.0, 3.0]]);
        let c = correlation_matrix(&m);
        assert_eq!(c.values[0][0], Some(1.0));
        assert_eq!(c.values[0][1], c.values[1][0]);
        assert_eq!(c.values[2][2], None);
    }
}
