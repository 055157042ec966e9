use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{argmax, present_classes};
use crate::error::{Error, Result};
use crate::series::DamageClass;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NaiveBayesParams {
    /// Added to every variance, relative to the largest feature variance.
    pub var_smoothing: f64,
}

impl Default for NaiveBayesParams {
    fn default() -> Self {
        Self { var_smoothing: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianNB {
    pub classes: Vec<DamageClass>,
    pub log_priors: Vec<f64>,
    pub means: Vec<Vec<f64>>,
    pub variances: Vec<Vec<f64>>,
}

impl GaussianNB {
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn fit(x: &[Vec<f64>], y: &[DamageClass], p: &NaiveBayesParams) -> Result<Self> {
        if !(p.var_smoothing >= 0.0) {
            return Err(Error::invalid("models.naive_bayes.var_smoothing", "must be non-negative"));
        }
        let d = x[0].len();
        let n = x.len() as f64;
        let global_max = (0..d)
            .map(|j| {
                let m = x.iter().map(|r| r[j]).sum::<f64>() / n;
                x.iter().map(|r| (r[j] - m).powi(2)).sum::<f64>() / n
            })
            .fold(0.0f64, f64::max);
        let mut eps = p.var_smoothing * global_max;
        if eps == 0.0 {
            eps = f64::MIN_POSITIVE;
        }
        let classes = present_classes(y);
        let (mut log_priors, mut means, mut variances) = (vec![], vec![], vec![]);
        for &c in &classes {
            let rows: Vec<&Vec<f64>> = x.iter().zip(y).filter(|(_, &l)| l == c).map(|(r, _)| r).collect();
            let nc = rows.len() as f64;
            let mu: Vec<f64> = (0..d).map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / nc).collect();
            let var = (0..d)
                .map(|j| rows.iter().map(|r| (r[j] - mu[j]).powi(2)).sum::<f64>() / nc + eps)
                .collect();
            log_priors.push((nc / n).ln());
            means.push(mu);
            variances.push(var);
        }
        Ok(Self {
            classes,
            log_priors,
            means,
            variances,
        })
    }

    /// Unnormalized log posterior per class.
    pub fn joint_log_likelihood(&self, x: &[f64]) -> Vec<f64> {
        (0..self.classes.len())
            .map(|k| {
                self.log_priors[k]
                    - 0.5
                        * x.iter()
                            .zip(self.means[k].iter().zip(&self.variances[k]))
                            .map(|(v, (m, s))| (2.0 * PI * s).ln() + (v - m) * (v - m) / s)
                            .sum::<f64>()
            })
            .collect()
    }

    pub fn predict_row(&self, x: &[f64]) -> DamageClass {
        self.classes[argmax(self.joint_log_likelihood(x))]
    }
}
