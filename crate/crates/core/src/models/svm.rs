use serde::{Deserialize, Serialize};

use super::present_classes;
use crate::error::{Error, Result};
use crate::series::DamageClass;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SvmParams {
    pub c: f64,
    pub epochs: usize,
    /// Initial step; decays as `eta0 / sqrt(t)`.
    pub eta0: f64,
}

impl Default for SvmParams {
    fn default() -> Self {
        Self {
            c: 1.0,
            epochs: 1000,
            eta0: 1.0,
        }
    }
}

/// Pairwise hinge-loss linear machines with majority voting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearSvmOvO {
    /// `(positive, negative, weights then intercept)`.
    pub machines: Vec<(DamageClass, DamageClass, Vec<f64>)>,
}

fn decision(w: &[f64], x: &[f64]) -> f64 {
    let d = x.len();
    w[..d].iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + w[d]
}

/// Full-batch subgradient descent on `lambda/2 |w|^2 + mean hinge`,
/// keeping the best iterate seen.
fn fit_pair(x: &[&[f64]], y: &[f64], p: &SvmParams) -> Vec<f64> {
    let d = x[0].len();
    let n = x.len() as f64;
    let lambda = 1.0 / (p.c * n);
    let objective = |w: &[f64]| {
        let hinge: f64 = x
            .iter()
            .zip(y)
            .map(|(r, &t)| (1.0 - t * decision(w, r)).max(0.0))
            .sum::<f64>()
            / n;
        0.5 * lambda * w[..d].iter().map(|v| v * v).sum::<f64>() + hinge
    };
    let mut w = vec![0.0; d + 1];
    let mut best = (objective(&w), w.clone());
    for t in 1..=p.epochs {
        let mut g = vec![0.0; d + 1];
        for (r, &yt) in x.iter().zip(y) {
            if yt * decision(&w, r) < 1.0 {
                for (gj, xj) in g[..d].iter_mut().zip(r.iter()) {
                    *gj -= yt * xj;
                }
                g[d] -= yt;
            }
        }
        for (j, gj) in g.iter_mut().enumerate() {
            *gj /= n;
            if j < d {
                *gj += lambda * w[j];
            }
        }
        let eta = p.eta0 / (t as f64).sqrt();
        for (wj, gj) in w.iter_mut().zip(&g) {
            *wj -= eta * gj;
        }
        let obj = objective(&w);
        if obj < best.0 {
            best = (obj, w.clone());
        }
    }
    best.1
}

impl LinearSvmOvO {
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn fit(x: &[Vec<f64>], y: &[DamageClass], p: &SvmParams) -> Result<Self> {
        if !(p.c > 0.0) || p.epochs == 0 || !(p.eta0 > 0.0) {
            return Err(Error::invalid("models.svm", "c, epochs and eta0 must be positive"));
        }
        let classes = present_classes(y);
        let mut machines = Vec::new();
        for (i, &a) in classes.iter().enumerate() {
            for &b in &classes[i + 1..] {
                let (rows, t): (Vec<&[f64]>, Vec<f64>) = x
                    .iter()
                    .zip(y)
                    .filter(|(_, &l)| l == a || l == b)
                    .map(|(r, &l)| (r.as_slice(), if l == a { 1.0 } else { -1.0 }))
                    .unzip();
                let w = fit_pair(&rows, &t, p);
                if w.iter().any(|v| !v.is_finite()) {
                    return Err(Error::NonFinite(format!("svm weights {a} vs {b}")));
                }
                machines.push((a, b, w));
            }
        }
        Ok(Self { machines })
    }

    /// Most votes wins; ties go to the class earlier in canonical order.
    pub fn predict_row(&self, x: &[f64]) -> DamageClass {
        let mut votes = [0usize; DamageClass::COUNT];
        for (a, b, w) in &self.machines {
            let winner = if decision(w, x) >= 0.0 { a } else { b };
            votes[winner.index()] += 1;
        }
        let best = votes.iter().copied().max().unwrap_or(0);
        DamageClass::from_index(votes.iter().position(|&v| v == best).unwrap_or(0))
            .unwrap_or(DamageClass::Baseline)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separable_line() {
        let x: Vec<Vec<f64>> = (0..20).map(|i| vec![i as f64 / 10.0 - 1.0]).collect();
        let y: Vec<DamageClass> = (0..20)
            .map(|i| if i < 10 { DamageClass::CC } else { DamageClass::TRF })
            .collect();
        let m = LinearSvmOvO::fit(&x, &y, &SvmParams::default()).unwrap();
        assert_eq!(m.machines.len(), 1);
        assert_eq!(m.predict_row(&[-0.8]), DamageClass::CC);
        assert_eq!(m.predict_row(&[0.8]), DamageClass::TRF);
    }
}
