use serde::{Deserialize, Serialize};

use super::{argmax, present_classes};
use crate::error::{Error, Result};
use crate::series::DamageClass;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LogisticParams {
    pub learning_rate: f64,
    pub max_iter: usize,
    /// Stop when the loss change or the gradient norm drops below this.
    pub tol: f64,
    pub l2: f64,
}

impl Default for LogisticParams {
    fn default() -> Self {
        Self {
            learning_rate: 0.1,
            max_iter: 2000,
            tol: 1e-6,
            l2: 1e-4,
        }
    }
}

/// One binary logistic regression per class present at fit time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticOvR {
    pub classes: Vec<DamageClass>,
    /// Per class: weights then intercept.
    pub weights: Vec<Vec<f64>>,
    pub iterations: Vec<usize>,
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

fn dot(w: &[f64], x: &[f64]) -> f64 {
    let d = x.len();
    w[..d].iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + w[d]
}

/// `log(1 + e^z)` without overflow.
fn softplus(z: f64) -> f64 {
    z.max(0.0) + (-z.abs()).exp().ln_1p()
}

fn gradient(x: &[Vec<f64>], y: &[f64], w: &[f64], l2: f64) -> Vec<f64> {
    let d = x[0].len();
    let n = x.len() as f64;
    let mut g = vec![0.0; d + 1];
    for (r, &t) in x.iter().zip(y) {
        let e = sigmoid(dot(w, r)) - t;
        for (gj, xj) in g[..d].iter_mut().zip(r) {
            *gj += e * xj;
        }
        g[d] += e;
    }
    for (j, gj) in g.iter_mut().enumerate() {
        *gj /= n;
        if j < d {
            *gj += l2 * w[j];
        }
    }
    g
}

/// Nesterov-accelerated gradient descent with a fixed step. Momentum is
/// reset whenever a step would raise the loss, so accepted losses never
/// increase.
fn fit_binary(x: &[Vec<f64>], y: &[f64], p: &LogisticParams) -> Result<(Vec<f64>, usize)> {
    let d = x[0].len();
    let n = x.len() as f64;
    let loss = |w: &[f64]| {
        let data: f64 = x
            .iter()
            .zip(y)
            .map(|(r, &t)| {
                let z = dot(w, r);
                softplus(z) - t * z
            })
            .sum::<f64>()
            / n;
        data + 0.5 * p.l2 * w[..d].iter().map(|v| v * v).sum::<f64>()
    };
    let mut w = vec![0.0; d + 1];
    let mut prev_w = w.clone();
    let mut cur = loss(&w);
    let mut k = 0usize;
    let mut last_change = f64::INFINITY;
    for it in 1..=p.max_iter {
        let beta = k as f64 / (k as f64 + 3.0);
        let look: Vec<f64> = w.iter().zip(&prev_w).map(|(a, b)| a + beta * (a - b)).collect();
        let g = gradient(x, y, &look, p.l2);
        if k == 0 && g.iter().map(|v| v * v).sum::<f64>().sqrt() < p.tol {
            return Ok((w, it - 1));
        }
        let cand: Vec<f64> = look.iter().zip(&g).map(|(a, b)| a - p.learning_rate * b).collect();
        let next = loss(&cand);
        if !next.is_finite() {
            return Err(Error::NonFinite("logistic loss".into()));
        }
        if next > cur && k > 0 {
            k = 0;
            prev_w.clone_from(&w);
            continue;
        }
        last_change = (cur - next).abs();
        prev_w = std::mem::replace(&mut w, cand);
        cur = next;
        k += 1;
        if last_change < p.tol {
            return Ok((w, it));
        }
    }
    Err(Error::NotConverged {
        iterations: p.max_iter,
        last_change,
    })
}

impl LogisticOvR {
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn fit(x: &[Vec<f64>], y: &[DamageClass], p: &LogisticParams) -> Result<Self> {
        if !(p.learning_rate > 0.0) || p.max_iter == 0 || !(p.tol > 0.0) || !(p.l2 >= 0.0) {
            return Err(Error::invalid("models.logistic", "learning_rate, max_iter and tol must be positive"));
        }
        let classes = present_classes(y);
        let mut weights = Vec::with_capacity(classes.len());
        let mut iterations = Vec::with_capacity(classes.len());
        for &c in &classes {
            let t: Vec<f64> = y.iter().map(|&l| if l == c { 1.0 } else { 0.0 }).collect();
            let (w, it) = fit_binary(x, &t, p)?;
            weights.push(w);
            iterations.push(it);
        }
        Ok(Self {
            classes,
            weights,
            iterations,
        })
    }

    pub fn predict_row(&self, x: &[f64]) -> DamageClass {
        self.classes[argmax(self.weights.iter().map(|w| dot(w, x)))]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigmoid_and_softplus_are_stable() {
        assert_eq!(sigmoid(0.0), 0.5);
        assert!(sigmoid(-800.0) >= 0.0 && sigmoid(800.0) <= 1.0);
        assert!((softplus(0.0) - 2f64.ln()).abs() < 1e-15);
        assert_eq!(softplus(1000.0), 1000.0);
    }

    #[test]
    fn iteration_cap_reports_not_converged() {
        let x = vec![vec![-1.0], vec![-0.5], vec![0.5], vec![1.0]];
        let y = [DamageClass::CC, DamageClass::CC, DamageClass::HDC, DamageClass::HDC];
        let p = LogisticParams {
            max_iter: 3,
            ..LogisticParams::default()
        };
        assert!(matches!(LogisticOvR::fit(&x, &y, &p), Err(Error::NotConverged { iterations: 3, .. })));
    }
}
