use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::rng_from;
use crate::series::DamageClass;

type Counts = [u32; DamageClass::COUNT];

/// Candidate features examined at each split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MaxFeatures {
    #[default]
    All,
    /// `max(1, floor(sqrt(d)))`.
    Sqrt,
    Count(usize),
}

impl MaxFeatures {
    pub fn resolve(self, d: usize) -> usize {
        match self {
            MaxFeatures::All => d,
            MaxFeatures::Sqrt => ((d as f64).sqrt().floor() as usize).max(1),
            MaxFeatures::Count(k) => k.clamp(1, d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TreeParams {
    pub max_depth: Option<usize>,
    pub min_samples_leaf: usize,
    pub max_features: MaxFeatures,
}

impl Default for TreeParams {
    fn default() -> Self {
        Self {
            max_depth: None,
            min_samples_leaf: 1,
            max_features: MaxFeatures::All,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Node {
    Leaf {
        counts: Counts,
        gini: f64,
    },
    /// Rows with `x[feature] <= threshold` go left.
    Split {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
        counts: Counts,
        gini: f64,
    },
}

impl Node {
    pub fn counts(&self) -> &Counts {
        match self {
            Node::Leaf { counts, .. } | Node::Split { counts, .. } => counts,
        }
    }

    pub fn gini(&self) -> f64 {
        match self {
            Node::Leaf { gini, .. } | Node::Split { gini, .. } => *gini,
        }
    }

    pub fn n_samples(&self) -> u32 {
        self.counts().iter().sum()
    }
}

/// CART classifier with Gini impurity. Node 0 is the root.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionTree {
    pub nodes: Vec<Node>,
    pub n_features: usize,
}

pub(crate) fn gini(c: &Counts) -> f64 {
    let n: u32 = c.iter().sum();
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    1.0 - c.iter().map(|&k| (k as f64 / n).powi(2)).sum::<f64>()
}

fn majority(c: &Counts) -> DamageClass {
    let best = c.iter().copied().max().unwrap_or(0);
    DamageClass::from_index(c.iter().position(|&k| k == best).unwrap_or(0)).unwrap_or(DamageClass::Baseline)
}

struct SplitChoice {
    score: f64,
    feature: usize,
    threshold: f64,
}

struct Builder<'a> {
    x: &'a [Vec<f64>],
    y: &'a [DamageClass],
    p: TreeParams,
    k: usize,
    rng: Option<ChaCha8Rng>,
    nodes: Vec<Node>,
}

impl Builder<'_> {
    fn counts(&self, rows: &[usize]) -> Counts {
        let mut c = [0; DamageClass::COUNT];
        for &r in rows {
            c[self.y[r].index()] += 1;
        }
        c
    }

    /// Lowest weighted child impurity for one feature; ties keep the
    /// smallest threshold.
    fn best_for_feature(&self, rows: &mut [usize], f: usize, total: &Counts) -> Option<SplitChoice> {
        let x = self.x;
        rows.sort_by(|&a, &b| x[a][f].total_cmp(&x[b][f]));
        let n = rows.len();
        let min_leaf = self.p.min_samples_leaf;
        let mut left = [0u32; DamageClass::COUNT];
        let mut best: Option<SplitChoice> = None;
        for i in 1..n {
            left[self.y[rows[i - 1]].index()] += 1;
            let (a, b) = (x[rows[i - 1]][f], x[rows[i]][f]);
            if a == b || i < min_leaf || n - i < min_leaf {
                continue;
            }
            let mut right = *total;
            for (r, l) in right.iter_mut().zip(&left) {
                *r -= l;
            }
            let score = i as f64 * gini(&left) + (n - i) as f64 * gini(&right);
            if best.as_ref().is_none_or(|s| score < s.score) {
                let mid = 0.5 * (a + b);
                let threshold = if mid < b { mid } else { a };
                best = Some(SplitChoice { score, feature: f, threshold });
            }
        }
        best
    }

    fn candidate_order(&mut self) -> Vec<usize> {
        let d = self.x[0].len();
        let mut all: Vec<usize> = (0..d).collect();
        if let Some(rng) = self.rng.as_mut() {
            all.shuffle(rng);
            all[..self.k].sort_unstable();
        }
        all
    }

    fn build(&mut self, mut rows: Vec<usize>, depth: usize) -> usize {
        let counts = self.counts(&rows);
        let g = gini(&counts);
        let id = self.nodes.len();
        self.nodes.push(Node::Leaf { counts, gini: g });
        let depth_ok = self.p.max_depth.is_none_or(|m| depth < m);
        if g == 0.0 || !depth_ok || rows.len() < 2 * self.p.min_samples_leaf {
            return id;
        }
        // The first `k` candidates are searched together; later ones only
        // when none of those admits a split.
        let order = self.candidate_order();
        let mut best: Option<SplitChoice> = None;
        for (pos, &f) in order.iter().enumerate() {
            if pos >= self.k && best.is_some() {
                break;
            }
            if let Some(c) = self.best_for_feature(&mut rows, f, &counts) {
                if best.as_ref().is_none_or(|b| c.score < b.score) {
                    best = Some(c);
                }
            }
        }
        let Some(choice) = best else {
            return id;
        };
        let (l, r): (Vec<usize>, Vec<usize>) = rows
            .iter()
            .partition(|&&i| self.x[i][choice.feature] <= choice.threshold);
        let left = self.build(l, depth + 1);
        let right = self.build(r, depth + 1);
        self.nodes[id] = Node::Split {
            feature: choice.feature,
            threshold: choice.threshold,
            left,
            right,
            counts,
            gini: g,
        };
        id
    }
}

impl DecisionTree {
    pub fn fit(x: &[Vec<f64>], y: &[DamageClass], p: &TreeParams, seed: u64) -> Result<Self> {
        let rows: Vec<usize> = (0..x.len()).collect();
        Self::fit_rows(x, y, rows, p, rng_from(seed))
    }

    /// Fits on `rows`, which may repeat indices.
    pub(crate) fn fit_rows(
        x: &[Vec<f64>],
        y: &[DamageClass],
        rows: Vec<usize>,
        p: &TreeParams,
        rng: ChaCha8Rng,
    ) -> Result<Self> {
        if p.min_samples_leaf == 0 {
            return Err(Error::invalid("models.tree.min_samples_leaf", "must be at least 1"));
        }
        if rows.is_empty() {
            return Err(Error::Empty("training set"));
        }
        let d = x[0].len();
        let k = p.max_features.resolve(d);
        let mut b = Builder {
            x,
            y,
            p: *p,
            k,
            rng: (k < d).then_some(rng),
            nodes: Vec::new(),
        };
        b.build(rows, 0);
        Ok(Self {
            nodes: b.nodes,
            n_features: d,
        })
    }

    pub fn predict_row(&self, x: &[f64]) -> DamageClass {
        let mut i = 0;
        loop {
            match &self.nodes[i] {
                Node::Leaf { counts, .. } => return majority(counts),
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                    ..
                } => i = if x[*feature] <= *threshold { *left } else { *right },
            }
        }
    }

    pub fn depth(&self) -> usize {
        fn go(t: &DecisionTree, i: usize) -> usize {
            match &t.nodes[i] {
                Node::Leaf { .. } => 0,
                Node::Split { left, right, .. } => 1 + go(t, *left).max(go(t, *right)),
            }
        }
        go(self, 0)
    }

    pub fn n_leaves(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Leaf { .. })).count()
    }

    /// Distinct features used by splits, ascending.
    pub fn features_used(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self
            .nodes
            .iter()
            .filter_map(|n| match n {
                Node::Split { feature, .. } => Some(*feature),
                Node::Leaf { .. } => None,
            })
            .collect();
        f.sort_unstable();
        f.dedup();
        f
    }
}
