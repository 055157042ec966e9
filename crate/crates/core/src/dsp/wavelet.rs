//! Daubechies discrete wavelet transform.
//!
//! Filter conventions follow the common toolkit layout: the stored scaling
//! filter is the reconstruction lowpass `h`; the reconstruction highpass is
//! `g[n] = (-1)^n h[L-1-n]`; analysis filters are their reversals.
//! Symmetric mode uses half-sample symmetric extension and produces
//! `floor((N + L - 1) / 2)` coefficients per band. Periodization mode wraps
//! the signal and halves it exactly, which makes the transform orthogonal.

use serde::{Deserialize, Serialize};

use super::daubechies_table::DAUBECHIES;
use crate::error::{Error, Result};
use crate::series::TimeSeries;

pub const MAX_ORDER: usize = 45;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryMode {
    #[default]
    Symmetric,
    Periodization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct WaveletSpec {
    pub order: usize,
    pub levels: usize,
    /// Detail level kept by [`wavelet_denoise`].
    pub selected_level: usize,
    pub boundary: BoundaryMode,
}

impl Default for WaveletSpec {
    fn default() -> Self {
        Self {
            order: 40,
            levels: 7,
            selected_level: 6,
            boundary: BoundaryMode::Symmetric,
        }
    }
}

impl WaveletSpec {
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_ORDER).contains(&self.order) {
            return Err(Error::UnsupportedOrder(self.order));
        }
        if self.levels == 0 {
            return Err(Error::invalid("wavelet.levels", "must be >= 1"));
        }
        if !(1..=self.levels).contains(&self.selected_level) {
            return Err(Error::invalid(
                "wavelet.selected_level",
                format!("must be in 1..={}", self.levels),
            ));
        }
        Ok(())
    }

    pub fn filter_len(&self) -> usize {
        2 * self.order
    }

    /// Deepest decomposition the configured filter supports on `len` samples.
    pub fn max_depth(&self, len: usize) -> usize {
        max_depth(len, self.filter_len(), self.boundary)
    }
}

fn max_depth(mut len: usize, filter_len: usize, mode: BoundaryMode) -> usize {
    let mut depth = 0;
    match mode {
        BoundaryMode::Symmetric => {
            while len >= filter_len {
                len = (len + filter_len - 1) / 2;
                depth += 1;
            }
        }
        BoundaryMode::Periodization => {
            while len >= 2 && len.is_multiple_of(2) {
                len /= 2;
                depth += 1;
            }
        }
    }
    depth
}

/// Reconstruction lowpass and highpass filters of the order-`order`
/// Daubechies wavelet (`2 * order` taps each).
pub fn daubechies_filters(order: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(Error::UnsupportedOrder(order));
    }
    let h = DAUBECHIES[order - 1].to_vec();
    let l = h.len();
    let g = (0..l)
        .map(|n| if n % 2 == 0 { h[l - 1 - n] } else { -h[l - 1 - n] })
        .collect();
    Ok((h, g))
}

/// Band identifier for [`dwt_reconstruct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    /// Detail band, level 1 = finest.
    Detail(usize),
    Approximation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DwtCoefficients {
    /// `details[0]` is level 1.
    pub details: Vec<Vec<f64>>,
    pub approximation: Vec<f64>,
    pub original_length: usize,
    pub spec: WaveletSpec,
}

impl DwtCoefficients {
    pub fn all_bands(&self) -> Vec<Band> {
        let mut b: Vec<Band> = (1..=self.details.len()).map(Band::Detail).collect();
        b.push(Band::Approximation);
        b
    }

    pub fn energy(&self) -> f64 {
        let sq = |v: &Vec<f64>| v.iter().map(|x| x * x).sum::<f64>();
        self.details.iter().map(sq).sum::<f64>() + sq(&self.approximation)
    }
}

/// Half-sample symmetric index reflection, valid for any offset.
fn reflect(i: isize, n: usize) -> usize {
    let n = n as isize;
    let p = i.rem_euclid(2 * n);
    (if p < n { p } else { 2 * n - 1 - p }) as usize
}

fn analysis_symmetric(x: &[f64], h: &[f64], g: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = x.len();
    let l = h.len();
    let out = (n + l - 1) / 2;
    let mut a = vec![0.0; out];
    let mut d = vec![0.0; out];
    // Analysis filter F = reverse(rec), so F[j] = rec[l-1-j] and
    // o[k] = sum_j F[j] x[2k+1-j] = sum_m rec[m] x[2k+2-l+m].
    for k in 0..out {
        let base = 2 * k as isize + 2 - l as isize;
        let (mut sa, mut sd) = (0.0, 0.0);
        for m in 0..l {
            let v = x[reflect(base + m as isize, n)];
            sa += h[m] * v;
            sd += g[m] * v;
        }
        a[k] = sa;
        d[k] = sd;
    }
    (a, d)
}

fn synthesis_symmetric(a: &[f64], d: &[f64], h: &[f64], g: &[f64]) -> Vec<f64> {
    let m = a.len();
    let l = h.len();
    let out = 2 * m + 2 - l;
    let mut y = vec![0.0; out];
    // y[n] = sum_k a[k] h[n + l - 2 - 2k] + d[k] g[n + l - 2 - 2k].
    for (k, (&ak, &dk)) in a.iter().zip(d).enumerate() {
        let start = 2 * k as isize + 2 - l as isize;
        for j in 0..l {
            let n = start + j as isize;
            if n >= 0 && (n as usize) < out {
                y[n as usize] += ak * h[j] + dk * g[j];
            }
        }
    }
    y
}

fn analysis_periodic(x: &[f64], h: &[f64], g: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = x.len();
    let half = n / 2;
    let mut a = vec![0.0; half];
    let mut d = vec![0.0; half];
    for k in 0..half {
        let (mut sa, mut sd) = (0.0, 0.0);
        for (j, (&hj, &gj)) in h.iter().zip(g).enumerate() {
            let v = x[(2 * k + j) % n];
            sa += hj * v;
            sd += gj * v;
        }
        a[k] = sa;
        d[k] = sd;
    }
    (a, d)
}

fn synthesis_periodic(a: &[f64], d: &[f64], h: &[f64], g: &[f64]) -> Vec<f64> {
    let n = 2 * a.len();
    let mut y = vec![0.0; n];
    for (k, (&ak, &dk)) in a.iter().zip(d).enumerate() {
        for (j, (&hj, &gj)) in h.iter().zip(g).enumerate() {
            y[(2 * k + j) % n] += ak * hj + dk * gj;
        }
    }
    y
}

/// Multi-level decomposition of raw samples.
pub fn decompose(x: &[f64], spec: &WaveletSpec) -> Result<DwtCoefficients> {
    spec.validate()?;
    let filter_len = spec.filter_len();
    let feasible = spec.max_depth(x.len());
    if spec.levels > feasible {
        if spec.boundary == BoundaryMode::Periodization && x.len() >= 2 {
            return Err(Error::OddLength {
                len: x.len(),
                level: feasible + 1,
            });
        }
        return Err(Error::DepthInfeasible {
            len: x.len(),
            filter_len,
            requested: spec.levels,
            max_depth: feasible,
        });
    }
    let (h, g) = daubechies_filters(spec.order)?;
    let mut approx = x.to_vec();
    let mut details = Vec::with_capacity(spec.levels);
    for _ in 0..spec.levels {
        let (a, d) = match spec.boundary {
            BoundaryMode::Symmetric => analysis_symmetric(&approx, &h, &g),
            BoundaryMode::Periodization => analysis_periodic(&approx, &h, &g),
        };
        details.push(d);
        approx = a;
    }
    Ok(DwtCoefficients {
        details,
        approximation: approx,
        original_length: x.len(),
        spec: *spec,
    })
}

/// Inverse transform keeping only the bands in `keep`; other bands are
/// treated as zero. Output has the original length.
pub fn reconstruct(c: &DwtCoefficients, keep: &[Band]) -> Result<Vec<f64>> {
    if keep.is_empty() {
        return Err(Error::UnknownBand("empty band set".into()));
    }
    let levels = c.details.len();
    for b in keep {
        if let Band::Detail(k) = b {
            if !(1..=levels).contains(k) {
                return Err(Error::UnknownBand(format!("detail level {k} (have 1..={levels})")));
            }
        }
    }
    let (h, g) = daubechies_filters(c.spec.order)?;
    let zeroed = |v: &Vec<f64>, on: bool| if on { v.clone() } else { vec![0.0; v.len()] };
    let mut a = zeroed(&c.approximation, keep.contains(&Band::Approximation));
    for level in (1..=levels).rev() {
        let d = zeroed(&c.details[level - 1], keep.contains(&Band::Detail(level)));
        if a.len() == d.len() + 1 {
            a.pop();
        }
        if a.len() != d.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: d.len(),
            });
        }
        a = match c.spec.boundary {
            BoundaryMode::Symmetric => synthesis_symmetric(&a, &d, &h, &g),
            BoundaryMode::Periodization => synthesis_periodic(&a, &d, &h, &g),
        };
    }
    a.truncate(c.original_length);
    if a.len() != c.original_length {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: c.original_length,
        });
    }
    Ok(a)
}

pub fn dwt_decompose(s: &TimeSeries, spec: &WaveletSpec) -> Result<DwtCoefficients> {
    decompose(s.samples(), spec)
}

pub fn dwt_reconstruct(c: &DwtCoefficients, keep: &[Band], like: &TimeSeries) -> Result<TimeSeries> {
    like.with_samples(reconstruct(c, keep)?)
}

/// Offset removal followed by reconstruction from the selected detail band.
pub fn wavelet_denoise(s: &TimeSeries, spec: &WaveletSpec) -> Result<TimeSeries> {
    let centered = super::remove_offset(s);
    let c = dwt_decompose(&centered, spec)?;
    dwt_reconstruct(&c, &[Band::Detail(spec.selected_level)], s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn haar_filters() {
        let (h, g) = daubechies_filters(1).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((h[0] - r).abs() < 1e-16 && (h[1] - r).abs() < 1e-16);
        assert!((g[0] - r).abs() < 1e-16 && (g[1] + r).abs() < 1e-16);
    }

    #[test]
    fn unsupported_orders() {
        assert!(matches!(daubechies_filters(0), Err(Error::UnsupportedOrder(0))));
        assert!(matches!(daubechies_filters(46), Err(Error::UnsupportedOrder(46))));
    }

    #[test]
    fn symmetric_level_lengths() {
        let spec = WaveletSpec::default();
        let c = decompose(&vec![0.0; 2000], &spec).unwrap();
        let lens: Vec<usize> = c.details.iter().map(Vec::len).collect();
        assert_eq!(lens, vec![1039, 559, 319, 199, 139, 109, 94]);
        assert_eq!(c.approximation.len(), 94);
        assert!(c.details.iter().all(|d| d.iter().all(|v| *v == 0.0)));
    }

    #[test]
    fn depth_error_states_maximum() {
        let spec = WaveletSpec {
            levels: 12,
            selected_level: 6,
            ..WaveletSpec::default()
        };
        // 2000 -> 1039 -> ... -> 86 -> 82 -> 80 -> 79: eleven levels fit.
        match decompose(&vec![1.0; 2000], &spec) {
            Err(Error::DepthInfeasible { max_depth, .. }) => assert_eq!(max_depth, 11),
            other => panic!("{other:?}"),
        }
        let too_short = decompose(&vec![1.0; 50], &WaveletSpec::default()).unwrap_err();
        assert!(too_short.to_string().contains("maximum feasible depth is 0"));
    }

    #[test]
    fn periodization_needs_even_lengths() {
        let spec = WaveletSpec {
            boundary: BoundaryMode::Periodization,
            ..WaveletSpec::default()
        };
        assert!(matches!(decompose(&vec![1.0; 2000], &spec), Err(Error::OddLength { .. })));
        assert!(decompose(&vec![1.0; 2048], &spec).is_ok());
    }

    #[test]
    fn haar_constant_has_zero_detail() {
        let (h, _) = daubechies_filters(1).unwrap();
        let spec = WaveletSpec {
            order: 1,
            levels: 1,
            selected_level: 1,
            boundary: BoundaryMode::Symmetric,
        };
        let x: Vec<f64> = h.iter().cycle().take(16).copied().collect();
        let c = decompose(&x, &spec).unwrap();
        assert!(c.details[0].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn unknown_band_is_rejected() {
        let c = decompose(&vec![1.0; 512], &WaveletSpec::default()).unwrap();
        assert!(matches!(reconstruct(&c, &[Band::Detail(8)]), Err(Error::UnknownBand(_))));
        assert!(matches!(reconstruct(&c, &[Band::Detail(0)]), Err(Error::UnknownBand(_))));
        assert!(reconstruct(&c, &[]).is_err());
    }

    #[test]
    fn reflection_matches_half_sample_rule() {
        assert_eq!(reflect(-1, 5), 0);
        assert_eq!(reflect(-3, 5), 2);
        assert_eq!(reflect(5, 5), 4);
        assert_eq!(reflect(7, 5), 2);
        assert_eq!(reflect(2, 5), 2);
    }
}
