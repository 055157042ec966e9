use serde::{Deserialize, Serialize};

use super::{energy, mean, peak_to_peak, FeatureVector};
use crate::dsp::spectrum::magnitude;
use crate::error::{Error, Result};
use crate::series::TimeSeries;

pub const BASELINE_FREE_FEATURES: [&str; 13] = [
    "SF1", "SF2", "SF3", "SF4", "SF5", "SF6", "SF7", "SF8", "SF9", "SF10", "SF11", "SF12", "SF13",
];

/// Definition used for SF4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sf4Variant {
    /// `mean(x^4) / mean(x^2)^2`.
    #[default]
    Kurtosis,
    /// `mean(x^4) / mean(x^4)^2`, as printed in the source table.
    Printed,
}

/// Statistics of `m` alone; SF11..SF13 run over the one-sided DFT
/// magnitude bins.
pub fn extract_baseline_free(m: &TimeSeries, sf4: Sf4Variant) -> Result<FeatureVector> {
    let x = m.samples();
    let n = x.len() as f64;
    let m2 = energy(x) / n;
    if m2 == 0.0 {
        return Err(Error::ZeroEnergy("signal (SF7-SF10 undefined)"));
    }
    let m3 = x.iter().map(|v| v * v * v).sum::<f64>() / n;
    let m4 = x.iter().map(|v| (v * v) * (v * v)).sum::<f64>() / n;
    let mu = mean(x);
    let std = (x.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / n).sqrt();
    let rms = m2.sqrt();
    let peak = x.iter().fold(0.0f64, |p, v| p.max(v.abs()));
    let root = x.iter().map(|v| v.abs().sqrt()).sum::<f64>() / n;

    let f = magnitude(x, m.dt()).magnitudes;
    let nb = f.len() as f64;
    let f_mean = f.iter().sum::<f64>() / nb;
    let f2 = energy(&f) / nb;
    let f_var = f.iter().map(|v| (v - f_mean) * (v - f_mean)).sum::<f64>() / nb;

    let sf4 = match sf4 {
        Sf4Variant::Kurtosis => m4 / (m2 * m2),
        Sf4Variant::Printed => m4 / (m4 * m4),
    };
    let values = vec![
        m3,
        m4,
        peak_to_peak(x),
        sf4,
        rms,
        std,
        peak / rms,
        rms / root,
        peak / root,
        peak / (root * root),
        f2,
        f_var,
        f_mean,
    ];
    Ok(FeatureVector {
        names: &BASELINE_FREE_FEATURES,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{DamageClass, SeriesMeta};

    fn ts(v: Vec<f64>) -> TimeSeries {
        TimeSeries::new(v, 1e-7, SeriesMeta::new(DamageClass::TRF, "P2-2*", 0)).unwrap()
    }

    #[test]
    fn constant_one() {
        let f = extract_baseline_free(&ts(vec![1.0; 32]), Sf4Variant::Kurtosis).unwrap();
        let expect = [("SF1", 1.0), ("SF2", 1.0), ("SF3", 0.0), ("SF5", 1.0), ("SF6", 0.0), ("SF7", 1.0)];
        for (k, v) in expect {
            assert!((f.get(k).unwrap() - v).abs() < 1e-12, "{k}");
        }
        assert!((f.get("SF4").unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn printed_sf4_is_reciprocal_of_sf2() {
        let s = ts(vec![0.5, -1.5, 2.0, 0.25, -0.75]);
        let f = extract_baseline_free(&s, Sf4Variant::Printed).unwrap();
        let sf2 = f.get("SF2").unwrap();
        assert!((f.get("SF4").unwrap() - 1.0 / sf2).abs() < 1e-12);
    }

    #[test]
    fn zero_signal_is_error() {
        assert!(extract_baseline_free(&ts(vec![0.0; 8]), Sf4Variant::Kurtosis).is_err());
    }
}
