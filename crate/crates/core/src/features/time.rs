use super::{energy, mean, peak_to_peak, FeatureVector};
use crate::dsp::spectrum::magnitude;
use crate::error::{Error, Result};
use crate::series::TimeSeries;

pub const TIME_FEATURES: [&str; 10] = [
    "CCD", "MAD", "NSED", "PPAD", "RMS", "RMSD", "SDD", "SER", "SIGMA", "VAR",
];

/// Deviation features of monitoring signal `m` against baseline `b`.
///
/// Integrals are sums over samples; every ratio cancels `dt` (and `df` for
/// SDD). MAD, RMS, SIGMA and VAR divide by the sample count.
pub fn extract_time_features(m: &TimeSeries, b: &TimeSeries) -> Result<FeatureVector> {
    if m.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: m.len(),
            right: b.len(),
        });
    }
    if (m.dt() - b.dt()).abs() > 1e-9 * b.dt() {
        return Err(Error::InvalidSeries(format!(
            "dt mismatch: {} vs {}",
            m.dt(),
            b.dt()
        )));
    }
    let (x, r) = (m.samples(), b.samples());
    let n = x.len() as f64;
    let eb = energy(r);
    if eb == 0.0 {
        return Err(Error::ZeroEnergy("baseline"));
    }
    let em = energy(x);
    if em == 0.0 {
        return Err(Error::ZeroEnergy("monitoring signal"));
    }
    let cross: f64 = x.iter().zip(r).map(|(a, c)| a * c).sum();
    let mu = mean(x);
    let diff: f64 = x.iter().zip(r).map(|(a, c)| (a - c) * (a - c)).sum();
    let var = x.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / n;

    let fm = magnitude(x, m.dt()).magnitudes;
    let fb = magnitude(r, b.dt()).magnitudes;
    let sdd_num: f64 = fb.iter().zip(&fm).map(|(p, q)| (p - q).abs()).sum();
    let sdd = sdd_num / (energy(&fb) * energy(&fm)).sqrt();

    let values = vec![
        1.0 - (cross * cross / (eb * em)).sqrt(),
        x.iter().map(|v| (v - mu).abs()).sum::<f64>() / n,
        (em - eb) / eb,
        peak_to_peak(x) - peak_to_peak(r),
        (em / n).sqrt(),
        (diff / eb).sqrt(),
        sdd,
        em / eb,
        var.sqrt(),
        var,
    ];
    Ok(FeatureVector {
        names: &TIME_FEATURES,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{DamageClass, SeriesMeta};

    fn ts(v: Vec<f64>) -> TimeSeries {
        TimeSeries::new(v, 1e-7, SeriesMeta::new(DamageClass::CC, "P2-2*", 0)).unwrap()
    }

    #[test]
    fn zero_energy_inputs_are_errors() {
        let z = ts(vec![0.0; 8]);
        let s = ts((0..8).map(|i| i as f64).collect());
        assert!(matches!(extract_time_features(&s, &z), Err(Error::ZeroEnergy("baseline"))));
        assert!(matches!(
            extract_time_features(&z, &s),
            Err(Error::ZeroEnergy("monitoring signal"))
        ));
    }

    #[test]
    fn length_mismatch_is_error() {
        let a = ts(vec![1.0; 8]);
        let b = ts(vec![1.0; 9]);
        assert!(matches!(extract_time_features(&a, &b), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn feature_order_is_fixed() {
        let s = ts(vec![1.0, -2.0, 3.0, 0.5]);
        let f = extract_time_features(&s, &s).unwrap();
        assert_eq!(f.names, &TIME_FEATURES);
        assert_eq!(f.get("SER"), Some(1.0));
        assert_eq!(f.get("nope"), None);
    }
}
