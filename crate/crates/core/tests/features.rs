use std::collections::HashMap;

use gwclass_core::features::{
    build_feature_matrix, extract_baseline_free, extract_time_features, Bank, Sf4Variant,
};
use gwclass_core::signalgen::{
    build_dataset, synth_with_draw, ExcitationConfig, NoiseConfig, PropagationScenario, TrialDraw,
    BASELINE_PATH,
};
use gwclass_core::{DamageClass, SeriesMeta, TimeSeries};
use proptest::prelude::*;

fn ts(v: Vec<f64>) -> TimeSeries {
    TimeSeries::new(v, 1e-7, SeriesMeta::new(DamageClass::CC, "P2-2*", 0)).unwrap()
}

fn scaled(s: &TimeSeries, a: f64) -> TimeSeries {
    s.with_samples(s.samples().iter().map(|v| a * v).collect()).unwrap()
}

fn surrogate(c: DamageClass) -> TimeSeries {
    synth_with_draw(
        &ExcitationConfig::synthetic(),
        &PropagationScenario::calibrated(c).without_jitter(),
        &TrialDraw::NOMINAL,
    )
    .unwrap()
}

fn oracle() -> HashMap<String, f64> {
    include_str!("data/surrogate_features.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let (k, v) = l.split_once(' ').unwrap();
            (k.to_string(), v.parse().unwrap())
        })
        .collect()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1e-300) || (a - b).abs() <= 1e-12
}

#[test]
fn identical_signals() {
    let b = surrogate(DamageClass::Baseline);
    let f = extract_time_features(&b, &b).unwrap();
    for k in ["CCD", "NSED", "PPAD", "RMSD", "SDD"] {
        assert!(f.get(k).unwrap().abs() <= 1e-9, "{k}");
    }
    assert!((f.get("SER").unwrap() - 1.0).abs() <= 1e-9);
}

#[test]
fn doubled_signal() {
    let b = surrogate(DamageClass::Baseline);
    let f = extract_time_features(&scaled(&b, 2.0), &b).unwrap();
    assert!((f.get("SER").unwrap() - 4.0).abs() <= 1e-9);
    assert!((f.get("NSED").unwrap() - 3.0).abs() <= 1e-9);
    assert!((f.get("RMSD").unwrap() - 1.0).abs() <= 1e-9);
    assert!(f.get("CCD").unwrap().abs() <= 1e-9);
    assert!((f.get("PPAD").unwrap() - b.peak_to_peak()).abs() <= 1e-9);
}

#[test]
fn cc_surrogate_matches_reference_evaluation() {
    let o = oracle();
    let f = extract_time_features(&surrogate(DamageClass::CC), &surrogate(DamageClass::Baseline)).unwrap();
    for (k, v) in f.names.iter().zip(&f.values) {
        let want = o[&format!("CC.{k}")];
        assert!(close(*v, want, 1e-9), "{k}: {v} vs {want}");
    }
}

#[test]
fn trf_surrogate_matches_reference_evaluation() {
    let o = oracle();
    let f = extract_baseline_free(&surrogate(DamageClass::TRF), Sf4Variant::Kurtosis).unwrap();
    for (k, v) in f.names.iter().zip(&f.values) {
        let want = o[&format!("TRF.{k}")];
        // SF1 is a near-cancelling odd moment; compare against the signal scale.
        let ok = if *k == "SF1" { (v - want).abs() <= 1e-9 } else { close(*v, want, 1e-9) };
        assert!(ok, "{k}: {v} vs {want}");
    }
}

#[test]
fn matrix_dimensions_on_default_dataset() {
    let ds = build_dataset(
        &ExcitationConfig::synthetic(),
        &PropagationScenario::calibrated_set(),
        20,
        &NoiseConfig::default(),
        |s| Ok(s.clone()),
    )
    .unwrap();
    let r = build_feature_matrix(&ds, BASELINE_PATH, Bank::BaselineReferenced, Sf4Variant::Kurtosis).unwrap();
    assert_eq!((r.n_rows(), r.n_features()), (1000, 10));
    let f = build_feature_matrix(&ds, BASELINE_PATH, Bank::BaselineFree, Sf4Variant::Kurtosis).unwrap();
    assert_eq!((f.n_rows(), f.n_features()), (1000, 13));
    assert_eq!(r.labels, ds.iter().map(|s| s.meta.label).collect::<Vec<_>>());
}

#[test]
fn baseline_free_rows_ignore_the_baseline_pool() {
    let mut ds = build_dataset(
        &ExcitationConfig::synthetic(),
        &PropagationScenario::calibrated_set(),
        2,
        &NoiseConfig::default(),
        |s| Ok(s.clone()),
    )
    .unwrap();
    let a = build_feature_matrix(&ds, BASELINE_PATH, Bank::BaselineFree, Sf4Variant::Kurtosis).unwrap();
    for s in ds.iter_mut().filter(|s| s.meta.path_id == BASELINE_PATH) {
        s.meta.path_id = "other".into();
    }
    let b = build_feature_matrix(&ds, "other", Bank::BaselineFree, Sf4Variant::Kurtosis).unwrap();
    assert_eq!(a.rows, b.rows);
}

fn signal(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, len)
        .prop_filter("non-trivial energy", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ccd_is_scale_invariant(m in signal(64), b in signal(64)) {
        let (m, b) = (ts(m), ts(b));
        let base = extract_time_features(&m, &b).unwrap().get("CCD").unwrap();
        for a in [0.5, 2.0, 10.0] {
            let c = extract_time_features(&scaled(&m, a), &b).unwrap().get("CCD").unwrap();
            prop_assert!((c - base).abs() <= 1e-9);
        }
    }

    #[test]
    fn var_is_sigma_squared(m in signal(64), b in signal(64)) {
        let f = extract_time_features(&ts(m), &ts(b)).unwrap();
        let (v, s) = (f.get("VAR").unwrap(), f.get("SIGMA").unwrap());
        prop_assert!((v - s * s).abs() <= 1e-12 * v.max(1e-300));
    }

    #[test]
    fn rmsd_zero_iff_equal(m in signal(48), b in signal(48)) {
        let (m, b) = (ts(m), ts(b));
        let same = extract_time_features(&m, &m).unwrap().get("RMSD").unwrap();
        prop_assert_eq!(same, 0.0);
        let differ = m.samples() != b.samples();
        let r = extract_time_features(&m, &b).unwrap().get("RMSD").unwrap();
        prop_assert_eq!(r == 0.0, !differ);
    }

    #[test]
    fn ser_times_baseline_energy_is_signal_energy(m in signal(64), b in signal(64)) {
        let em: f64 = m.iter().map(|x| x * x).sum();
        let eb: f64 = b.iter().map(|x| x * x).sum();
        let ser = extract_time_features(&ts(m), &ts(b)).unwrap().get("SER").unwrap();
        prop_assert!((ser * eb - em).abs() <= 1e-9 * em);
    }

    #[test]
    fn sdd_zero_on_self_and_symmetric(m in signal(64), b in signal(64)) {
        let (m, b) = (ts(m), ts(b));
        prop_assert!(extract_time_features(&m, &m).unwrap().get("SDD").unwrap().abs() <= 1e-12);
        let ab = extract_time_features(&m, &b).unwrap().get("SDD").unwrap();
        let ba = extract_time_features(&b, &m).unwrap().get("SDD").unwrap();
        prop_assert!((ab - ba).abs() <= 1e-12 * ab.max(1e-300));
    }

    #[test]
    fn crest_factor_is_scale_invariant(m in signal(64), a in 0.01f64..100.0) {
        let m = ts(m);
        let f1 = extract_baseline_free(&m, Sf4Variant::Kurtosis).unwrap().get("SF7").unwrap();
        let f2 = extract_baseline_free(&scaled(&m, a), Sf4Variant::Kurtosis).unwrap().get("SF7").unwrap();
        prop_assert!((f1 - f2).abs() <= 1e-9 * f1);
    }

    #[test]
    fn features_are_finite(m in signal(64), b in signal(64)) {
        let f = extract_time_features(&ts(m.clone()), &ts(b)).unwrap();
        prop_assert!(f.values.iter().all(|v| v.is_finite()));
        let g = extract_baseline_free(&ts(m), Sf4Variant::Kurtosis).unwrap();
        prop_assert!(g.values.iter().all(|v| v.is_finite()));
    }
}
