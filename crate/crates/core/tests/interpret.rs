use gwclass_core::features::{Bank, FeatureMatrix};
use gwclass_core::interpret::permutation_importance;
use gwclass_core::models::{train, Classifier, Hyperparams, Params, Variant};
use gwclass_core::{DamageClass, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Looks only at the first column.
struct FirstColumn;

impl Classifier for FirstColumn {
    fn n_features(&self) -> usize {
        3
    }
    fn predict_row(&self, x: &[f64]) -> DamageClass {
        if x[0] > 0.0 { DamageClass::CC } else { DamageClass::TRF }
    }
}

fn data(seed: u64, n: usize) -> FeatureMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..3).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    let labels = rows
        .iter()
        .map(|r| if r[0] > 0.0 { DamageClass::CC } else { DamageClass::TRF })
        .collect();
    FeatureMatrix::new(vec!["a".into(), "b".into(), "c".into()], rows, labels, Bank::BaselineFree, None).unwrap()
}

#[test]
fn ignored_features_have_exactly_zero_importance() {
    let test = data(1, 200);
    let r = permutation_importance(&FirstColumn, &test, 50, 7).unwrap();
    assert_eq!(r.baseline_accuracy, 1.0);
    for f in ["b", "c"] {
        let e = r.get(f).unwrap();
        assert_eq!((e.mean, e.std), (0.0, 0.0));
    }
    assert!(r.get("a").unwrap().mean > 0.3);
    assert_eq!(r.ranking()[0], "a");
}

#[test]
fn tree_that_never_splits_on_a_feature() {
    let train_m = data(2, 300);
    let model = train(Variant::DecisionTree, &train_m, &Hyperparams::default(), 0).unwrap();
    let Params::DecisionTree(t) = &model.params else { panic!() };
    let used = t.features_used();
    let test = data(3, 200);
    let r = permutation_importance(&model, &test, 20, 1).unwrap();
    for (j, f) in r.features.iter().enumerate() {
        if !used.contains(&j) {
            assert_eq!(f.mean, 0.0, "{}", f.feature);
        }
    }
}

#[test]
fn report_is_deterministic_and_input_is_untouched() {
    let test = data(4, 100);
    let before = test.clone();
    let a = permutation_importance(&FirstColumn, &test, 20, 5).unwrap();
    let b = permutation_importance(&FirstColumn, &test, 20, 5).unwrap();
    assert_eq!(a, b);
    assert_eq!(test, before);
    assert_eq!((a.repeats, a.seed, a.features.len()), (20, 5, 3));
    assert!(a.features.iter().all(|f| (-1.0..=1.0).contains(&f.mean)));
    assert!(a.to_csv().starts_with("feature,mean,std\na,"));
}

#[test]
fn zero_repeats_is_an_error() {
    assert!(matches!(
        permutation_importance(&FirstColumn, &data(5, 10), 0, 0),
        Err(Error::InvalidParameter { .. })
    ));
}
