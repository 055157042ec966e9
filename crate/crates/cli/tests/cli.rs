use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use gwclass_cli::config::{IngestSchema, ScenarioOverride};
use gwclass_cli::manifest::LoadedStage;
use gwclass_cli::stages::{self, load_dataset, load_matrix, Context};
use gwclass_cli::PipelineConfig;
use gwclass_core::features::{Bank, Sf4Variant};
use gwclass_core::models::{MaxFeatures, Variant};
use gwclass_core::signalgen::Polarity;
use gwclass_core::{DamageClass, ErrorKind};
use proptest::prelude::*;
use tempfile::TempDir;

fn small(out: &Path) -> PipelineConfig {
    let mut c = PipelineConfig::default();
    c.scenarios.trials_per_class = 4;
    c.noise.copies = 3;
    c.evaluation.n_trials = 2;
    c.importance.repeats = 3;
    c.io.out_dir = out.to_path_buf();
    c
}

fn ctx(c: PipelineConfig) -> Context {
    Context::new(c, false).unwrap()
}

fn series_hashes(dir: &Path) -> Vec<(String, String)> {
    let s = LoadedStage::open(dir).unwrap();
    s.outputs_under("series/").iter().map(|a| (a.path.clone(), a.sha256.clone())).collect()
}

#[test]
fn default_synth_writes_one_thousand_series() {
    let tmp = TempDir::new().unwrap();
    let mut c = PipelineConfig::default();
    c.io.out_dir = tmp.path().to_path_buf();
    let m = stages::synth(&ctx(c)).unwrap();
    assert_eq!(m.attributes["n_series"], "1000");
    let files = fs::read_dir(tmp.path().join("synth/series")).unwrap().count();
    assert_eq!(files, 1000);
    let ds = load_dataset(&LoadedStage::open(&tmp.path().join("synth")).unwrap()).unwrap();
    for class in DamageClass::ALL {
        assert_eq!(ds.iter().filter(|s| s.meta.label == class).count(), 200);
    }
}

#[test]
fn one_trial_one_copy_gives_five_series() {
    let tmp = TempDir::new().unwrap();
    let mut c = small(tmp.path());
    c.scenarios.trials_per_class = 1;
    c.noise.copies = 1;
    stages::synth(&ctx(c)).unwrap();
    assert_eq!(series_hashes(&tmp.path().join("synth")).len(), 5);
}

#[test]
fn synth_rerun_is_byte_identical() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    stages::synth(&ctx(small(a.path()))).unwrap();
    stages::synth(&ctx(small(b.path()))).unwrap();
    assert_eq!(series_hashes(&a.path().join("synth")), series_hashes(&b.path().join("synth")));
    let mut other = small(b.path());
    other.master_seed = 7;
    stages::synth(&ctx(other)).unwrap();
    assert_ne!(series_hashes(&a.path().join("synth")), series_hashes(&b.path().join("synth")));
}

fn recording(label: &str, n: usize, dt: f64) -> String {
    let mut s = String::from("time,amplitude,label\n");
    for k in 0..n {
        let t = k as f64 * dt;
        s.push_str(&format!("{t:e},{},{label}\n", (2.0e5 * t).sin()));
    }
    s
}

fn ingest_file(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn ingest_err(body: &str) -> String {
    let tmp = TempDir::new().unwrap();
    let f = ingest_file(tmp.path(), "rec.csv", body);
    let err = stages::ingest(&ctx(small(&tmp.path().join("out"))), &[f]).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::Data, "{err}");
    err.to_string()
}

#[test]
fn well_formed_recordings_are_accepted() {
    let tmp = TempDir::new().unwrap();
    let files = [
        ingest_file(tmp.path(), "a.csv", &recording("CC", 300, 1e-7)),
        ingest_file(tmp.path(), "b.csv", &recording("Baseline", 300, 1e-7)),
        ingest_file(tmp.path(), "c.csv", &recording("CC", 300, 1e-7)),
    ];
    let c = small(&tmp.path().join("out"));
    let m = stages::ingest(&ctx(c), &files).unwrap();
    assert_eq!(m.inputs.len(), 3);
    let stage = LoadedStage::open(&tmp.path().join("out/ingest")).unwrap();
    let ds = load_dataset(&stage).unwrap();
    assert_eq!(ds.len(), 3);
    assert!(ds.iter().all(|s| s.len() == 300 && (s.dt() - 1e-7).abs() < 1e-18));
    let trials: Vec<(DamageClass, u32)> = ds.iter().map(|s| (s.meta.label, s.meta.trial)).collect();
    assert!(trials.contains(&(DamageClass::CC, 0)) && trials.contains(&(DamageClass::CC, 1)));
    let v: serde_json::Value = stage.read_json("validation.json").unwrap();
    assert_eq!(v["accepted"][0]["rows"], 300);
}

#[test]
fn nan_amplitude_is_rejected_with_its_line() {
    let body = recording("HDC", 50, 1e-7);
    let mut lines: Vec<String> = body.lines().map(str::to_string).collect();
    lines[7] = format!("{:e},NaN,HDC", 6.0 * 1e-7);
    let msg = ingest_err(&(lines.join("\n") + "\n"));
    assert!(msg.contains(":8:") && msg.contains("non-finite"), "{msg}");
}

#[test]
fn sample_interval_jitter_above_tolerance_is_rejected() {
    let n = 100;
    let jittered = |rel: f64| {
        let mut s = String::from("time,amplitude,label\n");
        for k in 0..n {
            let wobble = if k == 40 { rel } else { 0.0 };
            s.push_str(&format!("{},{},LFA\n", (k as f64 + wobble) * 1e-7, k));
        }
        s
    };
    let msg = ingest_err(&jittered(5e-6));
    assert!(msg.contains("non-uniform"), "{msg}");
    let tmp = TempDir::new().unwrap();
    let f = ingest_file(tmp.path(), "ok.csv", &jittered(1e-7));
    stages::ingest(&ctx(small(&tmp.path().join("out"))), &[f]).unwrap();
}

#[test]
fn labels_must_be_present_and_constant() {
    let body = recording("TRF", 10, 1e-7);
    let missing = body.replacen(",TRF\n", ",\n", 3);
    assert!(ingest_err(&missing).contains("missing label"));
    let mixed = body.replacen(",TRF\n", ",CC\n", 1);
    assert!(ingest_err(&mixed).contains("differs"));
    assert!(ingest_err("time,amplitude\n0,1\n1,2\n").contains("missing column `label`"));
    assert!(ingest_err("time,amplitude,label\n0,1,CC\n1e-7,x,CC\n").contains(":3:"));
    assert!(ingest_err("time,amplitude,label\n0,1,CC\n1e-7,2\n").contains("malformed"));
}

#[test]
fn custom_schema_columns() {
    let tmp = TempDir::new().unwrap();
    let body = recording("CC", 20, 2e-7).replace("time,amplitude,label", "t;v;class").replace(',', ";");
    let f = ingest_file(tmp.path(), "r.csv", &body);
    let mut c = small(&tmp.path().join("out"));
    c.io.ingest = IngestSchema {
        time_column: "t".into(),
        amplitude_column: "v".into(),
        label_column: "class".into(),
        delimiter: ';',
    };
    stages::ingest(&ctx(c), &[f]).unwrap();
}

#[test]
fn stages_read_only_manifest_listed_files() {
    let tmp = TempDir::new().unwrap();
    let c = ctx(small(tmp.path()));
    stages::synth(&c).unwrap();
    let series = tmp.path().join("synth/series");
    fs::write(series.join("zz_unlisted.csv"), "not a series").unwrap();
    stages::denoise(&c, &tmp.path().join("synth")).unwrap();
    assert_eq!(series_hashes(&tmp.path().join("denoise")).len(), 60);

    let (listed, _) = series_hashes(&tmp.path().join("synth")).remove(0);
    let victim = tmp.path().join("synth").join(listed);
    let mut text = fs::read_to_string(&victim).unwrap();
    text.push_str("0.5\n");
    fs::write(&victim, text).unwrap();
    let err = stages::denoise(&c, &tmp.path().join("synth")).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::Data);
    assert!(err.to_string().contains("manifest hash"), "{err}");
}

#[test]
fn denoise_passes_through_or_filters_by_flag() {
    let tmp = TempDir::new().unwrap();
    let c = ctx(small(tmp.path()));
    stages::synth(&c).unwrap();
    let m = stages::denoise(&c, &tmp.path().join("synth")).unwrap();
    assert_eq!(m.attributes["passthrough"], "true");
    assert_eq!(series_hashes(&tmp.path().join("synth")), series_hashes(&tmp.path().join("denoise")));

    let mut raw = small(tmp.path());
    raw.noise.apply_noise_after_denoise = false;
    let c = ctx(raw);
    stages::synth(&c).unwrap();
    let m = stages::denoise(&c, &tmp.path().join("synth")).unwrap();
    assert_eq!(m.attributes["passthrough"], "false");
    assert_ne!(series_hashes(&tmp.path().join("synth")), series_hashes(&tmp.path().join("denoise")));
}

#[test]
fn wrong_stage_directory_is_a_data_error() {
    let tmp = TempDir::new().unwrap();
    let c = ctx(small(tmp.path()));
    stages::synth(&c).unwrap();
    let err = stages::features(&c, &tmp.path().join("synth")).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::Data);
}

#[test]
fn small_pipeline_writes_every_artifact() {
    let tmp = TempDir::new().unwrap();
    let o = stages::pipeline(&Context::new(small(tmp.path()), true).unwrap()).unwrap();
    assert_eq!(o.evaluation.results.len(), 5);
    assert_eq!(o.evaluation.n_rows, 60);
    assert!(o.evaluation.results.iter().all(|r| r.accuracies.len() == 2));
    assert_eq!(o.importance.n_splits, 2);
    let stages_run: Vec<&str> = o.manifest.stages.iter().map(|s| s.stage.as_str()).collect();
    assert_eq!(stages_run, ["synth", "denoise", "features", "select", "eval", "importance"]);
    for rel in ["config.toml", "select/selection.json", "eval/evaluation.json", "importance/importance.json"] {
        assert!(o.manifest.artifacts.iter().any(|a| a.path == rel), "{rel}");
    }
    for s in &o.manifest.stages {
        let stage = LoadedStage::open(&tmp.path().join(&s.dir)).unwrap();
        for a in &stage.manifest.outputs {
            stage.read(a).unwrap();
        }
    }
    for svg in ["eval/plots/confusion_RandomForest.svg", "importance/plots/importance.svg", "synth/plots/signals.svg"] {
        assert!(tmp.path().join(svg).exists(), "{svg}");
    }
    let saved = PipelineConfig::load(&tmp.path().join("config.toml")).unwrap();
    assert_eq!(saved, small(tmp.path()));
}

#[test]
fn baseline_free_bank_has_thirteen_columns() {
    let tmp = TempDir::new().unwrap();
    let mut c = small(tmp.path());
    c.features.bank = Bank::BaselineFree;
    let c = ctx(c);
    stages::synth(&c).unwrap();
    stages::denoise(&c, &tmp.path().join("synth")).unwrap();
    stages::features(&c, &tmp.path().join("denoise")).unwrap();
    let fm = load_matrix(&LoadedStage::open(&tmp.path().join("features")).unwrap()).unwrap();
    assert_eq!(fm.n_features(), 13);
    assert_eq!(fm.bank, Bank::BaselineFree);
    stages::select(&c, &tmp.path().join("features")).unwrap();
    let sel = load_matrix(&LoadedStage::open(&tmp.path().join("select")).unwrap()).unwrap();
    assert!(sel.n_features() < 13);
}

#[test]
fn train_then_eval_scores_saved_models() {
    let tmp = TempDir::new().unwrap();
    let c = ctx(small(tmp.path()));
    stages::synth(&c).unwrap();
    stages::denoise(&c, &tmp.path().join("synth")).unwrap();
    stages::features(&c, &tmp.path().join("denoise")).unwrap();
    stages::select(&c, &tmp.path().join("features")).unwrap();
    let m = stages::train_models(&c, &tmp.path().join("select")).unwrap();
    assert_eq!(m.outputs.len(), 5);
    let (_, e) = stages::eval(&c, &tmp.path().join("select"), Some(&tmp.path().join("train"))).unwrap();
    assert_eq!(e.held_out.len(), 5);
    // Trial 0 of the repeated runs uses the same split and seeds.
    for h in &e.held_out {
        assert_eq!(h.report, e.result(h.variant).unwrap().trials[0]);
    }
}

#[test]
fn importance_without_a_variant_source_is_a_config_error() {
    let tmp = TempDir::new().unwrap();
    let c = ctx(small(tmp.path()));
    stages::synth(&c).unwrap();
    stages::denoise(&c, &tmp.path().join("synth")).unwrap();
    stages::features(&c, &tmp.path().join("denoise")).unwrap();
    stages::select(&c, &tmp.path().join("features")).unwrap();
    let err = stages::importance(&c, &tmp.path().join("select"), None).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::Config, "{err}");
    let mut fixed = small(tmp.path());
    fixed.importance.variant = Some(Variant::DecisionTree);
    let (_, r) = stages::importance(&ctx(fixed), &tmp.path().join("select"), None).unwrap();
    assert_eq!(r.variant, Variant::DecisionTree);
}

#[test]
fn invalid_sections_are_config_errors() {
    let bad = [
        "[selection]\nthreshold = 0.0\n",
        "[evaluation]\ntrain_fraction = 1.0\n",
        "[evaluation]\nn_trials = 0\n",
        "[wavelet]\norder = 46\n",
        "[wavelet]\nlevels = 30\nselected_level = 6\n",
        "[models]\nvariants = []\n",
        "[noise]\ncopies = 0\n",
        "[excitation]\nfs = 1e5\n",
        "[sweep]\nlevels = [1.5]\n",
        "[[scenarios.overrides]]\nclass = \"CC\"\ngain = -1.0\n",
    ];
    for t in bad {
        let c = PipelineConfig::from_toml(t).unwrap();
        let err = Context::new(c, false).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::Config, "{t}: {err}");
    }
    for t in ["[wavelet]\nfoo = 1\n", "[models.tree]\ndepth = 3\n", "[[scenarios.overrides]]\nclass = \"CC\"\ngian = 1.0\n"] {
        assert!(PipelineConfig::from_toml(t).is_err(), "{t}");
    }
}

fn gwclass(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_gwclass")).args(args).output().unwrap()
}

#[test]
fn exit_codes() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().to_str().unwrap();
    let cfg = |name: &str, body: &str| {
        let p = tmp.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    let tiny = cfg("tiny.toml", "[scenarios]\ntrials_per_class = 3\n[noise]\ncopies = 2\n");
    assert_eq!(gwclass(&["--config", &tiny, "--out", out, "synth"]).status.code(), Some(0));

    let unknown = cfg("unknown.toml", "colour = 1\n");
    assert_eq!(gwclass(&["--config", &unknown, "synth"]).status.code(), Some(2));
    assert_eq!(gwclass(&["--bank", "spectral", "synth"]).status.code(), Some(2));
    assert_eq!(gwclass(&["--config", "/nonexistent.toml", "synth"]).status.code(), Some(2));

    let missing = tmp.path().join("nothing");
    let r = gwclass(&["--out", missing.to_str().unwrap(), "features"]);
    assert_eq!(r.status.code(), Some(3));

    let steps = [vec!["denoise"], vec!["features"], vec!["select"]];
    for s in steps {
        let mut args = vec!["--config", &tiny, "--out", out];
        args.extend(s);
        assert_eq!(gwclass(&args).status.code(), Some(0));
    }
    let stiff = cfg("stiff.toml", "[scenarios]\ntrials_per_class = 3\n[noise]\ncopies = 2\n[models]\nvariants = [\"LogisticOvR\"]\n[models.logistic]\nmax_iter = 2\n");
    let r = gwclass(&["--config", &stiff, "--out", out, "eval"]);
    assert_eq!(r.status.code(), Some(4), "{}", String::from_utf8_lossy(&r.stderr));

    let r = gwclass(&["--config", &stiff, "--out", out, "pipeline"]);
    assert_eq!(r.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&r.stderr).contains("stage `eval`"));
}

#[test]
fn config_subcommand_prints_a_loadable_config() {
    let r = gwclass(&["--seed", "9", "config"]);
    assert_eq!(r.status.code(), Some(0));
    let c = PipelineConfig::from_toml(&String::from_utf8(r.stdout).unwrap()).unwrap();
    assert_eq!(c.master_seed, 9);
}

fn arb_override() -> impl Strategy<Value = ScenarioOverride> {
    (
        0usize..5,
        prop::option::of(0.1f64..3.0),
        prop::option::of(0.0f64..1e-4),
        prop::option::of(prop_oneof![Just(Polarity::Normal), Just(Polarity::Inverted)]),
        prop::option::of(0.0f64..0.9),
    )
        .prop_map(|(c, gain, delay, polarity, echo_gain)| ScenarioOverride {
            class: DamageClass::ALL[c],
            gain,
            delay,
            broadening: None,
            echo_gain,
            echo_delay: None,
            jitter: None,
            polarity,
            site_delay_spread: delay.map(|d| d / 2.0),
        })
}

fn arb_config() -> impl Strategy<Value = PipelineConfig> {
    (
        (0u64..i64::MAX as u64, 1e3f64..1e6, 1u32..10, 0.01f64..1.0, 0.05f64..0.95),
        (prop::collection::vec(any::<bool>(), 5), any::<bool>(), any::<bool>(), 1usize..50),
        (prop::option::of(1usize..20), 0usize..3, prop::collection::vec(arb_override(), 0..3)),
        (prop::collection::vec(0.0f64..1.0, 1..10), prop::option::of("[a-z/]{1,12}"), prop_oneof![Just(','), Just(';'), Just('\t')]),
    )
        .prop_map(|((seed, f, cycles, thr, frac), (vs, free, probe, trials), (depth, mf, ovs), (levels, ds, delim))| {
            let mut c = PipelineConfig { master_seed: seed, ..Default::default() };
            c.excitation.f = f;
            c.excitation.n_cycles = cycles;
            c.selection.threshold = thr;
            c.evaluation.train_fraction = frac;
            c.evaluation.n_trials = trials;
            c.models.variants = Variant::ALL.iter().zip(&vs).filter(|(_, k)| **k).map(|(v, _)| *v).collect();
            c.features.bank = if free { Bank::BaselineFree } else { Bank::BaselineReferenced };
            c.features.sf4 = if probe { Sf4Variant::Printed } else { Sf4Variant::Kurtosis };
            c.importance.noise_probe = probe;
            c.importance.variant = vs.iter().position(|k| *k).map(|i| Variant::ALL[i]);
            c.models.tree.max_depth = depth;
            c.models.forest.max_features = [MaxFeatures::All, MaxFeatures::Sqrt, MaxFeatures::Count(2)][mf];
            c.scenarios.overrides = ovs;
            c.sweep.levels = levels;
            c.io.dataset = ds.map(PathBuf::from);
            c.io.ingest.delimiter = delim;
            c
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn config_round_trips(c in arb_config()) {
        let s = c.to_toml().unwrap();
        let back = PipelineConfig::from_toml(&s).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(back.to_toml().unwrap(), s);
        prop_assert_eq!(back.hash().unwrap(), c.hash().unwrap());
    }
}
