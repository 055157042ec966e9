//! One function per subcommand. Each stage writes `<out>/<stage>/` with a
//! manifest and reads its inputs only through the previous manifest.

use std::fs;
use std::path::{Path, PathBuf};

use gwclass_core::dsp::wavelet_denoise;
use gwclass_core::features::{build_feature_matrix, Bank, FeatureMatrix};
use gwclass_core::interpret::{permutation_importance, with_noise_probe};
use gwclass_core::models::{evaluate, repeated_trials, split, train, trial_seeds, Model, SplitSpec, Variant};
use gwclass_core::rng::{derive, Stream};
use gwclass_core::selection::filter_features;
use gwclass_core::signalgen::{build_dataset, build_severity_sweep};
use gwclass_core::{DamageClass, TimeSeries};
use serde::{Deserialize, Serialize};

use crate::config::PipelineConfig;
use crate::error::{CliError, Result, StageContext};
use crate::io::{ingest_recording, matrix_from_csv, matrix_to_csv, read_text, series_file_name, series_from_csv, series_to_csv, IngestRecord};
use crate::manifest::{versions, Artifact, LoadedStage, StageManifest, StageWriter, MANIFEST_FILE, SCHEMA_VERSION};
use crate::plot;
use crate::report::{best_variant, EvaluationFile, HeldOutResult, ImportanceFile, SelectionFile, SweepFile, VariantResult, REPORT_SCHEMA_VERSION};

pub const NOISE_PROBE: &str = "NOISE";
pub const RUN_MANIFEST: &str = "run_manifest.json";

/// Validated configuration plus output options.
#[derive(Debug, Clone)]
pub struct Context {
    pub config: PipelineConfig,
    pub config_sha256: String,
    pub out: PathBuf,
    pub plot: bool,
}

impl Context {
    pub fn new(config: PipelineConfig, plot: bool) -> Result<Self> {
        config.validate()?;
        Ok(Self {
            config_sha256: config.hash()?,
            out: config.io.out_dir.clone(),
            config,
            plot,
        })
    }

    pub fn stage_dir(&self, stage: &str) -> PathBuf {
        self.out.join(stage)
    }

    /// Clears a previous run of the same stage, then opens a writer.
    fn writer(&self, stage: &str) -> Result<StageWriter> {
        let dir = self.stage_dir(stage);
        if let Ok(old) = LoadedStage::open(&dir) {
            if old.manifest.stage == stage {
                fs::remove_dir_all(&dir).map_err(CliError::io(&dir))?;
            }
        }
        StageWriter::create(&dir, stage, &self.config_sha256, self.config.master_seed)
    }

    fn split_spec(&self) -> SplitSpec {
        self.config.evaluation.split_spec()
    }
}

pub fn bank_name(b: Bank) -> &'static str {
    match b {
        Bank::BaselineReferenced => "baseline",
        Bank::BaselineFree => "baseline-free",
    }
}

pub fn parse_bank(s: &str) -> Result<Bank> {
    match s {
        "baseline" => Ok(Bank::BaselineReferenced),
        "baseline-free" => Ok(Bank::BaselineFree),
        _ => Err(CliError::Config(format!("unknown bank `{s}` (expected baseline or baseline-free)"))),
    }
}

fn write_dataset(w: &mut StageWriter, ds: &[TimeSeries]) -> Result<()> {
    for s in ds {
        w.write(&format!("series/{}", series_file_name(&s.meta)), series_to_csv(s).as_bytes())?;
    }
    w.attribute("n_series", ds.len());
    Ok(())
}

pub fn load_dataset(stage: &LoadedStage) -> Result<Vec<TimeSeries>> {
    let files = stage.outputs_under("series/");
    if files.is_empty() {
        return Err(CliError::Data(format!("{}: manifest lists no series", stage.dir.display())));
    }
    files
        .into_iter()
        .map(|a| series_from_csv(&stage.read_string(a)?, &a.path))
        .collect()
}

fn write_matrix(w: &mut StageWriter, fm: &FeatureMatrix) -> Result<()> {
    w.write("features.csv", matrix_to_csv(fm).as_bytes())?;
    w.attribute("bank", bank_name(fm.bank));
    if let Some(p) = &fm.baseline_path {
        w.attribute("baseline_path", p);
    }
    w.attribute("n_rows", fm.n_rows());
    w.attribute("n_features", fm.n_features());
    Ok(())
}

pub fn load_matrix(stage: &LoadedStage) -> Result<FeatureMatrix> {
    let bank = parse_bank(stage.attribute("bank")?).map_err(|e| CliError::Data(e.to_string()))?;
    let baseline_path = stage.manifest.attributes.get("baseline_path").cloned();
    let a = stage.output("features.csv")?;
    matrix_from_csv(&stage.read_string(a)?, &a.path, bank, baseline_path)
}

/// First series of each class, for plotting.
fn one_per_class(ds: &[TimeSeries]) -> Vec<&TimeSeries> {
    DamageClass::ALL
        .iter()
        .filter_map(|c| ds.iter().find(|s| s.meta.label == *c))
        .collect()
}

pub fn synth(ctx: &Context) -> Result<StageManifest> {
    let cfg = &ctx.config;
    let spec = cfg.wavelet;
    let denoise_first = cfg.noise.apply_noise_after_denoise;
    let ds = build_dataset(
        &cfg.excitation(),
        &cfg.scenarios()?,
        cfg.scenarios.trials_per_class,
        &cfg.noise(),
        |s| if denoise_first { wavelet_denoise(s, &spec) } else { Ok(s.clone()) },
    )?;
    let mut w = ctx.writer("synth")?;
    write_dataset(&mut w, &ds)?;
    w.attribute("denoised", denoise_first);
    if ctx.plot {
        w.write("plots/signals.svg", plot::signals("Synthesized signals", &one_per_class(&ds)).as_bytes())?;
    }
    w.finish()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IngestValidation {
    pub schema_version: u32,
    pub accepted: Vec<IngestRecord>,
}

/// Each file is one recording; recordings are numbered per label in the
/// order given.
pub fn ingest(ctx: &Context, files: &[PathBuf]) -> Result<StageManifest> {
    if files.is_empty() {
        return Err(CliError::Config("ingest needs at least one input file".into()));
    }
    let mut trials = [0u32; DamageClass::COUNT];
    let mut ds = Vec::new();
    let mut accepted = Vec::new();
    let mut inputs = Vec::new();
    for path in files {
        let text = read_text(path)?;
        let name = path.display().to_string();
        let peek = ingest_recording(&text, &name, &ctx.config.io.ingest, 0)?;
        let label = peek.0.meta.label;
        let trial = trials[label.index()];
        trials[label.index()] += 1;
        let (mut s, mut rec) = peek;
        s.meta.trial = trial;
        rec.key = s.meta.key();
        inputs.push(Artifact::of(&name, text.as_bytes()));
        ds.push(s);
        accepted.push(rec);
    }
    let first_dt = ds[0].dt();
    if let Some(s) = ds.iter().find(|s| (s.dt() - first_dt).abs() > crate::io::DT_TOLERANCE * first_dt) {
        return Err(CliError::Data(format!(
            "{}: dt {:e} differs from {first_dt:e} in the first recording",
            s.meta.key(),
            s.dt()
        )));
    }
    let mut w = ctx.writer("ingest")?;
    for a in inputs {
        w.consumed_file(a);
    }
    write_dataset(&mut w, &ds)?;
    w.attribute("denoised", false);
    w.write_json(
        "validation.json",
        &IngestValidation {
            schema_version: REPORT_SCHEMA_VERSION,
            accepted,
        },
    )?;
    w.finish()
}

/// Passes already-denoised input through unchanged.
pub fn denoise(ctx: &Context, input: &Path) -> Result<StageManifest> {
    let input = LoadedStage::open(input)?.expect_stage(&["synth", "ingest"])?;
    let ds = load_dataset(&input)?;
    let already = input.attribute("denoised")? == "true";
    let spec = ctx.config.wavelet;
    let out = if already {
        ds
    } else {
        ds.iter().map(|s| wavelet_denoise(s, &spec)).collect::<gwclass_core::Result<Vec<_>>>()?
    };
    let mut w = ctx.writer("denoise")?;
    w.consumed(&input);
    write_dataset(&mut w, &out)?;
    w.attribute("denoised", true);
    w.attribute("passthrough", already);
    w.attribute("wavelet", format!("db{} levels={} keep=D{}", spec.order, spec.levels, spec.selected_level));
    if ctx.plot {
        w.write("plots/signals.svg", plot::signals("Denoised signals", &one_per_class(&out)).as_bytes())?;
    }
    w.finish()
}

pub fn features(ctx: &Context, input: &Path) -> Result<StageManifest> {
    let input = LoadedStage::open(input)?.expect_stage(&["denoise"])?;
    let ds = load_dataset(&input)?;
    let f = &ctx.config.features;
    let fm = build_feature_matrix(&ds, &f.baseline_path, f.bank, f.sf4)?;
    let mut w = ctx.writer("features")?;
    w.consumed(&input);
    write_matrix(&mut w, &fm)?;
    w.finish()
}

pub fn select(ctx: &Context, input: &Path) -> Result<StageManifest> {
    let input = LoadedStage::open(input)?.expect_stage(&["features"])?;
    let fm = load_matrix(&input)?;
    let (out, rep) = filter_features(&fm, ctx.config.selection.threshold)?;
    let mut w = ctx.writer("select")?;
    w.consumed(&input);
    write_matrix(&mut w, &out)?;
    w.write_json("selection.json", &SelectionFile::new(fm.bank, fm.n_rows(), fm.feature_names.clone(), rep))?;
    w.finish()
}

/// Fits every configured variant on the training part of the first split.
pub fn train_models(ctx: &Context, input: &Path) -> Result<StageManifest> {
    let input = LoadedStage::open(input)?.expect_stage(&["select"])?;
    let fm = load_matrix(&input)?;
    let (split_seed, model_seed) = trial_seeds(ctx.config.master_seed, 0);
    let (tr, _) = split(&fm, &SplitSpec { seed: split_seed, ..ctx.split_spec() })?;
    let hyper = ctx.config.models.hyperparams();
    let mut w = ctx.writer("train")?;
    w.consumed(&input);
    for &v in &ctx.config.models.variants {
        let model = train(v, &tr, &hyper, model_seed)?;
        w.write(&format!("models/{v}.json"), model.to_json()?.as_bytes())?;
    }
    w.attribute("split_seed", split_seed);
    w.attribute("model_seed", model_seed);
    w.attribute("n_train", tr.n_rows());
    w.finish()
}

pub fn evaluate_variants(ctx: &Context, fm: &FeatureMatrix) -> Result<Vec<VariantResult>> {
    let hyper = ctx.config.models.hyperparams();
    let spec = ctx.split_spec();
    ctx.config
        .models
        .variants
        .iter()
        .map(|&v| {
            log::info!("evaluating {v}");
            Ok(repeated_trials(v, fm, &hyper, &spec, ctx.config.evaluation.n_trials, ctx.config.master_seed)?.into())
        })
        .collect()
}

/// Repeated trials for every configured variant; saved models from a train
/// stage are also scored on the first split's held-out rows.
pub fn eval(ctx: &Context, input: &Path, models: Option<&Path>) -> Result<(StageManifest, EvaluationFile)> {
    let input = LoadedStage::open(input)?.expect_stage(&["select"])?;
    let fm = load_matrix(&input)?;
    let results = evaluate_variants(ctx, &fm)?;
    let mut held_out = Vec::new();
    let mut w = ctx.writer("eval")?;
    w.consumed(&input);
    if let Some(dir) = models {
        let stage = LoadedStage::open(dir)?.expect_stage(&["train"])?;
        let split_seed: u64 = stage
            .attribute("split_seed")?
            .parse()
            .map_err(|_| CliError::Data("train manifest: bad split_seed".into()))?;
        let (_, te) = split(&fm, &SplitSpec { seed: split_seed, ..ctx.split_spec() })?;
        for a in stage.outputs_under("models/") {
            let model = Model::from_json(&stage.read_string(a)?)?;
            if model.feature_names != fm.feature_names {
                return Err(CliError::Data(format!("{}: trained on different features", a.path)));
            }
            held_out.push(HeldOutResult {
                variant: model.variant(),
                report: evaluate(&model, &te, split_seed)?,
            });
            w.consumed_file(a.clone());
        }
    }
    let report = EvaluationFile {
        schema_version: REPORT_SCHEMA_VERSION,
        bank: fm.bank,
        features: fm.feature_names.clone(),
        n_rows: fm.n_rows(),
        n_trials: ctx.config.evaluation.n_trials,
        train_fraction: ctx.config.evaluation.train_fraction,
        stratified: ctx.config.evaluation.stratified,
        master_seed: ctx.config.master_seed,
        best_variant: best_variant(&results).expect("variants validated non-empty"),
        results,
        held_out,
    };
    w.write_json("evaluation.json", &report)?;
    if ctx.plot {
        for r in &report.results {
            let title = format!("{} (summed over {} trials)", r.variant, r.trials.len());
            w.write(&format!("plots/confusion_{}.svg", r.variant), plot::confusion(&title, &r.confusion_total).as_bytes())?;
        }
    }
    Ok((w.finish()?, report))
}

/// Permutation importance of `variant` on every evaluation split.
pub fn importance_report(ctx: &Context, fm: &FeatureMatrix, variant: Variant) -> Result<ImportanceFile> {
    let cfg = &ctx.config;
    let probe = cfg.importance.noise_probe.then(|| NOISE_PROBE.to_string());
    let fm = match &probe {
        Some(name) => with_noise_probe(fm, name, cfg.master_seed)?,
        None => fm.clone(),
    };
    let hyper = cfg.models.hyperparams();
    let splits = (0..cfg.evaluation.n_trials)
        .map(|i| {
            let (split_seed, model_seed) = trial_seeds(cfg.master_seed, i);
            let (tr, te) = split(&fm, &SplitSpec { seed: split_seed, ..ctx.split_spec() })?;
            let model = train(variant, &tr, &hyper, model_seed)?;
            permutation_importance(&model, &te, cfg.importance.repeats, derive(cfg.master_seed, Stream::Permutation, &[i as u64]))
        })
        .collect::<gwclass_core::Result<Vec<_>>>()?;
    Ok(ImportanceFile::new(variant, cfg.importance.repeats, probe, splits))
}

/// Explains `importance.variant`, or the best variant of an eval stage.
pub fn importance(ctx: &Context, input: &Path, eval_dir: Option<&Path>) -> Result<(StageManifest, ImportanceFile)> {
    let input = LoadedStage::open(input)?.expect_stage(&["select"])?;
    let fm = load_matrix(&input)?;
    let mut w = ctx.writer("importance")?;
    w.consumed(&input);
    let variant = match (ctx.config.importance.variant, eval_dir) {
        (Some(v), _) => v,
        (None, Some(dir)) => {
            let stage = LoadedStage::open(dir)?.expect_stage(&["eval"])?;
            let e: EvaluationFile = stage.read_json("evaluation.json")?;
            w.consumed_file(stage.output("evaluation.json")?.clone());
            e.best_variant
        }
        (None, None) => {
            return Err(CliError::Config(
                "importance needs `importance.variant` or an eval stage to pick the best variant".into(),
            ))
        }
    };
    let report = importance_report(ctx, &fm, variant)?;
    w.write_json("importance.json", &report)?;
    let mut csv = String::from("feature,mean,std\n");
    for f in &report.summary {
        csv.push_str(&format!("{},{},{}\n", f.feature, f.mean, f.std));
    }
    w.write("importance.csv", csv.as_bytes())?;
    if ctx.plot {
        let title = format!("Permutation importance, {variant}");
        w.write("plots/importance.svg", plot::importance(&title, &report.summary).as_bytes())?;
    }
    Ok((w.finish()?, report))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageRecord {
    pub stage: String,
    /// Relative to the output directory.
    pub dir: String,
    pub manifest: Artifact,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub config_sha256: String,
    pub master_seed: u64,
    pub versions: std::collections::BTreeMap<String, String>,
    /// Dataset directory used instead of the synth stage, if any.
    pub dataset: Option<String>,
    pub stages: Vec<StageRecord>,
    /// Reports and the effective config, relative to the output directory.
    pub artifacts: Vec<Artifact>,
}

#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub manifest: RunManifest,
    pub selection: SelectionFile,
    pub evaluation: EvaluationFile,
    pub importance: ImportanceFile,
}

fn record(ctx: &Context, m: &StageManifest) -> Result<StageRecord> {
    let rel = format!("{}/{MANIFEST_FILE}", m.stage);
    let path = ctx.out.join(&rel);
    let bytes = fs::read(&path).map_err(CliError::io(&path))?;
    Ok(StageRecord {
        stage: m.stage.clone(),
        dir: m.stage.clone(),
        manifest: Artifact::of(&rel, &bytes),
        elapsed_ms: m.elapsed_ms,
    })
}

fn out_artifact(ctx: &Context, rel: &str) -> Result<Artifact> {
    let path = ctx.out.join(rel);
    let bytes = fs::read(&path).map_err(CliError::io(&path))?;
    Ok(Artifact::of(rel, &bytes))
}

/// denoise, features, select, repeated trials for every variant, then
/// importance for the best one.
pub fn pipeline(ctx: &Context) -> Result<PipelineOutcome> {
    let mut stages = Vec::new();
    let dataset = match &ctx.config.io.dataset {
        Some(d) => d.clone(),
        None => {
            stages.push(synth(ctx).stage("synth")?);
            ctx.stage_dir("synth")
        }
    };
    stages.push(denoise(ctx, &dataset).stage("denoise")?);
    stages.push(features(ctx, &ctx.stage_dir("denoise")).stage("features")?);
    stages.push(select(ctx, &ctx.stage_dir("features")).stage("select")?);
    let (m, evaluation) = eval(ctx, &ctx.stage_dir("select"), None).stage("eval")?;
    stages.push(m);
    let (m, importance) = importance(ctx, &ctx.stage_dir("select"), Some(&ctx.stage_dir("eval"))).stage("importance")?;
    stages.push(m);

    let cfg_path = ctx.out.join("config.toml");
    fs::write(&cfg_path, ctx.config.to_toml()?).map_err(CliError::io(&cfg_path))?;
    let selection: SelectionFile = LoadedStage::open(&ctx.stage_dir("select"))?.read_json("selection.json")?;
    let mut artifacts = vec![out_artifact(ctx, "config.toml")?];
    for rel in ["select/selection.json", "eval/evaluation.json", "importance/importance.json"] {
        artifacts.push(out_artifact(ctx, rel)?);
    }
    let manifest = RunManifest {
        schema_version: SCHEMA_VERSION,
        config_sha256: ctx.config_sha256.clone(),
        master_seed: ctx.config.master_seed,
        versions: versions(),
        dataset: ctx.config.io.dataset.as_ref().map(|d| d.display().to_string()),
        stages: stages.iter().map(|m| record(ctx, m)).collect::<Result<_>>()?,
        artifacts,
    };
    let mut s = serde_json::to_string_pretty(&manifest).map_err(gwclass_core::Error::from)?;
    s.push('\n');
    let path = ctx.out.join(RUN_MANIFEST);
    fs::write(&path, s).map_err(CliError::io(&path))?;
    Ok(PipelineOutcome {
        manifest,
        selection,
        evaluation,
        importance,
    })
}

/// Severity sweep: one trial per level and class, then the same feature,
/// selection and evaluation chain.
pub fn sweep(ctx: &Context) -> Result<(StageManifest, SweepFile)> {
    let cfg = &ctx.config;
    let spec = cfg.wavelet;
    let denoise_first = cfg.noise.apply_noise_after_denoise;
    let mut ds = build_severity_sweep(
        &cfg.excitation(),
        &cfg.scenarios()?,
        &cfg.sweep.levels,
        &cfg.noise(),
        |s| if denoise_first { wavelet_denoise(s, &spec) } else { Ok(s.clone()) },
    )
    .stage("synth")?;
    if !denoise_first {
        ds = ds
            .iter()
            .map(|s| wavelet_denoise(s, &spec))
            .collect::<gwclass_core::Result<_>>()
            .stage("denoise")?;
    }
    let f = &cfg.features;
    let fm = build_feature_matrix(&ds, &f.baseline_path, f.bank, f.sf4).stage("features")?;
    let (sel, rep) = filter_features(&fm, cfg.selection.threshold).stage("select")?;
    let results = evaluate_variants(ctx, &sel).stage("eval")?;
    let report = SweepFile {
        schema_version: REPORT_SCHEMA_VERSION,
        levels: cfg.sweep.levels.clone(),
        n_rows: sel.n_rows(),
        bank: sel.bank,
        kept: rep.kept.clone(),
        dropped: rep.dropped.iter().map(|d| d.feature.clone()).collect(),
        n_trials: cfg.evaluation.n_trials,
        master_seed: cfg.master_seed,
        best_variant: best_variant(&results).expect("variants validated non-empty"),
        results,
    };
    let mut w = ctx.writer("sweep")?;
    write_matrix(&mut w, &sel)?;
    w.write_json("selection.json", &SelectionFile::new(fm.bank, fm.n_rows(), fm.feature_names.clone(), rep))?;
    w.write_json("sweep.json", &report)?;
    if ctx.plot {
        if let Some(r) = report.result(report.best_variant) {
            let title = format!("Severity sweep, {} (summed over {} trials)", r.variant, r.trials.len());
            w.write("plots/confusion.svg", plot::confusion(&title, &r.confusion_total).as_bytes())?;
        }
    }
    Ok((w.finish()?, report))
}
