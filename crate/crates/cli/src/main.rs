use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gwclass_cli::stages::{self, parse_bank, Context};
use gwclass_cli::{PipelineConfig, Result};

#[derive(Parser)]
#[command(name = "gwclass", version, about = "Guided-wave damage classification pipeline")]
struct Cli {
    /// TOML configuration; defaults apply to anything it leaves out
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Master seed, overriding the config
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output directory, overriding `io.out_dir`
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Feature bank: baseline or baseline-free
    #[arg(long, global = true)]
    bank: Option<String>,

    /// Also write SVG figures
    #[arg(long, global = true)]
    plot: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the synthetic dataset
    Synth,
    /// Import recordings (one CSV per recording)
    Ingest {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Wavelet-denoise a synth or ingest stage
    Denoise {
        /// Stage directory to read; `io.dataset` or `<out>/synth` by default
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Extract the configured feature bank
    Features {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Drop correlated features
    Select {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Train every configured model on the first split and save it
    Train {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Repeated split/train/evaluate for every configured model
    Eval {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Train stage whose saved models are scored as well
        #[arg(long)]
        models: Option<PathBuf>,
    },
    /// Permutation importance of the best (or configured) model
    Importance {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Eval stage used to pick the best model; `<out>/eval` by default
        #[arg(long)]
        eval: Option<PathBuf>,
    },
    /// Run every stage from dataset to importance
    Pipeline,
    /// Severity sweep over damage levels
    Sweep,
    /// Print the effective configuration as TOML
    Config,
}

fn load_config(cli: &Cli) -> Result<PipelineConfig> {
    let mut cfg = match &cli.config {
        Some(p) => PipelineConfig::load(p)?,
        None => PipelineConfig::default(),
    };
    if let Some(s) = cli.seed {
        cfg.master_seed = s;
    }
    if let Some(o) = &cli.out {
        cfg.io.out_dir = o.clone();
    }
    if let Some(b) = &cli.bank {
        cfg.features.bank = parse_bank(b)?;
    }
    Ok(cfg)
}

fn input_or(ctx: &Context, given: &Option<PathBuf>, stage: &str) -> PathBuf {
    given.clone().unwrap_or_else(|| ctx.stage_dir(stage))
}

fn run(cli: &Cli) -> Result<()> {
    let cfg = load_config(cli)?;
    let ctx = Context::new(cfg, cli.plot)?;
    match &cli.command {
        Command::Synth => {
            let m = stages::synth(&ctx)?;
            println!("synth: {} series in {}", m.attributes["n_series"], ctx.stage_dir("synth").display());
        }
        Command::Ingest { files } => {
            let m = stages::ingest(&ctx, files)?;
            println!("ingest: {} recordings in {}", m.attributes["n_series"], ctx.stage_dir("ingest").display());
        }
        Command::Denoise { input } => {
            let dir = input
                .clone()
                .or_else(|| ctx.config.io.dataset.clone())
                .unwrap_or_else(|| ctx.stage_dir("synth"));
            let m = stages::denoise(&ctx, &dir)?;
            println!("denoise: {} series (passthrough: {})", m.attributes["n_series"], m.attributes["passthrough"]);
        }
        Command::Features { input } => {
            let m = stages::features(&ctx, &input_or(&ctx, input, "denoise"))?;
            println!("features: {} x {} ({})", m.attributes["n_rows"], m.attributes["n_features"], m.attributes["bank"]);
        }
        Command::Select { input } => {
            let m = stages::select(&ctx, &input_or(&ctx, input, "features"))?;
            println!("select: kept {} features", m.attributes["n_features"]);
        }
        Command::Train { input } => {
            let m = stages::train_models(&ctx, &input_or(&ctx, input, "select"))?;
            println!("train: {} models on {} rows", m.outputs.len(), m.attributes["n_train"]);
        }
        Command::Eval { input, models } => {
            let (_, e) = stages::eval(&ctx, &input_or(&ctx, input, "select"), models.as_deref())?;
            print_accuracies(&e.results);
            println!("best: {}", e.best_variant);
        }
        Command::Importance { input, eval } => {
            let eval_dir = input_or(&ctx, eval, "eval");
            let eval_dir = (ctx.config.importance.variant.is_none()).then_some(eval_dir.as_path());
            let (_, r) = stages::importance(&ctx, &input_or(&ctx, input, "select"), eval_dir)?;
            print_importance(&r);
        }
        Command::Pipeline => {
            let o = stages::pipeline(&ctx)?;
            println!("selected: {}", o.selection.kept.join(", "));
            print_accuracies(&o.evaluation.results);
            println!("best: {}", o.evaluation.best_variant);
            print_importance(&o.importance);
            println!("run manifest: {}", ctx.out.join(stages::RUN_MANIFEST).display());
        }
        Command::Sweep => {
            let (_, s) = stages::sweep(&ctx)?;
            println!("sweep: {} rows, {} levels; selected: {}", s.n_rows, s.levels.len(), s.kept.join(", "));
            print_accuracies(&s.results);
        }
        Command::Config => print!("{}", ctx.config.to_toml()?),
    }
    Ok(())
}

fn print_accuracies(results: &[gwclass_cli::report::VariantResult]) {
    for r in results {
        println!("{:<14} {:.4} +- {:.4}", r.variant.to_string(), r.mean_accuracy, r.std_accuracy);
    }
}

fn print_importance(r: &gwclass_cli::report::ImportanceFile) {
    println!("importance ({}):", r.variant);
    for name in &r.ranking {
        let f = r.get(name).expect("ranking lists summary features");
        println!("  {:<8} {:+.4} +- {:.4}", f.feature, f.mean, f.std);
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut src = std::error::Error::source(&e);
            while let Some(s) = src {
                if !e.to_string().contains(&s.to_string()) {
                    eprintln!("  caused by: {s}");
                }
                src = s.source();
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

