use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use refbench_core::corpus::{self, Dataset, LoadOptions};
use refbench_core::gateway::{Cassette, CassetteMode, Gateway, ModelConfig, ProviderRegistry};
use refbench_core::metrics::{measure, CodeBleuConfig};
use refbench_core::pipeline::archive::Archive;
use refbench_core::pipeline::judging::{judge_archive, load_labels};
use refbench_core::pipeline::report::{write_reports, ReportShapes};
use refbench_core::pipeline::{self, PipelineError, Registries, RunManifest};
use refbench_core::prompt::{PromptForge, StrategyKind, StrategyRegistry, TemplateSet};

#[derive(Parser)]
#[command(name = "refbench", version, about = "Benchmark LLM refactoring prompts on Java code")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate, patch, validate and archive every scenario x strategy x model x run.
    Run(RunArgs),
    /// Rebuild report tables from a run archive.
    Report(ReportArgs),
    /// Judge benchmark items of a run archive with a second model.
    Judge(JudgeArgs),
    /// Print LOC, CC, FOUT (and CodeBLEU against a reference) for a Java fragment.
    Metrics(MetricsArgs),
    /// Load a corpus against a catalog and list strategy support.
    ValidateCorpus(CorpusArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Run manifest (JSON). Flags below override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, num_args = 1..)]
    corpus: Vec<PathBuf>,
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Comma-separated strategy names, e.g. zero-shot,two-shot.
    #[arg(long, value_delimiter = ',')]
    strategies: Vec<StrategyKind>,
    /// Model config file (object or array), or an id selecting manifest models.
    #[arg(long = "model")]
    models: Vec<String>,
    #[arg(long)]
    runs: Option<u32>,
    #[arg(long)]
    cassette: Option<CassetteMode>,
    #[arg(long)]
    cassette_dir: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workspace_root: Option<PathBuf>,
    /// Repository build configurations (JSON array).
    #[arg(long)]
    repositories: Option<PathBuf>,
    /// Repository for real scenarios that do not name one.
    #[arg(long)]
    repository: Option<String>,
    #[arg(long)]
    run_id: Option<String>,
    /// Stop real scenarios after patching.
    #[arg(long)]
    no_validate: bool,
}

#[derive(Args)]
struct ReportArgs {
    archive: PathBuf,
    /// One of by_strategy, by_type, errors, status; all when omitted.
    #[arg(long)]
    shape: Option<String>,
}

#[derive(Args)]
struct JudgeArgs {
    archive: PathBuf,
    /// Judge model config file.
    #[arg(long)]
    model: PathBuf,
    /// Human labels (JSON array) for agreement statistics.
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long, default_value = "record")]
    cassette: CassetteMode,
    #[arg(long)]
    cassette_dir: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct MetricsArgs {
    file: PathBuf,
    #[arg(long)]
    reference: Option<PathBuf>,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, num_args = 1.., required = true)]
    corpus: Vec<PathBuf>,
    #[arg(long)]
    catalog: PathBuf,
    #[arg(long)]
    repository: Option<String>,
}

fn read_models(path: &Path) -> Result<Vec<ModelConfig>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let models = if value.is_array() { serde_json::from_value(value)? } else { vec![serde_json::from_value(value)?] };
    Ok(models)
}

fn manifest_from(args: &RunArgs) -> Result<RunManifest> {
    let cwd = std::env::current_dir()?;
    let mut m = match &args.config {
        Some(path) => RunManifest::load(path)?,
        None => {
            let catalog = args.catalog.clone().context("--catalog is required without --config")?;
            let mut m: RunManifest = serde_json::from_value(serde_json::json!({
                "corpus": args.corpus,
                "catalog": catalog,
                "models": [],
            }))?;
            m.resolve_paths(&cwd);
            m
        }
    };
    let abs = |p: &PathBuf| if p.is_relative() { cwd.join(p) } else { p.clone() };
    if !args.corpus.is_empty() {
        m.corpus = args.corpus.iter().map(abs).collect();
    }
    if let Some(c) = &args.catalog {
        m.catalog = abs(c);
    }
    if !args.strategies.is_empty() {
        m.strategies = args.strategies.clone();
    }
    if !args.models.is_empty() {
        let mut chosen = Vec::new();
        for choice in &args.models {
            let path = Path::new(choice);
            if path.is_file() {
                chosen.extend(read_models(path)?);
            } else {
                let found = m.models.iter().find(|c| &c.id == choice).cloned();
                chosen.push(found.with_context(|| format!("model '{choice}' is neither a config file nor a manifest model id"))?);
            }
        }
        m.models = chosen;
    }
    if let Some(r) = args.runs {
        m.runs_per_scenario = r;
    }
    if let Some(c) = args.cassette {
        m.cassette_mode = c;
    }
    if let Some(d) = &args.cassette_dir {
        m.cassette_dir = Some(abs(d));
    }
    if let Some(w) = args.workers {
        m.workers = Some(w);
    }
    if let Some(o) = &args.out {
        m.out = abs(o);
    }
    if let Some(w) = &args.workspace_root {
        m.workspace_root = Some(abs(w));
    }
    if let Some(r) = &args.repositories {
        m.repositories = Some(abs(r));
    }
    if let Some(r) = &args.repository {
        m.default_repository = Some(r.clone());
    }
    if args.no_validate {
        m.validate = false;
    }
    Ok(m)
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let manifest = manifest_from(&args)?;
    let summary = pipeline::run(&manifest, &Registries::default(), args.run_id.as_deref())?;
    for issue in &summary.issues {
        log::warn!("{issue}");
    }
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}

fn cmd_report(args: ReportArgs) -> Result<()> {
    let archive = Archive::open(&args.archive)?;
    let tables = write_reports(&archive, &ReportShapes::default(), args.shape.as_deref())?;
    for t in tables {
        println!("{}", t.to_markdown());
    }
    Ok(())
}

fn cmd_judge(args: JudgeArgs) -> Result<()> {
    let archive = Archive::open(&args.archive)?;
    let mut models = read_models(&args.model)?;
    if models.len() != 1 {
        bail!("{} must hold exactly one judge model", args.model.display());
    }
    let config = models.remove(0);
    let providers = ProviderRegistry::with_builtin();
    let gateway = match &args.cassette_dir {
        Some(dir) => {
            let path = dir.join(format!("{}.json", config.id));
            if args.cassette == CassetteMode::Replay && !path.exists() {
                return Err(PipelineError::Manifest(format!("no judge cassette at {}", path.display())).into());
            }
            Gateway::with_cassette_file(providers, args.cassette, &path)?
        }
        None if args.cassette == CassetteMode::Replay => return Err(PipelineError::Manifest("replay needs --cassette-dir".into()).into()),
        None => Gateway::new(providers, args.cassette, Cassette::default(), None),
    };
    let manifest: Option<RunManifest> = archive.read_json(pipeline::archive::MANIFEST_FILE).ok();
    let templates = match manifest.as_ref().and_then(|m| m.template_dir.as_ref()) {
        Some(dir) => TemplateSet::from_dir(dir)?,
        None => TemplateSet::builtin(),
    };
    let forge = PromptForge::new(StrategyRegistry::with_builtin(), templates);
    let labels = args.labels.as_deref().map(load_labels).transpose()?;
    let tables = judge_archive(&archive, &gateway, &forge, &config, labels.as_deref(), args.workers)?;
    for t in tables {
        println!("{}", t.to_markdown());
    }
    Ok(())
}

fn cmd_metrics(args: MetricsArgs) -> Result<()> {
    let code = std::fs::read_to_string(&args.file).with_context(|| format!("reading {}", args.file.display()))?;
    let reference =
        args.reference.as_ref().map(|p| std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))).transpose()?;
    let record = measure(&code, reference.as_deref(), &CodeBleuConfig::default())?;
    println!("{}", serde_json::to_string_pretty(&record)?);
    Ok(())
}

fn cmd_validate_corpus(args: CorpusArgs) -> Result<()> {
    let catalog = corpus::load_catalog(&args.catalog)?;
    let forge = PromptForge::default();
    let options = LoadOptions { default_repository: args.repository };
    let mut total = 0;
    for path in &args.corpus {
        let scenarios = corpus::load_scenarios(path, &catalog, &options)?;
        for s in &scenarios {
            let supported = forge.supported_strategies(&s.refactoring_type, &catalog)?;
            let names: Vec<&str> = supported.iter().map(|k| k.as_str()).collect();
            let origin = match s.dataset {
                Dataset::Benchmark => "benchmark".to_owned(),
                Dataset::Real => format!("real {}", s.repository.as_deref().unwrap_or("?")),
            };
            println!("{}\t{}\t{origin}\t{}", s.id, s.refactoring_type, names.join(","));
        }
        total += scenarios.len();
    }
    println!("{total} scenario(s); catalog has {} type(s), {} with a detection rule", catalog.len(), catalog.rule_supported_count());
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Report(a) => cmd_report(a),
        Command::Judge(a) => cmd_judge(a),
        Command::Metrics(a) => cmd_metrics(a),
        Command::ValidateCorpus(a) => cmd_validate_corpus(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let manifest_level = e.downcast_ref::<PipelineError>().is_some() || e.downcast_ref::<corpus::CorpusError>().is_some();
            ExitCode::from(if manifest_level { 2 } else { 1 })
        }
    }
}
