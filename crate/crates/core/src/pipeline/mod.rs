//! End-to-end runs: prompts, completions, extraction, patching, validation,
//! archiving and reports.

pub mod archive;
pub mod judging;
pub mod report;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{self, Catalog, CorpusError, Dataset, LoadOptions, RefactoringScenario, TargetKind};
use crate::extract::{declared_name, extract, primary_fragment};
use crate::gateway::{Cassette, CassetteMode, Gateway, GatewayError, ModelConfig, ProviderRegistry};
use crate::java::tree::{parse_source, FailureStage};
use crate::metrics::{measure, CodeBleuConfig};
use crate::patch::{apply_patch, check_fragment, PatchPlan};
use crate::prompt::{PromptError, PromptForge, RenderedPrompt, StrategyKind, StrategyRegistry, TemplateSet};
use crate::verify::{self, Harness, HarnessError, PatchedFile, RepoConfig, ReportAdapters, VariantLabel};

pub use archive::{Archive, ItemRecord, ItemStatus, PatchStage, ScenarioSnapshot};

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("manifest error: {0}")]
    Manifest(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Prompt(#[from] PromptError),
    #[error(transparent)]
    Gateway(#[from] GatewayError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error("archive error: {0}")]
    Archive(String),
    #[error("report error: {0}")]
    Report(String),
}

fn default_runs() -> u32 {
    5
}

fn default_strategies() -> Vec<StrategyKind> {
    vec![StrategyKind::ZeroShot, StrategyKind::TwoShot, StrategyKind::StepByStep, StrategyKind::RuleBased, StrategyKind::Objective]
}

fn default_cassette_mode() -> CassetteMode {
    CassetteMode::Record
}

fn default_out() -> PathBuf {
    PathBuf::from("runs")
}

fn yes() -> bool {
    true
}

/// Everything a run needs. Relative paths resolve against the manifest file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    pub corpus: Vec<PathBuf>,
    pub catalog: PathBuf,
    #[serde(default = "default_strategies")]
    pub strategies: Vec<StrategyKind>,
    pub models: Vec<ModelConfig>,
    #[serde(default = "default_runs")]
    pub runs_per_scenario: u32,
    #[serde(default = "default_cassette_mode")]
    pub cassette_mode: CassetteMode,
    /// Holds one `<model-id>.json` cassette per model.
    #[serde(default)]
    pub cassette_dir: Option<PathBuf>,
    #[serde(default = "default_out")]
    pub out: PathBuf,
    /// Where repositories are cloned; defaults to `<out>/workspaces`.
    #[serde(default)]
    pub workspace_root: Option<PathBuf>,
    /// JSON array of repository build configurations.
    #[serde(default)]
    pub repositories: Option<PathBuf>,
    #[serde(default)]
    pub default_repository: Option<String>,
    #[serde(default = "yes")]
    pub validate: bool,
    #[serde(default)]
    pub workers: Option<usize>,
    #[serde(default)]
    pub template_dir: Option<PathBuf>,
    #[serde(default)]
    pub codebleu: CodeBleuConfig,
}

impl RunManifest {
    pub fn load(path: &Path) -> Result<Self, PipelineError> {
        let text = std::fs::read_to_string(path).map_err(|e| PipelineError::Manifest(format!("{}: {e}", path.display())))?;
        let mut manifest: Self = serde_json::from_str(&text).map_err(|e| PipelineError::Manifest(format!("{}: {e}", path.display())))?;
        manifest.resolve_paths(path.parent().unwrap_or(Path::new(".")));
        Ok(manifest)
    }

    pub fn resolve_paths(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        self.corpus.iter_mut().for_each(fix);
        fix(&mut self.catalog);
        fix(&mut self.out);
        for p in [&mut self.cassette_dir, &mut self.workspace_root, &mut self.repositories, &mut self.template_dir] {
            if let Some(p) = p.as_mut() {
                fix(p);
            }
        }
    }

    pub fn workspace_root(&self) -> PathBuf {
        self.workspace_root.clone().unwrap_or_else(|| self.out.join("workspaces"))
    }

    pub fn cassette_path(&self, model_id: &str) -> Option<PathBuf> {
        self.cassette_dir.as_ref().map(|d| d.join(format!("{model_id}.json")))
    }

    pub fn validate(&self) -> Result<(), PipelineError> {
        let bad = |m: String| Err(PipelineError::Manifest(m));
        if self.corpus.is_empty() {
            return bad("no corpus files".into());
        }
        if self.models.is_empty() {
            return bad("no models".into());
        }
        if self.strategies.is_empty() {
            return bad("no strategies".into());
        }
        let mut ids = BTreeSet::new();
        for m in &self.models {
            m.validate()?;
            if !ids.insert(&m.id) {
                return bad(format!("duplicate model id '{}'", m.id));
            }
        }
        if self.runs_per_scenario == 0 {
            return bad("runs_per_scenario must be at least 1".into());
        }
        if self.workers == Some(0) {
            return bad("workers must be at least 1".into());
        }
        if self.cassette_mode == CassetteMode::Replay && self.cassette_dir.is_none() {
            return bad("replay needs cassette_dir".into());
        }
        Ok(())
    }
}

/// Pluggable registries used by a run.
#[derive(Clone, Default)]
pub struct Registries {
    pub providers: Option<ProviderRegistry>,
    pub strategies: Option<StrategyRegistry>,
    pub report_adapters: Option<ReportAdapters>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub run_id: String,
    pub archive: PathBuf,
    pub items: usize,
    pub network_calls: u64,
    pub cassette_mode: String,
    pub status_counts: BTreeMap<String, usize>,
    /// Problems that affected some items without stopping the run.
    pub issues: Vec<String>,
}

struct Loaded {
    catalog: Catalog,
    scenarios: Vec<RefactoringScenario>,
    forge: PromptForge,
    repos: BTreeMap<String, RepoConfig>,
}

fn load_inputs(manifest: &RunManifest, registries: &Registries) -> Result<Loaded, PipelineError> {
    let catalog = corpus::load_catalog(&manifest.catalog)?;
    let options = LoadOptions { default_repository: manifest.default_repository.clone() };
    let mut scenarios = Vec::new();
    let mut seen = BTreeSet::new();
    for path in &manifest.corpus {
        for s in corpus::load_scenarios(path, &catalog, &options)? {
            if !seen.insert(s.id.clone()) {
                return Err(PipelineError::Manifest(format!("scenario id '{}' appears in more than one corpus file", s.id)));
            }
            scenarios.push(s);
        }
    }
    let templates = match &manifest.template_dir {
        Some(dir) => TemplateSet::from_dir(dir)?,
        None => TemplateSet::builtin(),
    };
    let forge = PromptForge::new(registries.strategies.clone().unwrap_or_else(StrategyRegistry::with_builtin), templates);
    let repos = match &manifest.repositories {
        Some(p) => RepoConfig::load_all(p)?,
        None => BTreeMap::new(),
    };
    Ok(Loaded { catalog, scenarios, forge, repos })
}

/// A repository as referenced by scenarios.
#[derive(Debug, Clone)]
struct RepoRef {
    name: String,
    locator: String,
    config: Option<RepoConfig>,
}

fn resolve_repo(reference: &str, repos: &BTreeMap<String, RepoConfig>) -> RepoRef {
    if let Some(cfg) = repos.get(reference).or_else(|| repos.values().find(|c| c.locator == reference)) {
        return RepoRef { name: cfg.name.clone(), locator: cfg.locator.clone(), config: Some(cfg.clone()) };
    }
    let base = reference.trim_end_matches('/').trim_end_matches(".git");
    let name: String = base
        .rsplit(['/', '\\', ':'])
        .next()
        .unwrap_or(base)
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') { c } else { '_' })
        .collect();
    RepoRef { name: if name.is_empty() { "repository".into() } else { name }, locator: reference.to_owned(), config: None }
}

struct Job<'a> {
    model: &'a ModelConfig,
    gateway: &'a Gateway,
    scenario: &'a RefactoringScenario,
    prompt: &'a RenderedPrompt,
    run: u32,
}

struct Context<'a> {
    sources: &'a HashMap<String, Result<String, String>>,
    repo_names: &'a HashMap<String, String>,
    codebleu: &'a CodeBleuConfig,
}

fn blank_item(model: &str, s: &RefactoringScenario, strategy: StrategyKind, run: u32, outcome: ItemStatus) -> ItemRecord {
    ItemRecord {
        model: model.to_owned(),
        scenario_id: s.id.clone(),
        refactoring_type: s.refactoring_type.clone(),
        dataset: s.dataset,
        repository: s.repository.clone(),
        strategy,
        run_index: run,
        outcome,
        prompt_hash: None,
        template_version: None,
        raw_text: None,
        latency_ms: None,
        provider_meta: serde_json::Value::Null,
        code: None,
        auxiliary: Vec::new(),
        diagnostic: None,
        warnings: Vec::new(),
        metrics: None,
        branch: None,
        validation: None,
    }
}

fn stage_of(stage: FailureStage) -> PatchStage {
    match stage {
        FailureStage::Lexical => PatchStage::Lexical,
        FailureStage::Parsing => PatchStage::Parsing,
    }
}

fn process(job: &Job<'_>, ctx: &Context<'_>) -> (ItemRecord, Option<PatchedFile>) {
    let s = job.scenario;
    let mut item = blank_item(&job.model.id, s, job.prompt.strategy, job.run, ItemStatus::JudgedOnly);
    item.template_version = Some(job.prompt.template_version.clone());
    item.warnings.extend(job.prompt.warnings.iter().cloned());

    let completion = job.gateway.complete_or_record_failure(job.prompt, job.model, job.run);
    item.prompt_hash = Some(completion.prompt_hash);
    item.latency_ms = Some(completion.latency_ms);
    item.provider_meta = completion.provider_meta;
    if let Some(error) = completion.error {
        item.outcome = ItemStatus::Skipped { reason: "completion-failed".into() };
        item.diagnostic = Some(error);
        return (item, None);
    }
    let extracted = extract(&completion.raw_text);
    item.raw_text = Some(completion.raw_text);

    let primary = match primary_fragment(&extracted, s.target_kind, s.target_name.as_deref()) {
        Ok(p) => p,
        Err(missing) => {
            item.outcome = ItemStatus::PatchFailed { stage: PatchStage::NoCode };
            item.diagnostic = Some(missing.to_string());
            return (item, None);
        }
    };
    item.warnings.extend(primary.warning);
    let auxiliary: Vec<String> = match s.target_kind {
        TargetKind::Method => extracted.methods.iter().enumerate().filter(|(i, _)| *i != primary.index).map(|(_, m)| m.clone()).collect(),
        TargetKind::Class => Vec::new(),
    };
    item.code = Some(primary.text.clone());
    item.auxiliary = auxiliary.clone();

    let mut patched = None;
    match s.dataset {
        Dataset::Benchmark => {
            let checked = check_fragment(primary.text.trim(), s.target_kind)
                .and_then(|_| auxiliary.iter().try_for_each(|a| check_fragment(a.trim(), TargetKind::Method)));
            if let Err(f) = checked {
                item.outcome = ItemStatus::PatchFailed { stage: stage_of(f.stage) };
                item.diagnostic = Some(f.to_string());
                return (item, None);
            }
            item.outcome = ItemStatus::JudgedOnly;
        }
        Dataset::Real => {
            let text = match ctx.sources.get(&s.id) {
                Some(Ok(text)) => text,
                Some(Err(e)) => {
                    item.outcome = ItemStatus::Skipped { reason: "source-unavailable".into() };
                    item.diagnostic = Some(e.clone());
                    return (item, None);
                }
                None => {
                    item.outcome = ItemStatus::Skipped { reason: "source-unavailable".into() };
                    return (item, None);
                }
            };
            let tree = match parse_source(text) {
                Ok(t) => t,
                Err(f) => {
                    item.outcome = ItemStatus::Skipped { reason: "source-unavailable".into() };
                    item.diagnostic = Some(format!("baseline file does not parse: {f}"));
                    return (item, None);
                }
            };
            let target_name = s.target_name.clone().or_else(|| declared_name(&s.before_code, s.target_kind)).unwrap_or_default();
            let plan = PatchPlan {
                target_kind: s.target_kind,
                target_name,
                replacement_fragment: primary.text.clone(),
                auxiliary_fragments: auxiliary.clone(),
            };
            match apply_patch(&tree, &plan) {
                Err(locate) => {
                    item.outcome = ItemStatus::PatchFailed { stage: PatchStage::Locate };
                    item.diagnostic = Some(locate.to_string());
                    return (item, None);
                }
                Ok(result) if !result.is_applied() => {
                    item.outcome = ItemStatus::PatchFailed { stage: stage_of(result.failure_stage.unwrap_or(FailureStage::Parsing)) };
                    item.diagnostic = result.diagnostic;
                    return (item, None);
                }
                Ok(result) => {
                    item.outcome = ItemStatus::Applied;
                    item.repository = ctx.repo_names.get(&s.id).cloned().or(item.repository);
                    patched = Some(PatchedFile {
                        path: PathBuf::from(s.path_before.clone().unwrap_or_default()),
                        contents: result.patched_text.unwrap_or_default(),
                    });
                }
            }
        }
    }

    let candidate = std::iter::once(primary.text.as_str()).chain(auxiliary.iter().map(String::as_str)).collect::<Vec<_>>().join("\n\n");
    match measure(&candidate, s.ground_truth_after.as_deref(), ctx.codebleu) {
        Ok(m) => item.metrics = Some(m),
        Err(e) => item.warnings.push(format!("metrics unavailable: {e}")),
    }
    (item, patched)
}

fn snapshot_scenarios(
    scenarios: &[RefactoringScenario],
    repo_names: &HashMap<String, String>,
    cfg: &CodeBleuConfig,
) -> Vec<ScenarioSnapshot> {
    scenarios
        .iter()
        .map(|s| ScenarioSnapshot {
            id: s.id.clone(),
            refactoring_type: s.refactoring_type.clone(),
            dataset: s.dataset,
            target_kind: s.target_kind,
            before_code: s.before_code.clone(),
            repository: repo_names.get(&s.id).cloned().or_else(|| s.repository.clone()),
            before_metrics: measure(&s.before_code, None, cfg).ok(),
            after_metrics: s.ground_truth_after.as_deref().and_then(|a| measure(a, None, cfg).ok()),
        })
        .collect()
}

fn new_run_id(out: &Path) -> String {
    let base = chrono::Utc::now().format("%Y%m%dT%H%M%SZ").to_string();
    let mut id = base.clone();
    let mut n = 1;
    while out.join(&id).exists() {
        n += 1;
        id = format!("{base}-{n}");
    }
    id
}

/// Execute a manifest and archive every item. Item-level failures are
/// recorded on the items; only manifest-level problems return `Err`.
pub fn run(manifest: &RunManifest, registries: &Registries, run_id: Option<&str>) -> Result<RunSummary, PipelineError> {
    manifest.validate()?;
    let loaded = load_inputs(manifest, registries)?;
    let providers = registries.providers.clone().unwrap_or_else(ProviderRegistry::with_builtin);
    let adapters = registries.report_adapters.clone().unwrap_or_default();
    let mut issues = Vec::new();

    let mut gateways = Vec::new();
    for model in &manifest.models {
        let gateway = match (manifest.cassette_mode, manifest.cassette_path(&model.id)) {
            (CassetteMode::Replay, Some(path)) if !path.exists() => {
                return Err(PipelineError::Manifest(format!("no cassette for model '{}' at {}", model.id, path.display())));
            }
            (mode, Some(path)) => Gateway::with_cassette_file(providers.clone(), mode, &path)?,
            (mode, None) => Gateway::new(providers.clone(), mode, Cassette::default(), None),
        };
        gateways.push(gateway);
    }

    let run_id = run_id.map(str::to_owned).unwrap_or_else(|| new_run_id(&manifest.out));
    let archive = Archive::create(&manifest.out, &run_id)?;
    archive.write_json(archive::MANIFEST_FILE, manifest)?;

    let mut prompts: BTreeMap<(String, StrategyKind), Result<RenderedPrompt, String>> = BTreeMap::new();
    for s in &loaded.scenarios {
        let entry = loaded.catalog.lookup(&s.refactoring_type).map_err(PromptError::from)?;
        for &strategy in &manifest.strategies {
            let rendered = match loaded.forge.render(strategy, s, entry) {
                Ok(p) => Ok(p),
                Err(PromptError::Unsupported { reason, .. }) => Err(reason),
                Err(e) => return Err(e.into()),
            };
            prompts.insert((s.id.clone(), strategy), rendered);
        }
    }

    let workspace_root = manifest.workspace_root();
    let mut repo_refs: BTreeMap<String, RepoRef> = BTreeMap::new();
    let mut repo_names = HashMap::new();
    let mut sources = HashMap::new();
    for s in loaded.scenarios.iter().filter(|s| s.dataset == Dataset::Real) {
        let reference = s.repository.clone().unwrap_or_default();
        let repo = repo_refs.entry(reference.clone()).or_insert_with(|| resolve_repo(&reference, &loaded.repos)).clone();
        repo_names.insert(s.id.clone(), repo.name.clone());
        let clone = workspace_root.join(&repo.name);
        let text = verify::ensure_clone(&repo.locator, &clone).and_then(|_| {
            verify::read_at_revision(&clone, s.commit_before.as_deref().unwrap_or("HEAD"), s.path_before.as_deref().unwrap_or(""))
        });
        if let Err(e) = &text {
            issues.push(format!("scenario '{}': {e}", s.id));
        }
        sources.insert(s.id.clone(), text.map_err(|e| e.to_string()));
    }

    let mut skipped = Vec::new();
    let mut jobs = Vec::new();
    for (model, gateway) in manifest.models.iter().zip(&gateways) {
        for s in &loaded.scenarios {
            for &strategy in &manifest.strategies {
                for run in 1..=manifest.runs_per_scenario {
                    match &prompts[&(s.id.clone(), strategy)] {
                        Ok(prompt) => jobs.push(Job { model, gateway, scenario: s, prompt, run }),
                        Err(reason) => {
                            let mut item =
                                blank_item(&model.id, s, strategy, run, ItemStatus::Skipped { reason: "unsupported-strategy".into() });
                            item.diagnostic = Some(reason.clone());
                            skipped.push(item);
                        }
                    }
                }
            }
        }
    }

    let ctx = Context { sources: &sources, repo_names: &repo_names, codebleu: &manifest.codebleu };
    let pool = worker_pool(manifest.workers)?;
    let mut processed: Vec<(ItemRecord, Option<PatchedFile>)> = pool.install(|| jobs.par_iter().map(|j| process(j, &ctx)).collect());

    if manifest.validate {
        validate_applied(&mut processed, &loaded.scenarios, &repo_refs, &workspace_root, &adapters, &mut issues);
    }

    let mut items: Vec<ItemRecord> = processed.into_iter().map(|(i, _)| i).chain(skipped).collect();
    items.sort_by(|a, b| (&a.model, &a.scenario_id, a.strategy, a.run_index).cmp(&(&b.model, &b.scenario_id, b.strategy, b.run_index)));
    for item in &items {
        archive.write_item(item)?;
    }
    archive.write_json(archive::SCENARIOS_FILE, &snapshot_scenarios(&loaded.scenarios, &repo_names, &manifest.codebleu))?;

    for (model, gateway) in manifest.models.iter().zip(&gateways) {
        let cassette = gateway.cassette();
        if !cassette.is_empty() {
            cassette
                .save(&archive.dir().join(archive::CASSETTES_DIR).join(format!("{}.json", model.id)))
                .map_err(|e| PipelineError::Archive(e.to_string()))?;
        }
    }

    let mut status_counts = BTreeMap::new();
    for item in &items {
        *status_counts.entry(item.outcome.label()).or_insert(0) += 1;
    }
    let summary = RunSummary {
        run_id: archive.run_id(),
        archive: archive.dir().to_owned(),
        items: items.len(),
        network_calls: gateways.iter().map(Gateway::network_calls).sum(),
        cassette_mode: format!("{:?}", manifest.cassette_mode).to_lowercase(),
        status_counts,
        issues,
    };
    archive.write_json(archive::SUMMARY_FILE, &summary)?;
    report::write_reports(&archive, &report::ReportShapes::default(), None)?;
    Ok(summary)
}

pub(crate) fn worker_pool(workers: Option<usize>) -> Result<rayon::ThreadPool, PipelineError> {
    if workers == Some(0) {
        return Err(PipelineError::Manifest("workers must be at least 1".into()));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        pool = pool.num_threads(w);
    }
    pool.build().map_err(|e| PipelineError::Manifest(format!("worker pool: {e}")))
}

fn skip_reason(e: &HarnessError) -> &'static str {
    match e {
        HarnessError::InvalidBaseline { .. } => "invalid-baseline",
        HarnessError::Environment(_) => "environment",
        HarnessError::Timeout { .. } => "timeout",
        _ => "harness-error",
    }
}

/// Build and test every applied item, one repository at a time.
fn validate_applied(
    processed: &mut [(ItemRecord, Option<PatchedFile>)],
    scenarios: &[RefactoringScenario],
    repos: &BTreeMap<String, RepoRef>,
    workspace_root: &Path,
    adapters: &ReportAdapters,
    issues: &mut Vec<String>,
) {
    let by_id: HashMap<&str, &RefactoringScenario> = scenarios.iter().map(|s| (s.id.as_str(), s)).collect();
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, (item, patch)) in processed.iter().enumerate() {
        if item.outcome == ItemStatus::Applied && patch.is_some() {
            let reference = by_id[item.scenario_id.as_str()].repository.clone().unwrap_or_default();
            groups.entry(reference).or_default().push(i);
        }
    }
    let groups: Vec<(String, Vec<usize>)> = groups.into_iter().collect();
    for (reference, indices) in groups {
        let repo = &repos[&reference];
        let Some(config) = repo.config.clone() else {
            issues.push(format!("repository '{}' has no build configuration; {} item(s) left unvalidated", repo.name, indices.len()));
            continue;
        };
        let harness = match Harness::new(config, adapters.clone()) {
            Ok(h) => h,
            Err(e) => {
                issues.push(format!("repository '{}': {e}", repo.name));
                continue;
            }
        };
        for i in indices {
            let (item, patch) = &mut processed[i];
            let scenario = by_id[item.scenario_id.as_str()];
            let label = VariantLabel {
                scenario: item.scenario_id.clone(),
                strategy: format!("{}-{}", item.model, item.strategy),
                run: item.run_index,
            };
            let result = harness.prepare_for_scenario(workspace_root, scenario).and_then(|(ws, baseline)| {
                harness.validate(&ws, &baseline, std::slice::from_ref(patch.as_ref().expect("applied item has a patch")), &label)
            });
            match result {
                Ok((branch, outcome)) => {
                    item.outcome = if outcome.compiled { ItemStatus::Validated } else { ItemStatus::CompileFailed };
                    item.branch = Some(branch);
                    item.validation = Some(outcome);
                }
                Err(e) => {
                    let message = format!("{}: {e}", item.key());
                    if !issues.iter().any(|m| m.ends_with(&e.to_string())) {
                        issues.push(message);
                    }
                    item.outcome = ItemStatus::Skipped { reason: skip_reason(&e).into() };
                    item.diagnostic = Some(e.to_string());
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repository_resolution() {
        let repos = BTreeMap::new();
        assert_eq!(resolve_repo("https://github.com/antlr/antlr4.git", &repos).name, "antlr4");
        assert_eq!(resolve_repo("/tmp/projects/uuid-reader/", &repos).name, "uuid-reader");
        let cfg: RepoConfig = serde_json::from_str(r#"{"name":"m","locator":"/x/y","build":["true"],"test":["true"]}"#).unwrap();
        let repos = BTreeMap::from([("m".to_owned(), cfg)]);
        let r = resolve_repo("/x/y", &repos);
        assert_eq!(r.name, "m");
        assert!(r.config.is_some());
    }

    #[test]
    fn manifest_defaults_and_paths() {
        let mut m: RunManifest = serde_json::from_str(
            r#"{"corpus":["c.json"],"catalog":"cat.json","models":[{"id":"a","provider":"ollama","model_name":"x","api_base":"http://h"}]}"#,
        )
        .unwrap();
        assert_eq!(m.runs_per_scenario, 5);
        assert_eq!(m.strategies.len(), 5);
        assert_eq!(m.cassette_mode, CassetteMode::Record);
        assert!(m.validate);
        m.resolve_paths(Path::new("/base"));
        assert_eq!(m.corpus[0], PathBuf::from("/base/c.json"));
        assert_eq!(m.workspace_root(), PathBuf::from("/base/runs/workspaces"));
        assert!(m.validate().is_ok());
        m.cassette_mode = CassetteMode::Replay;
        assert!(m.validate().is_err());
        assert!(serde_json::from_str::<RunManifest>(r#"{"corpus":[],"catalog":"c","models":[],"extra":1}"#).is_err());
    }
}
