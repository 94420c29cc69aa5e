//! Compile and test patched variants on git branches and compare them with the baseline.

pub mod diagnostics;
pub mod process;
pub mod reports;
pub mod workspace;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::corpus::RefactoringScenario;

pub use diagnostics::{bucket_compiler_errors, parse_diagnostics, Diagnostic, BUCKETS, OTHER_BUCKET};
pub use reports::{JunitXml, ReportAdapter, ReportAdapters, SummaryLines, TestReport, TestStatus};
pub use workspace::{ensure_clone, read_at_revision, snapshot_directory, PatchedFile, VariantLabel, Workspace};

pub const DEFAULT_REPETITIONS: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("environment error: {0}")]
    Environment(String),
    #[error("workspace error: {0}")]
    Workspace(String),
    #[error("workspace state error: {0}")]
    State(String),
    #[error("baseline {revision} does not compile ({} diagnostic(s))", diagnostics.len())]
    InvalidBaseline { revision: String, diagnostics: Vec<Diagnostic> },
    #[error("'{command}' timed out after {after:?}")]
    Timeout { command: String, after: Duration },
    #[error("test runner error: {0}")]
    Runner(String),
    #[error("repository configuration error: {0}")]
    Config(String),
    #[error("I/O error: {0}")]
    Io(String),
}

fn default_adapter() -> String {
    "summary-lines".into()
}

fn default_timeout() -> f64 {
    1800.0
}

fn default_prefix() -> String {
    "refbench".into()
}

fn default_repetitions() -> u32 {
    DEFAULT_REPETITIONS
}

/// Build and test setup of one repository.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepoConfig {
    pub name: String,
    /// Clone URL or local path; relative paths resolve against the config file.
    pub locator: String,
    pub build: Vec<String>,
    pub test: Vec<String>,
    #[serde(default = "default_adapter")]
    pub report_adapter: String,
    #[serde(default)]
    pub report_path: Option<String>,
    #[serde(default = "default_timeout")]
    pub timeout_secs: f64,
    #[serde(default = "default_prefix")]
    pub branch_prefix: String,
    #[serde(default = "default_repetitions")]
    pub test_repetitions: u32,
}

impl RepoConfig {
    pub fn timeout(&self) -> Duration {
        Duration::from_secs_f64(self.timeout_secs)
    }

    fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::Config(format!("repository '{}': {m}", self.name)));
        if self.build.is_empty() || self.test.is_empty() {
            return bad("build and test commands must be nonempty");
        }
        if !(self.timeout_secs.is_finite() && self.timeout_secs > 0.0) {
            return bad("timeout must be positive");
        }
        if self.test_repetitions == 0 {
            return bad("test_repetitions must be at least 1");
        }
        Ok(())
    }

    /// Load a JSON array of repository configs keyed by name.
    pub fn load_all(path: &Path) -> Result<BTreeMap<String, RepoConfig>, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        let list: Vec<RepoConfig> = serde_json::from_str(&text).map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        let mut out = BTreeMap::new();
        for mut cfg in list {
            cfg.validate()?;
            let local = base.join(&cfg.locator);
            if !cfg.locator.contains("://") && local.exists() {
                cfg.locator = local.to_string_lossy().into_owned();
            }
            if out.insert(cfg.name.clone(), cfg).is_some() {
                return Err(HarnessError::Config(format!("{}: duplicate repository name", path.display())));
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompileResult {
    pub success: bool,
    pub diagnostics: Vec<Diagnostic>,
    pub log: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationOutcome {
    pub compiled: bool,
    pub compiler_error_buckets: BTreeMap<String, usize>,
    pub new_failed: usize,
    pub new_errored: usize,
    pub new_failed_tests: Vec<String>,
    pub new_errored_tests: Vec<String>,
    /// Some test changed status between variant runs.
    pub unstable: bool,
    pub runs: usize,
}

impl ValidationOutcome {
    pub fn compile_failed(diagnostics: &[Diagnostic]) -> Self {
        let mut buckets = bucket_compiler_errors(diagnostics);
        if buckets.is_empty() {
            buckets.insert(OTHER_BUCKET.to_owned(), 1);
        }
        Self { compiled: false, compiler_error_buckets: buckets, ..Self::default() }
    }
}

fn union<'r>(reports: &'r [TestReport], pick: impl Fn(&'r TestReport) -> &'r BTreeSet<String>) -> BTreeSet<&'r str> {
    reports.iter().flat_map(|r| pick(r).iter().map(String::as_str)).collect()
}

/// Tests failing (or erroring) in any variant run and in no baseline run.
pub fn diff_outcomes(baseline: &[TestReport], variant: &[TestReport]) -> ValidationOutcome {
    let new = |pick: fn(&TestReport) -> &BTreeSet<String>| -> Vec<String> {
        let before = union(baseline, pick);
        union(variant, pick).difference(&before).map(|s| s.to_string()).collect()
    };
    let new_failed_tests = new(|r| &r.failed);
    let new_errored_tests = new(|r| &r.errored);
    let statuses: Vec<_> = variant.iter().map(TestReport::statuses).collect();
    let unstable = statuses.windows(2).any(|w| w[0] != w[1]);
    ValidationOutcome {
        compiled: true,
        compiler_error_buckets: BTreeMap::new(),
        new_failed: new_failed_tests.len(),
        new_errored: new_errored_tests.len(),
        new_failed_tests,
        new_errored_tests,
        unstable,
        runs: variant.len(),
    }
}

/// Baseline facts for one revision, computed once.
#[derive(Debug, Clone, PartialEq)]
pub struct Baseline {
    pub revision: String,
    pub tree: String,
    pub reports: Vec<TestReport>,
}

/// Runs one repository's build and tests. Callers serialize use of a single workspace.
pub struct Harness {
    config: RepoConfig,
    adapters: ReportAdapters,
    baselines: Mutex<HashMap<String, Result<Arc<Baseline>, HarnessError>>>,
}

impl Harness {
    pub fn new(config: RepoConfig, adapters: ReportAdapters) -> Result<Self, HarnessError> {
        config.validate()?;
        adapters.get(&config.report_adapter)?;
        Ok(Self { config, adapters, baselines: Mutex::new(HashMap::new()) })
    }

    pub fn config(&self) -> &RepoConfig {
        &self.config
    }

    pub fn workspace_path(&self, root: &Path) -> PathBuf {
        root.join(&self.config.name)
    }

    /// Clean checkout at `revision`; the baseline is compiled and tested once per revision.
    pub fn prepare_workspace(&self, root: &Path, revision: &str) -> Result<(Workspace, Arc<Baseline>), HarnessError> {
        let ws = workspace::checkout(&self.config.locator, &self.workspace_path(root), revision, &self.config.branch_prefix)?;
        let cached = self.baselines.lock().expect("baseline cache").get(&ws.baseline_revision).cloned();
        let baseline = match cached {
            Some(b) => b?,
            None => {
                let b = self.establish_baseline(&ws);
                if !matches!(b, Err(HarnessError::Environment(_) | HarnessError::Timeout { .. } | HarnessError::Io(_))) {
                    self.baselines.lock().expect("baseline cache").insert(ws.baseline_revision.clone(), b.clone());
                }
                b?
            }
        };
        ws.checkout_baseline()?;
        Ok((ws, baseline))
    }

    pub fn prepare_for_scenario(&self, root: &Path, scenario: &RefactoringScenario) -> Result<(Workspace, Arc<Baseline>), HarnessError> {
        let revision = scenario
            .commit_before
            .as_deref()
            .ok_or_else(|| HarnessError::Workspace(format!("scenario '{}' has no baseline commit", scenario.id)))?;
        self.prepare_workspace(root, revision)
    }

    fn establish_baseline(&self, ws: &Workspace) -> Result<Arc<Baseline>, HarnessError> {
        let rev = ws.baseline_revision.clone();
        let compiled = self.compile(ws, &rev)?;
        if !compiled.success {
            return Err(HarnessError::InvalidBaseline { revision: rev, diagnostics: compiled.diagnostics });
        }
        let reports = self.run_tests(ws, &rev, self.config.test_repetitions)?;
        Ok(Arc::new(Baseline { tree: ws.baseline_tree()?, revision: rev, reports }))
    }

    pub fn compile(&self, ws: &Workspace, branch: &str) -> Result<CompileResult, HarnessError> {
        ws.checkout_branch(branch)?;
        let out = process::run(&self.config.build, &ws.path, self.config.timeout())?;
        let diagnostics = if out.success() { Vec::new() } else { parse_diagnostics(&out.output) };
        Ok(CompileResult { success: out.success(), diagnostics, log: out.output })
    }

    pub fn run_tests(&self, ws: &Workspace, branch: &str, repetitions: u32) -> Result<Vec<TestReport>, HarnessError> {
        ws.checkout_branch(branch)?;
        let adapter = self.adapters.get(&self.config.report_adapter)?;
        (0..repetitions)
            .map(|_| {
                let out = process::run(&self.config.test, &ws.path, self.config.timeout())?;
                let report = adapter.parse(&out.output, &ws.path, self.config.report_path.as_deref())?;
                if report.executed == 0 && !out.success() {
                    let tail: Vec<&str> = out.output.lines().rev().take(5).collect();
                    return Err(HarnessError::Runner(format!(
                        "test command exited with {:?} and reported no tests: {}",
                        out.status,
                        tail.into_iter().rev().collect::<Vec<_>>().join(" | ")
                    )));
                }
                Ok(report)
            })
            .collect()
    }

    /// Commit, compile and test one variant against its baseline.
    pub fn validate(
        &self,
        ws: &Workspace,
        baseline: &Baseline,
        files: &[PatchedFile],
        label: &VariantLabel,
    ) -> Result<(String, ValidationOutcome), HarnessError> {
        let branch = ws.commit_variant(files, label)?;
        let compiled = self.compile(ws, &branch)?;
        let outcome = if compiled.success {
            let reports = self.run_tests(ws, &branch, self.config.test_repetitions)?;
            diff_outcomes(&baseline.reports, &reports)
        } else {
            ValidationOutcome::compile_failed(&compiled.diagnostics)
        };
        ws.checkout_baseline()?;
        Ok((branch, outcome))
    }
}
