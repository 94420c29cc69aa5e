//! Run archive: one directory per run holding the manifest snapshot, cassettes,
//! per-item records and reports.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::corpus::{Dataset, TargetKind};
use crate::metrics::MetricsRecord;
use crate::prompt::StrategyKind;
use crate::verify::ValidationOutcome;

use super::PipelineError;

pub const ITEMS_DIR: &str = "items";
pub const REPORTS_DIR: &str = "reports";
pub const CASSETTES_DIR: &str = "cassettes";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const SCENARIOS_FILE: &str = "scenarios.json";
pub const SUMMARY_FILE: &str = "summary.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatchStage {
    /// No code fragment of the target kind in the model output.
    NoCode,
    Lexical,
    Parsing,
    /// The target declaration was not found (or was ambiguous) in the source file.
    Locate,
}

/// Terminal state of one (scenario, strategy, model, run) item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ItemStatus {
    /// Benchmark item: code extracted and measured; correctness is judged separately.
    JudgedOnly,
    /// Patch applied; no build validation was run.
    Applied,
    PatchFailed {
        stage: PatchStage,
    },
    CompileFailed,
    Validated,
    Skipped {
        reason: String,
    },
}

impl ItemStatus {
    pub fn label(&self) -> String {
        match self {
            ItemStatus::JudgedOnly => "judged-only".into(),
            ItemStatus::Applied => "applied".into(),
            ItemStatus::PatchFailed { stage } => format!("patch-failed({})", serde_json::to_value(stage).unwrap().as_str().unwrap()),
            ItemStatus::CompileFailed => "compile-failed".into(),
            ItemStatus::Validated => "validated".into(),
            ItemStatus::Skipped { reason } => format!("skipped({reason})"),
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, ItemStatus::Skipped { .. })
    }

    /// Code passed the syntax checks (and, for real items, was spliced in).
    pub fn is_well_formed(&self) -> bool {
        matches!(self, ItemStatus::JudgedOnly | ItemStatus::Applied | ItemStatus::CompileFailed | ItemStatus::Validated)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ItemRecord {
    pub model: String,
    pub scenario_id: String,
    pub refactoring_type: String,
    pub dataset: Dataset,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repository: Option<String>,
    pub strategy: StrategyKind,
    pub run_index: u32,
    pub outcome: ItemStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prompt_hash: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub template_version: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub latency_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub provider_meta: Value,
    /// Primary extracted fragment.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub auxiliary: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metrics: Option<MetricsRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationOutcome>,
}

impl ItemRecord {
    pub fn key(&self) -> String {
        format!("{}/{}/{}/{}", self.model, self.scenario_id, self.strategy, self.run_index)
    }

    fn file_name(&self) -> String {
        let clean = |s: &str| -> String {
            s.chars().map(|c| if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') { c } else { '_' }).collect()
        };
        format!("{}__{}__{}__run{:03}.json", clean(&self.model), clean(&self.scenario_id), self.strategy, self.run_index)
    }

    fn sort_key(&self) -> (&str, &str, StrategyKind, u32) {
        (&self.model, &self.scenario_id, self.strategy, self.run_index)
    }
}

/// Scenario facts stored once per run, including ground-truth metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSnapshot {
    pub id: String,
    pub refactoring_type: String,
    pub dataset: Dataset,
    pub target_kind: TargetKind,
    pub before_code: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repository: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub before_metrics: Option<MetricsRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub after_metrics: Option<MetricsRecord>,
}

#[derive(Debug, Clone)]
pub struct Archive {
    dir: PathBuf,
}

fn io_err(path: &Path, e: std::io::Error) -> PipelineError {
    PipelineError::Archive(format!("{}: {e}", path.display()))
}

impl Archive {
    /// Create `out/<run_id>`; fails if it already exists.
    pub fn create(out: &Path, run_id: &str) -> Result<Self, PipelineError> {
        let dir = out.join(run_id);
        if dir.exists() {
            return Err(PipelineError::Archive(format!("{} already exists", dir.display())));
        }
        for sub in [ITEMS_DIR, CASSETTES_DIR] {
            fs::create_dir_all(dir.join(sub)).map_err(|e| io_err(&dir, e))?;
        }
        Ok(Self { dir })
    }

    pub fn open(dir: &Path) -> Result<Self, PipelineError> {
        if !dir.join(ITEMS_DIR).is_dir() {
            return Err(PipelineError::Archive(format!("{} is not a run archive (no {ITEMS_DIR}/)", dir.display())));
        }
        Ok(Self { dir: dir.to_owned() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn run_id(&self) -> String {
        self.dir.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
    }

    pub fn write_json<T: Serialize + ?Sized>(&self, relative: &str, value: &T) -> Result<(), PipelineError> {
        let path = self.dir.join(relative);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|e| io_err(parent, e))?;
        }
        let mut text = serde_json::to_string_pretty(value).map_err(|e| PipelineError::Archive(e.to_string()))?;
        text.push('\n');
        fs::write(&path, text).map_err(|e| io_err(&path, e))
    }

    pub fn read_json<T: DeserializeOwned>(&self, relative: &str) -> Result<T, PipelineError> {
        let path = self.dir.join(relative);
        let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
        serde_json::from_str(&text).map_err(|e| PipelineError::Archive(format!("{}: {e}", path.display())))
    }

    pub fn write_item(&self, item: &ItemRecord) -> Result<(), PipelineError> {
        self.write_json(&format!("{ITEMS_DIR}/{}", item.file_name()), item)
    }

    /// All item records, ordered by model, scenario, strategy and run.
    pub fn items(&self) -> Result<Vec<ItemRecord>, PipelineError> {
        let dir = self.dir.join(ITEMS_DIR);
        let mut names: Vec<String> = fs::read_dir(&dir)
            .map_err(|e| io_err(&dir, e))?
            .filter_map(|e| e.ok())
            .map(|e| e.file_name().to_string_lossy().into_owned())
            .filter(|n| n.ends_with(".json"))
            .collect();
        names.sort();
        let mut items = names.iter().map(|n| self.read_json::<ItemRecord>(&format!("{ITEMS_DIR}/{n}"))).collect::<Result<Vec<_>, _>>()?;
        items.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(items)
    }

    pub fn scenarios(&self) -> Result<Vec<ScenarioSnapshot>, PipelineError> {
        if self.dir.join(SCENARIOS_FILE).exists() {
            self.read_json(SCENARIOS_FILE)
        } else {
            Ok(Vec::new())
        }
    }
}
