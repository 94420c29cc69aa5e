//! Tabular reports over an archived run.
//!
//! Ratio and metric columns are `mean±std` across scenarios, where each
//! scenario is first averaged over its runs. Count columns are plain sums.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::corpus::Dataset;
use crate::stats::{aggregate, MeanStd};
use crate::verify::{BUCKETS, OTHER_BUCKET};

use super::archive::{Archive, ItemRecord, ItemStatus, PatchStage, ScenarioSnapshot, MANIFEST_FILE, REPORTS_DIR};
use super::PipelineError;

pub const NOT_AVAILABLE: &str = "n/a";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportTable {
    /// File stem of the CSV.
    pub name: String,
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ReportTable {
    pub fn new(name: &str, title: &str, headers: &[&str]) -> Self {
        Self { name: name.into(), title: title.into(), headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn to_csv(&self) -> Result<String, PipelineError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| PipelineError::Report(e.to_string());
        w.write_record(&self.headers).map_err(err)?;
        for row in &self.rows {
            w.write_record(row).map_err(err)?;
        }
        String::from_utf8(w.into_inner().map_err(|e| PipelineError::Report(e.to_string()))?)
            .map_err(|e| PipelineError::Report(e.to_string()))
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("## {}\n\n", self.title);
        if self.rows.is_empty() {
            out.push_str("_No rows._\n");
            return out;
        }
        let line = |cells: &[String]| format!("| {} |\n", cells.iter().map(|c| c.replace('|', "\\|")).collect::<Vec<_>>().join(" | "));
        out.push_str(&line(&self.headers));
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

/// Archived inputs a report shape can draw on.
pub struct RunData {
    pub items: Vec<ItemRecord>,
    pub scenarios: Vec<ScenarioSnapshot>,
    /// Whether applied real items went on to build and test.
    pub validated: bool,
}

impl RunData {
    pub fn load(archive: &Archive) -> Result<Self, PipelineError> {
        let manifest: Option<serde_json::Value> = archive.read_json(MANIFEST_FILE).ok();
        let validated = manifest.as_ref().and_then(|m| m.get("validate")).and_then(|v| v.as_bool()).unwrap_or(true);
        Ok(Self { items: archive.items()?, scenarios: archive.scenarios()?, validated })
    }

    fn max_run(&self) -> u32 {
        self.items.iter().map(|i| i.run_index).max().unwrap_or(0)
    }
}

pub trait ReportShape: Send + Sync {
    fn id(&self) -> &'static str;
    fn build(&self, data: &RunData) -> Vec<ReportTable>;
}

fn show(v: Option<MeanStd>) -> String {
    v.map_or_else(|| NOT_AVAILABLE.to_owned(), |m| m.to_string())
}

/// Mean±std across scenarios of per-scenario run means.
pub fn across_scenarios<'a>(
    items: impl IntoIterator<Item = &'a ItemRecord>,
    value: impl Fn(&ItemRecord) -> Option<f64>,
) -> Option<MeanStd> {
    let mut per: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    for i in items {
        if let Some(v) = value(i) {
            per.entry(i.scenario_id.as_str()).or_default().push(v);
        }
    }
    let means: Vec<f64> = per.values().map(|v| v.iter().sum::<f64>() / v.len() as f64).collect();
    aggregate(&means).ok()
}

fn attempted(i: &ItemRecord) -> bool {
    !i.outcome.is_skipped()
}

fn well_formed(i: &ItemRecord) -> Option<f64> {
    attempted(i).then(|| if i.outcome.is_well_formed() { 1.0 } else { 0.0 })
}

/// Known only once an item has either failed before the build or been built.
fn compiled(i: &ItemRecord) -> Option<f64> {
    match i.outcome {
        ItemStatus::Validated => Some(1.0),
        ItemStatus::CompileFailed | ItemStatus::PatchFailed { .. } if i.dataset == Dataset::Real => Some(0.0),
        _ => None,
    }
}

/// Only items whose tests ran.
fn new_failed(i: &ItemRecord) -> Option<f64> {
    i.validation.as_ref().filter(|v| v.compiled).map(|v| v.new_failed as f64)
}

fn new_errored(i: &ItemRecord) -> Option<f64> {
    i.validation.as_ref().filter(|v| v.compiled).map(|v| v.new_errored as f64)
}

fn codebleu(i: &ItemRecord) -> Option<f64> {
    i.metrics.as_ref()?.codebleu.as_ref().map(|c| c.codebleu)
}

fn cc(i: &ItemRecord) -> Option<f64> {
    i.metrics.as_ref().map(|m| f64::from(m.cc))
}

fn loc(i: &ItemRecord) -> Option<f64> {
    i.metrics.as_ref().map(|m| m.loc as f64)
}

fn fout(i: &ItemRecord) -> Option<f64> {
    i.metrics.as_ref().map(|m| m.fout as f64)
}

fn scenario_count<'a>(items: impl IntoIterator<Item = &'a ItemRecord>) -> usize {
    items.into_iter().filter(|i| attempted(i)).map(|i| i.scenario_id.as_str()).collect::<BTreeSet<_>>().len()
}

fn outcome_columns(group: &[&ItemRecord], validated: bool) -> Vec<String> {
    let g = || group.iter().copied();
    let built = |f: fn(&ItemRecord) -> Option<f64>| if validated { show(across_scenarios(g(), f)) } else { NOT_AVAILABLE.to_owned() };
    vec![
        scenario_count(g()).to_string(),
        g().filter(|i| attempted(i)).count().to_string(),
        show(across_scenarios(g(), well_formed)),
        built(compiled),
        built(new_failed),
        built(new_errored),
    ]
}

fn metric_columns(group: &[&ItemRecord]) -> Vec<String> {
    let g = || group.iter().copied();
    vec![
        show(across_scenarios(g(), codebleu)),
        show(across_scenarios(g(), cc)),
        show(across_scenarios(g(), loc)),
        show(across_scenarios(g(), fout)),
    ]
}

fn group_by<'a, K: Ord>(items: &'a [ItemRecord], key: impl Fn(&'a ItemRecord) -> K) -> BTreeMap<K, Vec<&'a ItemRecord>> {
    let mut groups: BTreeMap<K, Vec<&ItemRecord>> = BTreeMap::new();
    for i in items {
        groups.entry(key(i)).or_default().push(i);
    }
    groups
}

/// One row per model, dataset and strategy.
pub struct ByStrategy;

impl ReportShape for ByStrategy {
    fn id(&self) -> &'static str {
        "by_strategy"
    }

    fn build(&self, data: &RunData) -> Vec<ReportTable> {
        let mut t = ReportTable::new(
            self.id(),
            "Outcomes and quality by strategy",
            &[
                "model",
                "dataset",
                "strategy",
                "scenarios",
                "attempts",
                "well_formed",
                "compilation",
                "new_failed_tests",
                "new_test_errors",
                "codebleu",
                "cc",
                "loc",
                "fout",
            ],
        );
        for ((model, dataset, strategy), group) in group_by(&data.items, |i| (i.model.as_str(), i.dataset, i.strategy)) {
            if !group.iter().any(|i| attempted(i)) {
                continue;
            }
            let mut row = vec![model.to_owned(), dataset.to_string(), strategy.to_string()];
            row.extend(outcome_columns(&group, data.validated));
            row.extend(metric_columns(&group));
            t.rows.push(row);
        }
        vec![t, ground_truth(data)]
    }
}

/// One row per model, dataset and refactoring type, strategies pooled.
pub struct ByType;

impl ReportShape for ByType {
    fn id(&self) -> &'static str {
        "by_type"
    }

    fn build(&self, data: &RunData) -> Vec<ReportTable> {
        let mut t = ReportTable::new(
            self.id(),
            "Outcomes and quality by refactoring type",
            &[
                "model",
                "dataset",
                "refactoring_type",
                "scenarios",
                "attempts",
                "well_formed",
                "compilation",
                "new_failed_tests",
                "new_test_errors",
                "codebleu",
                "cc",
                "loc",
                "fout",
            ],
        );
        for ((model, dataset, ty), group) in group_by(&data.items, |i| (i.model.as_str(), i.dataset, i.refactoring_type.as_str())) {
            if !group.iter().any(|i| attempted(i)) {
                continue;
            }
            let mut row = vec![model.to_owned(), dataset.to_string(), ty.to_owned()];
            row.extend(outcome_columns(&group, data.validated));
            row.extend(metric_columns(&group));
            t.rows.push(row);
        }
        vec![t]
    }
}

/// Metrics of the scenarios' own code, before and after the reference refactoring.
fn ground_truth(data: &RunData) -> ReportTable {
    let mut t = ReportTable::new("ground_truth", "Scenario code quality", &["dataset", "version", "scenarios", "cc", "loc", "fout"]);
    let mut by_dataset: BTreeMap<Dataset, Vec<&ScenarioSnapshot>> = BTreeMap::new();
    for s in &data.scenarios {
        by_dataset.entry(s.dataset).or_default().push(s);
    }
    for (dataset, scenarios) in by_dataset {
        for (version, pick) in [("before", 0), ("after", 1)] {
            let metrics: Vec<_> =
                scenarios.iter().filter_map(|s| if pick == 0 { s.before_metrics.as_ref() } else { s.after_metrics.as_ref() }).collect();
            if metrics.is_empty() {
                continue;
            }
            let col =
                |f: &dyn Fn(&crate::metrics::MetricsRecord) -> f64| show(aggregate(&metrics.iter().map(|m| f(m)).collect::<Vec<_>>()).ok());
            t.rows.push(vec![
                dataset.to_string(),
                version.to_owned(),
                metrics.len().to_string(),
                col(&|m| f64::from(m.cc)),
                col(&|m| m.loc as f64),
                col(&|m| m.fout as f64),
            ]);
        }
    }
    t
}

/// Failure distribution per run and compiler-error buckets per run.
pub struct Errors;

impl ReportShape for Errors {
    fn id(&self) -> &'static str {
        "errors"
    }

    fn build(&self, data: &RunData) -> Vec<ReportTable> {
        vec![failures_by_run(data), compiler_errors(data)]
    }
}

/// Failure counts per run: syntax stages, locate and build.
fn failures_by_run(data: &RunData) -> ReportTable {
    let mut t = ReportTable::new(
        "failures_by_run",
        "Failures by run",
        &["model", "dataset", "run", "attempts", "no_code", "lexical", "parsing", "locate", "compilation", "total_errors"],
    );
    for ((model, dataset, run), group) in group_by(&data.items, |i| (i.model.as_str(), i.dataset, i.run_index)) {
        let attempts = group.iter().filter(|i| attempted(i)).count();
        if attempts == 0 {
            continue;
        }
        let stage = |s: PatchStage| group.iter().filter(|i| i.outcome == ItemStatus::PatchFailed { stage: s }).count();
        let counts = [
            stage(PatchStage::NoCode),
            stage(PatchStage::Lexical),
            stage(PatchStage::Parsing),
            stage(PatchStage::Locate),
            group.iter().filter(|i| i.outcome == ItemStatus::CompileFailed).count(),
        ];
        let mut row = vec![model.to_owned(), dataset.to_string(), run.to_string(), attempts.to_string()];
        row.extend(counts.iter().map(|c| c.to_string()));
        row.push(counts.iter().sum::<usize>().to_string());
        t.rows.push(row);
    }
    t
}

/// Compiler diagnostics per bucket and run.
fn compiler_errors(data: &RunData) -> ReportTable {
    let runs = data.max_run();
    let mut headers = vec!["model".to_owned(), "bucket".to_owned()];
    headers.extend((1..=runs).map(|r| format!("run_{r}")));
    headers.push("total".into());
    let mut t = ReportTable { name: "compiler_errors".into(), title: "Compiler errors by category".into(), headers, rows: Vec::new() };
    let order: Vec<&str> = BUCKETS.iter().map(|(label, _)| *label).chain([OTHER_BUCKET]).collect();
    for (model, group) in group_by(&data.items, |i| i.model.as_str()) {
        let mut counts: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for i in group {
            let Some(v) = i.validation.as_ref().filter(|v| !v.compiled) else { continue };
            for (bucket, n) in &v.compiler_error_buckets {
                let slot = order.iter().copied().find(|b| b == bucket).unwrap_or(OTHER_BUCKET);
                counts.entry(slot).or_insert_with(|| vec![0; runs as usize])[i.run_index as usize - 1] += n;
            }
        }
        for bucket in &order {
            if let Some(per_run) = counts.get(bucket) {
                let mut row = vec![model.to_owned(), bucket.to_string()];
                row.extend(per_run.iter().map(|c| c.to_string()));
                row.push(per_run.iter().sum::<usize>().to_string());
                t.rows.push(row);
            }
        }
    }
    t
}

/// Item counts per terminal status.
pub struct StatusCounts;

impl ReportShape for StatusCounts {
    fn id(&self) -> &'static str {
        "status"
    }

    fn build(&self, data: &RunData) -> Vec<ReportTable> {
        let mut t = ReportTable::new("status_counts", "Item status counts", &["model", "strategy", "status", "items"]);
        let groups = group_by(&data.items, |i| (i.model.as_str(), i.strategy, i.outcome.label()));
        for ((model, strategy, status), group) in groups {
            t.rows.push(vec![model.to_owned(), strategy.to_string(), status, group.len().to_string()]);
        }
        vec![t]
    }
}

/// Ordered registry of report shapes.
#[derive(Clone)]
pub struct ReportShapes {
    shapes: Vec<Arc<dyn ReportShape>>,
}

impl Default for ReportShapes {
    fn default() -> Self {
        let mut r = Self { shapes: Vec::new() };
        r.register(Arc::new(ByStrategy));
        r.register(Arc::new(ByType));
        r.register(Arc::new(Errors));
        r.register(Arc::new(StatusCounts));
        r
    }
}

impl ReportShapes {
    /// Adds a shape, replacing one with the same id.
    pub fn register(&mut self, shape: Arc<dyn ReportShape>) {
        match self.shapes.iter().position(|s| s.id() == shape.id()) {
            Some(i) => self.shapes[i] = shape,
            None => self.shapes.push(shape),
        }
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.shapes.iter().map(|s| s.id()).collect()
    }

    pub fn build_all(&self, data: &RunData) -> Vec<ReportTable> {
        self.shapes.iter().flat_map(|s| s.build(data)).collect()
    }

    pub fn build(&self, id: &str, data: &RunData) -> Result<Vec<ReportTable>, PipelineError> {
        let shape = self
            .shapes
            .iter()
            .find(|s| s.id() == id)
            .ok_or_else(|| PipelineError::Report(format!("unknown report shape '{id}' (known: {})", self.ids().join(", "))))?;
        Ok(shape.build(data))
    }
}

pub fn write_tables(archive: &Archive, tables: &[ReportTable], markdown_name: &str) -> Result<(), PipelineError> {
    let dir = archive.dir().join(REPORTS_DIR);
    std::fs::create_dir_all(&dir).map_err(|e| PipelineError::Report(format!("{}: {e}", dir.display())))?;
    let mut md = String::new();
    for t in tables {
        let path = dir.join(format!("{}.csv", t.name));
        std::fs::write(&path, t.to_csv()?).map_err(|e| PipelineError::Report(format!("{}: {e}", path.display())))?;
        let _ = writeln!(md, "{}", t.to_markdown());
    }
    let path = dir.join(markdown_name);
    std::fs::write(&path, md).map_err(|e| PipelineError::Report(format!("{}: {e}", path.display())))
}

/// Rebuild reports of `archive` from its item records: every registered
/// shape, or only `only` when given.
pub fn write_reports(archive: &Archive, shapes: &ReportShapes, only: Option<&str>) -> Result<Vec<ReportTable>, PipelineError> {
    let data = RunData::load(archive)?;
    if data.items.is_empty() {
        return Err(PipelineError::Report(format!("archive {} has no items", archive.dir().display())));
    }
    let tables = match only {
        Some(id) => shapes.build(id, &data)?,
        None => shapes.build_all(&data),
    };
    write_tables(archive, &tables, &format!("{}.md", only.unwrap_or("report")))?;
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prompt::StrategyKind;
    use crate::verify::ValidationOutcome;

    fn item(scenario: &str, run: u32, outcome: ItemStatus, validation: Option<ValidationOutcome>) -> ItemRecord {
        ItemRecord {
            model: "m".into(),
            scenario_id: scenario.into(),
            refactoring_type: "EXTRACT METHOD".into(),
            dataset: Dataset::Real,
            repository: Some("r".into()),
            strategy: StrategyKind::ZeroShot,
            run_index: run,
            outcome,
            prompt_hash: None,
            template_version: None,
            raw_text: None,
            latency_ms: None,
            provider_meta: serde_json::Value::Null,
            code: None,
            auxiliary: vec![],
            diagnostic: None,
            warnings: vec![],
            metrics: None,
            branch: None,
            validation,
        }
    }

    fn ok(failed: usize) -> Option<ValidationOutcome> {
        Some(ValidationOutcome { compiled: true, new_failed: failed, runs: 5, ..Default::default() })
    }

    #[test]
    fn scenario_means_then_population_std() {
        let items = vec![
            item("a", 1, ItemStatus::Validated, ok(0)),
            item("a", 2, ItemStatus::CompileFailed, Some(ValidationOutcome::compile_failed(&[]))),
            item("b", 1, ItemStatus::Validated, ok(2)),
            item("b", 2, ItemStatus::Validated, ok(4)),
        ];
        let c = across_scenarios(&items, compiled).unwrap();
        assert!((c.mean - 0.75).abs() < 1e-12 && (c.std - 0.25).abs() < 1e-12);
        let f = across_scenarios(&items, new_failed).unwrap();
        assert!((f.mean - 1.5).abs() < 1e-12 && (f.std - 1.5).abs() < 1e-12);
        let t = &ByStrategy.build(&RunData { items, scenarios: vec![], validated: true })[0];
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0][3..8], ["2", "4", "1.000±0.000", "0.750±0.250", "1.500±1.500"]);
        assert_eq!(t.rows[0][9], NOT_AVAILABLE);
    }

    #[test]
    fn unvalidated_runs_leave_build_columns_open() {
        let items =
            vec![item("a", 1, ItemStatus::Applied, None), item("a", 2, ItemStatus::PatchFailed { stage: PatchStage::Parsing }, None)];
        let t = &ByStrategy.build(&RunData { items, scenarios: vec![], validated: false })[0];
        assert_eq!(t.rows[0][5..9], ["0.500±0.000", NOT_AVAILABLE, NOT_AVAILABLE, NOT_AVAILABLE]);
    }

    #[test]
    fn failures_and_buckets() {
        let mut cf = ValidationOutcome::compile_failed(&[]);
        cf.compiler_error_buckets = BTreeMap::from([("incompatible types".to_owned(), 2), ("something odd".to_owned(), 1)]);
        let items = vec![
            item("a", 1, ItemStatus::PatchFailed { stage: PatchStage::Lexical }, None),
            item("a", 2, ItemStatus::CompileFailed, Some(cf)),
            item("b", 2, ItemStatus::Skipped { reason: "unsupported-strategy".into() }, None),
        ];
        let data = RunData { items, scenarios: vec![], validated: true };
        let f = failures_by_run(&data);
        assert_eq!(f.rows, [["m", "real", "1", "1", "0", "1", "0", "0", "0", "1"], ["m", "real", "2", "1", "0", "0", "0", "0", "1", "1"],]);
        let b = compiler_errors(&data);
        assert_eq!(b.headers, ["model", "bucket", "run_1", "run_2", "total"]);
        assert_eq!(b.rows, [["m", "incompatible types", "0", "2", "2"], ["m", "other", "0", "1", "1"]]);
    }

    #[test]
    fn csv_and_markdown() {
        let mut t = ReportTable::new("x", "X", &["a", "b"]);
        t.rows.push(vec!["1,5".into(), "p|q".into()]);
        assert_eq!(t.to_csv().unwrap(), "a,b\n\"1,5\",p|q\n");
        assert!(t.to_markdown().contains("| 1,5 | p\\|q |"));
    }
}
