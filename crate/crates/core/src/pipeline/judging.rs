//! Model-judged correctness of benchmark items, plus agreement with human labels.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::Dataset;
use crate::gateway::{Gateway, ModelConfig};
use crate::judge::{Judge, JudgeError, JudgeItem, JudgeVerdict, Verdict};
use crate::prompt::{PromptForge, StrategyKind};
use crate::stats::{success_rate, AgreementStats, ContingencyTable};

use super::archive::{Archive, ItemRecord};
use super::report::{write_tables, ReportTable, NOT_AVAILABLE};
use super::PipelineError;

pub const JUDGMENTS_DIR: &str = "judgments";

/// A verdict tagged with the model that produced the judged code.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JudgedItem {
    pub model: String,
    #[serde(flatten)]
    pub verdict: JudgeVerdict,
}

/// One human label: 1 (or true) marks a successful refactoring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HumanLabel {
    pub model: String,
    pub scenario_id: String,
    pub strategy: StrategyKind,
    pub run_index: u32,
    #[serde(deserialize_with = "binary_label")]
    pub label: bool,
}

fn binary_label<'de, D: serde::Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
    match serde_json::Value::deserialize(d)? {
        serde_json::Value::Bool(b) => Ok(b),
        serde_json::Value::Number(n) if n.as_u64() == Some(1) => Ok(true),
        serde_json::Value::Number(n) if n.as_u64() == Some(0) => Ok(false),
        other => Err(serde::de::Error::custom(format!("label must be 0, 1, true or false, got {other}"))),
    }
}

pub fn load_labels(path: &Path) -> Result<Vec<HumanLabel>, PipelineError> {
    let text = std::fs::read_to_string(path).map_err(|e| PipelineError::Manifest(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| PipelineError::Manifest(format!("{}: {e}", path.display())))
}

fn judged_code(item: &ItemRecord) -> Option<String> {
    let code = item.code.as_deref()?;
    Some(std::iter::once(code).chain(item.auxiliary.iter().map(String::as_str)).collect::<Vec<_>>().join("\n\n"))
}

/// Benchmark items with a generation attempt, in archive order.
fn candidates(items: &[ItemRecord]) -> Vec<&ItemRecord> {
    items.iter().filter(|i| i.dataset == Dataset::Benchmark && !i.outcome.is_skipped()).collect()
}

fn request<'a>(before_code: &'a HashMap<String, String>, i: &'a ItemRecord, code: &'a str) -> Result<JudgeItem<'a>, PipelineError> {
    Ok(JudgeItem {
        scenario_id: &i.scenario_id,
        strategy: i.strategy,
        run_index: i.run_index,
        refactoring_type: &i.refactoring_type,
        before_code: before_code
            .get(&i.scenario_id)
            .ok_or_else(|| PipelineError::Archive(format!("scenario '{}' missing from archive", i.scenario_id)))?,
        after_code: code,
        generator_model: &i.model,
    })
}

/// Ask `config` to judge every benchmark item. Items without extracted code
/// are recorded as judge errors without a model call.
pub fn judge_items(
    items: &[ItemRecord],
    before_code: &HashMap<String, String>,
    gateway: &Gateway,
    forge: &PromptForge,
    config: &ModelConfig,
) -> Result<Vec<JudgedItem>, PipelineError> {
    let judge = Judge::new(gateway, forge, config);
    let work = candidates(items);
    let codes: Vec<Option<String>> = work.iter().map(|i| judged_code(i)).collect();
    for i in &work {
        judge.check_cross_judging(&request(before_code, i, "")?).map_err(|e| PipelineError::Manifest(e.to_string()))?;
    }
    work.par_iter()
        .zip(codes.par_iter())
        .map(|(i, code)| {
            let no_verdict = |error: String| JudgeVerdict {
                scenario_id: i.scenario_id.clone(),
                strategy: i.strategy,
                run_index: i.run_index,
                verdict: None,
                judge_model: config.id.clone(),
                raw_reply: String::new(),
                error: Some(error),
            };
            let verdict = match code.as_deref().filter(|c| !c.trim().is_empty()) {
                None => no_verdict("no code extracted".into()),
                Some(code) => match judge.judge(&request(before_code, i, code)?) {
                    Ok(v) => v,
                    Err(JudgeError::EmptyCode(_)) => no_verdict("empty code".into()),
                    Err(e) => return Err(PipelineError::Manifest(e.to_string())),
                },
            };
            Ok(JudgedItem { model: i.model.clone(), verdict })
        })
        .collect()
}

/// Success rate per generator model and strategy. Every attempt counts in the
/// denominator; unparseable replies and missing code count as non-success.
pub fn success_table(judged: &[JudgedItem]) -> ReportTable {
    let mut t = ReportTable::new(
        "judge_success",
        "Judged success rate by strategy",
        &["model", "strategy", "judge_model", "attempts", "successes", "success_rate", "parse_failures", "judge_errors"],
    );
    let mut groups: BTreeMap<(&str, StrategyKind, &str), Vec<&JudgeVerdict>> = BTreeMap::new();
    for j in judged {
        groups.entry((&j.model, j.verdict.strategy, &j.verdict.judge_model)).or_default().push(&j.verdict);
    }
    for ((model, strategy, judge), verdicts) in groups {
        let attempts = verdicts.len() as u64;
        let successes = verdicts.iter().filter(|v| v.verdict == Some(Verdict::Success)).count() as u64;
        let rate = success_rate(successes, attempts).map_or_else(|_| NOT_AVAILABLE.to_owned(), |r| r.to_string());
        t.rows.push(vec![
            model.to_owned(),
            strategy.to_string(),
            judge.to_owned(),
            attempts.to_string(),
            successes.to_string(),
            rate,
            verdicts.iter().filter(|v| v.is_parse_failure()).count().to_string(),
            verdicts.iter().filter(|v| v.error.is_some()).count().to_string(),
        ]);
    }
    t
}

fn fixed(v: Option<f64>) -> String {
    v.map_or_else(|| NOT_AVAILABLE.to_owned(), |x| format!("{x:.4}"))
}

/// Human labels as rater 1, judge verdicts as rater 2, over items both rated.
pub fn agreement_table(judged: &[JudgedItem], labels: &[HumanLabel]) -> Result<ReportTable, PipelineError> {
    let mut t = ReportTable::new(
        "judge_agreement",
        "Agreement between human labels and judge",
        &["judge_model", "n", "both_success", "human_only", "judge_only", "both_failure", "p_o", "p_e", "kappa", "p_pos", "p_neg", "pabak"],
    );
    let human: HashMap<(&str, &str, StrategyKind, u32), bool> =
        labels.iter().map(|l| ((l.model.as_str(), l.scenario_id.as_str(), l.strategy, l.run_index), l.label)).collect();
    let mut pairs: BTreeMap<&str, (Vec<bool>, Vec<bool>)> = BTreeMap::new();
    for j in judged {
        let v = &j.verdict;
        let (Some(verdict), Some(&label)) = (v.verdict, human.get(&(j.model.as_str(), v.scenario_id.as_str(), v.strategy, v.run_index)))
        else {
            continue;
        };
        let entry = pairs.entry(&v.judge_model).or_default();
        entry.0.push(label);
        entry.1.push(verdict == Verdict::Success);
    }
    for (judge, (h, m)) in pairs {
        let table = ContingencyTable::from_labels(&h, &m).map_err(|e| PipelineError::Report(e.to_string()))?;
        let s = AgreementStats::of(&table);
        t.rows.push(vec![
            judge.to_owned(),
            table.n().to_string(),
            table.a.to_string(),
            table.b.to_string(),
            table.c.to_string(),
            table.d.to_string(),
            fixed(Some(s.p_o)),
            fixed(Some(s.p_e)),
            fixed(s.kappa),
            fixed(s.p_pos),
            fixed(s.p_neg),
            fixed(Some(s.pabak)),
        ]);
    }
    Ok(t)
}

/// Judge an archive, store the verdicts and write the judge reports.
pub fn judge_archive(
    archive: &Archive,
    gateway: &Gateway,
    forge: &PromptForge,
    config: &ModelConfig,
    labels: Option<&[HumanLabel]>,
    workers: Option<usize>,
) -> Result<Vec<ReportTable>, PipelineError> {
    let items = archive.items()?;
    if items.is_empty() {
        return Err(PipelineError::Report(format!("archive {} has no items", archive.dir().display())));
    }
    let before: HashMap<String, String> = archive.scenarios()?.into_iter().map(|s| (s.id, s.before_code)).collect();
    let pool = super::worker_pool(workers)?;
    let judged = pool.install(|| judge_items(&items, &before, gateway, forge, config))?;

    let dir = archive.dir().join(JUDGMENTS_DIR);
    std::fs::create_dir_all(&dir).map_err(|e| PipelineError::Archive(format!("{}: {e}", dir.display())))?;
    let mut lines = String::new();
    for j in &judged {
        lines.push_str(&serde_json::to_string(j).map_err(|e| PipelineError::Archive(e.to_string()))?);
        lines.push('\n');
    }
    let path = dir.join(format!("{}.jsonl", config.id));
    std::fs::write(&path, lines).map_err(|e| PipelineError::Archive(format!("{}: {e}", path.display())))?;

    let mut tables = vec![success_table(&judged)];
    if let Some(labels) = labels {
        tables.push(agreement_table(&judged, labels)?);
    }
    write_tables(archive, &tables, "judge.md")?;
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn judged(model: &str, scenario: &str, verdict: Option<Verdict>) -> JudgedItem {
        JudgedItem {
            model: model.into(),
            verdict: JudgeVerdict {
                scenario_id: scenario.into(),
                strategy: StrategyKind::ZeroShot,
                run_index: 1,
                verdict,
                judge_model: "j".into(),
                raw_reply: String::new(),
                error: None,
            },
        }
    }

    fn label(scenario: &str, label: bool) -> HumanLabel {
        HumanLabel { model: "g".into(), scenario_id: scenario.into(), strategy: StrategyKind::ZeroShot, run_index: 1, label }
    }

    #[test]
    fn success_counts_every_attempt() {
        let j = [judged("g", "a", Some(Verdict::Success)), judged("g", "b", None), judged("g", "c", Some(Verdict::Failure))];
        let t = success_table(&j);
        assert_eq!(t.rows, [["g", "zero-shot", "j", "3", "1", "33.3", "1", "0"]]);
    }

    #[test]
    fn perfect_agreement_row() {
        let j = [judged("g", "a", Some(Verdict::Success)), judged("g", "b", Some(Verdict::Failure)), judged("g", "c", None)];
        let labels = [label("a", true), label("b", false), label("c", true)];
        let t = agreement_table(&j, &labels).unwrap();
        assert_eq!(t.rows[0][..6], ["j", "2", "1", "0", "0", "1"]);
        assert_eq!(t.rows[0][8], "1.0000");
    }

    #[test]
    fn labels_accept_numbers_and_booleans() {
        let l: Vec<HumanLabel> = serde_json::from_str(
            r#"[{"model":"g","scenario_id":"a","strategy":"two-shot","run_index":2,"label":1},
                {"model":"g","scenario_id":"b","strategy":"two-shot","run_index":2,"label":false}]"#,
        )
        .unwrap();
        assert!(l[0].label && !l[1].label);
        assert!(serde_json::from_str::<Vec<HumanLabel>>(
            r#"[{"model":"g","scenario_id":"a","strategy":"two-shot","run_index":2,"label":2}]"#
        )
        .is_err());
    }
}
