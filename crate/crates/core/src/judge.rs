//! LLM-as-judge: ask a second model whether a refactoring was applied.

use serde::{Deserialize, Serialize};

use crate::gateway::{Gateway, ModelConfig};
use crate::prompt::{PromptError, PromptForge, RenderedPrompt, StrategyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Success,
    Failure,
}

/// Strict reply rule: exactly `1` or `0` once surrounding whitespace is removed.
pub fn parse_verdict(reply: &str) -> Option<Verdict> {
    match reply.trim() {
        "1" => Some(Verdict::Success),
        "0" => Some(Verdict::Failure),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JudgeVerdict {
    pub scenario_id: String,
    pub strategy: StrategyKind,
    pub run_index: u32,
    /// `None` when the reply did not parse or the judge call failed.
    pub verdict: Option<Verdict>,
    pub judge_model: String,
    pub raw_reply: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl JudgeVerdict {
    pub fn is_parse_failure(&self) -> bool {
        self.verdict.is_none() && self.error.is_none()
    }
}

/// One generated refactoring to be judged.
#[derive(Debug, Clone)]
pub struct JudgeItem<'a> {
    pub scenario_id: &'a str,
    pub strategy: StrategyKind,
    pub run_index: u32,
    pub refactoring_type: &'a str,
    pub before_code: &'a str,
    pub after_code: &'a str,
    /// Model id (or model name) that produced `after_code`.
    pub generator_model: &'a str,
}

#[derive(Debug, thiserror::Error)]
pub enum JudgeError {
    #[error("judge model '{judge}' also generated the code for {scenario_id}; use a different judge")]
    SameModel { judge: String, scenario_id: String },
    #[error("cannot judge {0}: code is empty")]
    EmptyCode(String),
    #[error(transparent)]
    Prompt(#[from] PromptError),
}

pub fn render_judge_prompt(
    forge: &PromptForge,
    before_code: &str,
    after_code: &str,
    refactoring_type: &str,
) -> Result<String, PromptError> {
    forge.render_judge(before_code, refactoring_type, after_code)
}

pub struct Judge<'g> {
    gateway: &'g Gateway,
    forge: &'g PromptForge,
    config: &'g ModelConfig,
}

impl<'g> Judge<'g> {
    pub fn new(gateway: &'g Gateway, forge: &'g PromptForge, config: &'g ModelConfig) -> Self {
        Self { gateway, forge, config }
    }

    pub fn check_cross_judging(&self, item: &JudgeItem<'_>) -> Result<(), JudgeError> {
        let g = item.generator_model;
        if g == self.config.id || g == self.config.model_name {
            return Err(JudgeError::SameModel { judge: self.config.id.clone(), scenario_id: item.scenario_id.to_owned() });
        }
        Ok(())
    }

    /// Judge one item. Gateway failures and unparseable replies become records, not errors.
    pub fn judge(&self, item: &JudgeItem<'_>) -> Result<JudgeVerdict, JudgeError> {
        self.check_cross_judging(item)?;
        if item.before_code.trim().is_empty() || item.after_code.trim().is_empty() {
            return Err(JudgeError::EmptyCode(item.scenario_id.to_owned()));
        }
        let text = render_judge_prompt(self.forge, item.before_code, item.after_code, item.refactoring_type)?;
        let prompt = RenderedPrompt {
            text,
            strategy: item.strategy,
            scenario_id: item.scenario_id.to_owned(),
            template_version: self.forge.templates().version().to_owned(),
            warnings: Vec::new(),
        };
        let record = self.gateway.complete_or_record_failure(&prompt, self.config, item.run_index);
        Ok(JudgeVerdict {
            scenario_id: item.scenario_id.to_owned(),
            strategy: item.strategy,
            run_index: item.run_index,
            verdict: if record.is_ok() { parse_verdict(&record.raw_text) } else { None },
            judge_model: self.config.id.clone(),
            raw_reply: record.raw_text,
            error: record.error,
        })
    }
}
