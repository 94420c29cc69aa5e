//! Instruction strategies and prompt rendering.
//!
//! Each strategy is a trait object registered by name. A strategy decides
//! whether a catalog entry carries enough material for it and produces the
//! slot values for its template; [`PromptForge`] does the substitution.

mod strategies;
mod templates;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::corpus::{Catalog, CatalogEntry, RecordError, RefactoringScenario};

pub use strategies::{
    InstructionStrategy, ObjectiveStrategy, RuleBasedStrategy, StepByStepStrategy, StrategyRegistry, TwoShotStrategy, ZeroShotStrategy,
};
pub use templates::{fill, TemplateSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyKind {
    ZeroShot,
    TwoShot,
    StepByStep,
    RuleBased,
    Objective,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 5] =
        [StrategyKind::ZeroShot, StrategyKind::TwoShot, StrategyKind::StepByStep, StrategyKind::RuleBased, StrategyKind::Objective];

    pub fn as_str(self) -> &'static str {
        match self {
            StrategyKind::ZeroShot => "zero-shot",
            StrategyKind::TwoShot => "two-shot",
            StrategyKind::StepByStep => "step-by-step",
            StrategyKind::RuleBased => "rule-based",
            StrategyKind::Objective => "objective",
        }
    }

    /// Key under which extracted code is stored in the formatted-output file.
    pub fn output_key(self) -> &'static str {
        match self {
            StrategyKind::ZeroShot => "ZeroShotCode",
            StrategyKind::TwoShot => "TwoShotCode",
            StrategyKind::StepByStep => "StepByStepCode",
            StrategyKind::RuleBased => "RuleBasedCode",
            StrategyKind::Objective => "ObjectiveCode",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StrategyKind {
    type Err = PromptError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        StrategyKind::ALL.into_iter().find(|k| k.as_str().replace('-', "") == key).ok_or_else(|| PromptError::UnknownStrategy(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemplateKind {
    ZeroShot,
    TwoShot,
    StepByStep,
    RuleBased,
    Objective,
    Judge,
}

impl TemplateKind {
    pub const ALL: [TemplateKind; 6] = [
        TemplateKind::ZeroShot,
        TemplateKind::TwoShot,
        TemplateKind::StepByStep,
        TemplateKind::RuleBased,
        TemplateKind::Objective,
        TemplateKind::Judge,
    ];

    pub fn file_stem(self) -> &'static str {
        match self {
            TemplateKind::ZeroShot => "zero-shot",
            TemplateKind::TwoShot => "two-shot",
            TemplateKind::StepByStep => "step-by-step",
            TemplateKind::RuleBased => "rule-based",
            TemplateKind::Objective => "objective",
            TemplateKind::Judge => "judge",
        }
    }

    fn required_slots(self) -> &'static [&'static str] {
        match self {
            TemplateKind::ZeroShot => &["refactoring_name", "code"],
            TemplateKind::TwoShot => &["refactoring_name", "refactoring_examples", "code"],
            TemplateKind::StepByStep => &["refactoring_name", "steps", "code"],
            TemplateKind::RuleBased => &["refactoring_name", "rule", "code"],
            TemplateKind::Objective => &["code"],
            TemplateKind::Judge => &["initial_code", "refactoring_name", "final_code"],
        }
    }
}

impl From<StrategyKind> for TemplateKind {
    fn from(k: StrategyKind) -> Self {
        match k {
            StrategyKind::ZeroShot => TemplateKind::ZeroShot,
            StrategyKind::TwoShot => TemplateKind::TwoShot,
            StrategyKind::StepByStep => TemplateKind::StepByStep,
            StrategyKind::RuleBased => TemplateKind::RuleBased,
            StrategyKind::Objective => TemplateKind::Objective,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PromptError {
    #[error("strategy '{strategy}' is not supported for '{refactoring_type}': {reason}")]
    Unsupported { strategy: StrategyKind, refactoring_type: String, reason: String },
    #[error("unknown strategy '{0}'")]
    UnknownStrategy(String),
    #[error("template error: {0}")]
    Template(String),
    #[error(transparent)]
    Corpus(#[from] RecordError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedPrompt {
    pub text: String,
    pub strategy: StrategyKind,
    pub scenario_id: String,
    pub template_version: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Renders prompts from a strategy registry and a template set.
#[derive(Clone)]
pub struct PromptForge {
    registry: Arc<StrategyRegistry>,
    templates: Arc<TemplateSet>,
}

impl Default for PromptForge {
    fn default() -> Self {
        Self::new(StrategyRegistry::with_builtin(), TemplateSet::builtin())
    }
}

impl PromptForge {
    pub fn new(registry: StrategyRegistry, templates: TemplateSet) -> Self {
        Self { registry: Arc::new(registry), templates: Arc::new(templates) }
    }

    pub fn templates(&self) -> &TemplateSet {
        &self.templates
    }

    pub fn registry(&self) -> &StrategyRegistry {
        &self.registry
    }

    pub fn render(
        &self,
        strategy: StrategyKind,
        scenario: &RefactoringScenario,
        entry: &CatalogEntry,
    ) -> Result<RenderedPrompt, PromptError> {
        let imp = self.registry.get(strategy)?;
        let slots = imp.slots(scenario, entry)?;
        let borrowed: Vec<(&str, &str)> = slots.iter().map(|(k, v)| (*k, v.as_str())).collect();
        let text = fill(self.templates.get(strategy.into()), &borrowed)?;
        let mut warnings = Vec::new();
        if scenario.before_code.trim().is_empty() {
            warnings.push(format!("scenario '{}' has empty code", scenario.id));
        }
        Ok(RenderedPrompt {
            text,
            strategy,
            scenario_id: scenario.id.clone(),
            template_version: self.templates.version().to_owned(),
            warnings,
        })
    }

    pub fn render_zero_shot(&self, s: &RefactoringScenario, e: &CatalogEntry) -> Result<RenderedPrompt, PromptError> {
        self.render(StrategyKind::ZeroShot, s, e)
    }

    pub fn render_two_shot(&self, s: &RefactoringScenario, e: &CatalogEntry) -> Result<RenderedPrompt, PromptError> {
        self.render(StrategyKind::TwoShot, s, e)
    }

    pub fn render_step_by_step(&self, s: &RefactoringScenario, e: &CatalogEntry) -> Result<RenderedPrompt, PromptError> {
        self.render(StrategyKind::StepByStep, s, e)
    }

    pub fn render_rule_based(&self, s: &RefactoringScenario, e: &CatalogEntry) -> Result<RenderedPrompt, PromptError> {
        self.render(StrategyKind::RuleBased, s, e)
    }

    pub fn render_objective(&self, s: &RefactoringScenario, e: &CatalogEntry) -> Result<RenderedPrompt, PromptError> {
        self.render(StrategyKind::Objective, s, e)
    }

    /// Judge prompt asking whether `final_code` applies the refactoring to `initial_code`.
    pub fn render_judge(&self, initial_code: &str, refactoring_name: &str, final_code: &str) -> Result<String, PromptError> {
        fill(
            self.templates.get(TemplateKind::Judge),
            &[("initial_code", initial_code), ("refactoring_name", refactoring_name), ("final_code", final_code)],
        )
    }

    pub fn supported_strategies(&self, refactoring_type: &str, catalog: &Catalog) -> Result<BTreeSet<StrategyKind>, PromptError> {
        let entry = catalog.lookup(refactoring_type)?;
        Ok(self.registry.iter().filter(|s| s.check_support(entry).is_ok()).map(|s| s.kind()).collect())
    }
}
