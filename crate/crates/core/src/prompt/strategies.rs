use std::collections::BTreeMap;
use std::sync::Arc;

use super::{PromptError, StrategyKind};
use crate::corpus::{CatalogEntry, RefactoringScenario};

pub type Slots = Vec<(&'static str, String)>;

pub trait InstructionStrategy: Send + Sync {
    fn kind(&self) -> StrategyKind;

    /// `Err(reason)` when the entry lacks the material this strategy needs.
    fn check_support(&self, entry: &CatalogEntry) -> Result<(), String>;

    fn fill_slots(&self, scenario: &RefactoringScenario, entry: &CatalogEntry) -> Slots;

    fn slots(&self, scenario: &RefactoringScenario, entry: &CatalogEntry) -> Result<Slots, PromptError> {
        self.check_support(entry).map_err(|reason| PromptError::Unsupported {
            strategy: self.kind(),
            refactoring_type: entry.name.clone(),
            reason,
        })?;
        Ok(self.fill_slots(scenario, entry))
    }
}

fn name_and_code(scenario: &RefactoringScenario, entry: &CatalogEntry) -> Slots {
    vec![("refactoring_name", entry.name.clone()), ("code", scenario.before_code.clone())]
}

pub struct ZeroShotStrategy;

impl InstructionStrategy for ZeroShotStrategy {
    fn kind(&self) -> StrategyKind {
        StrategyKind::ZeroShot
    }

    fn check_support(&self, _: &CatalogEntry) -> Result<(), String> {
        Ok(())
    }

    fn fill_slots(&self, scenario: &RefactoringScenario, entry: &CatalogEntry) -> Slots {
        name_and_code(scenario, entry)
    }
}

pub struct TwoShotStrategy;

impl TwoShotStrategy {
    fn usable_examples(entry: &CatalogEntry) -> Vec<String> {
        let mut out: Vec<String> = entry
            .examples
            .iter()
            .map(|ex| match &ex.after {
                Some(after) => format!("Before:\n{}\nAfter:\n{}", ex.before, after),
                None => ex.before.clone(),
            })
            .take(2)
            .collect();
        if out.len() == 1 {
            if let Some(ill) = &entry.illustration {
                out.push(ill.clone());
            }
        }
        out
    }
}

impl InstructionStrategy for TwoShotStrategy {
    fn kind(&self) -> StrategyKind {
        StrategyKind::TwoShot
    }

    fn check_support(&self, entry: &CatalogEntry) -> Result<(), String> {
        let n = Self::usable_examples(entry).len();
        if n < 2 {
            return Err(format!("needs two examples, catalog provides {n}"));
        }
        Ok(())
    }

    fn fill_slots(&self, scenario: &RefactoringScenario, entry: &CatalogEntry) -> Slots {
        let examples: String =
            Self::usable_examples(entry).iter().enumerate().map(|(i, ex)| format!("\n\nExample {}:\n{}", i + 1, ex)).collect();
        let mut slots = name_and_code(scenario, entry);
        slots.push(("refactoring_examples", examples));
        slots
    }
}

pub struct StepByStepStrategy;

impl InstructionStrategy for StepByStepStrategy {
    fn kind(&self) -> StrategyKind {
        StrategyKind::StepByStep
    }

    fn check_support(&self, entry: &CatalogEntry) -> Result<(), String> {
        if entry.mechanics_steps.is_empty() {
            return Err("catalog has no mechanics steps".into());
        }
        Ok(())
    }

    fn fill_slots(&self, scenario: &RefactoringScenario, entry: &CatalogEntry) -> Slots {
        let steps = entry.mechanics_steps.iter().enumerate().map(|(i, s)| format!("{}. {}", i + 1, s)).collect::<Vec<_>>().join("\n");
        let mut slots = name_and_code(scenario, entry);
        slots.push(("steps", steps));
        slots
    }
}

pub struct RuleBasedStrategy;

impl InstructionStrategy for RuleBasedStrategy {
    fn kind(&self) -> StrategyKind {
        StrategyKind::RuleBased
    }

    fn check_support(&self, entry: &CatalogEntry) -> Result<(), String> {
        match entry.rule_text {
            Some(_) => Ok(()),
            None => Err("no detection rule for this type".into()),
        }
    }

    fn fill_slots(&self, scenario: &RefactoringScenario, entry: &CatalogEntry) -> Slots {
        let mut slots = name_and_code(scenario, entry);
        slots.push(("rule", entry.rule_text.clone().unwrap_or_default()));
        slots
    }
}

pub struct ObjectiveStrategy;

impl InstructionStrategy for ObjectiveStrategy {
    fn kind(&self) -> StrategyKind {
        StrategyKind::Objective
    }

    fn check_support(&self, _: &CatalogEntry) -> Result<(), String> {
        Ok(())
    }

    fn fill_slots(&self, scenario: &RefactoringScenario, _: &CatalogEntry) -> Slots {
        vec![("code", scenario.before_code.clone())]
    }
}

/// Strategies by kind, iterated in declaration order.
#[derive(Clone, Default)]
pub struct StrategyRegistry {
    strategies: BTreeMap<StrategyKind, Arc<dyn InstructionStrategy>>,
}

impl StrategyRegistry {
    pub fn with_builtin() -> Self {
        let mut r = Self::default();
        r.register(Arc::new(ZeroShotStrategy));
        r.register(Arc::new(TwoShotStrategy));
        r.register(Arc::new(StepByStepStrategy));
        r.register(Arc::new(RuleBasedStrategy));
        r.register(Arc::new(ObjectiveStrategy));
        r
    }

    pub fn register(&mut self, strategy: Arc<dyn InstructionStrategy>) {
        self.strategies.insert(strategy.kind(), strategy);
    }

    pub fn get(&self, kind: StrategyKind) -> Result<&dyn InstructionStrategy, PromptError> {
        self.strategies.get(&kind).map(|s| s.as_ref()).ok_or_else(|| PromptError::UnknownStrategy(kind.to_string()))
    }

    pub fn by_name(&self, name: &str) -> Result<&dyn InstructionStrategy, PromptError> {
        self.get(name.parse()?)
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn InstructionStrategy> {
        self.strategies.values().map(|s| s.as_ref())
    }
}
