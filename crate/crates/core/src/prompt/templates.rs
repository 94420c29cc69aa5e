use std::collections::BTreeMap;
use std::path::Path;

use super::{PromptError, TemplateKind};

const V1: &[(TemplateKind, &str)] = &[
    (TemplateKind::ZeroShot, include_str!("../../templates/v1/zero-shot.txt")),
    (TemplateKind::TwoShot, include_str!("../../templates/v1/two-shot.txt")),
    (TemplateKind::StepByStep, include_str!("../../templates/v1/step-by-step.txt")),
    (TemplateKind::RuleBased, include_str!("../../templates/v1/rule-based.txt")),
    (TemplateKind::Objective, include_str!("../../templates/v1/objective.txt")),
    (TemplateKind::Judge, include_str!("../../templates/v1/judge.txt")),
];

/// A versioned set of prompt templates with `$<name>$` placeholders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateSet {
    version: String,
    templates: BTreeMap<TemplateKind, String>,
}

impl TemplateSet {
    /// The templates shipped with the crate.
    pub fn builtin() -> Self {
        Self { version: "v1".into(), templates: V1.iter().map(|(k, t)| (*k, t.trim_end().to_owned())).collect() }
    }

    /// Load `<kind>.txt` files from `dir`; the directory name is the version.
    pub fn from_dir(dir: &Path) -> Result<Self, PromptError> {
        let version = dir.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "custom".into());
        let mut templates = BTreeMap::new();
        for kind in TemplateKind::ALL {
            let path = dir.join(format!("{}.txt", kind.file_stem()));
            let text = std::fs::read_to_string(&path).map_err(|e| PromptError::Template(format!("{}: {e}", path.display())))?;
            templates.insert(kind, text.trim_end().to_owned());
        }
        let set = Self { version, templates };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<(), PromptError> {
        for (kind, text) in &self.templates {
            for slot in kind.required_slots() {
                if !text.contains(&format!("$<{slot}>$")) {
                    return Err(PromptError::Template(format!("template '{}' lacks placeholder $<{slot}>$", kind.file_stem())));
                }
            }
        }
        Ok(())
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn get(&self, kind: TemplateKind) -> &str {
        &self.templates[&kind]
    }
}

/// Substitute placeholders in one left-to-right pass, so placeholder-like
/// text inside substituted values is never expanded.
pub fn fill(template: &str, slots: &[(&str, &str)]) -> Result<String, PromptError> {
    let mut out = String::with_capacity(template.len() + slots.iter().map(|s| s.1.len()).sum::<usize>());
    let mut rest = template;
    while let Some(open) = rest.find("$<") {
        let Some(close) = rest[open + 2..].find(">$") else { break };
        let name = &rest[open + 2..open + 2 + close];
        out.push_str(&rest[..open]);
        match slots.iter().find(|(n, _)| *n == name) {
            Some((_, value)) => out.push_str(value),
            None => return Err(PromptError::Template(format!("no value for placeholder $<{name}>$"))),
        }
        rest = &rest[open + 2 + close + 2..];
    }
    out.push_str(rest);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_templates_are_complete() {
        let set = TemplateSet::builtin();
        set.validate().unwrap();
        assert_eq!(set.version(), "v1");
        for kind in TemplateKind::ALL {
            assert!(!set.get(kind).ends_with('\n'));
        }
    }

    #[test]
    fn fill_is_single_pass() {
        let out = fill("A $<code>$ B $<name>$", &[("code", "$<name>$"), ("name", "N")]).unwrap();
        assert_eq!(out, "A $<name>$ B N");
    }

    #[test]
    fn fill_rejects_unknown_placeholders() {
        assert!(fill("$<nope>$", &[]).is_err());
        assert_eq!(fill("price: $5", &[]).unwrap(), "price: $5");
    }

    #[test]
    fn directory_templates_load_and_validate() {
        let dir = tempfile::tempdir().unwrap();
        let v = dir.path().join("v9");
        std::fs::create_dir(&v).unwrap();
        for kind in TemplateKind::ALL {
            std::fs::write(v.join(format!("{}.txt", kind.file_stem())), TemplateSet::builtin().get(kind)).unwrap();
        }
        let set = TemplateSet::from_dir(&v).unwrap();
        assert_eq!(set.version(), "v9");
        std::fs::write(v.join("zero-shot.txt"), "no slots").unwrap();
        assert!(TemplateSet::from_dir(&v).is_err());
    }
}
