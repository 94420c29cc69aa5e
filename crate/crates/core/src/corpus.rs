//! Refactoring scenarios and the per-type catalog used to build instructions.
//!
//! Both files are JSON maps. Scenario records use the replication-package
//! field names (`RefactMethod`, `BeforeCode`, `commitID_before`, ...) and
//! also accept snake_case spellings. Trailing commas are tolerated.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Number of refactoring types in the complete catalog.
pub const FULL_CATALOG_SIZE: usize = 61;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dataset {
    Benchmark,
    Real,
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dataset::Benchmark => "benchmark",
            Dataset::Real => "real",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetKind {
    #[default]
    Method,
    Class,
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TargetKind::Method => "method",
            TargetKind::Class => "class",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefactoringScenario {
    pub id: String,
    pub refactoring_type: String,
    pub dataset: Dataset,
    pub before_code: String,
    pub ground_truth_after: Option<String>,
    pub commit_before: Option<String>,
    pub path_before: Option<String>,
    pub target_name: Option<String>,
    pub target_kind: TargetKind,
    pub repository: Option<String>,
}

/// On-disk shape of one scenario record.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioRecord {
    #[serde(rename = "RefactMethod", alias = "refactoring_type")]
    refactoring_type: String,
    #[serde(rename = "BeforeCode", alias = "before_code")]
    before_code: String,
    #[serde(rename = "AfterCode", alias = "ground_truth_after", default, skip_serializing_if = "Option::is_none")]
    ground_truth_after: Option<String>,
    #[serde(rename = "commitID_before", alias = "commit_before", default, skip_serializing_if = "Option::is_none")]
    commit_before: Option<String>,
    #[serde(alias = "path", default, skip_serializing_if = "Option::is_none")]
    path_before: Option<String>,
    #[serde(rename = "name", alias = "target_name", default, skip_serializing_if = "Option::is_none")]
    target_name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dataset: Option<Dataset>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target_kind: Option<TargetKind>,
    #[serde(alias = "repo", default, skip_serializing_if = "Option::is_none")]
    repository: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogExample {
    pub title: String,
    pub before: String,
    /// Refactored code, or `None` when `before` is a narrative walk-through.
    pub after: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub mechanics_steps: Vec<String>,
    pub examples: Vec<CatalogExample>,
    pub rule_text: Option<String>,
    /// Short snippet taken from the mechanics, usable as a stand-in example.
    pub illustration: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path} is not a valid JSON map: {message}")]
    Syntax { path: PathBuf, message: String },
    #[error("{} invalid record(s): {}", .0.len(), .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))]
    Records(Vec<RecordError>),
    #[error(transparent)]
    Record(#[from] RecordError),
}

impl CorpusError {
    /// The individual record errors, if this is a validation failure.
    pub fn records(&self) -> &[RecordError] {
        match self {
            CorpusError::Records(v) => v,
            CorpusError::Record(e) => std::slice::from_ref(e),
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("record '{id}': invalid key '{key}': {message}")]
    Schema { id: String, key: String, message: String },
    #[error("duplicate id '{id}'")]
    Duplicate { id: String },
    #[error("unknown refactoring type '{name}'; valid names: {}", valid.join(", "))]
    UnknownType { name: String, valid: Vec<String> },
}

/// Options for scenario loading.
#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    /// Repository used for real scenarios whose record does not name one.
    pub default_repository: Option<String>,
}

/// Uppercase, trim and collapse runs of whitespace and underscores.
pub fn normalize_type_name(name: &str) -> String {
    name.split(|c: char| c.is_whitespace() || c == '_').filter(|w| !w.is_empty()).collect::<Vec<_>>().join(" ").to_uppercase()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: HashMap<String, usize>,
}

impl Catalog {
    pub fn from_entries(entries: Vec<CatalogEntry>) -> Result<Self, RecordError> {
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            if index.insert(normalize_type_name(&e.name), i).is_some() {
                return Err(RecordError::Duplicate { id: e.name.clone() });
            }
        }
        Ok(Self { entries, index })
    }

    pub fn lookup(&self, refactoring_type: &str) -> Result<&CatalogEntry, RecordError> {
        self.index
            .get(&normalize_type_name(refactoring_type))
            .map(|&i| &self.entries[i])
            .ok_or_else(|| RecordError::UnknownType { name: refactoring_type.to_owned(), valid: self.names() })
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rule_supported_count(&self) -> usize {
        self.entries.iter().filter(|e| e.rule_text.is_some()).count()
    }

    /// Serialize back to the catalog file shape.
    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for e in &self.entries {
            let mut rec = serde_json::Map::new();
            rec.insert("Mechanics".into(), Value::from(e.mechanics_steps.clone()));
            for ex in &e.examples {
                let v = match &ex.after {
                    Some(after) => serde_json::json!({ "before": ex.before, "after": after }),
                    None => Value::from(ex.before.clone()),
                };
                rec.insert(ex.title.clone(), v);
            }
            if let Some(rule) = &e.rule_text {
                rec.insert("Rule".into(), Value::from(rule.clone()));
            }
            if let Some(ill) = &e.illustration {
                rec.insert("Illustration".into(), Value::from(ill.clone()));
            }
            map.insert(e.name.clone(), Value::Object(rec));
        }
        Value::Object(map)
    }
}

/// Map entries in document order, duplicates included.
struct OrderedEntries(Vec<(String, Value)>);

impl<'de> Deserialize<'de> for OrderedEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;
        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = OrderedEntries;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map of id to record")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, Value>()? {
                    out.push((k, v));
                }
                Ok(OrderedEntries(out))
            }
        }
        deserializer.deserialize_map(EntriesVisitor)
    }
}

fn read_entries(path: &Path) -> Result<Vec<(String, Value)>, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_owned(), source })?;
    parse_entries(&text).map_err(|message| CorpusError::Syntax { path: path.to_owned(), message })
}

fn parse_entries(text: &str) -> Result<Vec<(String, Value)>, String> {
    json5::from_str::<OrderedEntries>(text).map(|e| e.0).map_err(|e| e.to_string())
}

pub fn load_catalog(path: &Path) -> Result<Catalog, CorpusError> {
    catalog_from_entries(read_entries(path)?)
}

pub fn parse_catalog(text: &str) -> Result<Catalog, CorpusError> {
    let entries = parse_entries(text).map_err(|message| CorpusError::Syntax { path: PathBuf::from("<memory>"), message })?;
    catalog_from_entries(entries)
}

fn catalog_from_entries(raw: Vec<(String, Value)>) -> Result<Catalog, CorpusError> {
    let mut errors = Vec::new();
    let mut entries = Vec::new();
    for (name, value) in raw {
        match catalog_entry(&name, value) {
            Ok(e) => entries.push(e),
            Err(e) => errors.push(e),
        }
    }
    if !errors.is_empty() {
        return Err(CorpusError::Records(errors));
    }
    let catalog = Catalog::from_entries(entries)?;
    if catalog.len() < FULL_CATALOG_SIZE {
        log::warn!("catalog has {} of {} refactoring types", catalog.len(), FULL_CATALOG_SIZE);
    }
    Ok(catalog)
}

fn schema(id: &str, key: &str, message: impl Into<String>) -> RecordError {
    RecordError::Schema { id: id.to_owned(), key: key.to_owned(), message: message.into() }
}

fn catalog_entry(name: &str, value: Value) -> Result<CatalogEntry, RecordError> {
    let Value::Object(map) = value else {
        return Err(schema(name, name, "expected an object"));
    };
    let mut mechanics = None;
    let mut examples = Vec::new();
    let mut rule_text = None;
    let mut illustration = None;
    for (key, v) in map {
        let lower = key.to_ascii_lowercase();
        if lower == "mechanics" {
            mechanics = Some(mechanics_steps(name, &key, v)?);
        } else if lower.starts_with("example") {
            examples.push(catalog_example(name, key, v)?);
        } else if lower == "rule" {
            rule_text = Some(string_field(name, &key, v)?).filter(|r| !r.trim().is_empty());
        } else if lower == "illustration" {
            illustration = Some(string_field(name, &key, v)?).filter(|r| !r.trim().is_empty());
        } else {
            return Err(schema(name, &key, "unknown key"));
        }
    }
    let mechanics_steps = mechanics.ok_or_else(|| schema(name, "Mechanics", "missing"))?;
    if mechanics_steps.is_empty() {
        return Err(schema(name, "Mechanics", "no steps"));
    }
    Ok(CatalogEntry { name: name.to_owned(), mechanics_steps, examples, rule_text, illustration })
}

fn string_field(id: &str, key: &str, v: Value) -> Result<String, RecordError> {
    match v {
        Value::String(s) => Ok(s),
        other => Err(schema(id, key, format!("expected a string, found {other}"))),
    }
}

fn mechanics_steps(id: &str, key: &str, v: Value) -> Result<Vec<String>, RecordError> {
    let steps: Vec<String> = match v {
        Value::String(s) => s.lines().map(strip_bullet).filter(|l| !l.is_empty()).map(str::to_owned).collect(),
        Value::Array(items) => items
            .into_iter()
            .map(|i| string_field(id, key, i).map(|s| s.trim().to_owned()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect(),
        other => return Err(schema(id, key, format!("expected text or a list, found {other}"))),
    };
    Ok(steps)
}

fn strip_bullet(line: &str) -> &str {
    let line = line.trim();
    let rest = line.trim_start_matches(['-', '*', '\u{2022}']);
    if rest.len() != line.len() {
        return rest.trim();
    }
    let digits = line.chars().take_while(|c| c.is_ascii_digit()).count();
    if digits > 0 {
        if let Some(after) = line[digits..].strip_prefix(['.', ')']) {
            return after.trim();
        }
    }
    line
}

fn catalog_example(id: &str, title: String, v: Value) -> Result<CatalogExample, RecordError> {
    match v {
        Value::String(before) => Ok(CatalogExample { title, before, after: None }),
        Value::Object(mut m) => {
            let before =
                m.remove("before").ok_or_else(|| schema(id, &title, "missing 'before'")).and_then(|b| string_field(id, &title, b))?;
            let after = m.remove("after").map(|a| string_field(id, &title, a)).transpose()?;
            if let Some(extra) = m.keys().next() {
                return Err(schema(id, &format!("{title}.{extra}"), "unknown key"));
            }
            Ok(CatalogExample { title, before, after })
        }
        other => Err(schema(id, &title, format!("expected text or {{before, after}}, found {other}"))),
    }
}

pub fn load_scenarios(path: &Path, catalog: &Catalog, options: &LoadOptions) -> Result<Vec<RefactoringScenario>, CorpusError> {
    scenarios_from_entries(read_entries(path)?, catalog, options)
}

pub fn parse_scenarios(text: &str, catalog: &Catalog, options: &LoadOptions) -> Result<Vec<RefactoringScenario>, CorpusError> {
    let entries = parse_entries(text).map_err(|message| CorpusError::Syntax { path: PathBuf::from("<memory>"), message })?;
    scenarios_from_entries(entries, catalog, options)
}

fn scenarios_from_entries(
    raw: Vec<(String, Value)>,
    catalog: &Catalog,
    options: &LoadOptions,
) -> Result<Vec<RefactoringScenario>, CorpusError> {
    let mut errors = Vec::new();
    let mut seen = BTreeMap::new();
    for (id, value) in raw {
        if seen.contains_key(&id) {
            errors.push(RecordError::Duplicate { id });
            continue;
        }
        match scenario(&id, value, catalog, options) {
            Ok(s) => {
                seen.insert(id, s);
            }
            Err(e) => {
                errors.push(e);
                seen.insert(id.clone(), placeholder(id));
            }
        }
    }
    if !errors.is_empty() {
        return Err(CorpusError::Records(errors));
    }
    Ok(seen.into_values().collect())
}

// Occupies the id slot of a rejected record so later duplicates still report.
fn placeholder(id: String) -> RefactoringScenario {
    RefactoringScenario {
        id,
        refactoring_type: String::new(),
        dataset: Dataset::Benchmark,
        before_code: String::new(),
        ground_truth_after: None,
        commit_before: None,
        path_before: None,
        target_name: None,
        target_kind: TargetKind::Method,
        repository: None,
    }
}

fn scenario(id: &str, value: Value, catalog: &Catalog, options: &LoadOptions) -> Result<RefactoringScenario, RecordError> {
    let rec: ScenarioRecord = serde_json::from_value(value).map_err(|e| {
        let msg = e.to_string();
        let key = msg.split('`').nth(1).map(str::to_owned).unwrap_or_else(|| "<record>".to_owned());
        schema(id, &key, msg)
    })?;
    let entry = catalog.lookup(&rec.refactoring_type)?;
    let dataset =
        rec.dataset.unwrap_or(if rec.commit_before.is_some() || rec.path_before.is_some() { Dataset::Real } else { Dataset::Benchmark });
    let repository = rec.repository.or_else(|| match dataset {
        Dataset::Real => options.default_repository.clone(),
        Dataset::Benchmark => None,
    });
    let s = RefactoringScenario {
        id: id.to_owned(),
        refactoring_type: entry.name.clone(),
        dataset,
        before_code: rec.before_code,
        ground_truth_after: rec.ground_truth_after,
        commit_before: rec.commit_before,
        path_before: rec.path_before,
        target_name: rec.target_name,
        target_kind: rec.target_kind.unwrap_or_default(),
        repository,
    };
    match dataset {
        Dataset::Real => {
            for (key, present) in [
                ("commitID_before", s.commit_before.is_some()),
                ("path_before", s.path_before.is_some()),
                ("repository", s.repository.is_some()),
                ("name", s.target_name.is_some()),
            ] {
                if !present {
                    return Err(schema(id, key, "required for real scenarios"));
                }
            }
        }
        Dataset::Benchmark => {
            if s.ground_truth_after.is_none() {
                return Err(schema(id, "AfterCode", "required for benchmark scenarios"));
            }
        }
    }
    Ok(s)
}

/// Serialize scenarios back to the scenario file shape.
pub fn scenarios_to_json(scenarios: &[RefactoringScenario]) -> Value {
    let mut map = serde_json::Map::new();
    for s in scenarios {
        let rec = ScenarioRecord {
            refactoring_type: s.refactoring_type.clone(),
            before_code: s.before_code.clone(),
            ground_truth_after: s.ground_truth_after.clone(),
            commit_before: s.commit_before.clone(),
            path_before: s.path_before.clone(),
            target_name: s.target_name.clone(),
            dataset: Some(s.dataset),
            target_kind: Some(s.target_kind),
            repository: s.repository.clone(),
        };
        map.insert(s.id.clone(), serde_json::to_value(rec).expect("record serializes"));
    }
    Value::Object(map)
}

impl<'de> Deserialize<'de> for Catalog {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<CatalogEntry>::deserialize(deserializer)?;
        Catalog::from_entries(entries).map_err(de::Error::custom)
    }
}

impl Serialize for Catalog {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Catalog {
        parse_catalog(
            r#"{
              "Extract Variable": {
                "Mechanics": "Ensure that the expression you want to extract does not have side effects\nDeclare an immutable variable. Set it to a copy of the expression you want to name\nReplace the original expression with the new variable.",
                "Example": "return order.quantity * order.itemPrice;"
              },
              "Extract Function": {
                "Mechanics": "Create a new function, and name it...",
                "Example: Using Local Variables": "The easiest case with local variables...",
                "Rule": "added_method(a) -> extract(a)"
              },
            }"#,
        )
        .unwrap()
    }

    const LISTING_1: &str = r#"{
      "REALISTIC_Example_01": {
        "RefactMethod": "EXTRACT VARIABLE",
        "BeforeCode": "function printOwing(invoice) {...}",
        "commitID_before": "ad9bac95",
        "path_before": "...ParserFactory.java",
        "name": "List<SrcOp> set(...)",
      }
    }"#;

    fn opts() -> LoadOptions {
        LoadOptions { default_repository: Some("repos/antlr4".into()) }
    }

    #[test]
    fn listing_one_record_loads_as_real_method_scenario() {
        let s = parse_scenarios(LISTING_1, &catalog(), &opts()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].dataset, Dataset::Real);
        assert_eq!(s[0].target_kind, TargetKind::Method);
        assert_eq!(s[0].refactoring_type, "Extract Variable");
        assert_eq!(s[0].target_name.as_deref(), Some("List<SrcOp> set(...)"));
    }

    #[test]
    fn real_scenario_without_repository_is_rejected() {
        let err = parse_scenarios(LISTING_1, &catalog(), &LoadOptions::default()).unwrap_err();
        assert!(matches!(&err.records()[0], RecordError::Schema { key, .. } if key == "repository"));
    }

    #[test]
    fn empty_map_is_empty_list() {
        assert!(parse_scenarios("{}", &catalog(), &opts()).unwrap().is_empty());
    }

    #[test]
    fn duplicate_ids_are_reported() {
        let text = r#"{"X": {"RefactMethod": "Extract Variable", "BeforeCode": "a", "AfterCode": "b"},
                      "X": {"RefactMethod": "Extract Variable", "BeforeCode": "a", "AfterCode": "b"}}"#;
        let err = parse_scenarios(text, &catalog(), &opts()).unwrap_err();
        assert_eq!(err.records(), &[RecordError::Duplicate { id: "X".into() }]);
    }

    #[test]
    fn unknown_type_lists_valid_names() {
        let text = r#"{"A": {"RefactMethod": "Shrink Loop", "BeforeCode": "a", "AfterCode": "b"}}"#;
        let err = parse_scenarios(text, &catalog(), &opts()).unwrap_err();
        match &err.records()[0] {
            RecordError::UnknownType { valid, .. } => assert!(valid.contains(&"Extract Function".to_owned())),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn schema_error_names_key() {
        let text = r#"{"A": {"RefactMethod": "Extract Variable", "BeforeCode": 3, "AfterCode": "b"}}"#;
        let err = parse_scenarios(text, &catalog(), &opts()).unwrap_err();
        assert!(err.to_string().contains("'A'"), "{err}");
        let text = r#"{"A": {"RefactMethod": "Extract Variable", "BeforeCod": "x", "AfterCode": "b"}}"#;
        let err = parse_scenarios(text, &catalog(), &opts()).unwrap_err();
        assert!(matches!(&err.records()[0], RecordError::Schema { key, .. } if key == "BeforeCod"), "{err}");
    }

    #[test]
    fn every_bad_record_is_reported() {
        let text = r#"{"A": {"RefactMethod": "Nope", "BeforeCode": "a", "AfterCode": "b"},
                      "B": {"RefactMethod": "Extract Variable", "BeforeCode": "a"},
                      "C": {"RefactMethod": "Extract Variable", "BeforeCode": "a", "AfterCode": "b"}}"#;
        let err = parse_scenarios(text, &catalog(), &opts()).unwrap_err();
        assert_eq!(err.records().len(), 2);
    }

    #[test]
    fn scenarios_sorted_and_round_trip() {
        let text = r#"{"b2": {"RefactMethod": "extract_variable", "BeforeCode": "x", "AfterCode": "y"},
                      "a1": {"refactoring_type": "Extract Function", "before_code": "p", "ground_truth_after": "q", "target_kind": "class", "name": "A"}}"#;
        let cat = catalog();
        let first = parse_scenarios(text, &cat, &opts()).unwrap();
        assert_eq!(first.iter().map(|s| s.id.as_str()).collect::<Vec<_>>(), ["a1", "b2"]);
        let again = parse_scenarios(&scenarios_to_json(&first).to_string(), &cat, &opts()).unwrap();
        assert_eq!(first, again);
    }

    #[test]
    fn catalog_mechanics_examples_and_rules() {
        let cat = catalog();
        let ev = cat.lookup("EXTRACT VARIABLE").unwrap();
        assert_eq!(ev.mechanics_steps.len(), 3);
        assert!(ev.mechanics_steps[1].starts_with("Declare an immutable variable"));
        assert_eq!(ev.examples.len(), 1);
        let ef = cat.lookup("Extract Function").unwrap();
        assert_eq!(ef.mechanics_steps, ["Create a new function, and name it..."]);
        assert_eq!(cat.rule_supported_count(), 1);
        assert!(matches!(cat.lookup("Shrink Loop"), Err(RecordError::UnknownType { .. })));
        let round = parse_catalog(&cat.to_json().to_string()).unwrap();
        assert_eq!(round, cat);
    }

    #[test]
    fn empty_or_missing_mechanics_is_schema_error() {
        let err = parse_catalog(r#"{"X": {"Mechanics": []}}"#).unwrap_err();
        assert!(matches!(&err.records()[0], RecordError::Schema { key, .. } if key == "Mechanics"));
        assert!(parse_catalog(r#"{"X": {"Example": "e"}}"#).is_err());
    }

    #[test]
    fn bullets_are_stripped() {
        assert_eq!(strip_bullet("  1. Do it"), "Do it");
        assert_eq!(strip_bullet("- Do it"), "Do it");
        assert_eq!(strip_bullet("2) Then"), "Then");
        assert_eq!(strip_bullet("10 apples"), "10 apples");
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_type_name("  extract__Variable "), "EXTRACT VARIABLE");
        assert_eq!(normalize_type_name("EXTRACT VARIABLE"), normalize_type_name("Extract Variable"));
    }
}
