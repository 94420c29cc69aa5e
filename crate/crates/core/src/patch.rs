//! Splices generated declarations into Java source files.
//!
//! Edits are byte-range replacements located through the syntax tree, so
//! everything outside the replaced declaration keeps its original bytes.

use std::ops::Range;

use serde::{Deserialize, Serialize};
use tree_sitter::Node;

use crate::corpus::TargetKind;
use crate::java::tree::{declaration_name, is_callable_declaration, parameter_count};
use crate::java::{parse_source, FailureStage, SourceTree, SyntaxFailure};

const FRAGMENT_WRAPPER_OPEN: &str = "class __Fragment__ {\n";
const FRAGMENT_WRAPPER_CLOSE: &str = "\n}\n";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocateError {
    #[error("no {kind} named '{name}' found")]
    TargetMissing { kind: TargetKind, name: String },
    #[error("'{name}' is ambiguous; candidates: {}", candidates.join(" | "))]
    Ambiguous { name: String, candidates: Vec<String> },
}

/// Parsed form of corpus target names such as `List<SrcOp> set(...)` or `f(int, String)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetSignature {
    pub name: String,
    /// Parameter count, when the signature spells out the parameter list.
    pub arity: Option<usize>,
}

impl TargetSignature {
    pub fn parse(target: &str) -> Self {
        let target = target.trim();
        let Some(open) = target.find('(') else {
            return Self { name: last_identifier(target).to_owned(), arity: None };
        };
        let name = last_identifier(&target[..open]).to_owned();
        let close = target.rfind(')').filter(|&c| c > open).unwrap_or(target.len());
        let params = target[open + 1..close].trim();
        let arity = if params == "..." || params == "\u{2026}" {
            None
        } else if params.is_empty() {
            Some(0)
        } else {
            Some(count_top_level_commas(params) + 1)
        };
        Self { name, arity }
    }
}

fn last_identifier(s: &str) -> &str {
    let s = s.trim_end();
    let start =
        s.char_indices().rev().find(|(_, c)| !(c.is_alphanumeric() || *c == '_' || *c == '$')).map(|(i, c)| i + c.len_utf8()).unwrap_or(0);
    &s[start..]
}

fn count_top_level_commas(params: &str) -> usize {
    let mut depth = 0i32;
    let mut commas = 0;
    for c in params.chars() {
        match c {
            '<' | '(' | '[' => depth += 1,
            '>' | ')' | ']' => depth -= 1,
            ',' if depth == 0 => commas += 1,
            _ => {}
        }
    }
    commas
}

/// Find the unique declaration of `target_kind` named by `target_name`.
pub fn locate_target<'t>(tree: &'t SourceTree, target_kind: TargetKind, target_name: &str) -> Result<Node<'t>, LocateError> {
    let sig = TargetSignature::parse(target_name);
    let text = tree.text();
    let candidates: Vec<Node<'t>> = match target_kind {
        TargetKind::Method => tree
            .callable_declarations()
            .into_iter()
            .filter(|n| declaration_name(*n, text) == Some(sig.name.as_str()))
            .filter(|n| sig.arity.is_none_or(|a| parameter_count(*n) == a))
            .collect(),
        TargetKind::Class => {
            tree.type_declarations().into_iter().filter(|n| declaration_name(*n, text) == Some(sig.name.as_str())).collect()
        }
    };
    match candidates.as_slice() {
        [] => Err(LocateError::TargetMissing { kind: target_kind, name: sig.name }),
        [one] => Ok(*one),
        many => Err(LocateError::Ambiguous { name: sig.name, candidates: many.iter().map(|n| header_line(*n, text)).collect() }),
    }
}

fn header_line(node: Node<'_>, text: &str) -> String {
    let body_start = node.child_by_field_name("body").map_or(node.end_byte(), |b| b.start_byte());
    let header = &text[node.start_byte()..body_start];
    let (line, _) = crate::java::lexer::line_col(text, node.start_byte());
    format!("line {line}: {}", header.split_whitespace().collect::<Vec<_>>().join(" "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchPlan {
    pub target_kind: TargetKind,
    pub target_name: String,
    pub replacement_fragment: String,
    #[serde(default)]
    pub auxiliary_fragments: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatchStatus {
    Applied,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchResult {
    pub status: PatchStatus,
    pub failure_stage: Option<FailureStage>,
    pub diagnostic: Option<String>,
    pub patched_text: Option<String>,
    pub inserted_count: usize,
    /// Byte range of the original file that was replaced.
    pub edited_span: Option<Range<usize>>,
}

impl PatchResult {
    fn failed(failure: SyntaxFailure, context: &str) -> Self {
        Self {
            status: PatchStatus::Failed,
            failure_stage: Some(failure.stage),
            diagnostic: Some(format!("{context}: {failure}")),
            patched_text: None,
            inserted_count: 0,
            edited_span: None,
        }
    }

    pub fn is_applied(&self) -> bool {
        self.status == PatchStatus::Applied
    }
}

/// Check that `fragment` is a standalone declaration of `kind`.
pub fn check_fragment(fragment: &str, kind: TargetKind) -> Result<(), SyntaxFailure> {
    match kind {
        TargetKind::Class => {
            let tree = parse_source(fragment)?;
            if tree.type_declarations().is_empty() {
                return Err(not_a_declaration("type"));
            }
            Ok(())
        }
        TargetKind::Method => {
            let wrapped = format!("{FRAGMENT_WRAPPER_OPEN}{fragment}{FRAGMENT_WRAPPER_CLOSE}");
            let tree = parse_source(&wrapped).map_err(|mut f| {
                f.line = f.line.saturating_sub(1).max(1);
                f
            })?;
            let class = tree.type_declarations()[0];
            let body = class.child_by_field_name("body").expect("wrapper has a body");
            let mut cursor = body.walk();
            let members: Vec<_> = body.named_children(&mut cursor).filter(|n| !n.kind().ends_with("comment")).collect();
            if members.is_empty() || !members.iter().all(|m| is_callable_declaration(m.kind())) {
                return Err(not_a_declaration("method"));
            }
            Ok(())
        }
    }
}

fn not_a_declaration(what: &str) -> SyntaxFailure {
    SyntaxFailure { stage: FailureStage::Parsing, message: format!("fragment is not a {what} declaration"), line: 1, column: 1 }
}

/// Replace the plan's target inside `tree` and insert auxiliary methods after it.
///
/// Locating the target is a precondition; its failure is returned as `Err`.
/// Syntax problems in fragments or in the spliced file yield a failed result.
pub fn apply_patch(tree: &SourceTree, plan: &PatchPlan) -> Result<PatchResult, LocateError> {
    let target = locate_target(tree, plan.target_kind, &plan.target_name)?;
    let replacement = plan.replacement_fragment.trim();
    if let Err(f) = check_fragment(replacement, plan.target_kind) {
        return Ok(PatchResult::failed(f, "replacement fragment"));
    }
    let auxiliaries: Vec<&str> = plan.auxiliary_fragments.iter().map(|a| a.trim()).filter(|a| !a.is_empty()).collect();
    for aux in &auxiliaries {
        if let Err(f) = check_fragment(aux, TargetKind::Method) {
            return Ok(PatchResult::failed(f, "auxiliary fragment"));
        }
    }

    let text = tree.text();
    let mut span = target.byte_range();
    if starts_with_comment(replacement) {
        span.start = leading_comments_start(target, text);
    }
    let indent = line_indent(text, span.start);

    let mut patched = String::with_capacity(text.len() + replacement.len());
    patched.push_str(&text[..span.start]);
    patched.push_str(replacement);
    for aux in &auxiliaries {
        patched.push_str("\n\n");
        patched.push_str(indent);
        patched.push_str(aux);
    }
    patched.push_str(&text[span.end..]);

    if let Err(f) = parse_source(&patched) {
        return Ok(PatchResult::failed(f, "patched file"));
    }
    Ok(PatchResult {
        status: PatchStatus::Applied,
        failure_stage: None,
        diagnostic: None,
        patched_text: Some(patched),
        inserted_count: auxiliaries.len(),
        edited_span: Some(span),
    })
}

fn starts_with_comment(s: &str) -> bool {
    s.starts_with("//") || s.starts_with("/*")
}

/// Start of the comment block directly above `node`, or the node itself.
fn leading_comments_start(node: Node<'_>, text: &str) -> usize {
    let mut start = node.start_byte();
    let mut prev = node.prev_sibling();
    while let Some(p) = prev {
        if !p.kind().ends_with("comment") || !text[p.end_byte()..start].trim().is_empty() {
            break;
        }
        start = p.start_byte();
        prev = p.prev_sibling();
    }
    start
}

fn line_indent(text: &str, offset: usize) -> &str {
    let line_start = text[..offset].rfind('\n').map_or(0, |i| i + 1);
    let line = &text[line_start..offset];
    let width = line.len() - line.trim_start().len();
    &line[..width]
}

#[cfg(test)]
mod tests {
    use super::*;

    const CLASS: &str = "package p;\n\npublic class Calc {\n    private int base;\n\n    /** Adds. */\n    public int add(int a, int b) {\n        return a + b + base;\n    }\n\n    int f(int x) { return x; }\n    int f(int x, int y) { return x + y; }\n}\n";

    #[test]
    fn signature_parsing() {
        assert_eq!(TargetSignature::parse("List<SrcOp> set(...)"), TargetSignature { name: "set".into(), arity: None });
        assert_eq!(TargetSignature::parse("f(Map<K, V> m, int x)").arity, Some(2));
        assert_eq!(TargetSignature::parse("run()").arity, Some(0));
        assert_eq!(TargetSignature::parse("Calc").name, "Calc");
    }

    #[test]
    fn locate_by_name_and_arity() {
        let tree = parse_source(CLASS).unwrap();
        let add = locate_target(&tree, TargetKind::Method, "add").unwrap();
        assert!(tree.span_text(add.byte_range()).starts_with("public int add"));
        assert!(matches!(
            locate_target(&tree, TargetKind::Method, "f"),
            Err(LocateError::Ambiguous { candidates, .. }) if candidates.len() == 2
        ));
        let f2 = locate_target(&tree, TargetKind::Method, "int f(int x, int y)").unwrap();
        assert_eq!(parameter_count(f2), 2);
        assert!(matches!(locate_target(&tree, TargetKind::Method, "ghost"), Err(LocateError::TargetMissing { .. })));
        assert!(locate_target(&tree, TargetKind::Class, "Calc").is_ok());
    }

    #[test]
    fn identity_patch_is_byte_identical() {
        let tree = parse_source(CLASS).unwrap();
        let node = locate_target(&tree, TargetKind::Method, "add").unwrap();
        let plan = PatchPlan {
            target_kind: TargetKind::Method,
            target_name: "add".into(),
            replacement_fragment: tree.span_text(node.byte_range()).to_owned(),
            auxiliary_fragments: vec![],
        };
        let res = apply_patch(&tree, &plan).unwrap();
        assert_eq!(res.patched_text.as_deref(), Some(CLASS));
    }

    #[test]
    fn extract_method_inserts_auxiliary_after_target() {
        let tree = parse_source(CLASS).unwrap();
        let plan = PatchPlan {
            target_kind: TargetKind::Method,
            target_name: "add".into(),
            replacement_fragment: "public int add(int a, int b) {\n        return sum(a, b) + base;\n    }".into(),
            auxiliary_fragments: vec!["private int sum(int a, int b) {\n        return a + b;\n    }".into()],
        };
        let res = apply_patch(&tree, &plan).unwrap();
        assert!(res.is_applied());
        assert_eq!(res.inserted_count, 1);
        let patched = res.patched_text.unwrap();
        let reparsed = parse_source(&patched).unwrap();
        let add = locate_target(&reparsed, TargetKind::Method, "add").unwrap();
        let sum = locate_target(&reparsed, TargetKind::Method, "sum").unwrap();
        assert!(sum.start_byte() > add.end_byte());
        assert!(patched.contains("\n\n    private int sum"));
        let span = res.edited_span.unwrap();
        assert_eq!(&patched[..span.start], &CLASS[..span.start]);
        assert!(patched.ends_with(&CLASS[span.end..]));
    }

    #[test]
    fn replacement_with_doc_comment_replaces_old_comment() {
        let tree = parse_source(CLASS).unwrap();
        let plan = PatchPlan {
            target_kind: TargetKind::Method,
            target_name: "add".into(),
            replacement_fragment: "/** Sum. */\n    public int add(int a, int b) { return a + b; }".into(),
            auxiliary_fragments: vec![],
        };
        let patched = apply_patch(&tree, &plan).unwrap().patched_text.unwrap();
        assert!(!patched.contains("Adds."));
        assert_eq!(patched.matches("/**").count(), 1);
    }

    #[test]
    fn faulty_header_fails_at_parsing() {
        let src = "public class TestCase {\n    public TestCase(String name) { }\n}\n";
        let tree = parse_source(src).unwrap();
        let plan = PatchPlan {
            target_kind: TargetKind::Method,
            target_name: "TestCase".into(),
            replacement_fragment: "public constructor TestCase(String name) or TestCase() {\n        super();\n    }".into(),
            auxiliary_fragments: vec![],
        };
        let res = apply_patch(&tree, &plan).unwrap();
        assert_eq!(res.status, PatchStatus::Failed);
        assert_eq!(res.failure_stage, Some(FailureStage::Parsing));
        assert!(res.patched_text.is_none());
    }

    #[test]
    fn faulty_literal_fails_at_lexing() {
        let tree = parse_source(CLASS).unwrap();
        let plan = PatchPlan {
            target_kind: TargetKind::Method,
            target_name: "add".into(),
            replacement_fragment: "public int add(int a, int b) {\n System.out.format(\"closure at \\\n\", a);\n return a; }".into(),
            auxiliary_fragments: vec![],
        };
        let res = apply_patch(&tree, &plan).unwrap();
        assert_eq!(res.failure_stage, Some(FailureStage::Lexical));
    }

    #[test]
    fn statement_fragment_is_not_a_method() {
        let err = check_fragment("return a + b;", TargetKind::Method).unwrap_err();
        assert_eq!(err.stage, FailureStage::Parsing);
        assert!(check_fragment("class A { }", TargetKind::Class).is_ok());
    }
}
