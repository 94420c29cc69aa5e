use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use tree_sitter::{Node, Parser, Tree};

use super::lexer::{self, line_col};

/// Stage at which source text was rejected before reaching the compiler.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FailureStage {
    Lexical,
    Parsing,
}

impl fmt::Display for FailureStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureStage::Lexical => "lexical",
            FailureStage::Parsing => "parsing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("{stage} failure at {line}:{column}: {message}")]
pub struct SyntaxFailure {
    pub stage: FailureStage,
    pub message: String,
    pub line: usize,
    pub column: usize,
}

/// A parsed Java compilation unit (or fragment) with its source text.
///
/// The tree is immutable; edits are made on the text and re-parsed.
pub struct SourceTree {
    text: String,
    tree: Tree,
}

impl fmt::Debug for SourceTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SourceTree").field("len", &self.text.len()).finish()
    }
}

impl Clone for SourceTree {
    fn clone(&self) -> Self {
        Self { text: self.text.clone(), tree: self.tree.clone() }
    }
}

pub(crate) fn new_parser() -> Parser {
    let mut parser = Parser::new();
    parser.set_language(&tree_sitter_java::LANGUAGE.into()).expect("bundled Java grammar is ABI compatible");
    parser
}

/// Parse without any error classification. Tree-sitter always yields a tree.
pub(crate) fn parse_lenient(text: &str) -> Tree {
    new_parser().parse(text, None).expect("parser has a language and no timeout")
}

/// Tokenize then parse `source_text`, distinguishing tokenizer failures
/// (lexical) from grammar violations (parsing).
pub fn parse_source(source_text: &str) -> Result<SourceTree, SyntaxFailure> {
    if let Err(e) = lexer::tokenize(source_text) {
        return Err(SyntaxFailure { stage: FailureStage::Lexical, message: e.message, line: e.line, column: e.column });
    }
    let tree = parse_lenient(source_text);
    if let Some(failure) = first_grammar_error(source_text, tree.root_node()) {
        return Err(failure);
    }
    Ok(SourceTree { text: source_text.to_owned(), tree })
}

fn first_grammar_error(text: &str, root: Node<'_>) -> Option<SyntaxFailure> {
    if !root.has_error() {
        return None;
    }
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        if node.is_error() || node.is_missing() {
            let (line, column) = line_col(text, node.start_byte());
            let message = if node.is_missing() {
                format!("expected '{}'", node.kind())
            } else {
                let snippet: String = text[node.byte_range()].chars().take(40).collect();
                format!("unexpected tokens: {}", snippet.trim())
            };
            return Some(SyntaxFailure { stage: FailureStage::Parsing, message, line, column });
        }
        let mut cursor = node.walk();
        let children: Vec<_> = node.children(&mut cursor).filter(|c| c.has_error()).collect();
        stack.extend(children.into_iter().rev());
    }
    let (line, column) = line_col(text, root.start_byte());
    Some(SyntaxFailure { stage: FailureStage::Parsing, message: "syntax error".into(), line, column })
}

impl SourceTree {
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn root(&self) -> Node<'_> {
        self.tree.root_node()
    }

    pub fn span_text(&self, span: Range<usize>) -> &str {
        &self.text[span]
    }

    /// All type declarations (class, interface, enum, record, annotation type).
    pub fn type_declarations(&self) -> Vec<Node<'_>> {
        self.collect(|n| is_type_declaration(n.kind()))
    }

    /// Method and constructor declarations, including those of nested types.
    pub fn callable_declarations(&self) -> Vec<Node<'_>> {
        self.collect(|n| is_callable_declaration(n.kind()))
    }

    fn collect<'t>(&'t self, pred: impl Fn(&Node<'t>) -> bool) -> Vec<Node<'t>> {
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        while let Some(node) = stack.pop() {
            if pred(&node) {
                out.push(node);
            }
            let mut cursor = node.walk();
            let children: Vec<_> = node.children(&mut cursor).collect();
            stack.extend(children.into_iter().rev());
        }
        out
    }
}

pub(crate) fn is_type_declaration(kind: &str) -> bool {
    matches!(
        kind,
        "class_declaration" | "interface_declaration" | "enum_declaration" | "record_declaration" | "annotation_type_declaration"
    )
}

pub(crate) fn is_callable_declaration(kind: &str) -> bool {
    matches!(kind, "method_declaration" | "constructor_declaration" | "compact_constructor_declaration")
}

/// Declared name of a method, constructor or type node.
pub fn declaration_name<'t>(node: Node<'_>, text: &'t str) -> Option<&'t str> {
    node.child_by_field_name("name").map(|n| &text[n.byte_range()])
}

/// Number of formal parameters of a callable declaration (varargs count as one).
pub fn parameter_count(node: Node<'_>) -> usize {
    let Some(params) = node.child_by_field_name("parameters") else {
        return 0;
    };
    let mut cursor = params.walk();
    params.named_children(&mut cursor).filter(|c| matches!(c.kind(), "formal_parameter" | "spread_parameter")).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_class_has_one_type_declaration() {
        let tree = parse_source("class A {}").unwrap();
        assert_eq!(tree.type_declarations().len(), 1);
        assert_eq!(declaration_name(tree.type_declarations()[0], tree.text()), Some("A"));
    }

    #[test]
    fn faulty_string_literal_is_lexical() {
        let src = "class A { void f() {\n System.out.format(\"closure at \\\n\", x);\n} }";
        let err = parse_source(src).unwrap_err();
        assert_eq!(err.stage, FailureStage::Lexical);
        assert_eq!(err.line, 2);
    }

    #[test]
    fn stray_or_token_is_parsing() {
        let src = "class TestCase {\n public constructor TestCase(String name) or TestCase() {}\n}";
        let err = parse_source(src).unwrap_err();
        assert_eq!(err.stage, FailureStage::Parsing);
    }

    #[test]
    fn spans_nest_and_stay_inside_file() {
        let src = "package p;\nclass A { int x; void f(int a, String... b) { if (a > 0) g(); } }";
        let tree = parse_source(src).unwrap();
        let mut stack = vec![tree.root()];
        while let Some(n) = stack.pop() {
            assert!(n.end_byte() <= src.len());
            let mut c = n.walk();
            for child in n.children(&mut c) {
                assert!(child.start_byte() >= n.start_byte() && child.end_byte() <= n.end_byte());
                stack.push(child);
            }
        }
        let callables = tree.callable_declarations();
        assert_eq!(callables.len(), 1);
        assert_eq!(parameter_count(callables[0]), 2);
    }

    #[test]
    fn leaf_spans_tile_the_file_modulo_whitespace() {
        let src = "class A { void f() { int x = a+1; /*c*/ } }";
        let tree = parse_source(src).unwrap();
        let mut leaves = Vec::new();
        let mut stack = vec![tree.root()];
        while let Some(n) = stack.pop() {
            if n.child_count() == 0 {
                leaves.push(n.byte_range());
            }
            let mut c = n.walk();
            let kids: Vec<_> = n.children(&mut c).collect();
            stack.extend(kids.into_iter().rev());
        }
        let mut covered = 0;
        for w in leaves.windows(2) {
            assert!(w[0].end <= w[1].start);
            assert!(src[w[0].end..w[1].start].trim().is_empty());
        }
        for r in &leaves {
            covered += r.len();
        }
        assert_eq!(covered, src.chars().filter(|c| !c.is_whitespace()).count());
    }
}
