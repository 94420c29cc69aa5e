//! Size, complexity, coupling and similarity metrics for Java fragments.

pub mod codebleu;
mod dataflow;

use serde::{Deserialize, Serialize};
use tree_sitter::{Node, Tree};

use crate::java::tree::{declaration_name, is_callable_declaration, parse_lenient};

pub use codebleu::{codebleu, CodeBleuConfig, CodeBleuScore, Smoothing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("metric unavailable: fragment does not parse ({0})")]
    Unparseable(String),
    #[error("metric undefined: {0}")]
    Undefined(String),
}

/// Complexity of one method, constructor, or of a callable-free fragment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CallableComplexity {
    pub name: String,
    pub cc: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Complexity {
    pub callables: Vec<CallableComplexity>,
}

impl Complexity {
    pub fn total(&self) -> u32 {
        self.callables.iter().map(|c| c.cc).sum()
    }

    pub fn mean(&self) -> f64 {
        if self.callables.is_empty() {
            return 0.0;
        }
        f64::from(self.total()) / self.callables.len() as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsRecord {
    pub loc: usize,
    pub cc: u32,
    pub cc_per_callable: Vec<CallableComplexity>,
    pub fout: usize,
    pub codebleu: Option<CodeBleuScore>,
}

/// Lines containing at least one non-whitespace character.
pub fn loc(fragment: &str) -> usize {
    fragment.lines().filter(|l| !l.trim().is_empty()).count()
}

const WRAPPER_OPEN: &str = "class __Metrics__ {\n";

/// Parse a fragment that may be a compilation unit, a bare member, or statements.
fn parse_fragment(fragment: &str) -> Result<(Tree, String), MetricError> {
    let tree = parse_lenient(fragment);
    if !tree.root_node().has_error() {
        return Ok((tree, fragment.to_owned()));
    }
    let wrapped = format!("{WRAPPER_OPEN}{fragment}\n}}\n");
    let tree = parse_lenient(&wrapped);
    if !tree.root_node().has_error() {
        return Ok((tree, wrapped));
    }
    Err(MetricError::Unparseable(crate::java::parse_source(fragment).err().map(|e| e.to_string()).unwrap_or_else(|| "syntax error".into())))
}

fn is_decision_point(node: Node<'_>, text: &str) -> bool {
    match node.kind() {
        "if_statement"
        | "while_statement"
        | "for_statement"
        | "enhanced_for_statement"
        | "do_statement"
        | "catch_clause"
        | "ternary_expression" => true,
        "switch_label" => node.child(0).is_some_and(|c| c.kind() == "case"),
        "binary_expression" => node.child_by_field_name("operator").is_some_and(|op| matches!(&text[op.byte_range()], "&&" | "||")),
        _ => false,
    }
}

/// Cyclomatic complexity per callable: one plus the decision points it owns.
/// Decision points in nested callables belong to the innermost one; a
/// fragment with no callables is measured as a single implicit callable.
pub fn cyclomatic_complexity(fragment: &str) -> Result<Complexity, MetricError> {
    let (tree, text) = parse_fragment(fragment)?;
    let mut callables: Vec<CallableComplexity> = Vec::new();
    let mut implicit = 1u32;
    // (node, index of owning callable)
    let mut stack: Vec<(Node<'_>, Option<usize>)> = vec![(tree.root_node(), None)];
    while let Some((node, owner)) = stack.pop() {
        let owner = if is_callable_declaration(node.kind()) {
            let name = declaration_name(node, &text).unwrap_or("<anonymous>").to_owned();
            callables.push(CallableComplexity { name, cc: 1 });
            Some(callables.len() - 1)
        } else {
            owner
        };
        if is_decision_point(node, &text) {
            match owner {
                Some(i) => callables[i].cc += 1,
                None => implicit += 1,
            }
        }
        let mut cursor = node.walk();
        let children: Vec<_> = node.children(&mut cursor).collect();
        stack.extend(children.into_iter().rev().map(|c| (c, owner)));
    }
    if callables.is_empty() {
        callables.push(CallableComplexity { name: "<fragment>".into(), cc: implicit });
    }
    Ok(Complexity { callables })
}

/// Number of method invocations; constructor calls are not counted.
pub fn fan_out(fragment: &str) -> Result<usize, MetricError> {
    let (tree, _) = parse_fragment(fragment)?;
    let mut count = 0;
    let mut stack = vec![tree.root_node()];
    while let Some(node) = stack.pop() {
        if node.kind() == "method_invocation" {
            count += 1;
        }
        let mut cursor = node.walk();
        stack.extend(node.children(&mut cursor));
    }
    Ok(count)
}

/// LOC, CC and FOUT of `candidate`, plus CodeBLEU against `reference` when given.
pub fn measure(candidate: &str, reference: Option<&str>, config: &CodeBleuConfig) -> Result<MetricsRecord, MetricError> {
    let cc = cyclomatic_complexity(candidate)?;
    Ok(MetricsRecord {
        loc: loc(candidate),
        cc: cc.total(),
        fout: fan_out(candidate)?,
        cc_per_callable: cc.callables,
        codebleu: reference.map(|r| codebleu::codebleu_with(candidate, r, config)).transpose()?,
    })
}
