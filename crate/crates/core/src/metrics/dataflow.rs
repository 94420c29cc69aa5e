//! Def-use edges over Java syntax trees, for the CodeBLEU data-flow component.
//!
//! Each edge says a variable occurrence comes from (or is computed from) other
//! occurrences. Variable names are normalized by first appearance so
//! consistently renamed code yields the same edges. Merged name lists keep
//! first-occurrence order, which is deterministic and survives renaming.

use std::collections::{BTreeMap, HashMap, HashSet};

use tree_sitter::Node;

use crate::java::tree::parse_lenient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Relation {
    ComesFrom,
    ComputedFrom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Edge {
    code: String,
    idx: usize,
    relation: Relation,
    parents: Vec<String>,
    parent_idxs: Vec<usize>,
}

impl Edge {
    fn new(code: &str, idx: usize, relation: Relation, parents: Vec<String>, parent_idxs: Vec<usize>) -> Self {
        Self { code: code.to_owned(), idx, relation, parents, parent_idxs }
    }
}

type States = BTreeMap<String, Vec<usize>>;
type Span = (usize, usize);

struct Tokens<'s> {
    by_span: HashMap<Span, (usize, &'s str)>,
}

fn is_token(node: Node<'_>) -> bool {
    (node.child_count() == 0 || matches!(node.kind(), "string_literal" | "character_literal")) && node.kind() != "comment"
}

fn span(node: Node<'_>) -> Span {
    (node.start_byte(), node.end_byte())
}

fn token_spans(node: Node<'_>, out: &mut Vec<Span>) {
    if is_token(node) {
        out.push(span(node));
    } else {
        let mut cursor = node.walk();
        for child in node.children(&mut cursor) {
            token_spans(child, out);
        }
    }
}

impl<'s> Tokens<'s> {
    fn new(root: Node<'_>, code: &'s str) -> Self {
        let mut spans = Vec::new();
        token_spans(root, &mut spans);
        let by_span = spans.into_iter().enumerate().map(|(i, s)| (s, (i, &code[s.0..s.1]))).collect();
        Self { by_span }
    }

    fn get(&self, node: Node<'_>) -> Option<(usize, &'s str)> {
        self.by_span.get(&span(node)).copied()
    }

    /// Token spans under `node` that are not fixed punctuation or keywords.
    fn variables(&self, node: Node<'_>, out: &mut Vec<(usize, &'s str)>) -> Option<()> {
        if is_token(node) {
            let (idx, code) = self.get(node)?;
            if node.kind() != code {
                out.push((idx, code));
            }
        } else {
            let mut cursor = node.walk();
            for child in node.children(&mut cursor) {
                self.variables(child, out)?;
            }
        }
        Some(())
    }

    fn variables_of(&self, node: Option<Node<'_>>) -> Option<Vec<(usize, &'s str)>> {
        let mut out = Vec::new();
        self.variables(node?, &mut out)?;
        Some(out)
    }
}

fn sort_by_idx(mut edges: Vec<Edge>) -> Vec<Edge> {
    edges.sort_by_key(|e| e.idx);
    edges
}

fn union_names(into: &mut Vec<String>, more: Vec<String>) {
    for n in more {
        if !into.contains(&n) {
            into.push(n);
        }
    }
}

type Site = (String, usize, Relation);

/// Merge edges sharing (code, idx, relation), unioning their parents.
fn merge_same_site(edges: Vec<Edge>) -> Vec<Edge> {
    let mut order: Vec<Site> = Vec::new();
    let mut merged: HashMap<Site, (Vec<String>, Vec<usize>)> = HashMap::new();
    for e in edges {
        let key = (e.code.clone(), e.idx, e.relation);
        match merged.get_mut(&key) {
            Some((names, idxs)) => {
                union_names(names, e.parents);
                idxs.extend(e.parent_idxs);
                idxs.sort();
                idxs.dedup();
            }
            None => {
                order.push(key.clone());
                merged.insert(key, (e.parents, e.parent_idxs));
            }
        }
    }
    order.sort_by_key(|k| k.1);
    order
        .into_iter()
        .map(|k| {
            let (names, idxs) = merged.remove(&k).expect("key recorded");
            Edge { code: k.0, idx: k.1, relation: k.2, parents: names, parent_idxs: idxs }
        })
        .collect()
}

fn walk(node: Node<'_>, tokens: &Tokens<'_>, states: &States) -> Option<(Vec<Edge>, States)> {
    let mut states = states.clone();
    if is_token(node) {
        let (idx, code) = tokens.get(node)?;
        if node.kind() == code {
            return Some((vec![], states));
        }
        if let Some(prev) = states.get(code) {
            let e = Edge::new(code, idx, Relation::ComesFrom, vec![code.to_owned()], prev.clone());
            return Some((vec![e], states));
        }
        if node.kind() == "identifier" {
            states.insert(code.to_owned(), vec![idx]);
        }
        return Some((vec![Edge::new(code, idx, Relation::ComesFrom, vec![], vec![])], states));
    }
    match node.kind() {
        "variable_declarator" => {
            let name = node.child_by_field_name("name");
            let value = node.child_by_field_name("value");
            let mut edges = Vec::new();
            match value {
                None => {
                    for (idx, code) in tokens.variables_of(name)? {
                        edges.push(Edge::new(code, idx, Relation::ComesFrom, vec![], vec![]));
                        states.insert(code.to_owned(), vec![idx]);
                    }
                }
                Some(value) => {
                    let names = tokens.variables_of(name)?;
                    let values = tokens.variables_of(Some(value))?;
                    let (inner, s) = walk(value, tokens, &states)?;
                    states = s;
                    edges.extend(inner);
                    for (idx1, code1) in names {
                        for &(idx2, code2) in &values {
                            edges.push(Edge::new(code1, idx1, Relation::ComesFrom, vec![code2.to_owned()], vec![idx2]));
                        }
                        states.insert(code1.to_owned(), vec![idx1]);
                    }
                }
            }
            Some((sort_by_idx(edges), states))
        }
        "assignment_expression" => {
            let left = node.child_by_field_name("left");
            let right = node.child_by_field_name("right");
            let (mut edges, s) = walk(right?, tokens, &states)?;
            states = s;
            let names = tokens.variables_of(left)?;
            let values = tokens.variables_of(right)?;
            for (idx1, code1) in names {
                for &(idx2, code2) in &values {
                    edges.push(Edge::new(code1, idx1, Relation::ComputedFrom, vec![code2.to_owned()], vec![idx2]));
                }
                states.insert(code1.to_owned(), vec![idx1]);
            }
            Some((sort_by_idx(edges), states))
        }
        "update_expression" => {
            let vars = tokens.variables_of(Some(node))?;
            let mut edges = Vec::new();
            for &(idx1, code1) in &vars {
                for &(idx2, code2) in &vars {
                    edges.push(Edge::new(code1, idx1, Relation::ComputedFrom, vec![code2.to_owned()], vec![idx2]));
                }
                states.insert(code1.to_owned(), vec![idx1]);
            }
            Some((sort_by_idx(edges), states))
        }
        "if_statement" => {
            let mut edges = Vec::new();
            let mut current = states.clone();
            let mut branches: Vec<States> = Vec::new();
            let mut in_alternative = false;
            let mut has_else = false;
            let mut cursor = node.walk();
            for child in node.children(&mut cursor) {
                if child.kind().contains("else") {
                    has_else = true;
                }
                if !matches!(child.kind(), "if_statement" | "else") && !in_alternative {
                    let (inner, s) = walk(child, tokens, &current)?;
                    current = s;
                    edges.extend(inner);
                } else {
                    in_alternative = true;
                    let (inner, s) = walk(child, tokens, &states)?;
                    edges.extend(inner);
                    branches.push(s);
                }
            }
            branches.push(current);
            if !has_else {
                branches.push(states.clone());
            }
            let mut joined: States = BTreeMap::new();
            for b in branches {
                for (k, v) in b {
                    joined.entry(k).or_default().extend(v);
                }
            }
            for v in joined.values_mut() {
                v.sort();
                v.dedup();
            }
            Some((sort_by_idx(edges), joined))
        }
        "for_statement" => {
            let mut edges = Vec::new();
            let mut cursor = node.walk();
            let children: Vec<_> = node.children(&mut cursor).collect();
            for &child in &children {
                let (inner, s) = walk(child, tokens, &states)?;
                states = s;
                edges.extend(inner);
            }
            let mut after_init = false;
            for &child in &children {
                if after_init {
                    let (inner, s) = walk(child, tokens, &states)?;
                    states = s;
                    edges.extend(inner);
                } else if child.kind() == "local_variable_declaration" {
                    after_init = true;
                }
            }
            Some((merge_same_site(edges), states))
        }
        "enhanced_for_statement" => {
            let name = node.child_by_field_name("name");
            let value = node.child_by_field_name("value");
            let body = node.child_by_field_name("body");
            let mut edges = Vec::new();
            for _ in 0..2 {
                let (inner, s) = walk(value?, tokens, &states)?;
                states = s;
                edges.extend(inner);
                let names = tokens.variables_of(name)?;
                let values = tokens.variables_of(value)?;
                for (idx1, code1) in names {
                    for &(idx2, code2) in &values {
                        edges.push(Edge::new(code1, idx1, Relation::ComputedFrom, vec![code2.to_owned()], vec![idx2]));
                    }
                    states.insert(code1.to_owned(), vec![idx1]);
                }
                let (inner, s) = walk(body?, tokens, &states)?;
                states = s;
                edges.extend(inner);
            }
            Some((merge_same_site(edges), states))
        }
        "while_statement" => {
            let mut edges = Vec::new();
            let mut cursor = node.walk();
            let children: Vec<_> = node.children(&mut cursor).collect();
            for _ in 0..2 {
                for &child in &children {
                    let (inner, s) = walk(child, tokens, &states)?;
                    states = s;
                    edges.extend(inner);
                }
            }
            Some((merge_same_site(edges), states))
        }
        _ => {
            let mut edges = Vec::new();
            let mut cursor = node.walk();
            for child in node.children(&mut cursor) {
                let (inner, s) = walk(child, tokens, &states)?;
                states = s;
                edges.extend(inner);
            }
            Some((sort_by_idx(edges), states))
        }
    }
}

/// Edges that participate in some def-use relation, merged per occurrence.
fn data_flow(code: &str) -> Vec<Edge> {
    let tree = parse_lenient(code);
    let root = tree.root_node();
    let tokens = Tokens::new(root, code);
    let edges = match walk(root, &tokens, &States::new()) {
        Some((edges, _)) => sort_by_idx(edges),
        None => Vec::new(),
    };
    let mut linked: HashSet<usize> = HashSet::new();
    for e in &edges {
        if !e.parent_idxs.is_empty() {
            linked.insert(e.idx);
        }
        linked.extend(e.parent_idxs.iter().copied());
    }
    let mut order: Vec<usize> = Vec::new();
    let mut by_idx: HashMap<usize, Edge> = HashMap::new();
    for e in edges.into_iter().filter(|e| linked.contains(&e.idx)) {
        match by_idx.get_mut(&e.idx) {
            Some(m) => {
                union_names(&mut m.parents, e.parents);
                m.parent_idxs.extend(e.parent_idxs);
                m.parent_idxs.sort();
                m.parent_idxs.dedup();
            }
            None => {
                order.push(e.idx);
                by_idx.insert(e.idx, e);
            }
        }
    }
    order.into_iter().map(|i| by_idx.remove(&i).expect("recorded")).collect()
}

type NormalizedEdge = (String, Relation, Vec<String>);

fn normalize<'e>(edges: &'e [Edge]) -> Vec<NormalizedEdge> {
    let mut table: HashMap<&str, String> = HashMap::new();
    let mut intern = |n: &'e str| -> String {
        let next = table.len();
        table.entry(n).or_insert_with(|| format!("var_{next}")).clone()
    };
    let mut out = Vec::with_capacity(edges.len());
    for e in edges {
        let parents: Vec<String> = e.parents.iter().map(|p| intern(p)).collect();
        let var = intern(&e.code);
        out.push((var, e.relation, parents));
    }
    out
}

/// Fraction of reference edges matched by candidate edges, or `None` when
/// the reference has no edges at all.
pub(super) fn dataflow_match(candidate: &str, reference: &str) -> Option<f64> {
    let reference = normalize(&data_flow(reference));
    if reference.is_empty() {
        return None;
    }
    let mut candidate = normalize(&data_flow(candidate));
    let mut matched = 0usize;
    for edge in &reference {
        if let Some(pos) = candidate.iter().position(|c| c == edge) {
            matched += 1;
            candidate.remove(pos);
        }
    }
    Some(matched as f64 / reference.len() as f64)
}
