//! CodeBLEU for Java: BLEU, keyword-weighted n-gram match, syntax subtree
//! match and data-flow match, combined linearly.
//!
//! Tokenization and scoring follow the widely used Python implementation so
//! scores are comparable with published numbers.

use std::collections::{HashMap, HashSet};
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::dataflow;
use super::MetricError;
use crate::java::lexer::KEYWORDS;
use crate::java::tree::parse_lenient;

/// Keyword list used for the weighted n-gram component (no literals).
pub const WEIGHTED_KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
];

const _: () = assert!(WEIGHTED_KEYWORDS.len() + 3 == KEYWORDS.len());

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum Smoothing {
    /// Zero match counts are replaced by a small epsilon.
    Epsilon(f64),
    /// One is added to numerator and denominator of orders above one.
    AddOne,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeBleuConfig {
    /// Weights of (ngram, weighted_ngram, ast_match, dataflow_match).
    pub weights: [f64; 4],
    pub smoothing: Smoothing,
    pub keyword_weight: f64,
    pub token_weight: f64,
}

impl Default for CodeBleuConfig {
    fn default() -> Self {
        Self { weights: [0.25; 4], smoothing: Smoothing::Epsilon(0.1), keyword_weight: 1.0, token_weight: 0.2 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeBleuScore {
    pub ngram: f64,
    pub weighted_ngram: f64,
    pub ast_match: f64,
    pub dataflow_match: f64,
    /// False when the reference has no def-use edges; `dataflow_match` is then 1.
    pub reference_has_dataflow: bool,
    pub codebleu: f64,
}

pub fn codebleu(candidate: &str, reference: &str) -> Result<CodeBleuScore, MetricError> {
    codebleu_with(candidate, reference, &CodeBleuConfig::default())
}

pub fn codebleu_with(candidate: &str, reference: &str, config: &CodeBleuConfig) -> Result<CodeBleuScore, MetricError> {
    let candidate = candidate.trim();
    let reference = reference.trim();
    if candidate.is_empty() || reference.is_empty() {
        return Err(MetricError::Undefined("CodeBLEU needs nonempty candidate and reference".into()));
    }
    let hyp: Vec<&str> = candidate.split_whitespace().collect();
    let rf: Vec<&str> = reference.split_whitespace().collect();
    let ngram = bleu(&hyp, &rf, config.smoothing);
    let weighted_ngram = weighted_bleu(&hyp, &rf, config);

    let cand_code = remove_comments(candidate);
    let ref_code = remove_comments(reference);
    let ast_match = syntax_match(&cand_code, &ref_code);
    let df = dataflow::dataflow_match(&cand_code, &ref_code);
    let dataflow_match = df.unwrap_or(1.0);

    let [a, b, c, d] = config.weights;
    let combined = a * ngram + b * weighted_ngram + c * ast_match + d * dataflow_match;
    Ok(CodeBleuScore {
        ngram,
        weighted_ngram,
        ast_match,
        dataflow_match,
        reference_has_dataflow: df.is_some(),
        codebleu: combined.clamp(0.0, 1.0),
    })
}

fn ngram_counts<'t, 'a>(tokens: &'t [&'a str], n: usize) -> HashMap<&'t [&'a str], usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for w in tokens.windows(n) {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

fn brevity_penalty(ref_len: usize, hyp_len: usize) -> f64 {
    if hyp_len > ref_len {
        1.0
    } else if hyp_len == 0 {
        0.0
    } else {
        (1.0 - ref_len as f64 / hyp_len as f64).exp()
    }
}

/// Geometric mean of smoothed precisions times the brevity penalty.
fn combine(p: &[(f64, f64); 4], smoothing: Smoothing, bp: f64) -> f64 {
    if p[0].0 == 0.0 {
        return 0.0;
    }
    let log_sum: f64 = p
        .iter()
        .enumerate()
        .map(|(i, &(num, den))| {
            let (num, den) = match smoothing {
                Smoothing::Epsilon(eps) if num == 0.0 => (eps, den),
                Smoothing::AddOne if i > 0 => (num + 1.0, den + 1.0),
                _ => (num, den),
            };
            0.25 * (num / den).ln()
        })
        .sum();
    bp * log_sum.exp()
}

/// Sentence BLEU-4 with clipped n-gram precision.
pub fn bleu(hyp: &[&str], reference: &[&str], smoothing: Smoothing) -> f64 {
    let mut p = [(0.0, 0.0); 4];
    for (i, slot) in p.iter_mut().enumerate() {
        let n = i + 1;
        let counts = ngram_counts(hyp, n);
        let ref_counts = ngram_counts(reference, n);
        let clipped: usize = counts.iter().map(|(g, c)| (*c).min(*ref_counts.get(g).unwrap_or(&0))).sum();
        let total: usize = counts.values().sum();
        *slot = (clipped as f64, total.max(1) as f64);
    }
    combine(&p, smoothing, brevity_penalty(reference.len(), hyp.len()))
}

/// Keyword-weighted n-gram match; unigram counts are weighted by token class
/// and normalized by the reference.
pub fn weighted_bleu(hyp: &[&str], reference: &[&str], config: &CodeBleuConfig) -> f64 {
    let weight = |t: &str| {
        if WEIGHTED_KEYWORDS.contains(&t) {
            config.keyword_weight
        } else {
            config.token_weight
        }
    };
    let mut p = [(0.0, 0.0); 4];
    for (i, slot) in p.iter_mut().enumerate() {
        let n = i + 1;
        let counts = ngram_counts(hyp, n);
        let ref_counts = ngram_counts(reference, n);
        let (num, den) = if n == 1 {
            let num: f64 = ref_counts.iter().map(|(g, c)| (*c).min(*counts.get(g).unwrap_or(&0)) as f64 * weight(g[0])).sum();
            let den: f64 = ref_counts.iter().map(|(g, c)| *c as f64 * weight(g[0])).sum();
            (num, den.max(1.0))
        } else {
            let num: usize = ref_counts.iter().map(|(g, c)| (*c).min(*counts.get(g).unwrap_or(&0))).sum();
            let den: usize = ref_counts.values().sum();
            (num as f64, den.max(1) as f64)
        };
        *slot = (num, den);
    }
    // The reference implementation measures the (tokens, weights) pair here,
    // so the effective reference length is always two.
    combine(&p, config.smoothing, brevity_penalty(WEIGHTED_REFERENCE_LEN, hyp.len()))
}

const WEIGHTED_REFERENCE_LEN: usize = 2;

static COMMENT_OR_LITERAL: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r#"(?sm)//.*?$|/\*.*?\*/|'(?:\\.|[^\\'])*'|"(?:\\.|[^\\"])*""#).expect("valid regex"));

/// Replace comments with a space and drop blank lines; literals are kept.
pub fn remove_comments(source: &str) -> String {
    let replaced = COMMENT_OR_LITERAL.replace_all(source, |c: &regex::Captures<'_>| {
        let m = &c[0];
        if m.starts_with('/') {
            " ".to_owned()
        } else {
            m.to_owned()
        }
    });
    replaced.split('\n').filter(|l| !l.trim().is_empty()).collect::<Vec<_>>().join("\n")
}

fn subtree_sexps(code: &str) -> Vec<String> {
    let tree = parse_lenient(code);
    let mut out = Vec::new();
    let mut stack = vec![tree.root_node()];
    while let Some(node) = stack.pop() {
        out.push(node.to_sexp());
        let mut cursor = node.walk();
        stack.extend(node.children(&mut cursor).filter(|c| c.child_count() > 0));
    }
    out
}

/// Share of reference subtrees that also occur in the candidate.
pub fn syntax_match(candidate: &str, reference: &str) -> f64 {
    let cand: HashSet<String> = subtree_sexps(candidate).into_iter().collect();
    let refs = subtree_sexps(reference);
    let matched = refs.iter().filter(|s| cand.contains(*s)).count();
    matched as f64 / refs.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    #[test]
    fn identity_is_one() {
        let code = "public int add(int a, int b) {\n  int c = a + b;\n  return c;\n}";
        let s = codebleu(code, code).unwrap();
        for v in [s.ngram, s.weighted_ngram, s.ast_match, s.dataflow_match, s.codebleu] {
            assert!((v - 1.0).abs() < 1e-12, "{s:?}");
        }
        assert!(s.reference_has_dataflow);
    }

    #[test]
    fn empty_inputs_are_undefined() {
        assert!(codebleu("", "int x;").is_err());
        assert!(codebleu("int x;", "  \n").is_err());
    }

    #[test]
    fn bleu_matches_hand_computation() {
        // 4 tokens, 3 unigram, 2 bigram, 1 trigram, 0 4-gram matches out of 4, 3, 2, 1.
        let hyp = toks("a b c d");
        let rf = toks("a b c e");
        let expect = (0.25f64 * ((3.0f64 / 4.0).ln() + (2.0f64 / 3.0).ln() + (1.0f64 / 2.0).ln() + (0.1f64 / 1.0).ln())).exp();
        assert!((bleu(&hyp, &rf, Smoothing::Epsilon(0.1)) - expect).abs() < 1e-12);
    }

    #[test]
    fn bleu_zero_without_unigram_overlap() {
        assert_eq!(bleu(&toks("x y"), &toks("a b"), Smoothing::Epsilon(0.1)), 0.0);
    }

    #[test]
    fn brevity_penalty_short_hypothesis() {
        let full = bleu(&toks("a b c d e f"), &toks("a b c d e f"), Smoothing::Epsilon(0.1));
        let short = bleu(&toks("a b c d"), &toks("a b c d e f"), Smoothing::Epsilon(0.1));
        assert_eq!(full, 1.0);
        assert!((short - (1.0f64 - 6.0 / 4.0).exp()).abs() < 1e-12);
    }

    #[test]
    fn weighted_unigrams_use_reference_weights() {
        let cfg = CodeBleuConfig::default();
        let rf = toks("return x ;");
        // unigrams 0.4/1.4, bigrams 1/2, higher orders smoothed
        let expect = (0.4f64 / 1.4 * 0.5 * 0.1 * 0.1).powf(0.25);
        assert!((weighted_bleu(&toks("throw x ;"), &rf, &cfg) - expect).abs() < 1e-12);
        // unigrams 1.2/1.4, no bigram
        let expect = (1.2f64 / 1.4 * 0.05 * 0.1 * 0.1).powf(0.25);
        assert!((weighted_bleu(&toks("return y ;"), &rf, &cfg) - expect).abs() < 1e-12);
    }

    #[test]
    fn comment_removal_keeps_literals() {
        let src = "int a = 1; // c\n/* block\n more */\nString s = \"// not a comment\";";
        assert_eq!(remove_comments(src), "int a = 1;  \nString s = \"// not a comment\";");
    }

    #[test]
    fn syntax_match_identity_and_partial() {
        let a = "int f() { return 1; }";
        assert_eq!(syntax_match(a, a), 1.0);
        let m = syntax_match("int f() { return 2 + 3; }", a);
        assert!(m > 0.0 && m < 1.0);
    }

    #[test]
    fn renaming_keeps_dataflow_and_lowers_ngram() {
        let a = "int f(int a) { int b = a * 2; int c = b + a; return c; }";
        let b = "int f(int q) { int b = q * 2; int c = b + q; return c; }";
        let s = codebleu(b, a).unwrap();
        let id = codebleu(a, a).unwrap();
        assert_eq!(s.dataflow_match, id.dataflow_match);
        assert!(s.ngram < id.ngram);
    }
}
