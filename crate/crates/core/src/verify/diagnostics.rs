//! Compiler diagnostics from javac or Maven output, and their error buckets.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub file: String,
    pub line: Option<u32>,
    pub message: String,
    /// The diagnostic block exactly as the compiler printed it.
    pub text: String,
}

static JAVAC_HEAD: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"^(?P<file>\S[^:]*\.java):(?P<line>\d+): error: (?P<msg>.*)$").unwrap());
static MAVEN_HEAD: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^\[ERROR\] (?P<file>\S.*?\.java):\[(?P<line>\d+)(?:,\d+)?\] (?P<msg>.*)$").unwrap());
static SYMBOL: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"symbol\s*:\s*(?P<kind>\w+)").unwrap());

/// Error diagnostics in output order. Warnings and summary lines are skipped.
pub fn parse_diagnostics(output: &str) -> Vec<Diagnostic> {
    let mut out: Vec<Diagnostic> = Vec::new();
    let mut open = false;
    for raw in output.lines() {
        let head = JAVAC_HEAD.captures(raw).or_else(|| MAVEN_HEAD.captures(raw));
        if let Some(c) = head {
            out.push(Diagnostic {
                file: c["file"].to_owned(),
                line: c["line"].parse().ok(),
                message: c["msg"].trim().to_owned(),
                text: raw.to_owned(),
            });
            open = true;
            continue;
        }
        let continuation = raw.starts_with(' ') || raw.starts_with('\t') || raw.starts_with("[ERROR]   ");
        match out.last_mut() {
            Some(d) if open && continuation => {
                d.text.push('\n');
                d.text.push_str(raw);
            }
            _ => open = false,
        }
    }
    out
}

pub const OTHER_BUCKET: &str = "other";

/// Bucket labels in reporting order, with the message fragment that selects each.
pub const BUCKETS: [(&str, &str); 14] = [
    ("cannot find symbol: variable", "cannot find symbol"),
    ("cannot find symbol: method", "cannot find symbol"),
    ("is already defined in class", "is already defined in class"),
    ("incompatible types", "incompatible types"),
    ("cannot be referenced from a static context", "cannot be referenced from a static context"),
    ("illegal parenthesized expression", "illegal parenthesized expression"),
    ("cannot assign a value to final variable", "cannot assign a value to final variable"),
    ("cannot be accessed from outside package", "cannot be accessed from outside package"),
    ("illegal static declaration in inner class", "illegal static declaration in inner class"),
    ("method does not override or implement", "method does not override or implement"),
    ("diamond operator not supported", "diamond operator is not supported"),
    ("cannot be applied to given types", "cannot be applied to given types"),
    ("missing return statement", "missing return statement"),
    ("modifier static not allowed here", "modifier static not allowed here"),
];

pub fn bucket_of(diagnostic: &Diagnostic) -> &'static str {
    let text = diagnostic.text.to_lowercase();
    let message = diagnostic.message.to_lowercase();
    if message.contains("cannot find symbol") {
        return match SYMBOL.captures(&text).as_ref().map(|c| &c["kind"]) {
            Some("variable") => BUCKETS[0].0,
            Some("method") => BUCKETS[1].0,
            _ => OTHER_BUCKET,
        };
    }
    BUCKETS[2..].iter().find(|(_, needle)| message.contains(needle) || text.contains(needle)).map_or(OTHER_BUCKET, |(label, _)| label)
}

/// Multiset of bucket labels; counts sum to the number of diagnostics.
pub fn bucket_compiler_errors(diagnostics: &[Diagnostic]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for d in diagnostics {
        *counts.entry(bucket_of(d).to_owned()).or_insert(0) += 1;
    }
    counts
}
