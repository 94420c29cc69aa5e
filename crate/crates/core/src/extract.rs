//! Splits raw model output into methods, classes and residual text.
//!
//! Fragments are often incomplete, so this is a brace-balance scanner with
//! header heuristics rather than a parser. Fence markers and blank lines at
//! the top level delimit units; everything else is kept byte-for-byte.

use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::corpus::TargetKind;
use crate::patch::TargetSignature;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractedCode {
    pub methods: Vec<String>,
    pub classes: Vec<String>,
    pub others: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FragmentKind {
    Method,
    Class,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub kind: FragmentKind,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("model output contains no {0} fragment")]
pub struct MissingFragment(pub TargetKind);

/// The fragment chosen for a target, plus a warning when the name did not match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryFragment {
    pub text: String,
    pub index: usize,
    pub warning: Option<String>,
}

impl ExtractedCode {
    pub fn is_empty(&self) -> bool {
        self.methods.is_empty() && self.classes.is_empty() && self.others.is_empty()
    }

    /// Re-assemble the fragments as plain text, separated by blank lines.
    pub fn join(&self) -> String {
        self.classes.iter().chain(&self.methods).chain(&self.others).map(String::as_str).collect::<Vec<_>>().join("\n\n")
    }

    pub fn fragments(&self, kind: TargetKind) -> &[String] {
        match kind {
            TargetKind::Method => &self.methods,
            TargetKind::Class => &self.classes,
        }
    }
}

pub fn extract(raw_text: &str) -> ExtractedCode {
    let mut out = ExtractedCode::default();
    for f in fragments(raw_text) {
        match f.kind {
            FragmentKind::Method => out.methods.push(f.text),
            FragmentKind::Class => out.classes.push(f.text),
            FragmentKind::Other => out.others.push(f.text),
        }
    }
    out
}

/// Classified fragments in document order.
pub fn fragments(raw_text: &str) -> Vec<Fragment> {
    let mut scanner = Scanner::default();
    for segment in split_fences(raw_text) {
        for line in segment.lines() {
            scanner.line(line);
        }
        scanner.boundary();
    }
    scanner.out
}

/// Text between fence marker lines; the markers themselves are dropped.
fn split_fences(raw: &str) -> Vec<String> {
    let mut segments = vec![String::new()];
    for line in raw.split_inclusive('\n') {
        if line.trim_start().starts_with("```") {
            segments.push(String::new());
        } else {
            segments.last_mut().expect("nonempty").push_str(line);
        }
    }
    segments
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
enum Lex {
    #[default]
    Code,
    BlockComment,
    TextBlock,
}

#[derive(Default)]
struct Scanner {
    out: Vec<Fragment>,
    prose: Vec<String>,
    unit: Option<String>,
    depth: i32,
    parens: i32,
    lex: Lex,
}

impl Scanner {
    fn line(&mut self, line: &str) {
        let mut rest = line;
        loop {
            if self.unit.is_none() {
                if rest.trim().is_empty() {
                    self.flush_prose();
                    return;
                }
                if !looks_like_code_start(rest) {
                    self.prose.push(rest.trim_end().to_owned());
                    return;
                }
                self.flush_prose();
                self.unit = Some(String::new());
                rest = rest.trim_start();
            } else if rest.trim().is_empty() {
                if self.at_top_level() {
                    self.flush_unit();
                } else {
                    self.push_unit("\n");
                }
                return;
            } else {
                self.push_unit("\n");
            }
            match self.scan(rest) {
                Some(end) => {
                    self.push_unit(&rest[..end]);
                    self.flush_unit();
                    rest = &rest[end..];
                    if rest.trim().is_empty() {
                        return;
                    }
                }
                None => {
                    self.push_unit(rest.trim_end());
                    return;
                }
            }
        }
    }

    fn at_top_level(&self) -> bool {
        self.depth <= 0 && self.parens <= 0 && self.lex == Lex::Code
    }

    fn push_unit(&mut self, s: &str) {
        let unit = self.unit.as_mut().expect("unit in progress");
        if !(unit.is_empty() && s == "\n") {
            unit.push_str(s);
        }
    }

    /// Advance the lexical state over `line`; returns the byte offset just
    /// past the unit terminator when the unit ends on this line.
    fn scan(&mut self, line: &str) -> Option<usize> {
        let bytes = line.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            match self.lex {
                Lex::BlockComment => {
                    i += line[i..].find("*/")? + 2;
                    self.lex = Lex::Code;
                }
                Lex::TextBlock => {
                    i += line[i..].find("\"\"\"")? + 3;
                    self.lex = Lex::Code;
                }
                Lex::Code => {
                    let b = bytes[i];
                    match b {
                        b'/' if bytes.get(i + 1) == Some(&b'/') => return None,
                        b'/' if bytes.get(i + 1) == Some(&b'*') => {
                            self.lex = Lex::BlockComment;
                            i += 2;
                            continue;
                        }
                        b'"' if line[i..].starts_with("\"\"\"") => {
                            self.lex = Lex::TextBlock;
                            i += 3;
                            continue;
                        }
                        b'"' | b'\'' => {
                            i = skip_quoted(bytes, i);
                            continue;
                        }
                        b'{' => self.depth += 1,
                        b'(' => self.parens += 1,
                        b')' => self.parens -= 1,
                        b'}' => {
                            self.depth -= 1;
                            if self.depth <= 0 && self.parens <= 0 {
                                self.depth = 0;
                                return Some(self.terminator_end(line, i + 1));
                            }
                        }
                        b';' if self.depth <= 0 && self.parens <= 0 => {
                            return Some(self.terminator_end(line, i + 1));
                        }
                        _ => {}
                    }
                    i += 1;
                }
            }
        }
        None
    }

    /// Extend a terminator over a trailing `;` or same-line `//` comment.
    fn terminator_end(&mut self, line: &str, mut end: usize) -> usize {
        let after = &line[end..];
        let trimmed = after.trim_start();
        if trimmed.starts_with(';') && line[..end].ends_with('}') {
            end += after.len() - trimmed.len() + 1;
        }
        let after = &line[end..];
        if after.trim_start().starts_with("//") {
            end = line.len();
        }
        self.parens = 0;
        end
    }

    fn flush_prose(&mut self) {
        if !self.prose.is_empty() {
            let text = self.prose.join("\n").trim().to_owned();
            self.prose.clear();
            if !text.is_empty() {
                self.out.push(Fragment { kind: FragmentKind::Other, text });
            }
        }
    }

    fn flush_unit(&mut self) {
        if let Some(unit) = self.unit.take() {
            let text = unit.trim().to_owned();
            if !text.is_empty() {
                self.out.push(Fragment { kind: classify(&text), text });
            }
        }
        self.depth = 0;
        self.parens = 0;
        self.lex = Lex::Code;
    }

    fn boundary(&mut self) {
        self.flush_unit();
        self.flush_prose();
    }
}

fn skip_quoted(bytes: &[u8], start: usize) -> usize {
    let quote = bytes[start];
    let mut i = start + 1;
    while i < bytes.len() {
        match bytes[i] {
            b'\\' => i += 2,
            b if b == quote => return i + 1,
            _ => i += 1,
        }
    }
    bytes.len()
}

const CODE_START_WORDS: &[&str] = &[
    "public",
    "private",
    "protected",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "default",
    "strictfp",
    "transient",
    "volatile",
    "sealed",
    "non-sealed",
    "class",
    "interface",
    "enum",
    "record",
    "package",
    "import",
    "void",
    "int",
    "long",
    "short",
    "byte",
    "char",
    "boolean",
    "float",
    "double",
    "var",
    "return",
    "if",
    "for",
    "while",
    "do",
    "try",
    "throw",
    "switch",
    "new",
    "this",
    "super",
];

static DECLARATION_START: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^[A-Za-z_$][\w$.]*(\s*<[^>]*>)?(\s*\[\s*\])*\s+[A-Za-z_$][\w$]*\s*[(=;,]").unwrap());
static STATEMENT_START: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^[A-Za-z_$][\w$.]*\s*(\(.*\)\s*[;{.]|=[^=]|\+\+|--|[-+*/]=)").unwrap());

fn looks_like_code_start(line: &str) -> bool {
    let t = line.trim();
    if ["//", "/*", "@", "}", "{"].iter().any(|p| t.starts_with(p)) {
        return true;
    }
    if t.ends_with(';') || t.ends_with('{') || t.ends_with('}') {
        return true;
    }
    if t.ends_with(['.', ':', '!', '?']) {
        return false;
    }
    let first = t.split(|c: char| !(c.is_alphanumeric() || c == '-' || c == '_')).next().unwrap_or("");
    CODE_START_WORDS.contains(&first) || DECLARATION_START.is_match(t) || STATEMENT_START.is_match(t)
}

static TYPE_HEADER: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"(?:^|[\s>])(?:class|interface|enum|@interface)\s+([A-Za-z_$][\w$]*)|(?:^|\s)record\s+([A-Za-z_$][\w$]*)\s*[(<]").unwrap()
});
static METHOD_HEADER: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(
        r"^(?P<prefix>(?:[\w$<>\[\],.?&]+\s+|<[^>]*>\s*)*?)(?P<name>[A-Za-z_$][\w$]*)\s*\((?P<params>[^;{}]*)\)\s*(?:\[\s*\]\s*)*(?:throws\s+[\w$.<>,\s]+)?$",
    )
    .unwrap()
});

const NOT_METHOD_NAMES: &[&str] =
    &["if", "for", "while", "switch", "catch", "synchronized", "return", "new", "throw", "else", "do", "try", "assert", "super", "this"];
const STATEMENT_WORDS: &[&str] = &["return", "new", "throw", "else", "case", "assert", "yield"];

/// Header text of a unit: comments and annotations removed, body excluded.
fn header(unit: &str) -> (String, bool) {
    let code = strip_comments(unit);
    let code = strip_annotations(&code);
    let code = code.trim();
    match top_level_brace(code) {
        Some(b) => (code[..b].trim().to_owned(), true),
        None => (code.trim_end_matches(';').trim().to_owned(), false),
    }
}

fn top_level_brace(code: &str) -> Option<usize> {
    let bytes = code.as_bytes();
    let mut i = 0;
    let mut parens = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'"' | b'\'' => {
                i = skip_quoted(bytes, i);
                continue;
            }
            b'(' => parens += 1,
            b')' => parens -= 1,
            b'{' if parens == 0 => return Some(i),
            _ => {}
        }
        i += 1;
    }
    None
}

fn strip_comments(s: &str) -> String {
    static COMMENT: LazyLock<Regex> =
        LazyLock::new(|| Regex::new(r#"(?s)//[^\n]*|/\*.*?\*/|"(?:\\.|[^"\\])*"|'(?:\\.|[^'\\])*'"#).unwrap());
    COMMENT
        .replace_all(s, |c: &regex::Captures<'_>| {
            let m = &c[0];
            if m.starts_with('/') {
                " ".to_owned()
            } else {
                m.to_owned()
            }
        })
        .into_owned()
}

fn strip_annotations(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'@' && !s[i..].starts_with("@interface") {
            i += 1;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || matches!(bytes[i], b'_' | b'$' | b'.')) {
                i += 1;
            }
            let ws = s[i..].len() - s[i..].trim_start().len();
            if s[i + ws..].starts_with('(') {
                let mut depth = 0;
                let mut j = i + ws;
                while j < bytes.len() {
                    match bytes[j] {
                        b'(' => depth += 1,
                        b')' => {
                            depth -= 1;
                            if depth == 0 {
                                j += 1;
                                break;
                            }
                        }
                        _ => {}
                    }
                    j += 1;
                }
                i = j;
            }
            out.push(' ');
        } else {
            let c = s[i..].chars().next().expect("in bounds");
            out.push(c);
            i += c.len_utf8();
        }
    }
    out
}

fn classify(unit: &str) -> FragmentKind {
    let (head, has_body) = header(unit);
    if has_body && TYPE_HEADER.is_match(&head) {
        return FragmentKind::Class;
    }
    if method_name_of_header(&head, has_body).is_some() {
        return FragmentKind::Method;
    }
    FragmentKind::Other
}

fn method_name_of_header(head: &str, has_body: bool) -> Option<String> {
    if head.contains('=') || head.contains("->") {
        return None;
    }
    let flat = head.split_whitespace().collect::<Vec<_>>().join(" ");
    let caps = METHOD_HEADER.captures(&flat)?;
    let name = caps.name("name")?.as_str();
    let prefix = caps.name("prefix").map_or("", |p| p.as_str());
    if NOT_METHOD_NAMES.contains(&name) {
        return None;
    }
    let words: Vec<&str> = prefix.split_whitespace().collect();
    if words.iter().any(|w| STATEMENT_WORDS.contains(w)) {
        return None;
    }
    if !has_body && words.is_empty() {
        return None;
    }
    Some(name.to_owned())
}

/// Declared name of a method or type fragment.
pub fn declared_name(fragment: &str, kind: TargetKind) -> Option<String> {
    let (head, has_body) = header(fragment);
    match kind {
        TargetKind::Method => method_name_of_header(&head, has_body),
        TargetKind::Class => TYPE_HEADER.captures(&head).and_then(|c| c.get(1).or_else(|| c.get(2))).map(|m| m.as_str().to_owned()),
    }
}

/// Pick the fragment for `target_name`, falling back to the first fragment.
pub fn primary_fragment(
    extracted: &ExtractedCode,
    target_kind: TargetKind,
    target_name: Option<&str>,
) -> Result<PrimaryFragment, MissingFragment> {
    let pool = extracted.fragments(target_kind);
    if pool.is_empty() {
        return Err(MissingFragment(target_kind));
    }
    let wanted = target_name.map(|t| TargetSignature::parse(t).name);
    if let Some(wanted) = &wanted {
        if let Some(index) = pool.iter().position(|f| declared_name(f, target_kind).as_deref() == Some(wanted)) {
            return Ok(PrimaryFragment { text: pool[index].clone(), index, warning: None });
        }
    }
    let warning = wanted.map(|w| {
        format!("no {target_kind} named '{w}' in output; using '{}'", declared_name(&pool[0], target_kind).unwrap_or_else(|| "?".into()))
    });
    Ok(PrimaryFragment { text: pool[0].clone(), index: 0, warning })
}
