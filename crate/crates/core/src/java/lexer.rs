//! Java tokenizer.
//!
//! Produces the token stream the Java Language Specification defines for
//! source text (minus unicode-escape pre-translation outside literals). Any
//! input that cannot be split into valid tokens is a lexical failure; grammar
//! checking happens separately in [`super::tree`].

use std::fmt;
use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Identifier,
    Keyword,
    IntegerLiteral,
    FloatLiteral,
    CharLiteral,
    StringLiteral,
    TextBlock,
    Operator,
    Separator,
    LineComment,
    BlockComment,
}

impl TokenKind {
    pub fn is_comment(self) -> bool {
        matches!(self, TokenKind::LineComment | TokenKind::BlockComment)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    pub span: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub message: String,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for LexError {}

pub const KEYWORDS: &[&str] = &[
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
    "true",
    "false",
    "null",
];

// Longest first so that maximal munch falls out of a linear scan.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "&=", "|=",
    "^=", "%=", "<<", ">>", "=", ">", "<", "!", "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
];

const SEPARATORS: &[char] = &['(', ')', '{', '}', '[', ']', ';', ',', '.', '@'];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

/// Tokenize `source`, keeping comments in the stream.
pub fn tokenize(source: &str) -> Result<Vec<Token<'_>>, LexError> {
    Lexer::new(source).run()
}

/// Tokenize and drop comments.
pub fn tokenize_code(source: &str) -> Result<Vec<Token<'_>>, LexError> {
    Ok(tokenize(source)?.into_iter().filter(|t| !t.kind.is_comment()).collect())
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, bytes: src.as_bytes(), pos: 0, tokens: Vec::new() }
    }

    fn run(mut self) -> Result<Vec<Token<'a>>, LexError> {
        while let Some(c) = self.peek_char() {
            let start = self.pos;
            if c.is_whitespace() {
                self.bump(c);
                continue;
            }
            let kind = match c {
                '/' if self.starts_with("//") => self.line_comment(),
                '/' if self.starts_with("/*") => self.block_comment(start)?,
                '"' if self.starts_with("\"\"\"") => self.text_block(start)?,
                '"' => self.string_literal(start)?,
                '\'' => self.char_literal(start)?,
                '0'..='9' => self.number(start)?,
                '.' if self.peek_nth_byte(1).is_some_and(|b| b.is_ascii_digit()) => self.number(start)?,
                c if is_ident_start(c) => self.identifier(start),
                '\\' if self.starts_with("\\u") => self.unicode_escaped_identifier(start)?,
                c if SEPARATORS.contains(&c) && !(c == '.' && self.starts_with("...")) => {
                    self.bump(c);
                    TokenKind::Separator
                }
                _ => match OPERATORS.iter().find(|op| self.starts_with(op)) {
                    Some(op) => {
                        self.pos += op.len();
                        TokenKind::Operator
                    }
                    None => return Err(self.error(start, format!("illegal character '{}'", c.escape_debug()))),
                },
            };
            self.tokens.push(Token { kind, text: &self.src[start..self.pos], span: start..self.pos });
        }
        Ok(self.tokens)
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_nth_byte(&self, n: usize) -> Option<u8> {
        self.bytes.get(self.pos + n).copied()
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
    }

    fn starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s)
    }

    fn error(&self, offset: usize, message: String) -> LexError {
        let (line, column) = line_col(self.src, offset);
        LexError { message, offset, line, column }
    }

    fn line_comment(&mut self) -> TokenKind {
        let rest = &self.src[self.pos..];
        let len = rest.find(['\n', '\r']).unwrap_or(rest.len());
        self.pos += len;
        TokenKind::LineComment
    }

    fn block_comment(&mut self, start: usize) -> Result<TokenKind, LexError> {
        match self.src[self.pos + 2..].find("*/") {
            Some(end) => {
                self.pos += 2 + end + 2;
                Ok(TokenKind::BlockComment)
            }
            None => Err(self.error(start, "unterminated comment".into())),
        }
    }

    fn identifier(&mut self, start: usize) -> TokenKind {
        while let Some(c) = self.peek_char() {
            if is_ident_part(c) {
                self.bump(c);
            } else if c == '\\' && self.starts_with("\\u") && self.unicode_escape_len().is_some() {
                self.pos += self.unicode_escape_len().unwrap_or(0);
            } else {
                break;
            }
        }
        let word = &self.src[start..self.pos];
        if is_keyword(word) {
            TokenKind::Keyword
        } else {
            TokenKind::Identifier
        }
    }

    /// Length of a `\uXXXX` escape (with repeated `u`s) at the cursor.
    fn unicode_escape_len(&self) -> Option<usize> {
        let rest = &self.bytes[self.pos..];
        if rest.first() != Some(&b'\\') {
            return None;
        }
        let mut i = 1;
        while rest.get(i) == Some(&b'u') {
            i += 1;
        }
        if i == 1 {
            return None;
        }
        let hex = rest.get(i..i + 4)?;
        hex.iter().all(u8::is_ascii_hexdigit).then_some(i + 4)
    }

    fn unicode_escaped_identifier(&mut self, start: usize) -> Result<TokenKind, LexError> {
        match self.unicode_escape_len() {
            Some(len) => {
                self.pos += len;
                Ok(self.identifier(start))
            }
            None => Err(self.error(start, "illegal unicode escape".into())),
        }
    }

    fn escape(&mut self, literal_start: usize, allow_line_continuation: bool) -> Result<(), LexError> {
        let esc_start = self.pos;
        self.pos += 1; // backslash
        let Some(c) = self.peek_char() else {
            return Err(self.error(literal_start, "unterminated literal".into()));
        };
        match c {
            'b' | 't' | 'n' | 'f' | 'r' | 's' | '"' | '\'' | '\\' => {
                self.bump(c);
                Ok(())
            }
            '0'..='7' => {
                let max = if c <= '3' { 3 } else { 2 };
                let mut n = 0;
                while n < max && self.peek_char().is_some_and(|d| ('0'..='7').contains(&d)) {
                    self.pos += 1;
                    n += 1;
                }
                Ok(())
            }
            'u' => {
                self.pos = esc_start;
                match self.unicode_escape_len() {
                    Some(len) => {
                        self.pos += len;
                        Ok(())
                    }
                    None => Err(self.error(esc_start, "illegal unicode escape".into())),
                }
            }
            '\n' | '\r' if allow_line_continuation => {
                self.bump(c);
                if c == '\r' && self.peek_char() == Some('\n') {
                    self.pos += 1;
                }
                Ok(())
            }
            '\n' | '\r' => Err(self.error(esc_start, "illegal escape character: line terminator".into())),
            other => Err(self.error(esc_start, format!("illegal escape character '{}'", other.escape_debug()))),
        }
    }

    fn string_literal(&mut self, start: usize) -> Result<TokenKind, LexError> {
        self.pos += 1;
        loop {
            match self.peek_char() {
                None | Some('\n') | Some('\r') => return Err(self.error(start, "unclosed string literal".into())),
                Some('"') => {
                    self.pos += 1;
                    return Ok(TokenKind::StringLiteral);
                }
                Some('\\') => self.escape(start, false)?,
                Some(c) => self.bump(c),
            }
        }
    }

    fn text_block(&mut self, start: usize) -> Result<TokenKind, LexError> {
        self.pos += 3;
        // Opening delimiter must be followed by optional spaces and a line terminator.
        while let Some(c) = self.peek_char() {
            match c {
                ' ' | '\t' | '\x0c' => self.bump(c),
                '\n' | '\r' => {
                    self.bump(c);
                    break;
                }
                _ => return Err(self.error(start, "illegal text block open delimiter sequence".into())),
            }
        }
        loop {
            if self.starts_with("\"\"\"") {
                self.pos += 3;
                return Ok(TokenKind::TextBlock);
            }
            match self.peek_char() {
                None => return Err(self.error(start, "unclosed text block".into())),
                Some('\\') => self.escape(start, true)?,
                Some(c) => self.bump(c),
            }
        }
    }

    fn char_literal(&mut self, start: usize) -> Result<TokenKind, LexError> {
        self.pos += 1;
        match self.peek_char() {
            None | Some('\n') | Some('\r') => return Err(self.error(start, "unclosed character literal".into())),
            Some('\'') => return Err(self.error(start, "empty character literal".into())),
            Some('\\') => self.escape(start, false)?,
            Some(c) => self.bump(c),
        }
        if self.peek_char() == Some('\'') {
            self.pos += 1;
            Ok(TokenKind::CharLiteral)
        } else {
            Err(self.error(start, "unclosed character literal".into()))
        }
    }

    fn digits(&mut self, radix: u32) -> usize {
        let begin = self.pos;
        while let Some(c) = self.peek_char() {
            if c.is_digit(radix) || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.pos - begin
    }

    fn number(&mut self, start: usize) -> Result<TokenKind, LexError> {
        let lower = |b: Option<u8>| b.map(|b| b.to_ascii_lowercase());
        if self.starts_with("0") && matches!(lower(self.peek_nth_byte(1)), Some(b'x')) {
            self.pos += 2;
            let int_digits = self.digits(16);
            let mut float = false;
            let mut frac_digits = 0;
            if self.peek_char() == Some('.') {
                self.pos += 1;
                frac_digits = self.digits(16);
                float = true;
            }
            if int_digits + frac_digits == 0 {
                return Err(self.error(start, "hexadecimal numbers must contain at least one hexadecimal digit".into()));
            }
            if matches!(lower(self.peek_nth_byte(0)), Some(b'p')) {
                self.pos += 1;
                if matches!(self.peek_char(), Some('+') | Some('-')) {
                    self.pos += 1;
                }
                if self.digits(10) == 0 {
                    return Err(self.error(start, "malformed floating-point literal".into()));
                }
                float = true;
            } else if float {
                return Err(self.error(start, "malformed floating-point literal".into()));
            }
            return self.number_suffix(start, float);
        }
        if self.starts_with("0") && matches!(lower(self.peek_nth_byte(1)), Some(b'b')) {
            self.pos += 2;
            if self.digits(2) == 0 {
                return Err(self.error(start, "binary numbers must contain at least one binary digit".into()));
            }
            if self.peek_char().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error(start, "illegal digit in a binary literal".into()));
            }
            return self.number_suffix(start, false);
        }
        let mut float = false;
        self.digits(10);
        if self.peek_char() == Some('.') && self.peek_nth_byte(1).is_none_or(|b| b != b'.') {
            // `1.` is a float, but `1.foo` is not valid either way; keep it simple.
            self.pos += 1;
            self.digits(10);
            float = true;
        }
        if matches!(lower(self.peek_nth_byte(0)), Some(b'e')) {
            self.pos += 1;
            if matches!(self.peek_char(), Some('+') | Some('-')) {
                self.pos += 1;
            }
            if self.digits(10) == 0 {
                return Err(self.error(start, "malformed floating-point literal".into()));
            }
            float = true;
        }
        let text = &self.src[start..self.pos];
        if text.ends_with('_') {
            return Err(self.error(start, "illegal underscore".into()));
        }
        self.number_suffix(start, float)
    }

    fn number_suffix(&mut self, start: usize, float: bool) -> Result<TokenKind, LexError> {
        let kind = match self.peek_char() {
            Some('l' | 'L') if !float => {
                self.pos += 1;
                TokenKind::IntegerLiteral
            }
            Some('f' | 'F' | 'd' | 'D') => {
                self.pos += 1;
                TokenKind::FloatLiteral
            }
            _ if float => TokenKind::FloatLiteral,
            _ => TokenKind::IntegerLiteral,
        };
        if self.peek_char().is_some_and(is_ident_part) {
            return Err(self.error(start, "illegal character in numeric literal".into()));
        }
        Ok(kind)
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// 1-based line and column (in chars) of a byte offset.
pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map(|l| l.chars().count()).unwrap_or(0) + 1;
    (line, col)
}
