//! Hand-written JavaScript lexer for the ES5 + arrow-function grammar.
//!
//! Produces a flat token stream with source positions and a
//! `newline_before` flag, which the parser uses for automatic semicolon
//! insertion and which the Halstead counter classifies directly.

use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Keyword,
    Number,
    Str,
    Regex,
    Punct,
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub line: u32,
    pub col: u32,
    /// True when at least one line terminator separates this token from the
    /// previous one. Drives semicolon insertion and restricted productions.
    pub newline_before: bool,
}

impl Token {
    pub fn is_punct(&self, s: &str) -> bool {
        self.kind == TokenKind::Punct && self.lexeme == s
    }

    pub fn is_keyword(&self, s: &str) -> bool {
        self.kind == TokenKind::Keyword && self.lexeme == s
    }
}

/// Reserved words of the supported grammar. `let` and `const` are accepted
/// alongside the ES5 set; `true`/`false`/`null`/`this` lex as identifiers and
/// are treated as operands.
pub const KEYWORDS: &[&str] = &[
    "break", "case", "catch", "const", "continue", "debugger", "default", "delete", "do", "else",
    "finally", "for", "function", "if", "in", "instanceof", "let", "new", "return", "switch",
    "throw", "try", "typeof", "var", "void", "while", "with",
];

fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Multi-character punctuators, longest first so greedy matching is correct.
const PUNCTS: &[&str] = &[
    ">>>=", "===", "!==", ">>>", "<<=", ">>=", "=>", "==", "!=", "<=", ">=", "&&", "||", "++",
    "--", "<<", ">>", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "{", "}", "(", ")", "[",
    "]", ";", ",", "<", ">", "+", "-", "*", "/", "%", "&", "|", "^", "!", "~", "?", ":", "=",
    ".",
];

pub struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
    newline_pending: bool,
    /// Last significant token, for the regex-vs-division decision.
    prev: Option<(TokenKind, String)>,
}

impl<'a> Lexer<'a> {
    pub fn new(source: &'a str) -> Self {
        Lexer {
            src: source.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
            newline_pending: false,
            prev: None,
        }
    }

    /// Lex the whole input. The returned stream always ends with an `Eof`
    /// token carrying the final position.
    pub fn tokenize(mut self) -> Result<Vec<Token>, ParseError> {
        let mut out = Vec::new();
        loop {
            let tok = self.next_token()?;
            let done = tok.kind == TokenKind::Eof;
            out.push(tok);
            if done {
                return Ok(out);
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_at(&self, off: usize) -> Option<u8> {
        self.src.get(self.pos + off).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
            self.newline_pending = true;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col, msg)
    }

    fn skip_trivia(&mut self) -> Result<(), ParseError> {
        loop {
            match self.peek() {
                Some(c) if (c as char).is_whitespace() => {
                    self.bump();
                }
                Some(b'/') if self.peek_at(1) == Some(b'/') => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                Some(b'/') if self.peek_at(1) == Some(b'*') => {
                    let (l, c) = (self.line, self.col);
                    self.bump();
                    self.bump();
                    loop {
                        match self.peek() {
                            None => {
                                return Err(ParseError::new(l, c, "unterminated block comment"))
                            }
                            Some(b'*') if self.peek_at(1) == Some(b'/') => {
                                self.bump();
                                self.bump();
                                break;
                            }
                            _ => {
                                self.bump();
                            }
                        }
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    /// True when a `/` in the current context begins a regular expression
    /// literal rather than a division operator. Classic previous-token
    /// heuristic: division only after something that can end an expression.
    fn regex_allowed(&self) -> bool {
        match &self.prev {
            None => true,
            Some((TokenKind::Ident, _))
            | Some((TokenKind::Number, _))
            | Some((TokenKind::Str, _))
            | Some((TokenKind::Regex, _)) => false,
            Some((TokenKind::Keyword, _)) => true,
            Some((TokenKind::Punct, p)) => !matches!(p.as_str(), ")" | "]" | "}" | "++" | "--"),
            _ => true,
        }
    }

    fn next_token(&mut self) -> Result<Token, ParseError> {
        self.skip_trivia()?;
        let newline_before = self.newline_pending;
        self.newline_pending = false;
        let (line, col) = (self.line, self.col);

        let c = match self.peek() {
            None => {
                return Ok(Token {
                    kind: TokenKind::Eof,
                    lexeme: String::new(),
                    line,
                    col,
                    newline_before,
                })
            }
            Some(c) => c,
        };

        let tok = if is_ident_start(c as char) || c >= 0x80 {
            self.lex_ident(line, col, newline_before)?
        } else if c.is_ascii_digit() || (c == b'.' && self.peek_at(1).is_some_and(|d| d.is_ascii_digit())) {
            self.lex_number(line, col, newline_before)?
        } else if c == b'"' || c == b'\'' {
            self.lex_string(line, col, newline_before)?
        } else if c == b'/' && self.regex_allowed() {
            self.lex_regex(line, col, newline_before)?
        } else {
            self.lex_punct(line, col, newline_before)?
        };
        self.prev = Some((tok.kind, tok.lexeme.clone()));
        Ok(tok)
    }

    fn lex_ident(&mut self, line: u32, col: u32, newline_before: bool) -> Result<Token, ParseError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            let ch = if c < 0x80 {
                c as char
            } else {
                // take the full UTF-8 scalar
                let s = std::str::from_utf8(&self.src[self.pos..])
                    .map_err(|_| self.error("invalid UTF-8"))?;
                s.chars().next().unwrap()
            };
            if is_ident_part(ch) {
                for _ in 0..ch.len_utf8() {
                    self.bump();
                }
            } else {
                break;
            }
        }
        let word = std::str::from_utf8(&self.src[start..self.pos])
            .map_err(|_| self.error("invalid UTF-8"))?
            .to_string();
        let kind = if is_keyword(&word) {
            TokenKind::Keyword
        } else {
            TokenKind::Ident
        };
        Ok(Token {
            kind,
            lexeme: word,
            line,
            col,
            newline_before,
        })
    }

    fn lex_number(&mut self, line: u32, col: u32, newline_before: bool) -> Result<Token, ParseError> {
        let start = self.pos;
        if self.peek() == Some(b'0') && matches!(self.peek_at(1), Some(b'x') | Some(b'X')) {
            self.bump();
            self.bump();
            if !self.peek().is_some_and(|c| c.is_ascii_hexdigit()) {
                return Err(self.error("expected hex digits"));
            }
            while self.peek().is_some_and(|c| c.is_ascii_hexdigit()) {
                self.bump();
            }
        } else {
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
            }
            if self.peek() == Some(b'.') {
                self.bump();
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.bump();
                }
            }
            if matches!(self.peek(), Some(b'e') | Some(b'E')) {
                let save = self.pos;
                self.bump();
                if matches!(self.peek(), Some(b'+') | Some(b'-')) {
                    self.bump();
                }
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.bump();
                    }
                } else {
                    self.pos = save;
                }
            }
        }
        if self.peek().is_some_and(|c| is_ident_start(c as char)) {
            return Err(self.error("identifier starts immediately after number"));
        }
        let lexeme = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        Ok(Token {
            kind: TokenKind::Number,
            lexeme,
            line,
            col,
            newline_before,
        })
    }

    fn lex_string(&mut self, line: u32, col: u32, newline_before: bool) -> Result<Token, ParseError> {
        let quote = self.bump().unwrap();
        let start = self.pos;
        loop {
            match self.peek() {
                None | Some(b'\n') => return Err(ParseError::new(line, col, "unterminated string")),
                Some(b'\\') => {
                    self.bump();
                    if self.peek().is_none() {
                        return Err(ParseError::new(line, col, "unterminated string"));
                    }
                    self.bump();
                }
                Some(c) if c == quote => break,
                _ => {
                    self.bump();
                }
            }
        }
        let body = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        self.bump(); // closing quote
        let q = quote as char;
        Ok(Token {
            kind: TokenKind::Str,
            lexeme: format!("{q}{body}{q}"),
            line,
            col,
            newline_before,
        })
    }

    fn lex_regex(&mut self, line: u32, col: u32, newline_before: bool) -> Result<Token, ParseError> {
        let start = self.pos;
        self.bump(); // leading '/'
        let mut in_class = false;
        loop {
            match self.peek() {
                None | Some(b'\n') => {
                    return Err(ParseError::new(line, col, "unterminated regex literal"))
                }
                Some(b'\\') => {
                    self.bump();
                    self.bump();
                }
                Some(b'[') => {
                    in_class = true;
                    self.bump();
                }
                Some(b']') => {
                    in_class = false;
                    self.bump();
                }
                Some(b'/') if !in_class => {
                    self.bump();
                    break;
                }
                _ => {
                    self.bump();
                }
            }
        }
        while self.peek().is_some_and(|c| is_ident_part(c as char)) {
            self.bump(); // flags
        }
        let lexeme = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        Ok(Token {
            kind: TokenKind::Regex,
            lexeme,
            line,
            col,
            newline_before,
        })
    }

    fn lex_punct(&mut self, line: u32, col: u32, newline_before: bool) -> Result<Token, ParseError> {
        let rest = &self.src[self.pos..];
        for p in PUNCTS {
            if rest.starts_with(p.as_bytes()) {
                for _ in 0..p.len() {
                    self.bump();
                }
                return Ok(Token {
                    kind: TokenKind::Punct,
                    lexeme: (*p).to_string(),
                    line,
                    col,
                    newline_before,
                });
            }
        }
        Err(self.error(format!("unexpected character '{}'", self.peek().unwrap() as char)))
    }
}
