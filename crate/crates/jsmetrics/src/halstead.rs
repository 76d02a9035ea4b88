//! Halstead operator/operand accounting over the token stream.
//!
//! Halstead counting is convention-dependent, so the classification is fixed
//! and documented in `TOKEN_CLASSIFICATION.md` at the crate root. Summary:
//! operands are identifiers, literals (number, string, regex, `true`,
//! `false`, `null`, `this`) and property names after `.`; operators are all
//! remaining punctuators and keywords, with `(`/`{`/`[` pairs counted once
//! (at the opener) and the statement terminator `;` not counted at all.

use std::collections::HashSet;

use crate::error::ParseError;
use crate::lexer::{Lexer, TokenKind};

/// Raw operator/operand counts for one script.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TokenAccounting {
    /// Distinct operators.
    pub eta1: u64,
    /// Distinct operands.
    pub eta2: u64,
    /// Total operators.
    pub n1: u64,
    /// Total operands.
    pub n2: u64,
}

impl TokenAccounting {
    pub fn vocabulary(&self) -> u64 {
        self.eta1 + self.eta2
    }

    pub fn length(&self) -> u64 {
        self.n1 + self.n2
    }
}

/// Tokens that never count: pair closers are represented by their opener,
/// and `;` is pure statement punctuation.
fn skip_punct(lexeme: &str) -> bool {
    matches!(lexeme, ";" | ")" | "]" | "}")
}

/// Tokenize `source` and classify every token as operator or operand.
pub fn tokenize_and_count(source: &str) -> Result<TokenAccounting, ParseError> {
    let tokens = Lexer::new(source).tokenize()?;
    let mut ops: HashSet<String> = HashSet::new();
    let mut operands: HashSet<String> = HashSet::new();
    let mut acc = TokenAccounting::default();
    let mut prev_dot = false;

    for tok in &tokens {
        match tok.kind {
            TokenKind::Eof => break,
            TokenKind::Ident | TokenKind::Number | TokenKind::Str | TokenKind::Regex => {
                acc.n2 += 1;
                if operands.insert(tok.lexeme.clone()) {
                    acc.eta2 += 1;
                }
            }
            TokenKind::Keyword => {
                if prev_dot {
                    // reserved word used as a property name
                    acc.n2 += 1;
                    if operands.insert(tok.lexeme.clone()) {
                        acc.eta2 += 1;
                    }
                } else {
                    acc.n1 += 1;
                    if ops.insert(tok.lexeme.clone()) {
                        acc.eta1 += 1;
                    }
                }
            }
            TokenKind::Punct => {
                if !skip_punct(&tok.lexeme) {
                    acc.n1 += 1;
                    if ops.insert(tok.lexeme.clone()) {
                        acc.eta1 += 1;
                    }
                }
            }
        }
        prev_dot = tok.is_punct(".");
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_program_counts_nothing() {
        let acc = tokenize_and_count("").unwrap();
        assert_eq!(acc, TokenAccounting::default());
    }

    #[test]
    fn documented_example_assignment() {
        // operators: =, + ; operands: a, b, c ; `;` not counted
        let acc = tokenize_and_count("a = b + c;").unwrap();
        assert_eq!(acc.eta1, 2);
        assert_eq!(acc.eta2, 3);
        assert_eq!(acc.n1, 2);
        assert_eq!(acc.n2, 3);
    }

    #[test]
    fn pairs_count_once() {
        // operators: f(), so `(` once; operands: f, 1
        let acc = tokenize_and_count("f(1)").unwrap();
        assert_eq!(acc.n1, 1);
        assert_eq!(acc.n2, 2);
    }

    #[test]
    fn property_names_are_operands() {
        // operators: ., ( ; operands: miner, start
        let acc = tokenize_and_count("miner.start()").unwrap();
        assert_eq!(acc.n1, 2);
        assert_eq!(acc.n2, 2);
        assert_eq!(acc.eta1, 2);
        assert_eq!(acc.eta2, 2);
    }

    #[test]
    fn keyword_after_dot_is_operand() {
        let acc = tokenize_and_count("a.delete").unwrap();
        assert_eq!(acc.n1, 1); // '.'
        assert_eq!(acc.n2, 2); // a, delete
    }

    #[test]
    fn keywords_are_operators() {
        // var, = are operators; x, 1 operands
        let acc = tokenize_and_count("var x = 1;").unwrap();
        assert_eq!(acc.n1, 2);
        assert_eq!(acc.n2, 2);
    }

    #[test]
    fn distinct_never_exceeds_total() {
        let acc = tokenize_and_count("a + a + a - b").unwrap();
        assert!(acc.eta1 <= acc.n1);
        assert!(acc.eta2 <= acc.n2);
        assert_eq!(acc.n2, 4);
        assert_eq!(acc.eta2, 2);
    }

    #[test]
    fn invalid_syntax_is_a_parse_error() {
        assert!(tokenize_and_count("var s = 'oops").is_err());
    }
}
