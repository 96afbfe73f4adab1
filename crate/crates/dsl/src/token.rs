//! Lexer: one line of source into spanned tokens.
//!
//! Number lexing is longest-match and whitespace-sensitive. `11/2` is one
//! rational literal; `11 / 2` is a division. `1/2_2` is a single literal
//! (value one-half at extent 2), and `5_8` likewise. A `#` starts a comment
//! running to the end of the line.

use infon_core::{parse_number, Int, Order, Rational};

use crate::error::{DslError, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind<T: Int> {
    /// A complete infon literal: value plus optional `_extent`.
    /// Without an extent the order is unbounded.
    Literal {
        value: Rational<T>,
        order: Order<T>,
    },
    /// Identifier: a binding name, keyword, or builtin name.
    Ident(String),
    Star,
    Slash,
    Plus,
    Minus,
    Equals,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<T: Int> {
    pub kind: TokenKind<T>,
    pub span: Span,
}

/// A number body: digits, optionally `.digits` or `/digits`.
/// Returns the end offset (exclusive) or None when `src[start]` is not a digit.
fn scan_number_body(bytes: &[u8], start: usize) -> Option<usize> {
    let mut i = start;
    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
        return None;
    }
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i + 1 < bytes.len()
        && (bytes[i] == b'.' || bytes[i] == b'/')
        && bytes[i + 1].is_ascii_digit()
    {
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
    }
    Some(i)
}

/// Tokenize one line. The line must not contain `\n`.
pub fn tokenize<T: Int>(line: &str) -> Result<Vec<Token<T>>, DslError> {
    let bytes = line.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' => {
                i += 1;
            }
            b'#' => break, // comment to end of line
            b'*' | b'/' | b'+' | b'-' | b'=' | b'(' | b')' | b',' => {
                let kind = match b {
                    b'*' => TokenKind::Star,
                    b'/' => TokenKind::Slash,
                    b'+' => TokenKind::Plus,
                    b'-' => TokenKind::Minus,
                    b'=' => TokenKind::Equals,
                    b'(' => TokenKind::LParen,
                    b')' => TokenKind::RParen,
                    _ => TokenKind::Comma,
                };
                tokens.push(Token {
                    kind,
                    span: Span::new(i, i + 1),
                });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                let value_end = scan_number_body(bytes, i).expect("digit checked");
                let mut end = value_end;
                // an immediately following `_number` is the order part
                if end + 1 < bytes.len() && bytes[end] == b'_' {
                    if let Some(order_end) = scan_number_body(bytes, end + 1) {
                        end = order_end;
                    }
                }
                let span = Span::new(start, end);
                let text = &line[start..end];
                let (value, order) = parse_literal_text::<T>(text, span)?;
                tokens.push(Token {
                    kind: TokenKind::Literal { value, order },
                    span,
                });
                i = end;
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(line[start..i].to_string()),
                    span: Span::new(start, i),
                });
            }
            _ => {
                return Err(DslError::Lex {
                    span: Span::new(i, i + 1),
                    message: format!(
                        "unexpected character {:?}",
                        line[i..].chars().next().expect("in range")
                    ),
                });
            }
        }
    }
    Ok(tokens)
}

fn parse_literal_text<T: Int>(
    text: &str,
    span: Span,
) -> Result<(Rational<T>, Order<T>), DslError> {
    match text.split_once('_') {
        None => {
            let value = parse_number::<T>(text).ok_or_else(|| DslError::Lex {
                span,
                message: format!("malformed number {text:?}"),
            })?;
            Ok((value, Order::Unbounded))
        }
        Some((v, e)) => {
            let value = parse_number::<T>(v).ok_or_else(|| DslError::Lex {
                span,
                message: format!("malformed number {v:?}"),
            })?;
            let extent = parse_number::<T>(e).ok_or_else(|| DslError::Lex {
                span,
                message: format!("malformed order extent {e:?}"),
            })?;
            Ok((value, Order::Finite(extent)))
        }
    }
}
