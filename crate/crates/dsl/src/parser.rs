//! Recursive-descent parser for one statement.
//!
//! Grammar (per line):
//!
//! ```text
//! stmt   := "let" IDENT "=" expr | expr
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := LITERAL | IDENT | IDENT "(" args ")" | "(" expr ")"
//! args   := expr ("," expr)*
//! ```
//!
//! `*` and `/` bind tighter than `+` and `-`; all infix operators are
//! left-associative.

use infon_core::Int;

use crate::ast::{BinOp, Builtin, Expr, Stmt};
use crate::error::{DslError, Span};
use crate::token::{Token, TokenKind};

struct Parser<'a, T: Int> {
    tokens: &'a [Token<T>],
    pos: usize,
    line_len: usize,
}

impl<'a, T: Int> Parser<'a, T> {
    fn peek(&self) -> Option<&'a Token<T>> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&'a Token<T>> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// Span to blame when input ends unexpectedly.
    fn end_span(&self) -> Span {
        match self.tokens.last() {
            Some(t) => Span::new(t.span.end, t.span.end.max(self.line_len)),
            None => Span::new(0, self.line_len),
        }
    }

    fn expect(&mut self, kind: &TokenKind<T>, what: &str) -> Result<&'a Token<T>, DslError> {
        match self.next() {
            Some(t) if &t.kind == kind => Ok(t),
            Some(t) => Err(DslError::Parse {
                span: t.span,
                message: format!("expected {what}"),
            }),
            None => Err(DslError::Parse {
                span: self.end_span(),
                message: format!("expected {what}, found end of line"),
            }),
        }
    }

    fn parse_stmt(&mut self) -> Result<Stmt<T>, DslError> {
        if let Some(Token {
            kind: TokenKind::Ident(name),
            span,
        }) = self.peek()
        {
            if name == "let" {
                let let_span = *span;
                self.pos += 1;
                let (name, _name_span) = match self.next() {
                    Some(Token {
                        kind: TokenKind::Ident(n),
                        span,
                    }) if n != "let" => (n.clone(), *span),
                    Some(t) => {
                        return Err(DslError::Parse {
                            span: t.span,
                            message: "expected a binding name after `let`".into(),
                        })
                    }
                    None => {
                        return Err(DslError::Parse {
                            span: self.end_span(),
                            message: "expected a binding name after `let`".into(),
                        })
                    }
                };
                self.expect(&TokenKind::Equals, "`=`")?;
                let expr = self.parse_expr()?;
                self.finish()?;
                let span = let_span.to(expr.span());
                return Ok(Stmt::Let { name, expr, span });
            }
        }
        let expr = self.parse_expr()?;
        self.finish()?;
        Ok(Stmt::Expr(expr))
    }

    /// Reject trailing tokens after a complete statement.
    fn finish(&self) -> Result<(), DslError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(DslError::Parse {
                span: t.span,
                message: "unexpected trailing input".into(),
            }),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr<T>, DslError> {
        let mut lhs = self.parse_term()?;
        while let Some(t) = self.peek() {
            let op = match t.kind {
                TokenKind::Plus => BinOp::Add,
                TokenKind::Minus => BinOp::Sub,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.parse_term()?;
            let span = lhs.span().to(rhs.span());
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                span,
            };
        }
        Ok(lhs)
    }

    fn parse_term(&mut self) -> Result<Expr<T>, DslError> {
        let mut lhs = self.parse_factor()?;
        while let Some(t) = self.peek() {
            let op = match t.kind {
                TokenKind::Star => BinOp::Mul,
                TokenKind::Slash => BinOp::Div,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.parse_factor()?;
            let span = lhs.span().to(rhs.span());
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                span,
            };
        }
        Ok(lhs)
    }

    fn parse_factor(&mut self) -> Result<Expr<T>, DslError> {
        match self.next() {
            Some(Token {
                kind: TokenKind::Literal { value, order },
                span,
            }) => Ok(Expr::Literal {
                value: value.clone(),
                order: order.clone(),
                span: *span,
            }),
            Some(Token {
                kind: TokenKind::Ident(name),
                span,
            }) => {
                let name_span = *span;
                if matches!(self.peek(), Some(t) if t.kind == TokenKind::LParen) {
                    self.pos += 1; // consume `(`
                    let builtin =
                        Builtin::from_name(name).ok_or_else(|| DslError::Parse {
                            span: name_span,
                            message: format!("unknown builtin `{name}`"),
                        })?;
                    let mut args = vec![self.parse_expr()?];
                    while matches!(self.peek(), Some(t) if t.kind == TokenKind::Comma) {
                        self.pos += 1;
                        args.push(self.parse_expr()?);
                    }
                    let close = self.expect(&TokenKind::RParen, "`)`")?;
                    if args.len() != builtin.arity() {
                        return Err(DslError::Parse {
                            span: name_span.to(close.span),
                            message: format!(
                                "`{name}` takes {} argument{}, got {}",
                                builtin.arity(),
                                if builtin.arity() == 1 { "" } else { "s" },
                                args.len()
                            ),
                        });
                    }
                    Ok(Expr::Call {
                        builtin,
                        args,
                        span: name_span.to(close.span),
                    })
                } else {
                    Ok(Expr::Var {
                        name: name.clone(),
                        span: name_span,
                    })
                }
            }
            Some(Token {
                kind: TokenKind::LParen,
                span,
            }) => {
                let open = *span;
                let inner = self.parse_expr()?;
                let close = self.expect(&TokenKind::RParen, "`)`")?;
                // keep the parenthesized extent for diagnostics
                let span = open.to(close.span);
                Ok(match inner {
                    Expr::Binary { op, lhs, rhs, .. } => Expr::Binary { op, lhs, rhs, span },
                    other => other,
                })
            }
            Some(t) => Err(DslError::Parse {
                span: t.span,
                message: "expected a literal, name, or `(`".into(),
            }),
            None => Err(DslError::Parse {
                span: self.end_span(),
                message: "expected an expression, found end of line".into(),
            }),
        }
    }
}

/// Parse one line into a statement. Blank and comment-only lines yield
/// `None`.
pub fn parse_line<T: Int>(line: &str) -> Result<Option<Stmt<T>>, DslError> {
    let tokens = crate::token::tokenize::<T>(line)?;
    if tokens.is_empty() {
        return Ok(None);
    }
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        line_len: line.len(),
    };
    p.parse_stmt().map(Some)
}
