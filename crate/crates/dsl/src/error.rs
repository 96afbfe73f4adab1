//! Diagnostics for the expression language.

use std::fmt;

use infon_core::AlgebraError;
use thiserror::Error;

/// Byte range within one source line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    /// Merge two spans into the smallest span covering both.
    pub fn to(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// What went wrong, and where in the line.
///
/// The lex/parse variants are *static* errors (the text never made it to
/// evaluation); the eval variants are runtime refusals from the algebra or
/// the environment.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("lex error at {span}: {message}")]
    Lex { span: Span, message: String },

    #[error("parse error at {span}: {message}")]
    Parse { span: Span, message: String },

    #[error("evaluation error at {span}: {source}")]
    Algebra { span: Span, source: AlgebraError },

    #[error("evaluation error at {span}: {message}")]
    Eval { span: Span, message: String },
}

impl DslError {
    pub fn span(&self) -> Span {
        match self {
            DslError::Lex { span, .. }
            | DslError::Parse { span, .. }
            | DslError::Algebra { span, .. }
            | DslError::Eval { span, .. } => *span,
        }
    }

    /// True for errors raised before evaluation began (lexing or parsing).
    pub fn is_static(&self) -> bool {
        matches!(self, DslError::Lex { .. } | DslError::Parse { .. })
    }
}
