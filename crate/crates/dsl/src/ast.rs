//! Syntax tree for one statement.

use infon_core::{Int, Order, Rational};

use crate::error::Span;

/// Infix operators, in the algebra's sense: `*`/`/` are multiplicative
/// join and division, `+`/`-` are additive join and subtraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Mul,
    Div,
    Add,
    Sub,
}

/// The fixed builtin vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// `order(a)` — the order of an infon.
    Order,
    /// `bits(a)` — the order's information measure in bits.
    Bits,
    /// `addinv(a)` — additive inverse.
    AddInv,
    /// `mulinv(a)` — multiplicative inverse.
    MulInv,
    /// `eq(a, b)` — equality: same order and value.
    Eq,
    /// `iden(a, b)` — identity: the same information object.
    Iden,
    /// `disjoint(a, b)` — no shared atomic support.
    Disjoint,
    /// `members(a)` — all members of the structure.
    Members,
    /// `intersect(a, b)` — intersection by identity.
    Intersect,
    /// `evolve(a, step)` — one additive evolution step.
    Evolve,
    /// `cycle(a, step)` — the full evolution cycle from `a`.
    Cycle,
}

impl Builtin {
    pub fn from_name(name: &str) -> Option<Builtin> {
        Some(match name {
            "order" => Builtin::Order,
            "bits" => Builtin::Bits,
            "addinv" => Builtin::AddInv,
            "mulinv" => Builtin::MulInv,
            "eq" => Builtin::Eq,
            "iden" => Builtin::Iden,
            "disjoint" => Builtin::Disjoint,
            "members" => Builtin::Members,
            "intersect" => Builtin::Intersect,
            "evolve" => Builtin::Evolve,
            "cycle" => Builtin::Cycle,
            _ => return None,
        })
    }

    /// Number of arguments the builtin takes.
    pub fn arity(self) -> usize {
        match self {
            Builtin::Order
            | Builtin::Bits
            | Builtin::AddInv
            | Builtin::MulInv
            | Builtin::Members => 1,
            Builtin::Eq
            | Builtin::Iden
            | Builtin::Disjoint
            | Builtin::Intersect
            | Builtin::Evolve
            | Builtin::Cycle => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr<T: Int> {
    /// A literal mints a fresh atom at every evaluation (except `1_1`,
    /// which always denotes the null infon).
    Literal {
        value: Rational<T>,
        order: Order<T>,
        span: Span,
    },
    Var {
        name: String,
        span: Span,
    },
    Binary {
        op: BinOp,
        lhs: Box<Expr<T>>,
        rhs: Box<Expr<T>>,
        span: Span,
    },
    Call {
        builtin: Builtin,
        args: Vec<Expr<T>>,
        span: Span,
    },
}

impl<T: Int> Expr<T> {
    pub fn span(&self) -> Span {
        match self {
            Expr::Literal { span, .. }
            | Expr::Var { span, .. }
            | Expr::Binary { span, .. }
            | Expr::Call { span, .. } => *span,
        }
    }
}

/// One statement: a binding or a bare expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt<T: Int> {
    Let {
        name: String,
        expr: Expr<T>,
        span: Span,
    },
    Expr(Expr<T>),
}
