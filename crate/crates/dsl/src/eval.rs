//! Evaluator: statements against a persistent environment.
//!
//! The environment owns a universe and the `let` bindings. Binding lookup
//! is identity-preserving — `A` always denotes the very object bound to it,
//! so `iden(A, A)` is true while a re-typed literal is a fresh atom and
//! `iden(A, 3_4)` is false even if `A` was bound from the literal `3_4`.

use std::collections::BTreeMap;
use std::fmt;

use infon_core::{
    add_inverse, add_join, disjoint, div_join, evolve, infon_from_literal, intersection,
    mul_inverse, mul_join, order_to_bits, sub_join, trajectory, Infon, Int, Order, Universe,
};

use crate::ast::{BinOp, Builtin, Expr, Stmt};
use crate::error::{DslError, Span};

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Value<T: Int> {
    Infon(Infon<T>),
    Order(Order<T>),
    Bits(f64),
    Bool(bool),
    Members(Vec<Infon<T>>),
    Cycle(Vec<Infon<T>>),
}

impl<T: Int> fmt::Display for Value<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Infon(i) => write!(f, "{i}"),
            Value::Order(o) => write!(f, "{o}"),
            Value::Bits(b) => write!(f, "{b:.4}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Members(ms) => {
                write!(f, "{{")?;
                for (i, m) in ms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", m.structure_string())?;
                }
                write!(f, "}}")
            }
            Value::Cycle(cs) => {
                write!(f, "[")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Persistent evaluation state: a universe for minting literal atoms plus
/// the current bindings.
#[derive(Debug)]
pub struct EvalEnv<T: Int> {
    universe: Universe,
    bindings: BTreeMap<String, Infon<T>>,
}

impl<T: Int> EvalEnv<T> {
    pub fn new() -> Self {
        EvalEnv {
            universe: Universe::new(),
            bindings: BTreeMap::new(),
        }
    }

    /// Current bindings in name order.
    pub fn bindings(&self) -> impl Iterator<Item = (&str, &Infon<T>)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Evaluate one statement. `Let` binds and yields nothing; a bare
    /// expression yields its value.
    pub fn eval_stmt(&mut self, stmt: &Stmt<T>) -> Result<Option<Value<T>>, DslError> {
        match stmt {
            Stmt::Let { name, expr, span } => {
                let value = self.eval_expr(expr)?;
                match value {
                    Value::Infon(i) => {
                        self.bindings.insert(name.clone(), i);
                        Ok(None)
                    }
                    other => Err(DslError::Eval {
                        span: *span,
                        message: format!(
                            "only infons can be bound; `{name}` would be {}",
                            value_kind(&other)
                        ),
                    }),
                }
            }
            Stmt::Expr(e) => Ok(Some(self.eval_expr(e)?)),
        }
    }

    pub fn eval_expr(&mut self, expr: &Expr<T>) -> Result<Value<T>, DslError> {
        match expr {
            Expr::Literal { value, order, span } => {
                infon_from_literal(&mut self.universe, value.clone(), order.clone())
                    .map(Value::Infon)
                    .map_err(|source| DslError::Algebra { span: *span, source })
            }
            Expr::Var { name, span } => match self.bindings.get(name) {
                Some(i) => Ok(Value::Infon(i.clone())),
                None => Err(DslError::Eval {
                    span: *span,
                    message: format!("`{name}` is not bound"),
                }),
            },
            Expr::Binary { op, lhs, rhs, span } => {
                let a = self.eval_infon(lhs)?;
                let b = self.eval_infon(rhs)?;
                let joined = match op {
                    BinOp::Mul => mul_join(&a, &b),
                    BinOp::Div => div_join(&a, &b),
                    BinOp::Add => add_join(&a, &b),
                    BinOp::Sub => sub_join(&a, &b),
                };
                joined
                    .map(Value::Infon)
                    .map_err(|source| DslError::Algebra { span: *span, source })
            }
            Expr::Call { builtin, args, span } => self.eval_call(*builtin, args, *span),
        }
    }

    /// Evaluate an expression that must produce an infon.
    fn eval_infon(&mut self, expr: &Expr<T>) -> Result<Infon<T>, DslError> {
        match self.eval_expr(expr)? {
            Value::Infon(i) => Ok(i),
            other => Err(DslError::Eval {
                span: expr.span(),
                message: format!("expected an infon, got {}", value_kind(&other)),
            }),
        }
    }

    fn eval_call(
        &mut self,
        builtin: Builtin,
        args: &[Expr<T>],
        span: Span,
    ) -> Result<Value<T>, DslError> {
        let alg = |source| DslError::Algebra { span, source };
        match builtin {
            Builtin::Order => {
                let a = self.eval_infon(&args[0])?;
                a.order().cloned().map(Value::Order).map_err(alg)
            }
            Builtin::Bits => {
                let a = self.eval_infon(&args[0])?;
                let order = a.order().map_err(alg)?;
                order_to_bits(order).map(Value::Bits).map_err(alg)
            }
            Builtin::AddInv => {
                let a = self.eval_infon(&args[0])?;
                add_inverse(&a).map(Value::Infon).map_err(alg)
            }
            Builtin::MulInv => {
                let a = self.eval_infon(&args[0])?;
                mul_inverse(&a).map(Value::Infon).map_err(alg)
            }
            Builtin::Eq => {
                let a = self.eval_infon(&args[0])?;
                let b = self.eval_infon(&args[1])?;
                Ok(Value::Bool(a.equal(&b)))
            }
            Builtin::Iden => {
                let a = self.eval_infon(&args[0])?;
                let b = self.eval_infon(&args[1])?;
                Ok(Value::Bool(a.identical(&b)))
            }
            Builtin::Disjoint => {
                let a = self.eval_infon(&args[0])?;
                let b = self.eval_infon(&args[1])?;
                Ok(Value::Bool(disjoint(&a, &b)))
            }
            Builtin::Members => {
                let a = self.eval_infon(&args[0])?;
                Ok(Value::Members(
                    a.members().into_iter().cloned().collect(),
                ))
            }
            Builtin::Intersect => {
                let a = self.eval_infon(&args[0])?;
                let b = self.eval_infon(&args[1])?;
                Ok(Value::Infon(intersection(&a, &b)))
            }
            Builtin::Evolve => {
                let a = self.eval_infon(&args[0])?;
                let step = self.eval_infon(&args[1])?;
                evolve(&a, &step).map(Value::Infon).map_err(alg)
            }
            Builtin::Cycle => {
                let a = self.eval_infon(&args[0])?;
                let step = self.eval_infon(&args[1])?;
                trajectory(&a, &step).map(Value::Cycle).map_err(alg)
            }
        }
    }
}

impl<T: Int> Default for EvalEnv<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn value_kind<T: Int>(v: &Value<T>) -> &'static str {
    match v {
        Value::Infon(_) => "an infon",
        Value::Order(_) => "an order",
        Value::Bits(_) => "a bit measure",
        Value::Bool(_) => "a boolean",
        Value::Members(_) => "a member list",
        Value::Cycle(_) => "a cycle",
    }
}

/// Lex, parse, and evaluate one line. Blank and comment lines yield `None`.
pub fn eval_line<T: Int>(
    env: &mut EvalEnv<T>,
    line: &str,
) -> Result<Option<Value<T>>, DslError> {
    match crate::parser::parse_line::<T>(line)? {
        None => Ok(None),
        Some(stmt) => env.eval_stmt(&stmt),
    }
}
