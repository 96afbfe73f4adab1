//! A small expression language over the infon algebra.
//!
//! One statement per line: either `let NAME = expr` or a bare expression.
//! Literals (`3_4`, `12`, `11/2`, `1/2_2`) mint fresh atoms at every
//! evaluation; `*`/`/` are multiplicative join and division, `+`/`-`
//! additive join and subtraction, and a fixed builtin vocabulary covers the
//! rest of the algebra (`order`, `bits`, `addinv`, `mulinv`, `eq`, `iden`,
//! `disjoint`, `members`, `intersect`, `evolve`, `cycle`). `#` comments to
//! the end of the line.
//!
//! ```
//! use infon_dsl::{eval_line, EvalEnv};
//!
//! let mut env = EvalEnv::<i64>::new();
//! let v = eval_line(&mut env, "3_4 * 4_5").unwrap().unwrap();
//! assert_eq!(v.to_string(), "12_20");
//! ```

mod ast;
mod error;
mod eval;
mod parser;
mod token;

pub use ast::{BinOp, Builtin, Expr, Stmt};
pub use error::{DslError, Span};
pub use eval::{eval_line, EvalEnv, Value};
pub use parser::parse_line;
pub use token::{tokenize, Token, TokenKind};
