//! Text syntax for functions and operators.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { ("*" | "/") unary } ;
//! unary   = "-" unary | power ;
//! power   = primary [ "^" [ "-" ] integer ] ;
//! primary = integer | name | "sqrt" "(" expr ")" | "(" expr ")"
//!         | "{" expr "," expr "}" | "[" expr "," expr "]" ;
//! name    = "i" | coordinate | parameter | atom ;
//! coordinate = "x" | "y" | "z" | "r" | "s" | "t" ;
//! parameter  = "hbar" | "beta" | "mu" | "gamma" | "a1" | "a2" | "a3"
//!            | "b1" | "b2" | "b3" | "alpha1" | "alpha2" | "alpha3"
//!            | "c1" | "c2" | "c3" ;
//! atom    = "p1" | "p2" | "p3" | "L1" | "L2" | "L3" | "s1" | "s2" | "s3"
//!         | "sigma.L" | "sigma.x" | "sigma.p" | "x.p" | "laplacian" ;
//! ```
//!
//! `s = sqrt(1 + beta*r^2)`, `t = sqrt(4*r^4 + gamma)`; `sqrt` accepts only
//! those radicands and `x^2 + y^2 + z^2`. `{A, B}` is the anticommutator,
//! `[A, B]` the commutator, `A/f` means `A ∘ (1/f)`, and `laplacian` is
//! `−(p1² + p2² + p3²)/ħ²`. Exponents are integers with magnitude at most 64.
//! The radial-field names `rad`, `srad`, `trad` are also accepted.

mod ast;
mod eval;
mod lexer;
mod printer;

pub use ast::{parse_ast, parse_ast_bytes, BinOp, Expr, ExprKind, OpAtom};
pub use eval::{evaluate, Value};
pub use printer::{print_operator, print_scalar};

use crate::exactfield::{FieldElem, FieldError};
use crate::operator::{Algebra, DiffOp};

/// 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unsupported radical at {line}:{col}: sqrt({arg})")]
    UnsupportedRadical { line: usize, col: usize, arg: String },
    #[error("type error at {line}:{col}: {msg}")]
    Type { line: usize, col: usize, msg: String },
    #[error("at {line}:{col}: {source}")]
    Field { line: usize, col: usize, source: FieldError },
    #[error("limit exceeded at {line}:{col}: {msg}")]
    Limit { line: usize, col: usize, msg: String },
}

impl ExprError {
    pub fn position(&self) -> Pos {
        match *self {
            ExprError::Syntax { line, col, .. }
            | ExprError::UnsupportedRadical { line, col, .. }
            | ExprError::Type { line, col, .. }
            | ExprError::Field { line, col, .. }
            | ExprError::Limit { line, col, .. } => Pos { line, col },
        }
    }
}

/// Parse a function. `hbar` stays symbolic.
pub fn parse_scalar(text: &str) -> Result<FieldElem, ExprError> {
    let e = parse_ast(text)?;
    match evaluate(&e, &Algebra::symbolic())? {
        Value::Scalar(f) => Ok(f),
        Value::Operator(_) => Err(ExprError::Type {
            line: e.pos.line,
            col: e.pos.col,
            msg: "expected a function, found an operator".into(),
        }),
    }
}

/// Parse an operator; functions become multiplication operators.
pub fn parse_operator(text: &str, alg: &Algebra) -> Result<DiffOp, ExprError> {
    Ok(evaluate(&parse_ast(text)?, alg)?.into_operator())
}

/// Canonical text of a parsed value.
pub fn print_value(v: &Value, alg: &Algebra) -> String {
    match v {
        Value::Scalar(f) => print_scalar(f),
        Value::Operator(o) => print_operator(o, alg),
    }
}

#[cfg(test)]
mod tests;
