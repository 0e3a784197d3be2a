use crate::exactfield::{radicand, FieldElem, Var, ALL_VARS, NVARS};
use crate::operator::{Algebra, DiffOp};

use super::ast::{BinOp, Expr, ExprKind, OpAtom};
use super::{ExprError, Pos};

/// Per-variable degree cap on intermediate results, well inside the
/// exponent range of the field.
const MAX_DEGREE: u32 = 96;
const MAX_ORDER: u32 = 12;

/// A typed result: a function or a differential operator.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(FieldElem),
    Operator(DiffOp),
}

impl Value {
    pub fn into_operator(self) -> DiffOp {
        match self {
            Value::Scalar(f) => DiffOp::scalar(f),
            Value::Operator(o) => o,
        }
    }
}

fn degrees(f: &FieldElem) -> [u32; NVARS] {
    let mut d = [0u32; NVARS];
    for (m, _) in f.numerator().terms() {
        for v in ALL_VARS {
            d[v.index()] = d[v.index()].max(m.exp(v) as u32);
        }
    }
    for (a, e) in f.denominator_atoms() {
        for v in ALL_VARS {
            d[v.index()] += a.degree_in(v) as u32 * e;
        }
    }
    d
}

fn op_degrees(o: &DiffOp) -> [u32; NVARS] {
    let mut d = [0u32; NVARS];
    for (_, p) in o.terms() {
        for c in &p.c {
            for (k, x) in degrees(c).iter().enumerate() {
                d[k] = d[k].max(*x);
            }
        }
    }
    d
}

fn value_degrees(v: &Value) -> [u32; NVARS] {
    match v {
        Value::Scalar(f) => degrees(f),
        Value::Operator(o) => op_degrees(o),
    }
}

fn value_order(v: &Value) -> u32 {
    match v {
        Value::Scalar(_) => 0,
        Value::Operator(o) => o.order().unwrap_or(0),
    }
}

struct Eval<'a> {
    alg: &'a Algebra,
}

fn limit(pos: Pos, msg: String) -> ExprError {
    ExprError::Limit { line: pos.line, col: pos.col, msg }
}

fn type_err(pos: Pos, msg: &str) -> ExprError {
    ExprError::Type { line: pos.line, col: pos.col, msg: msg.into() }
}

impl Eval<'_> {
    fn check_product(&self, pos: Pos, a: &Value, b: &Value, times: u32) -> Result<(), ExprError> {
        let (da, db) = (value_degrees(a), value_degrees(b));
        for v in ALL_VARS {
            let k = v.index();
            if da[k] + times * db[k] > MAX_DEGREE {
                return Err(limit(pos, format!("degree in {v} exceeds {MAX_DEGREE}")));
            }
        }
        let order = value_order(a) + times * value_order(b);
        if order > MAX_ORDER {
            return Err(limit(pos, format!("operator order exceeds {MAX_ORDER}")));
        }
        Ok(())
    }

    fn atom(&self, a: OpAtom) -> DiffOp {
        let alg = self.alg;
        match a {
            OpAtom::P(k) => alg.p(k),
            OpAtom::L(k) => alg.l(k),
            OpAtom::Sigma(k) => alg.sigma(k),
            OpAtom::SigmaL => alg.sigma_dot_l(),
            OpAtom::SigmaX => alg.sigma_dot_x(),
            OpAtom::SigmaP => alg.sigma_dot_p(),
            OpAtom::XP => alg.x_dot_p(),
            OpAtom::Laplacian => alg.laplacian(),
        }
    }

    fn sqrt(&self, pos: Pos, arg: &Expr, v: Value) -> Result<Value, ExprError> {
        let f = match v {
            Value::Scalar(f) => f,
            Value::Operator(_) => return Err(type_err(pos, "sqrt of an operator")),
        };
        for rad in [Var::R, Var::S, Var::T, Var::SRad, Var::TRad] {
            if f == FieldElem::from_poly(radicand(rad).clone()) {
                return Ok(Value::Scalar(FieldElem::var(rad)));
            }
        }
        Err(ExprError::UnsupportedRadical { line: pos.line, col: pos.col, arg: arg.to_string() })
    }

    fn mul(&self, pos: Pos, a: Value, b: Value) -> Result<Value, ExprError> {
        self.check_product(pos, &a, &b, 1)?;
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (a, b) => Value::Operator(a.into_operator().compose(&b.into_operator())),
        })
    }

    fn eval(&self, e: &Expr) -> Result<Value, ExprError> {
        let pos = e.pos;
        let field = |r: Result<FieldElem, crate::exactfield::FieldError>| {
            r.map_err(|source| ExprError::Field { line: pos.line, col: pos.col, source })
        };
        Ok(match &e.kind {
            ExprKind::Int(n) => Value::Scalar(FieldElem::from(n.clone())),
            ExprKind::Imag => Value::Scalar(FieldElem::i()),
            ExprKind::Var(v) => Value::Scalar(FieldElem::var(*v)),
            ExprKind::Op(a) => Value::Operator(self.atom(*a)),
            ExprKind::Neg(a) => match self.eval(a)? {
                Value::Scalar(f) => Value::Scalar(-f),
                Value::Operator(o) => Value::Operator(o.neg()),
            },
            ExprKind::Bin(op, a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                match op {
                    BinOp::Add | BinOp::Sub => {
                        let sub = *op == BinOp::Sub;
                        match (x, y) {
                            (Value::Scalar(x), Value::Scalar(y)) => {
                                Value::Scalar(if sub { x - y } else { x + y })
                            }
                            (x, y) => {
                                let (x, y) = (x.into_operator(), y.into_operator());
                                Value::Operator(if sub { x.sub(&y) } else { x.add(&y) })
                            }
                        }
                    }
                    BinOp::Mul => self.mul(pos, x, y)?,
                    BinOp::Div => {
                        let d = match y {
                            Value::Scalar(d) => d,
                            Value::Operator(_) => {
                                return Err(type_err(b.pos, "division by an operator"))
                            }
                        };
                        self.check_product(pos, &x, &Value::Scalar(d.clone()), 1)?;
                        let inv = field(d.inv())?;
                        match x {
                            Value::Scalar(n) => Value::Scalar(n * inv),
                            // right division: A/f = A ∘ (1/f)
                            Value::Operator(o) => Value::Operator(o.compose(&DiffOp::scalar(inv))),
                        }
                    }
                }
            }
            ExprKind::Pow(a, k) => {
                let base = self.eval(a)?;
                let times = k.unsigned_abs().saturating_sub(1).min(u32::MAX as u64) as u32;
                self.check_product(pos, &base, &base, times)?;
                match base {
                    Value::Scalar(f) => Value::Scalar(field(f.pow(*k as i32))?),
                    Value::Operator(o) => {
                        if *k < 0 {
                            return Err(type_err(pos, "negative power of an operator"));
                        }
                        let mut acc = DiffOp::identity();
                        for _ in 0..*k {
                            acc = acc.compose(&o);
                        }
                        Value::Operator(acc)
                    }
                }
            }
            ExprKind::Sqrt(a) => {
                let v = self.eval(a)?;
                self.sqrt(pos, a, v)?
            }
            ExprKind::Anti(a, b) | ExprKind::Comm(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                self.check_product(pos, &x, &y, 1)?;
                let (x, y) = (x.into_operator(), y.into_operator());
                Value::Operator(if matches!(e.kind, ExprKind::Anti(..)) {
                    x.anticommutator(&y)
                } else {
                    x.commutator(&y)
                })
            }
        })
    }
}

pub fn evaluate(e: &Expr, alg: &Algebra) -> Result<Value, ExprError> {
    Eval { alg }.eval(e)
}

