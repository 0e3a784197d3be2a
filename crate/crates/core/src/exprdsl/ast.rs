use std::fmt;

use num_bigint::BigInt;

use crate::exactfield::Var;

use super::lexer::{lex, Tok};
use super::{ExprError, Pos};

/// Largest accepted exponent magnitude.
const MAX_EXPONENT: i64 = 64;
/// Nesting limit; deeper input is rejected rather than recursed into.
const MAX_DEPTH: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// The closed set of operator atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpAtom {
    P(usize),
    L(usize),
    Sigma(usize),
    SigmaL,
    SigmaX,
    SigmaP,
    XP,
    Laplacian,
}

impl OpAtom {
    pub fn name(self) -> String {
        match self {
            OpAtom::P(k) => format!("p{k}"),
            OpAtom::L(k) => format!("L{k}"),
            OpAtom::Sigma(k) => format!("s{k}"),
            OpAtom::SigmaL => "sigma.L".into(),
            OpAtom::SigmaX => "sigma.x".into(),
            OpAtom::SigmaP => "sigma.p".into(),
            OpAtom::XP => "x.p".into(),
            OpAtom::Laplacian => "laplacian".into(),
        }
    }

    fn from_name(s: &str) -> Option<OpAtom> {
        let idx = |rest: &str| match rest {
            "1" => Some(1),
            "2" => Some(2),
            "3" => Some(3),
            _ => None,
        };
        Some(match s {
            "sigma.L" => OpAtom::SigmaL,
            "sigma.x" => OpAtom::SigmaX,
            "sigma.p" => OpAtom::SigmaP,
            "x.p" => OpAtom::XP,
            "laplacian" => OpAtom::Laplacian,
            _ => {
                let (head, rest) = s.split_at(1);
                let k = idx(rest)?;
                match head {
                    "p" => OpAtom::P(k),
                    "L" => OpAtom::L(k),
                    "s" => OpAtom::Sigma(k),
                    _ => return None,
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    /// Non-negative integer literal; rationals are written as quotients.
    Int(BigInt),
    /// The imaginary unit `i`.
    Imag,
    Var(Var),
    Op(OpAtom),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Sqrt(Box<Expr>),
    Anti(Box<Expr>, Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
}

/// A node with the position of its first token. Equality ignores positions.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, o: &Expr) -> bool {
        self.kind == o.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind) -> Expr {
        Expr { kind, pos: Pos { line: 1, col: 1 } }
    }

    fn prec(&self) -> u8 {
        match self.kind {
            ExprKind::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            ExprKind::Bin(..) => 2,
            ExprKind::Neg(_) => 3,
            ExprKind::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.prec() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Imag => f.write_str("i"),
            ExprKind::Var(v) => f.write_str(v.name()),
            ExprKind::Op(a) => f.write_str(&a.name()),
            ExprKind::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, 3)
            }
            ExprKind::Bin(op, a, b) => {
                let (sym, lhs, rhs) = match op {
                    BinOp::Add => (" + ", 1, 2),
                    BinOp::Sub => (" - ", 1, 2),
                    BinOp::Mul => ("*", 2, 3),
                    BinOp::Div => ("/", 2, 3),
                };
                write_at(f, a, lhs)?;
                f.write_str(sym)?;
                write_at(f, b, rhs)
            }
            ExprKind::Pow(a, e) => {
                write_at(f, a, 5)?;
                write!(f, "^{e}")
            }
            ExprKind::Sqrt(a) => write!(f, "sqrt({a})"),
            ExprKind::Anti(a, b) => write!(f, "{{{a}, {b}}}"),
            ExprKind::Comm(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, msg: String) -> ExprError {
        let p = self.pos();
        ExprError::Syntax { line: p.line, col: p.col, msg }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ExprError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", t.describe(), self.peek().describe())))
        }
    }

    fn enter(&mut self) -> Result<(), ExprError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error(format!("nesting deeper than {MAX_DEPTH}")));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            let pos = lhs.pos;
            lhs = Expr { kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)), pos };
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.unary()?;
            let pos = lhs.pos;
            lhs = Expr { kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)), pos };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            let (_, pos) = self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), pos });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(s) => {
                let e: i64 = match s.parse::<i64>() {
                    Ok(e) if e <= MAX_EXPONENT => e,
                    _ => return Err(self.error(format!("exponent {s} is too large"))),
                };
                self.bump();
                let pos = base.pos;
                Ok(Expr { kind: ExprKind::Pow(Box::new(base), if neg { -e } else { e }), pos })
            }
            t => Err(self.error(format!("expected an integer exponent, found {}", t.describe()))),
        }
    }

    fn pair(&mut self, close: Tok) -> Result<(Expr, Expr), ExprError> {
        let a = self.expr()?;
        self.expect(Tok::Comma)?;
        let b = self.expr()?;
        self.expect(close)?;
        Ok((a, b))
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let (tok, pos) = self.bump();
        let kind = match tok {
            Tok::Int(s) => ExprKind::Int(s.parse().expect("lexer yields digits")),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            Tok::LBrace => {
                let (a, b) = self.pair(Tok::RBrace)?;
                ExprKind::Anti(Box::new(a), Box::new(b))
            }
            Tok::LBracket => {
                let (a, b) = self.pair(Tok::RBracket)?;
                ExprKind::Comm(Box::new(a), Box::new(b))
            }
            Tok::Ident(name) => {
                if name == "sqrt" {
                    self.expect(Tok::LParen)?;
                    let e = self.expr()?;
                    self.expect(Tok::RParen)?;
                    ExprKind::Sqrt(Box::new(e))
                } else if name == "i" {
                    ExprKind::Imag
                } else if let Some(a) = OpAtom::from_name(&name) {
                    ExprKind::Op(a)
                } else if let Some(v) = Var::from_name(&name) {
                    ExprKind::Var(v)
                } else {
                    return Err(ExprError::Syntax {
                        line: pos.line,
                        col: pos.col,
                        msg: format!("unknown name `{name}`"),
                    });
                }
            }
            t => {
                return Err(ExprError::Syntax {
                    line: pos.line,
                    col: pos.col,
                    msg: format!("expected an operand, found {}", t.describe()),
                })
            }
        };
        Ok(Expr { kind, pos })
    }
}

/// Parse text into an expression tree.
pub fn parse_ast(text: &str) -> Result<Expr, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, depth: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(format!("unexpected {}", p.peek().describe())));
    }
    Ok(e)
}

/// Like [`parse_ast`] for raw bytes; invalid UTF-8 is a located error.
pub fn parse_ast_bytes(bytes: &[u8]) -> Result<Expr, ExprError> {
    match std::str::from_utf8(bytes) {
        Ok(s) => parse_ast(s),
        Err(e) => {
            let good = std::str::from_utf8(&bytes[..e.valid_up_to()]).unwrap_or("");
            let line = good.matches('\n').count() + 1;
            let col = good.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
            Err(ExprError::Syntax { line, col, msg: "invalid UTF-8".into() })
        }
    }
}
