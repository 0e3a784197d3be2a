//! The bare O(3) multiplet elements, each built as the operator product in
//! the order it is written.

use serde::Serialize;

use crate::exactfield::FieldElem;
use crate::gauge::levi_civita;
use crate::operator::{Algebra, DiffOp};

use super::MultipletError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    S,
    P,
    V,
    A,
    T,
    Y,
}

pub const FAMILIES: [Family; 6] = [
    Family::S,
    Family::P,
    Family::V,
    Family::A,
    Family::T,
    Family::Y,
];

impl Family {
    pub fn count(self) -> usize {
        match self {
            Family::S | Family::P => 3,
            Family::V => 8,
            Family::A => 7,
            Family::T => 10,
            Family::Y => 9,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::S => "scalar",
            Family::P => "pseudoscalar",
            Family::V => "vector",
            Family::A => "axial vector",
            Family::T => "tensor",
            Family::Y => "pseudotensor",
        }
    }

    /// Sign picked up under `x → −x, p → −p, σ → σ`.
    pub fn parity(self) -> i64 {
        match self {
            Family::S | Family::A | Family::T => 1,
            Family::P | Family::V | Family::Y => -1,
        }
    }

    pub fn from_letter(s: &str) -> Option<Family> {
        Some(match s.to_ascii_uppercase().as_str() {
            "S" => Family::S,
            "P" => Family::P,
            "V" => Family::V,
            "A" => Family::A,
            "T" => Family::T,
            "Y" => Family::Y,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::S => 'S',
            Family::P => 'P',
            Family::V => 'V',
            Family::A => 'A',
            Family::T => 'T',
            Family::Y => 'Y',
        }
    }
}

/// Which component of a multiplet. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Component {
    Scalar,
    Vector(usize),
    Tensor(usize, usize),
}

impl Component {
    pub(crate) fn check(self, family: Family) -> Result<(), MultipletError> {
        let ok = match (family, self) {
            (Family::S | Family::P, Component::Scalar) => true,
            (Family::V | Family::A, Component::Vector(i)) => (1..=3).contains(&i),
            (Family::T | Family::Y, Component::Tensor(i, k)) => {
                (1..=3).contains(&i) && (1..=3).contains(&k)
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(MultipletError::InvalidComponent {
                family,
                component: self,
            })
        }
    }
}

/// Shorthand builders over a fixed `Algebra`; all indices 0-based.
pub(crate) struct Ops<'a> {
    pub alg: &'a Algebra,
}

impl Ops<'_> {
    pub fn x(&self, i: usize) -> DiffOp {
        DiffOp::scalar(FieldElem::coord(i))
    }
    pub fn p(&self, i: usize) -> DiffOp {
        self.alg.p(i + 1)
    }
    pub fn l(&self, i: usize) -> DiffOp {
        self.alg.l(i + 1)
    }
    pub fn sig(&self, i: usize) -> DiffOp {
        self.alg.sigma(i + 1)
    }
    pub fn xp(&self) -> DiffOp {
        self.alg.x_dot_p()
    }
    pub fn sl(&self) -> DiffOp {
        self.alg.sigma_dot_l()
    }
    pub fn sx(&self) -> DiffOp {
        self.alg.sigma_dot_x()
    }
    pub fn sp(&self) -> DiffOp {
        self.alg.sigma_dot_p()
    }
    fn wedge(&self, i: usize, other: &dyn Fn(usize) -> DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for j in 0..3 {
            for k in 0..3 {
                let e = levi_civita(i + 1, j + 1, k + 1);
                if e != 0 {
                    out = out.add(&self.sig(j).compose(&other(k)).scale(&FieldElem::int(e)));
                }
            }
        }
        out
    }
    /// `(σ ∧ x)_i`
    pub fn sxw(&self, i: usize) -> DiffOp {
        self.wedge(i, &|k| self.x(k))
    }
    /// `(σ ∧ p)_i`
    pub fn spw(&self, i: usize) -> DiffOp {
        self.wedge(i, &|k| self.p(k))
    }
    /// `a^i b^k + a^k b^i`
    pub fn sym(
        &self,
        a: &dyn Fn(usize) -> DiffOp,
        b: &dyn Fn(usize) -> DiffOp,
        i: usize,
        k: usize,
    ) -> DiffOp {
        a(i).compose(&b(k)).add(&a(k).compose(&b(i)))
    }
}

fn scalar_element(o: &Ops, family: Family, j: usize) -> DiffOp {
    match (family, j) {
        (Family::S, 1) => DiffOp::identity(),
        (Family::S, 2) => o.xp(),
        (Family::S, 3) => o.sl(),
        (Family::P, 1) => o.sx(),
        (Family::P, 2) => o.sp(),
        (Family::P, 3) => o.xp().compose(&o.sx()),
        _ => unreachable!(),
    }
}

fn vector_element(o: &Ops, j: usize, i: usize) -> DiffOp {
    match j {
        1 => o.x(i),
        2 => o.p(i),
        3 => o.xp().compose(&o.x(i)),
        4 => o.sl().compose(&o.x(i)),
        5 => o.xp().compose(&o.sxw(i)),
        6 => o.spw(i),
        7 => o.sxw(i),
        8 => o.sx().compose(&o.l(i)),
        _ => unreachable!(),
    }
}

fn axial_element(o: &Ops, j: usize, i: usize) -> DiffOp {
    match j {
        1 => o.l(i),
        2 => o.sig(i),
        3 => o.xp().compose(&o.sig(i)),
        4 => o.sp().compose(&o.x(i)),
        5 => o.sx().compose(&o.x(i)),
        6 => o.sx().compose(&o.p(i)),
        7 => o.xp().compose(&o.sx()).compose(&o.x(i)),
        _ => unreachable!(),
    }
}

fn tensor_element(o: &Ops, j: usize, i: usize, k: usize) -> DiffOp {
    let xx = o.x(i).compose(&o.x(k));
    let x = |a: usize| o.x(a);
    let p = |a: usize| o.p(a);
    let l = |a: usize| o.l(a);
    let sig = |a: usize| o.sig(a);
    let sxw = |a: usize| o.sxw(a);
    let spw = |a: usize| o.spw(a);
    match j {
        1 => xx,
        2 => o.xp().compose(&xx),
        3 => o.sl().compose(&xx),
        4 => o.sym(&x, &p, i, k),
        5 => o.sx().compose(&o.sym(&x, &l, i, k)),
        6 => o.sym(&x, &sxw, i, k),
        7 => o.xp().compose(&o.sym(&x, &sxw, i, k)),
        8 => o.sym(&x, &spw, i, k),
        9 => o.sym(&p, &sxw, i, k),
        10 => o.sym(&l, &sig, i, k),
        _ => unreachable!(),
    }
}

fn pseudotensor_element(o: &Ops, j: usize, i: usize, k: usize) -> DiffOp {
    let xx = o.x(i).compose(&o.x(k));
    let x = |a: usize| o.x(a);
    let p = |a: usize| o.p(a);
    let l = |a: usize| o.l(a);
    let sig = |a: usize| o.sig(a);
    let sxw = |a: usize| o.sxw(a);
    match j {
        1 => o.sp().compose(&xx),
        2 => o.sx().compose(&xx),
        3 => o.xp().compose(&o.sx()).compose(&xx),
        4 => o.sx().compose(&o.sym(&x, &p, i, k)),
        5 => o.sym(&x, &l, i, k),
        6 => o.sym(&x, &sig, i, k),
        7 => o.xp().compose(&o.sym(&x, &sig, i, k)),
        8 => o.sym(&p, &sig, i, k),
        9 => o.sym(&l, &sxw, i, k),
        _ => unreachable!(),
    }
}

/// Bare element `j` (1-based) of a family, in the written operator order.
pub fn element(
    alg: &Algebra,
    family: Family,
    j: usize,
    component: Component,
) -> Result<DiffOp, MultipletError> {
    component.check(family)?;
    if j == 0 || j > family.count() {
        return Err(MultipletError::InvalidIndex { family, index: j });
    }
    let o = Ops { alg };
    Ok(match component {
        Component::Scalar => scalar_element(&o, family, j),
        Component::Vector(i) => match family {
            Family::V => vector_element(&o, j, i - 1),
            _ => axial_element(&o, j, i - 1),
        },
        Component::Tensor(i, k) => match family {
            Family::T => tensor_element(&o, j, i - 1, k - 1),
            _ => pseudotensor_element(&o, j, i - 1, k - 1),
        },
    })
}

/// Tensor element with `(1/3) δ^{ik} Tr` removed. Off-diagonal components
/// are unchanged.
pub fn traceless_element(
    alg: &Algebra,
    family: Family,
    j: usize,
    i: usize,
    k: usize,
) -> Result<DiffOp, MultipletError> {
    let e = element(alg, family, j, Component::Tensor(i, k))?;
    if i != k {
        return Ok(e);
    }
    let mut tr = DiffOp::zero();
    for a in 1..=3 {
        tr = tr.add(&element(alg, family, j, Component::Tensor(a, a))?);
    }
    Ok(e.sub(&tr.scale(&FieldElem::ratio(1, 3))))
}

/// The listed elements of one family.
#[derive(Clone, Debug, Serialize)]
pub struct MultipletBasis {
    pub family: Family,
    pub labels: Vec<String>,
}

impl MultipletBasis {
    pub fn new(family: Family) -> Self {
        let labels = (1..=family.count())
            .map(|j| format!("{}{}", family.letter(), j))
            .collect();
        MultipletBasis { family, labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn element(
        &self,
        alg: &Algebra,
        j: usize,
        component: Component,
    ) -> Result<DiffOp, MultipletError> {
        element(alg, self.family, j, component)
    }
}

/// `x → −x`, `∂ → −∂`, spin untouched.
pub fn parity(op: &DiffOp) -> DiffOp {
    use crate::exactfield::{Poly, Var};
    let flip = |f: &FieldElem| {
        f.substitute(&|v| match v {
            Var::X | Var::Y | Var::Z => Some(Poly::var(v).neg()),
            _ => None,
        })
        .expect("reflection keeps denominators nonzero")
    };
    let mut out = DiffOp::zero();
    for (d, c) in op.terms() {
        let sign = if crate::operator::order_of(d) % 2 == 0 {
            1
        } else {
            -1
        };
        let c =
            crate::operator::PauliCoeff::new(c.c.clone().map(|f| flip(&f) * FieldElem::int(sign)));
        out.add_term(*d, c);
    }
    out
}
