//! Hermitian ("full symmetric") forms of the radial combinations, written
//! term by term, plus the generic route `½(X + X†)` they must agree with.

use crate::exactfield::{radial, FieldElem};
use crate::operator::{Algebra, DiffOp};

use super::basis::{element, Component, Family, Ops};
use super::{MultipletError, RadialCombo};

struct Coeffs {
    f: Vec<FieldElem>,
    fd: Vec<FieldElem>,
}

impl Coeffs {
    fn new(combo: &RadialCombo) -> Self {
        let f = combo.f.iter().map(radial::radial_to_cartesian).collect();
        let fd = combo
            .f
            .iter()
            .map(|g| radial::radial_to_cartesian(&radial::d_dr(g)))
            .collect();
        Coeffs { f, fd }
    }
    /// `f_j`, 1-based
    fn f(&self, j: usize) -> &FieldElem {
        &self.f[j - 1]
    }
    /// `f_j'`, 1-based
    fn d(&self, j: usize) -> &FieldElem {
        &self.fd[j - 1]
    }
}

fn m(f: FieldElem) -> DiffOp {
    DiffOp::scalar(f)
}

/// The written Hermitian form. Scalars and pseudoscalars take
/// `Component::Scalar`, vectors any `Vector(i)`, tensors only `Tensor(1, 2)`.
pub fn assemble(
    alg: &Algebra,
    combo: &RadialCombo,
    component: Component,
) -> Result<DiffOp, MultipletError> {
    combo.check()?;
    component.check(combo.family)?;
    let c = Coeffs::new(combo);
    let o = Ops { alg };
    let ih = FieldElem::i() * alg.hbar.clone();
    let half_ih = &ih / &FieldElem::int(2);
    let r = FieldElem::r();
    let inv_r = FieldElem::one() / r.clone();
    let n = FieldElem::int;
    Ok(match (combo.family, component) {
        (Family::S, _) => m(c.f(1).clone())
            .add(&o.xp().scale(c.f(2)))
            .add(&o.sl().scale(c.f(3)))
            .sub(&m(&half_ih * (&r * c.d(2) + n(3) * c.f(2)))),
        (Family::P, _) => {
            let corr =
                &half_ih * &inv_r * (c.d(2) + FieldElem::rho() * c.d(3) + n(4) * &r * c.f(3));
            o.sx()
                .scale(c.f(1))
                .add(&o.sp().scale(c.f(2)))
                .add(&o.sx().compose(&o.xp()).scale(c.f(3)))
                .sub(&o.sx().scale(&corr))
        }
        (Family::V, Component::Vector(i)) => {
            let i = i - 1;
            let inner = m(c.f(1) - &half_ih * (c.d(2) * &inv_r + &r * c.d(3) + n(4) * c.f(3)))
                .add(&o.xp().scale(c.f(3)))
                .add(&o.sl().scale(c.f(4)));
            // the printed form has 2 f5 here, which is not Hermitian
            let wedge =
                m(&half_ih * (c.d(6) * &inv_r + c.f(4) - c.f(8) + &r * c.d(5) + n(4) * c.f(5)))
                    .neg()
                    .add(&o.xp().scale(c.f(5)))
                    .add(&m(c.f(7).clone()));
            o.x(i)
                .compose(&inner)
                .add(&o.p(i).scale(c.f(2)))
                .add(&o.spw(i).scale(c.f(6)))
                .add(&o.sx().compose(&o.l(i)).scale(c.f(8)))
                .add(&o.sxw(i).compose(&wedge))
        }
        (Family::A, Component::Vector(i)) => {
            let i = i - 1;
            let sig_part = m(c.f(2) - &half_ih * (n(3) * c.f(3) + &r * c.d(3) + c.f(4) + c.f(6)))
                .add(&o.xp().scale(c.f(3)));
            let xsx_part = m(c.f(5)
                - &half_ih * &inv_r * (c.d(4) + c.d(6))
                - &half_ih * (n(5) * c.f(7) + &r * c.d(7)))
            .add(&o.xp().scale(c.f(7)));
            o.l(i)
                .scale(c.f(1))
                .add(&o.sig(i).compose(&sig_part))
                .add(&o.x(i).compose(&o.sx()).compose(&xsx_part))
                .add(&o.x(i).compose(&o.sp()).scale(c.f(4)))
                .add(&o.sx().compose(&o.p(i)).scale(c.f(6)))
        }
        (Family::T, Component::Tensor(1, 2) | Component::Tensor(2, 1)) => {
            let (x, y, z) = (FieldElem::x(), FieldElem::y(), FieldElem::z());
            let (sg1, sg2, sg3) = (o.sig(0), o.sig(1), o.sig(2));
            let xy = m(&x * &y);
            let first =
                m(c.f(1) - &half_ih * (&r * c.d(2) + n(5) * c.f(2)) - &ih * c.d(4) * &inv_r)
                    .add(&o.xp().scale(c.f(2)))
                    .add(&o.sl().scale(c.f(3)));
            let spin = sg1
                .scale(&(&z * &x))
                .sub(&sg2.scale(&(&z * &y)))
                .sub(&sg3.scale(&(&x * &x - &y * &y)));
            let spin_coef = m(&half_ih
                * (c.f(3) - c.f(5) + &r * c.d(7) + n(5) * c.f(7) + (c.d(8) + c.d(9)) * &inv_r)
                - c.f(6))
            .sub(&o.xp().scale(c.f(7)));
            let (p1, p2, p3) = (o.p(0), o.p(1), o.p(2));
            let f8_part = sg2
                .compose(&p3)
                .scale(&y)
                .sub(&sg3.compose(&p2).scale(&y))
                .add(&sg3.compose(&p1).scale(&x))
                .sub(&sg1.compose(&p3).scale(&x));
            let f9_part = sg3
                .scale(&y)
                .sub(&sg2.scale(&z))
                .compose(&p2)
                .add(&sg1.scale(&z).sub(&sg3.scale(&x)).compose(&p1));
            xy.compose(&first)
                .add(&spin.compose(&spin_coef))
                .add(&p2.scale(&x).add(&p1.scale(&y)).scale(c.f(4)))
                .add(
                    &o.sx()
                        .compose(&o.l(0).scale(&y).add(&o.l(1).scale(&x)))
                        .scale(c.f(5)),
                )
                .add(&f8_part.scale(c.f(8)))
                .sub(&f9_part.scale(c.f(9)))
                .add(
                    &sg2.compose(&o.l(0))
                        .add(&sg1.compose(&o.l(1)))
                        .scale(c.f(10)),
                )
        }
        (Family::Y, Component::Tensor(1, 2) | Component::Tensor(2, 1)) => {
            let (x, y, z) = (FieldElem::x(), FieldElem::y(), FieldElem::z());
            let (sg1, sg2, sg3) = (o.sig(0), o.sig(1), o.sig(2));
            let xy = m(&x * &y);
            let inner = m(&ih * c.d(1) * &inv_r / &n(2) - c.f(2)
                + &half_ih * &r * c.d(3)
                + n(3) * &ih * c.f(3)
                + &ih * c.d(4) * &inv_r)
            .sub(&o.xp().scale(c.f(3)));
            let pair = sg1.scale(&y).add(&sg2.scale(&x));
            let pair_coef = m(&half_ih * (c.f(1) + c.f(4) + &r * c.d(7) - c.f(9)) - c.f(6)
                + n(2) * &ih * c.f(7)
                + &half_ih * c.d(8) * &inv_r)
            .sub(&o.xp().scale(c.f(7)));
            let (p1, p2) = (o.p(0), o.p(1));
            let f9_part = sg3
                .scale(&x)
                .sub(&sg1.scale(&z))
                .compose(&o.l(0))
                .add(&sg2.scale(&z).sub(&sg3.scale(&y)).compose(&o.l(1)));
            xy.compose(&o.sp())
                .scale(c.f(1))
                .sub(&xy.compose(&o.sx()).compose(&inner))
                .sub(&pair.compose(&pair_coef))
                .add(
                    &o.sx()
                        .compose(&p2.scale(&x).add(&p1.scale(&y)))
                        .scale(c.f(4)),
                )
                .add(&o.l(0).scale(&y).add(&o.l(1).scale(&x)).scale(c.f(5)))
                .add(&sg1.compose(&p2).add(&sg2.compose(&p1)).scale(c.f(8)))
                .add(&f9_part.scale(c.f(9)))
        }
        (family, component) => return Err(MultipletError::InvalidComponent { family, component }),
    })
}

/// `Σ f_j B_j` with the bare elements.
pub fn bare_combination(
    alg: &Algebra,
    combo: &RadialCombo,
    component: Component,
) -> Result<DiffOp, MultipletError> {
    combo.check()?;
    let mut out = DiffOp::zero();
    for (j, f) in combo.f.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let e = element(alg, combo.family, j + 1, component)?;
        out = out.add(&DiffOp::scalar(radial::radial_to_cartesian(f)).compose(&e));
    }
    Ok(out)
}

/// `½(X + X†)` of the bare combination; valid for every component.
pub fn symmetrize(
    alg: &Algebra,
    combo: &RadialCombo,
    component: Component,
) -> Result<DiffOp, MultipletError> {
    let b = bare_combination(alg, combo, component)?;
    Ok(b.add(&b.adjoint()).scale(&FieldElem::ratio(1, 2)))
}
