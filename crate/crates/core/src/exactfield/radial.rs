//! The univariate radial field: rational functions of a free radial
//! coordinate `rad` with `srad = sqrt(1 + beta rad^2)` and
//! `trad = sqrt(4 rad^4 + gamma)`, embedded into the Cartesian field by
//! `rad → r`, `srad → s`, `trad → t`.

use super::poly::{Poly, Var};
use super::{DiffVar, FieldElem};

/// The radial coordinate.
pub fn r() -> FieldElem {
    FieldElem::var(Var::Rad)
}

/// `sqrt(1 + beta r^2)` in the radial field.
pub fn s() -> FieldElem {
    FieldElem::var(Var::SRad)
}

/// `sqrt(4 r^4 + gamma)` in the radial field.
pub fn t() -> FieldElem {
    FieldElem::var(Var::TRad)
}

/// `d/dr` in the radial field.
pub fn d_dr(f: &FieldElem) -> FieldElem {
    f.derivative(DiffVar::Rad)
}

/// True when `f` lives in the radial field (no Cartesian variables).
pub fn is_radial(f: &FieldElem) -> bool {
    ![Var::X, Var::Y, Var::Z, Var::R, Var::S, Var::T]
        .iter()
        .any(|v| f.contains_var(*v))
}

/// Embed a radial element into the Cartesian field.
pub fn radial_to_cartesian(f: &FieldElem) -> FieldElem {
    debug_assert!(is_radial(f), "not a radial element: {f}");
    f.substitute(&|v| match v {
        Var::Rad => Some(Poly::var(Var::R)),
        Var::SRad => Some(Poly::var(Var::S)),
        Var::TRad => Some(Poly::var(Var::T)),
        _ => None,
    })
    .expect("embedding preserves nonzero denominators")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_examples() {
        let f = FieldElem::one() / (FieldElem::int(2) * r() * r());
        assert_eq!(
            radial_to_cartesian(&f),
            FieldElem::one() / (FieldElem::int(2) * FieldElem::rho())
        );
        assert_eq!(radial_to_cartesian(&r()), FieldElem::r());
        let g = FieldElem::one() / (FieldElem::int(-1) + s());
        let expected =
            (FieldElem::s() + FieldElem::one()) / (FieldElem::var(Var::Beta) * FieldElem::rho());
        assert_eq!(radial_to_cartesian(&g), expected);
    }

    #[test]
    fn embedding_commutes_with_differentiation() {
        let f = (FieldElem::int(3) * r() + s()) / (FieldElem::one() + r() * r());
        let lhs = radial_to_cartesian(&d_dr(&f));
        let rhs = radial_to_cartesian(&f).d_dr();
        assert_eq!(lhs, rhs);
    }
}
