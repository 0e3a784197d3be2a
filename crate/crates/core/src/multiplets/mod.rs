//! O(3) multiplets of first-order integrals: the bare bases, their
//! Hermitian radial combinations, the per-family radial equations, and the
//! catalog of superintegrable cases.

mod appendix;
mod basis;
mod catalog;
mod closures;
mod radial_ode;

pub use appendix::{assemble, bare_combination, symmetrize};
pub use basis::{element, parity, traceless_element, Component, Family, MultipletBasis, FAMILIES};
pub use catalog::{
    case1_axial_as_printed, case1_extras, pseudoscalar_beta, pseudoscalar_one, pseudoscalar_two,
    theorem1_catalog, verify_catalog, CatalogCase, CatalogCheck, EnvelopeIdentity,
};
pub use closures::{verify_case_closures, ClosureCheck};
pub use radial_ode::{
    pseudoscalar_compatibility, radial_ode_residuals, tensor_compatibility, RadialEquation,
};

use thiserror::Error;

use crate::exactfield::{radial, FieldElem};

#[derive(Debug, Error, PartialEq)]
pub enum MultipletError {
    #[error("component {component:?} is not available for the {family:?} family")]
    InvalidComponent {
        family: Family,
        component: Component,
    },
    #[error("{family:?} has no element {index}")]
    InvalidIndex { family: Family, index: usize },
    #[error("{family:?} takes {expected} coefficients, got {got}")]
    CoefficientCount {
        family: Family,
        expected: usize,
        got: usize,
    },
    #[error("coefficient f{0} is not a function of r alone")]
    NotRadial(usize),
}

/// `Σ f_j(r) B_j` for one family; the `f_j` live in the radial field.
#[derive(Clone, Debug)]
pub struct RadialCombo {
    pub family: Family,
    pub f: Vec<FieldElem>,
}

impl RadialCombo {
    pub fn new(family: Family, f: Vec<FieldElem>) -> Self {
        RadialCombo { family, f }
    }

    pub fn zero(family: Family) -> Self {
        RadialCombo {
            family,
            f: vec![FieldElem::zero(); family.count()],
        }
    }

    /// Set `f_j` (1-based).
    pub fn with(mut self, j: usize, f: FieldElem) -> Self {
        self.f[j - 1] = f;
        self
    }

    pub(crate) fn check(&self) -> Result<(), MultipletError> {
        if self.f.len() != self.family.count() {
            return Err(MultipletError::CoefficientCount {
                family: self.family,
                expected: self.family.count(),
                got: self.f.len(),
            });
        }
        if let Some(j) = self.f.iter().position(|g| !radial::is_radial(g)) {
            return Err(MultipletError::NotRadial(j + 1));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{radial, Var};
    use crate::operator::Algebra;

    fn generic(family: Family) -> RadialCombo {
        let r = radial::r();
        let f = (0..family.count())
            .map(|j| match j % 4 {
                0 => FieldElem::int(j as i64 + 1) / r.clone(),
                1 => r.clone() * FieldElem::int(j as i64 - 2),
                2 => FieldElem::ratio(1, j as i64 + 1) / (FieldElem::one() + r.clone() * r.clone()),
                _ => FieldElem::int(j as i64) * r.clone() * r.clone(),
            })
            .collect();
        RadialCombo::new(family, f)
    }

    #[test]
    fn appendix_matches_symmetrization() {
        let alg = Algebra::unit();
        let comps = |fam: Family| match fam {
            Family::S | Family::P => vec![Component::Scalar],
            Family::V | Family::A => vec![Component::Vector(1), Component::Vector(3)],
            _ => vec![Component::Tensor(1, 2)],
        };
        let mut bad = Vec::new();
        for fam in FAMILIES {
            let combo = generic(fam);
            for c in comps(fam) {
                let a = assemble(&alg, &combo, c).unwrap();
                let s = symmetrize(&alg, &combo, c).unwrap();
                if a != s {
                    // isolate the offending coefficients
                    for j in 1..=fam.count() {
                        let single = RadialCombo::zero(fam).with(j, combo.f[j - 1].clone());
                        if assemble(&alg, &single, c).unwrap()
                            != symmetrize(&alg, &single, c).unwrap()
                        {
                            bad.push((fam, c, j));
                        }
                    }
                }
            }
        }
        assert!(bad.is_empty(), "{bad:?}");
    }

    fn unit_alg() -> Algebra {
        Algebra::unit()
    }

    fn some_component(fam: Family) -> Component {
        match fam {
            Family::S | Family::P => Component::Scalar,
            Family::V | Family::A => Component::Vector(2),
            _ => Component::Tensor(1, 2),
        }
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = FAMILIES
            .iter()
            .map(|f| MultipletBasis::new(*f).len())
            .collect();
        assert_eq!(counts, vec![3, 3, 8, 7, 10, 9]);
        assert_eq!(MultipletBasis::new(Family::T).labels[9], "T10");
    }

    #[test]
    fn parity_signs() {
        let alg = unit_alg();
        for fam in FAMILIES {
            let sign = FieldElem::int(fam.parity());
            let comps = match fam {
                Family::T | Family::Y => vec![Component::Tensor(1, 2), Component::Tensor(3, 3)],
                _ => vec![some_component(fam)],
            };
            for c in comps {
                for j in 1..=fam.count() {
                    let e = element(&alg, fam, j, c).unwrap();
                    assert_eq!(parity(&e), e.scale(&sign), "{fam:?}{j} {c:?}");
                }
            }
        }
    }

    #[test]
    fn assembled_forms_are_self_adjoint() {
        let alg = Algebra::symbolic();
        for fam in FAMILIES {
            let a = assemble(&alg, &generic(fam), some_component(fam)).unwrap();
            assert_eq!(a.adjoint(), a, "{fam:?}");
        }
    }

    #[test]
    fn scalar_example() {
        let alg = Algebra::symbolic();
        let (c1, c2) = (FieldElem::var(Var::C1), FieldElem::var(Var::C2));
        let combo = RadialCombo::zero(Family::S)
            .with(1, c1.clone())
            .with(3, c2.clone());
        let x = assemble(&alg, &combo, Component::Scalar).unwrap();
        assert_eq!(x, alg.scalar(c1).add(&alg.sigma_dot_l().scale(&c2)));
    }

    #[test]
    fn pseudoscalar_example() {
        let alg = Algebra::symbolic();
        let (c1, c2) = (FieldElem::var(Var::C1), FieldElem::var(Var::C2));
        let r = radial::r();
        let combo = RadialCombo::new(Family::P, vec![&c2 / &r, -(&c1 * &r), &c1 / &r]);
        let x = assemble(&alg, &combo, Component::Scalar).unwrap();
        let (rc, sx) = (FieldElem::r(), alg.sigma_dot_x());
        let bare = sx
            .scale(&(&c2 / &rc))
            .add(&alg.sigma_dot_p().scale(&(-(&c1 * &rc))))
            .add(&sx.compose(&alg.x_dot_p()).scale(&(&c1 / &rc)));
        // the correction is −iħ c1 (σ, x)/r
        let corr = sx.scale(&(-(FieldElem::i() * alg.hbar.clone() * c1.clone()) / rc.clone()));
        assert_eq!(x, bare.add(&corr));
        let expected = pseudoscalar_two(&alg)
            .scale(&c1)
            .add(&pseudoscalar_one(&alg).scale(&c2));
        assert_eq!(x, expected);
    }

    #[test]
    fn axial_example_is_total_angular_momentum() {
        let alg = unit_alg();
        let combo = RadialCombo::zero(Family::A)
            .with(1, FieldElem::one())
            .with(2, FieldElem::ratio(1, 2));
        for i in 1..=3 {
            assert_eq!(
                assemble(&alg, &combo, Component::Vector(i)).unwrap(),
                alg.j(i)
            );
        }
    }

    #[test]
    fn compatibility_examples() {
        let r = radial::r();
        let half = FieldElem::one() / (FieldElem::int(2) * &r * &r);
        assert!(pseudoscalar_compatibility(&half).is_zero());
        let case2 = &half * (FieldElem::one() + FieldElem::one() / radial::s());
        assert!(pseudoscalar_compatibility(&case2).is_zero());
        assert!(!pseudoscalar_compatibility(&(FieldElem::one() / &r)).is_zero());
        for sign in [1, -1] {
            let v = &half + FieldElem::int(sign) / radial::t();
            assert!(tensor_compatibility(&v).is_zero());
        }
        let eqs = radial_ode_residuals(&RadialCombo::zero(Family::P), &half);
        assert_eq!(eqs.len(), 3);
        assert!(eqs.iter().all(|e| e.residual.is_zero()));
    }

    #[test]
    fn invalid_components_and_indices() {
        let alg = unit_alg();
        let s = RadialCombo::zero(Family::S);
        assert!(matches!(
            assemble(&alg, &s, Component::Vector(1)),
            Err(MultipletError::InvalidComponent { .. })
        ));
        let t = RadialCombo::zero(Family::T);
        assert!(assemble(&alg, &t, Component::Tensor(1, 3)).is_err());
        assert!(element(&alg, Family::T, 1, Component::Tensor(4, 1)).is_err());
        assert_eq!(
            element(&alg, Family::A, 8, Component::Vector(1)),
            Err(MultipletError::InvalidIndex {
                family: Family::A,
                index: 8
            })
        );
        let short = RadialCombo::new(Family::V, vec![FieldElem::one()]);
        assert!(matches!(
            assemble(&alg, &short, Component::Vector(1)),
            Err(MultipletError::CoefficientCount {
                expected: 8,
                got: 1,
                ..
            })
        ));
        let cart = RadialCombo::zero(Family::S).with(2, FieldElem::x());
        assert_eq!(
            assemble(&alg, &cart, Component::Scalar),
            Err(MultipletError::NotRadial(2))
        );
    }

    #[test]
    fn trace_subtraction() {
        let alg = unit_alg();
        for (fam, j) in [(Family::T, 1), (Family::T, 10), (Family::Y, 6)] {
            let tr = (1..=3).fold(crate::operator::DiffOp::zero(), |acc, a| {
                acc.add(&traceless_element(&alg, fam, j, a, a).unwrap())
            });
            assert!(tr.is_zero());
            assert_eq!(
                traceless_element(&alg, fam, j, 1, 2).unwrap(),
                element(&alg, fam, j, Component::Tensor(1, 2)).unwrap()
            );
        }
    }

    #[test]
    fn rotational_invariance() {
        let alg = unit_alg();
        let j: Vec<_> = (1..=3).map(|i| alg.j(i)).collect();
        let j2 = j.iter().fold(crate::operator::DiffOp::zero(), |acc, ji| {
            acc.add(&ji.compose(ji))
        });
        for fam in [Family::S, Family::P] {
            for k in 1..=3 {
                let e = element(&alg, fam, k, Component::Scalar).unwrap();
                for ji in &j {
                    assert!(ji.commutator(&e).is_zero(), "{fam:?}{k}");
                }
                if fam == Family::P {
                    assert!(j2.commutator(&e).is_zero());
                }
            }
        }
    }

    #[test]
    fn catalog_shape() {
        let alg = Algebra::symbolic();
        let cat = theorem1_catalog(&alg);
        assert_eq!(
            cat.iter().map(|c| c.id).collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 4]
        );
        let h = alg.hbar.clone();
        let inv = FieldElem::one() / FieldElem::rho();
        assert_eq!(cat[0].v0, vec![&h * &h * &inv]);
        assert_eq!(cat[0].v1, &h * &inv);
        assert_eq!(cat[2].integrals.len(), 5);
        assert_eq!(
            cat[2]
                .integrals
                .iter()
                .filter(|(n, _)| n.starts_with("X_P"))
                .count(),
            2
        );
        for c in &cat[3..] {
            assert_eq!(c.v0, vec![&h * &c.v1]);
        }
    }

    #[test]
    fn catalog_integrals_commute() {
        let alg = Algebra::symbolic();
        let cat = theorem1_catalog(&alg);
        let bad: Vec<_> = verify_catalog(&alg, &cat)
            .into_iter()
            .filter(|c| !c.commutes)
            .collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn enveloping_identities() {
        let alg = Algebra::symbolic();
        for e in case1_extras(&alg) {
            assert_eq!(e.direct, e.in_generators, "{}", e.name);
            assert_eq!(e.direct.adjoint(), e.direct, "{}", e.name);
        }
    }

    #[test]
    fn printed_axial_extra_fails() {
        let alg = Algebra::symbolic();
        let h = alg.hbar.clone();
        let inv = FieldElem::one() / FieldElem::rho();
        let ham = alg.hamiltonian(&(&h * &h * &inv), &(&h * &inv));
        for i in 1..=3 {
            let a = case1_axial_as_printed(&alg, i);
            assert_ne!(a.adjoint(), a);
            assert!(!ham.commutator(&a).is_zero());
        }
    }
}
