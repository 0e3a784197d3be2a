//! Exact arithmetic and differentiation in the function field
//! `ℚ(i)(params)(x, y, z)[r, s, t]` and its univariate radial counterpart.

mod field;
mod gauss;
mod poly;
mod rat;
pub mod radial;

pub use field::{DiffVar, FieldElem};
pub use gauss::Gauss;
pub use rat::Rat;
pub use poly::{radicand, Mono, Poly, Var, ALL_VARS, NVARS, RADICALS};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point")]
    Pole,
    #[error("variable `{0}` has no value at the evaluation point")]
    Unassigned(Var),
    #[error("radical `{0}` is not rational at the evaluation point")]
    NonRationalRadical(Var),
}

/// Exact rational square root, if one exists.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A rational point for exact spot-checks, with parameter values.
#[derive(Clone, Debug)]
pub struct EvalPoint {
    pub coords: [BigRational; 3],
    pub rad: Option<BigRational>,
    pub params: Vec<(Var, BigRational)>,
}

impl EvalPoint {
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        EvalPoint {
            coords: [q(x, 1), q(y, 1), q(z, 1)],
            rad: None,
            params: Vec::new(),
        }
    }

    pub fn rational(coords: [BigRational; 3]) -> Self {
        EvalPoint {
            coords,
            rad: None,
            params: Vec::new(),
        }
    }

    pub fn with_param(mut self, v: Var, value: BigRational) -> Self {
        debug_assert!(v.is_parameter());
        self.params.retain(|(w, _)| *w != v);
        self.params.push((v, value));
        self
    }

    pub fn with_rad(mut self, value: BigRational) -> Self {
        self.rad = Some(value);
        self
    }

    pub fn param(&self, v: Var) -> Option<&BigRational> {
        self.params.iter().find(|(w, _)| *w == v).map(|(_, q)| q)
    }

    /// Values for every variable `a` needs; radicals must be rational here.
    pub fn assignment(&self, a: &FieldElem) -> Result<[Option<Gauss>; NVARS], FieldError> {
        let mut vals: [Option<Gauss>; NVARS] = std::array::from_fn(|_| None);
        let [x, y, z] = &self.coords;
        vals[Var::X.index()] = Some(Gauss::real(x.clone()));
        vals[Var::Y.index()] = Some(Gauss::real(y.clone()));
        vals[Var::Z.index()] = Some(Gauss::real(z.clone()));
        for (v, value) in &self.params {
            vals[v.index()] = Some(Gauss::real(value.clone()));
        }
        if let Some(rad) = &self.rad {
            vals[Var::Rad.index()] = Some(Gauss::real(rad.clone()));
        }
        for w in RADICALS {
            if !a.contains_var(w) {
                continue;
            }
            let rc = radicand(w).eval(&vals).map_err(FieldError::Unassigned)?;
            let root = rational_sqrt(&rc.re_big())
                .filter(|_| rc.im.is_zero())
                .ok_or(FieldError::NonRationalRadical(w))?;
            vals[w.index()] = Some(Gauss::real(root));
        }
        Ok(vals)
    }
}

/// Exact evaluation at a rational point where the needed radicals are rational.
pub fn eval_exact(a: &FieldElem, point: &EvalPoint) -> Result<Gauss, FieldError> {
    let vals = point.assignment(a)?;
    a.eval_with(&vals)
}

/// Float values for every variable: coordinates, parameters (unset ones are
/// zero) and the radicals derived from them. `rad` defaults to `r`.
pub fn float_assignment(coords: [f64; 3], params: &[(Var, f64)], rad: Option<f64>) -> [f64; NVARS] {
    let mut v = [0.0; NVARS];
    v[Var::X.index()] = coords[0];
    v[Var::Y.index()] = coords[1];
    v[Var::Z.index()] = coords[2];
    for (p, value) in params {
        v[p.index()] = *value;
    }
    let rho: f64 = coords.iter().map(|c| c * c).sum();
    let beta = v[Var::Beta.index()];
    let gamma = v[Var::Gamma.index()];
    v[Var::R.index()] = rho.sqrt();
    v[Var::S.index()] = (1.0 + beta * rho).sqrt();
    v[Var::T.index()] = (4.0 * rho * rho + gamma).sqrt();
    let rd = rad.unwrap_or(rho.sqrt());
    v[Var::Rad.index()] = rd;
    v[Var::SRad.index()] = (1.0 + beta * rd * rd).sqrt();
    v[Var::TRad.index()] = (4.0 * rd.powi(4) + gamma).sqrt();
    v
}

/// Pythagorean quadruples `(x, y, z, r)` used as exact probe points.
pub const PYTHAGOREAN_POINTS: [(i64, i64, i64, i64); 8] = [
    (1, 2, 2, 3),
    (2, 3, 6, 7),
    (1, 4, 8, 9),
    (4, 4, 7, 9),
    (2, 6, 9, 11),
    (6, 6, 7, 11),
    (3, 4, 12, 13),
    (2, 10, 11, 15),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: Var) -> FieldElem {
        FieldElem::var(v)
    }

    #[test]
    fn r_times_r_is_rho() {
        assert_eq!(FieldElem::r() * FieldElem::r(), FieldElem::rho());
        assert_eq!(
            (FieldElem::r() * FieldElem::r()).to_string(),
            "x^2 + y^2 + z^2"
        );
    }

    #[test]
    fn one_over_one_plus_s_rationalizes() {
        let lhs = FieldElem::one() / (FieldElem::one() + FieldElem::s());
        let beta = fe(Var::Beta);
        let rhs = (FieldElem::s() - FieldElem::one()) / (beta * FieldElem::rho());
        assert_eq!(lhs, rhs);
        assert!(!lhs.denominator().contains_any_radical());
    }

    #[test]
    fn additive_inverse_is_zero() {
        let a = FieldElem::one() / FieldElem::rho();
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_examples() {
        let inv_rho = FieldElem::one() / FieldElem::rho();
        let d = inv_rho.derivative(DiffVar::X);
        let expected = FieldElem::int(-2) * FieldElem::x() / FieldElem::rho().pow(2).unwrap();
        assert_eq!(d, expected);
        let ds = FieldElem::s().derivative(DiffVar::X);
        assert_eq!(ds, fe(Var::Beta) * FieldElem::x() / FieldElem::s());
        assert!(FieldElem::x().derivative(DiffVar::Z).is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = EvalPoint::new(1, 2, 2);
        let inv_rho = FieldElem::one() / FieldElem::rho();
        assert_eq!(eval_exact(&inv_rho, &p).unwrap(), Gauss::from_ratio(1, 9));
        let p7 = p.clone().with_param(Var::Beta, q(7, 1));
        assert_eq!(
            eval_exact(&FieldElem::s(), &p7).unwrap(),
            Gauss::from_int(8)
        );
        let x_over_r = FieldElem::x() / FieldElem::r();
        assert_eq!(
            eval_exact(&x_over_r, &EvalPoint::new(2, 3, 6)).unwrap(),
            Gauss::from_ratio(2, 7)
        );
    }

    #[test]
    fn eval_errors() {
        let inv_x = FieldElem::one() / FieldElem::x();
        assert_eq!(
            eval_exact(&inv_x, &EvalPoint::new(0, 3, 4)),
            Err(FieldError::Pole)
        );
        assert_eq!(
            eval_exact(&FieldElem::r(), &EvalPoint::new(1, 1, 1)),
            Err(FieldError::NonRationalRadical(Var::R))
        );
        assert_eq!(
            eval_exact(&fe(Var::Mu), &EvalPoint::new(1, 2, 2)),
            Err(FieldError::Unassigned(Var::Mu))
        );
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(
            FieldElem::one().checked_div(&FieldElem::zero()),
            Err(FieldError::DivisionByZero)
        );
        let z = FieldElem::r() * FieldElem::r() - FieldElem::rho();
        assert!(FieldElem::one().checked_div(&z).is_err());
    }

    #[test]
    fn rational_sqrt_works() {
        assert_eq!(rational_sqrt(&q(49, 9)), Some(q(7, 3)));
        assert_eq!(rational_sqrt(&q(2, 1)), None);
        assert_eq!(rational_sqrt(&q(-4, 1)), None);
    }
}
