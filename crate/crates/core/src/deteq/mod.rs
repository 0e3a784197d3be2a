//! Determining equations for first-order integrals, the algebraic system
//! `M·Φ = R` for the spin coefficients, and a cross-check of the transcribed
//! equations against coefficients extracted directly from `[H, X]`.

mod equations;
mod msystem;
mod random;

pub use msystem::{
    check_phi_solution, extended_rank_probe, gauge_case_phi, m_residual, phi_equation_residuals,
    radial_case_phi, rank_probe, symbolic_a, symbolic_alpha, symbolic_b, MSystem, PhiCase,
    RankError, RankProbe, RankWitness,
};
pub use random::{random_draw, Draw};

use serde::Serialize;

use crate::exactfield::FieldElem;
use crate::operator::{order_of, Algebra, Deriv, DiffOp, IntegralAnsatz};

use equations::Ctx;

#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub order2: Vec<FieldElem>,
    pub order1: Vec<FieldElem>,
    pub order0: Vec<FieldElem>,
    pub all_zero: bool,
}

impl ResidualReport {
    /// `(order, index)` of every nonzero residual.
    pub fn nonzero(&self) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for (order, list) in [(2, &self.order2), (1, &self.order1), (0, &self.order0)] {
            for (i, r) in list.iter().enumerate() {
                if !r.is_zero() {
                    out.push((order, i));
                }
            }
        }
        out
    }
}

/// Evaluate every published equation for the given data.
pub fn residuals(
    alg: &Algebra,
    ansatz: &IntegralAnsatz,
    v0: &FieldElem,
    v1: &FieldElem,
) -> ResidualReport {
    let c = Ctx::new(&alg.hbar, ansatz, v0, v1);
    let order2 = equations::order2(&c);
    let order1 = equations::order1(&c);
    let order0 = equations::order0(&c);
    let all_zero = order2
        .iter()
        .chain(&order1)
        .chain(&order0)
        .all(FieldElem::is_zero);
    ResidualReport {
        order2,
        order1,
        order0,
        all_zero,
    }
}

/// How a published equation relates to the raw commutator: it equals
/// `λ · Im(c_j)`, where `c_j` is Pauli component `j` of the coefficient of
/// `p^α` in `[H, X]` and `λ = num/den · ħ^hbar_pow`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub deriv: Deriv,
    pub pauli: usize,
    pub num: i64,
    pub den: i64,
    pub hbar_pow: i32,
}

const fn nz(deriv: Deriv, pauli: usize, num: i64, den: i64, hbar_pow: i32) -> Normalization {
    Normalization {
        deriv,
        pauli,
        num,
        den,
        hbar_pow,
    }
}

pub const ORDER2_NORMALIZATION: [Normalization; 18] = [
    nz([2, 0, 0], 3, -1, 1, 0),
    nz([2, 0, 0], 2, -1, 1, 0),
    nz([0, 2, 0], 1, -1, 1, 0),
    nz([0, 2, 0], 3, -1, 1, 0),
    nz([0, 0, 2], 1, -1, 1, 0),
    nz([0, 0, 2], 2, -1, 1, 0),
    nz([2, 0, 0], 1, 1, 1, 0),
    nz([0, 2, 0], 2, 1, 1, 0),
    nz([0, 0, 2], 3, 1, 1, 0),
    nz([1, 1, 0], 3, -1, 1, 0),
    nz([1, 0, 1], 2, -1, 1, 0),
    nz([0, 1, 1], 1, -1, 1, 0),
    nz([1, 0, 1], 3, 1, 1, 0),
    nz([0, 1, 1], 3, 1, 1, 0),
    nz([1, 1, 0], 1, -1, 1, 0),
    nz([1, 1, 0], 2, 1, 1, 0),
    nz([1, 0, 1], 1, -1, 1, 0),
    nz([0, 1, 1], 2, -1, 1, 0),
];

pub const ORDER1_NORMALIZATION: [Normalization; 12] = [
    nz([0, 0, 1], 2, -1, 1, 0),
    nz([0, 1, 0], 3, 1, 1, 0),
    nz([1, 0, 0], 3, -1, 1, 0),
    nz([0, 0, 1], 1, 1, 1, 0),
    nz([0, 1, 0], 1, -1, 1, 0),
    nz([1, 0, 0], 2, 1, 1, 0),
    nz([1, 0, 0], 1, -1, 1, 0),
    nz([0, 1, 0], 2, -1, 1, 0),
    nz([0, 0, 1], 3, -1, 1, 0),
    nz([1, 0, 0], 0, -1, 1, -1),
    nz([0, 1, 0], 0, -1, 1, -1),
    nz([0, 0, 1], 0, -1, 1, -1),
];

pub const ORDER0_NORMALIZATION: [Normalization; 4] = [
    nz([0, 0, 0], 0, 1, 1, -1),
    nz([0, 0, 0], 3, 2, 1, -1),
    nz([0, 0, 0], 1, 2, 1, -1),
    nz([0, 0, 0], 2, 2, 1, -1),
];

/// The three spin zero-order equations are printed after eliminating third
/// derivatives with the second-order system. Each equals its raw component
/// plus `(ħ/2) Σ sign · ∂^γ E_i` over second-order residuals `E_i`.
pub const ORDER0_REDUCTION: [[(usize, Deriv, i64); 6]; 3] = [
    [
        (0, [2, 0, 0], -1),
        (3, [0, 2, 0], -1),
        (8, [0, 0, 2], 1),
        (9, [1, 1, 0], -1),
        (12, [1, 0, 1], 1),
        (13, [0, 1, 1], 1),
    ],
    [
        (2, [0, 2, 0], -1),
        (4, [0, 0, 2], -1),
        (6, [2, 0, 0], 1),
        (11, [0, 1, 1], -1),
        (14, [1, 1, 0], -1),
        (16, [1, 0, 1], -1),
    ],
    [
        (1, [2, 0, 0], -1),
        (5, [0, 0, 2], -1),
        (7, [0, 2, 0], 1),
        (10, [1, 0, 1], -1),
        (15, [1, 1, 0], 1),
        (17, [0, 1, 1], -1),
    ],
];

fn lambda(n: &Normalization, hbar: &FieldElem) -> FieldElem {
    FieldElem::ratio(n.num, n.den) * hbar.pow(n.hbar_pow).expect("hbar is nonzero")
}

fn derive(f: &FieldElem, d: &Deriv) -> FieldElem {
    let mut out = f.clone();
    for k in 0..3 {
        for _ in 0..d[k] {
            out = out.d(k);
        }
    }
    out
}

/// Result of comparing the transcribed equations with `[H, X]`.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    /// `(order, index)` of each equation whose two evaluations differ.
    pub mismatches: Vec<(u32, usize)>,
    /// Whether any coefficient of `[H, X]` was nonzero.
    pub commutator_nonzero: bool,
    /// Whether any transcribed residual was nonzero.
    pub residuals_nonzero: bool,
}

impl CrossCheck {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Raw `Im` of the Pauli component selected by `n`, from `p^α` coefficients.
fn raw_component(comm: &DiffOp, n: &Normalization, hbar: &FieldElem) -> FieldElem {
    let o = order_of(&n.deriv) as i32;
    let factor = (FieldElem::i() / hbar.clone())
        .pow(o)
        .expect("hbar is nonzero");
    let c = &comm.coeff(&n.deriv).c[n.pauli] * &factor;
    c.im()
}

/// Compare the transcribed residuals with the commutator, equation by equation.
pub fn crosscheck_commutator(
    alg: &Algebra,
    ansatz: &IntegralAnsatz,
    v0: &FieldElem,
    v1: &FieldElem,
) -> CrossCheck {
    let h = alg.hamiltonian(v0, v1);
    let x = alg.integral(ansatz);
    let comm = h.commutator(&x);
    let rep = residuals(alg, ansatz, v0, v1);
    let hbar = &alg.hbar;
    let mut mismatches = Vec::new();
    let tables: [(u32, &[Normalization], &Vec<FieldElem>); 3] = [
        (2, &ORDER2_NORMALIZATION, &rep.order2),
        (1, &ORDER1_NORMALIZATION, &rep.order1),
        (0, &ORDER0_NORMALIZATION, &rep.order0),
    ];
    for (order, table, published) in tables {
        for (i, n) in table.iter().enumerate() {
            let mut expected = lambda(n, hbar) * raw_component(&comm, n, hbar);
            if order == 0 && i > 0 {
                let mut corr = FieldElem::zero();
                for (e, d, sign) in &ORDER0_REDUCTION[i - 1] {
                    corr = corr + FieldElem::int(*sign) * derive(&rep.order2[*e], d);
                }
                expected = expected + hbar * &corr / FieldElem::int(2);
            }
            if expected != published[i] {
                mismatches.push((order, i));
            }
        }
    }
    CrossCheck {
        mismatches,
        commutator_nonzero: !comm.is_zero(),
        residuals_nonzero: !rep.all_zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Var;

    fn j3(alg: &Algebra) -> IntegralAnsatz {
        let mut a = IntegralAnsatz::zero();
        a.a[2] = FieldElem::one();
        a.phi[2] = alg.hbar.clone() / FieldElem::int(2);
        a
    }

    fn mu_over_r() -> FieldElem {
        FieldElem::var(Var::Mu) / FieldElem::r()
    }

    #[test]
    fn j3_residuals_vanish() {
        let alg = Algebra::symbolic();
        let v1 = alg.hbar.clone() / (FieldElem::int(2) * FieldElem::rho());
        let rep = residuals(&alg, &j3(&alg), &mu_over_r(), &v1);
        assert!(rep.all_zero, "{:?}", rep.nonzero());
        assert!(crosscheck_commutator(&alg, &j3(&alg), &mu_over_r(), &v1).is_ok());
    }

    #[test]
    fn pseudoscalar_residuals_vanish() {
        let alg = Algebra::symbolic();
        let v1 = alg.hbar.clone() / (FieldElem::int(2) * FieldElem::rho());
        let mut a = IntegralAnsatz::zero();
        for k in 0..3 {
            a.phi[k] = &alg.hbar * FieldElem::coord(k) / FieldElem::r();
        }
        assert!(residuals(&alg, &a, &mu_over_r(), &v1).all_zero);
    }

    #[test]
    fn wrong_phi_is_detected() {
        let alg = Algebra::unit();
        let v1 = FieldElem::ratio(1, 2) / FieldElem::rho();
        let mut a = IntegralAnsatz::zero();
        for k in 0..3 {
            a.phi[k] = FieldElem::coord(k) / FieldElem::rho();
        }
        let rep = residuals(&alg, &a, &FieldElem::zero(), &v1);
        assert!(!rep.all_zero);
        assert!(rep.order1.iter().take(9).any(|r| !r.is_zero()));
        let cc = crosscheck_commutator(&alg, &a, &FieldElem::zero(), &v1);
        assert!(cc.is_ok(), "{:?}", cc.mismatches);
    }

    #[test]
    fn scaled_pseudoscalar_crosscheck() {
        let alg = Algebra::unit();
        let v1 = FieldElem::ratio(1, 2) / FieldElem::rho();
        let mut a = IntegralAnsatz::zero();
        for k in 0..3 {
            a.phi[k] = FieldElem::coord(k);
        }
        let cc = crosscheck_commutator(&alg, &a, &mu_over_r(), &v1);
        assert!(cc.is_ok(), "{:?}", cc.mismatches);
        assert!(cc.commutator_nonzero && cc.residuals_nonzero);
    }

    #[test]
    fn random_draws_agree() {
        for seed in 0..12 {
            let d = random_draw(seed);
            let cc = crosscheck_commutator(&d.algebra(), &d.ansatz, &d.v0, &d.v1);
            assert!(cc.is_ok(), "seed {seed}: {:?}", cc.mismatches);
        }
    }
}
