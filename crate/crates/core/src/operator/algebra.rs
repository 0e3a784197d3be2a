use crate::exactfield::{FieldElem, Gauss, Var};

use super::diffop::{Deriv, DiffOp};
use super::pauli::PauliCoeff;

fn unit(k: usize) -> Deriv {
    let mut d = [0u8; 3];
    d[k] = 1;
    d
}

/// Builders for the standard operators with a fixed value of `ħ`.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub hbar: FieldElem,
}

impl Default for Algebra {
    fn default() -> Self {
        Algebra::unit()
    }
}

impl Algebra {
    /// `ħ = 1`.
    pub fn unit() -> Self {
        Algebra {
            hbar: FieldElem::one(),
        }
    }

    /// `ħ` kept as a symbol.
    pub fn symbolic() -> Self {
        Algebra {
            hbar: FieldElem::var(Var::Hbar),
        }
    }

    pub fn scalar(&self, f: FieldElem) -> DiffOp {
        DiffOp::scalar(f)
    }

    /// `σ_k`, `k ∈ {1,2,3}`.
    pub fn sigma(&self, k: usize) -> DiffOp {
        DiffOp::multiplication(PauliCoeff::sigma(k, FieldElem::one()))
    }

    /// `∂_k`, `k ∈ {0,1,2}`.
    pub fn d(&self, k: usize) -> DiffOp {
        DiffOp::partial(unit(k))
    }

    /// `p_k = −iħ∂_k`, `k ∈ {1,2,3}`.
    pub fn p(&self, k: usize) -> DiffOp {
        self.d(k - 1)
            .scale(&(-(FieldElem::i() * self.hbar.clone())))
    }

    /// `L_k = (x × p)_k`, `k ∈ {1,2,3}`.
    pub fn l(&self, k: usize) -> DiffOp {
        let (a, b) = match k {
            1 => (1, 2),
            2 => (2, 0),
            3 => (0, 1),
            _ => panic!("L index out of range: {k}"),
        };
        let xa = DiffOp::scalar(FieldElem::coord(a));
        let xb = DiffOp::scalar(FieldElem::coord(b));
        xa.compose(&self.p(b + 1)).sub(&xb.compose(&self.p(a + 1)))
    }

    /// `J_k = L_k + (ħ/2)σ_k`.
    pub fn j(&self, k: usize) -> DiffOp {
        self.l(k).add(
            &self
                .sigma(k)
                .scale(&(self.hbar.clone() / FieldElem::int(2))),
        )
    }

    /// `(σ, L)`.
    pub fn sigma_dot_l(&self) -> DiffOp {
        (1..=3).fold(DiffOp::zero(), |acc, k| {
            acc.add(&self.sigma(k).compose(&self.l(k)))
        })
    }

    /// `(σ, x)`.
    pub fn sigma_dot_x(&self) -> DiffOp {
        DiffOp::multiplication(PauliCoeff::from_parts(
            FieldElem::zero(),
            [FieldElem::x(), FieldElem::y(), FieldElem::z()],
        ))
    }

    /// `(σ, p)`.
    pub fn sigma_dot_p(&self) -> DiffOp {
        (1..=3).fold(DiffOp::zero(), |acc, k| {
            acc.add(&self.sigma(k).compose(&self.p(k)))
        })
    }

    /// `(x, p)`.
    pub fn x_dot_p(&self) -> DiffOp {
        (0..3).fold(DiffOp::zero(), |acc, k| {
            acc.add(&DiffOp::scalar(FieldElem::coord(k)).compose(&self.p(k + 1)))
        })
    }

    pub fn laplacian(&self) -> DiffOp {
        (0..3).fold(DiffOp::zero(), |acc, k| {
            let mut d = [0u8; 3];
            d[k] = 2;
            acc.add(&DiffOp::partial(d))
        })
    }

    /// `−(ħ²/2)Δ`.
    pub fn kinetic(&self) -> DiffOp {
        let c = -(&self.hbar * &self.hbar) / FieldElem::int(2);
        self.laplacian().scale(&c)
    }

    /// `−(ħ²/2)Δ + V0 + ½(V1 (σ,L) + (σ,L) V1)`, composed explicitly.
    pub fn hamiltonian(&self, v0: &FieldElem, v1: &FieldElem) -> DiffOp {
        let sl = self.sigma_dot_l();
        let v1op = DiffOp::scalar(v1.clone());
        let so = v1op
            .anticommutator(&sl)
            .scale_const(&Gauss::from_ratio(1, 2));
        self.kinetic().add(&DiffOp::scalar(v0.clone())).add(&so)
    }

    /// `K p_k − (iħ/2) ∂_k K` summed: the symmetrized first-order part.
    pub fn symmetrized_first_order(&self, k: [PauliCoeff; 3]) -> DiffOp {
        let mut out = DiffOp::zero();
        let mut div = PauliCoeff::zero();
        for (a, c) in k.iter().enumerate() {
            out = out.add(&DiffOp::multiplication(c.clone()).compose(&self.p(a + 1)));
            div = div.add(&c.derivative(crate::exactfield::DiffVar::axis(a)));
        }
        let half_ih = FieldElem::i() * self.hbar.clone() / FieldElem::int(2);
        out.add(&DiffOp::multiplication(div.scale(&(-half_ih))))
    }

    /// The first-order operator defined by an ansatz.
    pub fn integral(&self, a: &IntegralAnsatz) -> DiffOp {
        let k = a.first_order_coefficients();
        let phi = PauliCoeff::from_parts(a.phi0.clone(), a.phi.clone());
        self.symmetrized_first_order(k)
            .add(&DiffOp::multiplication(phi))
    }
}

/// Data of a first-order candidate integral
/// `X = Σ (K0_k + K_k·σ) p_k + φ0 + φ·σ − (iħ/2) Σ ∂_k(K0_k + K_k·σ)`
/// with `K0 = (A0, B0, C0)` linear in the coordinates.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IntegralAnsatz {
    pub a: [FieldElem; 3],
    pub b: [FieldElem; 3],
    pub big_a: [FieldElem; 3],
    pub big_b: [FieldElem; 3],
    pub big_c: [FieldElem; 3],
    pub phi0: FieldElem,
    pub phi: [FieldElem; 3],
}

impl IntegralAnsatz {
    pub fn zero() -> Self {
        IntegralAnsatz::default()
    }

    /// All constants `a_i`, `b_i` symbolic, everything else zero.
    pub fn symbolic_linear() -> Self {
        IntegralAnsatz {
            a: [Var::A1, Var::A2, Var::A3].map(FieldElem::var),
            b: [Var::B1, Var::B2, Var::B3].map(FieldElem::var),
            ..Default::default()
        }
    }

    /// `A0 = b1 − a3 y + a2 z`.
    pub fn a0(&self) -> FieldElem {
        &self.b[0] - &(&self.a[2] * &FieldElem::y()) + &self.a[1] * &FieldElem::z()
    }

    /// `B0 = b2 + a3 x − a1 z`.
    pub fn b0(&self) -> FieldElem {
        &self.b[1] + &(&self.a[2] * &FieldElem::x()) - &self.a[0] * &FieldElem::z()
    }

    /// `C0 = b3 − a2 x + a1 y`.
    pub fn c0(&self) -> FieldElem {
        &self.b[2] - &(&self.a[1] * &FieldElem::x()) + &self.a[0] * &FieldElem::y()
    }

    /// Coefficients of `p1`, `p2`, `p3`.
    pub fn first_order_coefficients(&self) -> [PauliCoeff; 3] {
        [
            PauliCoeff::from_parts(self.a0(), self.big_a.clone()),
            PauliCoeff::from_parts(self.b0(), self.big_b.clone()),
            PauliCoeff::from_parts(self.c0(), self.big_c.clone()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_commutator() {
        let alg = Algebra::unit();
        let c = alg.p(1).commutator(&DiffOp::scalar(FieldElem::x()));
        assert_eq!(c, DiffOp::scalar(-FieldElem::i()));
    }

    #[test]
    fn angular_momentum_algebra() {
        let alg = Algebra::symbolic();
        let ih = FieldElem::i() * alg.hbar.clone();
        assert_eq!(alg.l(1).commutator(&alg.l(2)), alg.l(3).scale(&ih));
        assert_eq!(alg.j(2).commutator(&alg.j(3)), alg.j(1).scale(&ih));
    }

    #[test]
    fn hamiltonian_examples() {
        let alg = Algebra::symbolic();
        assert_eq!(
            alg.hamiltonian(&FieldElem::zero(), &FieldElem::zero()),
            alg.kinetic()
        );
        let v1 = FieldElem::one() / FieldElem::rho();
        let h = alg.hamiltonian(&FieldElem::zero(), &v1);
        let direct = alg.kinetic().add(&alg.sigma_dot_l().scale(&v1));
        assert_eq!(h, direct);
        assert_eq!(h.adjoint(), h);
        let c2 = h.momentum_coefficients(2);
        let half = -(&alg.hbar * &alg.hbar) / FieldElem::int(2);
        for (d, p) in c2 {
            if d.contains(&2) {
                assert_eq!(p, PauliCoeff::scalar(half.clone()));
            }
        }
    }

    #[test]
    fn ansatz_examples() {
        let alg = Algebra::symbolic();
        let mut a = IntegralAnsatz::zero();
        a.b[0] = FieldElem::one();
        assert_eq!(alg.integral(&a), alg.p(1));
        let mut a = IntegralAnsatz::zero();
        a.a[2] = FieldElem::one();
        assert_eq!(alg.integral(&a), alg.l(3));
        a.phi[2] = alg.hbar.clone() / FieldElem::int(2);
        assert_eq!(alg.integral(&a), alg.j(3));
        let x = alg.integral(&a);
        assert_eq!(x.adjoint(), x);
    }

    #[test]
    fn free_translation_invariance() {
        let alg = Algebra::unit();
        let h = alg.hamiltonian(&FieldElem::zero(), &FieldElem::zero());
        assert!(h.commutator(&alg.p(1)).is_zero());
    }
}
