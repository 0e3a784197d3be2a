use std::fmt;

use crate::exactfield::{DiffVar, FieldElem, Gauss};

/// A 2×2 matrix-valued function `c0·1 + c1·σ1 + c2·σ2 + c3·σ3`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PauliCoeff {
    pub c: [FieldElem; 4],
}

impl PauliCoeff {
    pub fn zero() -> Self {
        PauliCoeff::default()
    }

    pub fn new(c: [FieldElem; 4]) -> Self {
        PauliCoeff { c }
    }

    pub fn scalar(f: FieldElem) -> Self {
        PauliCoeff::new([f, FieldElem::zero(), FieldElem::zero(), FieldElem::zero()])
    }

    /// `f·σ_k` for `k ∈ {1,2,3}`; `k = 0` is the identity.
    pub fn sigma(k: usize, f: FieldElem) -> Self {
        let mut p = PauliCoeff::zero();
        p.c[k] = f;
        p
    }

    /// `f0 + v·σ`.
    pub fn from_parts(f0: FieldElem, v: [FieldElem; 3]) -> Self {
        let [a, b, c] = v;
        PauliCoeff::new([f0, a, b, c])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(FieldElem::is_zero)
    }

    pub fn add(&self, o: &PauliCoeff) -> PauliCoeff {
        PauliCoeff::new(std::array::from_fn(|k| &self.c[k] + &o.c[k]))
    }

    pub fn sub(&self, o: &PauliCoeff) -> PauliCoeff {
        PauliCoeff::new(std::array::from_fn(|k| &self.c[k] - &o.c[k]))
    }

    pub fn neg(&self) -> PauliCoeff {
        PauliCoeff::new(std::array::from_fn(|k| -&self.c[k]))
    }

    pub fn scale(&self, f: &FieldElem) -> PauliCoeff {
        PauliCoeff::new(std::array::from_fn(|k| &self.c[k] * f))
    }

    pub fn scale_const(&self, g: &Gauss) -> PauliCoeff {
        PauliCoeff::new(std::array::from_fn(|k| self.c[k].scale(g)))
    }

    /// Matrix product using `σ_a σ_b = δ_ab + i ε_abc σ_c`.
    pub fn mul(&self, o: &PauliCoeff) -> PauliCoeff {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let i = FieldElem::i();
        let mut out = PauliCoeff::zero();
        out.c[0] = a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3;
        let cross = [a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1];
        let av = [a1, a2, a3];
        let bv = [b1, b2, b3];
        for k in 0..3 {
            let mut v = a0 * bv[k] + b0 * av[k];
            if !cross[k].is_zero() {
                v = v + &i * &cross[k];
            }
            out.c[k + 1] = v;
        }
        out
    }

    /// Hermitian conjugate of the matrix (components conjugated; σ are Hermitian).
    pub fn dagger(&self) -> PauliCoeff {
        PauliCoeff::new(std::array::from_fn(|k| self.c[k].conj()))
    }

    pub fn derivative(&self, v: DiffVar) -> PauliCoeff {
        PauliCoeff::new(std::array::from_fn(|k| self.c[k].derivative(v)))
    }

    /// Entries `[[c0 + c3, c1 − i c2], [c1 + i c2, c0 − c3]]`.
    pub fn to_matrix(&self) -> [[FieldElem; 2]; 2] {
        let i = FieldElem::i();
        let [c0, c1, c2, c3] = &self.c;
        [[c0 + c3, c1 - &(&i * c2)], [c1 + &(&i * c2), c0 - c3]]
    }

    /// Inverse of [`PauliCoeff::to_matrix`].
    pub fn from_matrix(m: [[FieldElem; 2]; 2]) -> PauliCoeff {
        let half = Gauss::from_ratio(1, 2);
        let neg_half_i = Gauss::new(crate::exactfield::q(0, 1), crate::exactfield::q(-1, 2));
        let [[m00, m01], [m10, m11]] = m;
        PauliCoeff::new([
            (&m00 + &m11).scale(&half),
            (&m01 + &m10).scale(&half),
            (&m10 - &m01).scale(&neg_half_i),
            (&m00 - &m11).scale(&half),
        ])
    }
}

impl fmt::Display for PauliCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}; {}; {}; {}]",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_products() {
        let s = |k| PauliCoeff::sigma(k, FieldElem::one());
        assert_eq!(s(1).mul(&s(2)), PauliCoeff::sigma(3, FieldElem::i()));
        assert_eq!(s(2).mul(&s(1)), PauliCoeff::sigma(3, -FieldElem::i()));
        assert_eq!(s(3).mul(&s(3)), PauliCoeff::scalar(FieldElem::one()));
    }

    #[test]
    fn matrix_round_trip() {
        let p = PauliCoeff::new([
            FieldElem::x(),
            FieldElem::y(),
            FieldElem::i(),
            FieldElem::int(3),
        ]);
        assert_eq!(PauliCoeff::from_matrix(p.to_matrix()), p);
    }
}
