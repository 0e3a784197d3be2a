use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::exactfield::{DiffVar, FieldElem, Gauss};

use super::pauli::PauliCoeff;

/// Derivative multi-index `(a, b, c)` for `∂x^a ∂y^b ∂z^c`.
pub type Deriv = [u8; 3];

pub fn order_of(d: &Deriv) -> u32 {
    d.iter().map(|&k| k as u32).sum()
}

fn binom(n: u8, k: u8) -> i64 {
    let mut out = 1i64;
    for j in 0..k as i64 {
        out = out * (n as i64 - j) / (j + 1);
    }
    out
}

/// All `γ ≤ α` componentwise.
fn sub_indices(a: &Deriv) -> Vec<Deriv> {
    let mut out = Vec::new();
    for g0 in 0..=a[0] {
        for g1 in 0..=a[1] {
            for g2 in 0..=a[2] {
                out.push([g0, g1, g2]);
            }
        }
    }
    out
}

/// Normal-ordered operator `Σ_α P_α(x) ∂^α` with 2×2 coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiffOp {
    terms: BTreeMap<Deriv, PauliCoeff>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        DiffOp::scalar(FieldElem::one())
    }

    /// Multiplication by `f·1`.
    pub fn scalar(f: FieldElem) -> Self {
        DiffOp::term([0, 0, 0], PauliCoeff::scalar(f))
    }

    /// Multiplication by a matrix-valued function.
    pub fn multiplication(p: PauliCoeff) -> Self {
        DiffOp::term([0, 0, 0], p)
    }

    pub fn term(d: Deriv, p: PauliCoeff) -> Self {
        let mut op = DiffOp::zero();
        op.add_term(d, p);
        op
    }

    /// `∂^α` with unit coefficient.
    pub fn partial(d: Deriv) -> Self {
        DiffOp::term(d, PauliCoeff::scalar(FieldElem::one()))
    }

    pub fn terms(&self) -> &BTreeMap<Deriv, PauliCoeff> {
        &self.terms
    }

    pub fn coeff(&self, d: &Deriv) -> PauliCoeff {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total derivative order, or `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(order_of).max()
    }

    pub fn add_term(&mut self, d: Deriv, p: PauliCoeff) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(q) => {
                let s = q.add(&p);
                if s.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *q = s;
                }
            }
            None => {
                self.terms.insert(d, p);
            }
        }
    }

    pub fn add(&self, o: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (d, p) in &o.terms {
            out.add_term(*d, p.clone());
        }
        out
    }

    pub fn sub(&self, o: &DiffOp) -> DiffOp {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> DiffOp {
        self.map_coeffs(|p| p.neg())
    }

    /// Left multiplication by a scalar function.
    pub fn scale(&self, f: &FieldElem) -> DiffOp {
        self.map_coeffs(|p| p.scale(f))
    }

    pub fn scale_const(&self, g: &Gauss) -> DiffOp {
        self.map_coeffs(|p| p.scale_const(g))
    }

    /// Left multiplication by a matrix function (no derivative acts on it).
    pub fn left_mul(&self, m: &PauliCoeff) -> DiffOp {
        self.map_coeffs(|p| m.mul(p))
    }

    fn map_coeffs(&self, f: impl Fn(&PauliCoeff) -> PauliCoeff) -> DiffOp {
        let mut out = DiffOp::zero();
        for (d, p) in &self.terms {
            out.add_term(*d, f(p));
        }
        out
    }

    /// Operator product `self ∘ o` in normal order, via
    /// `P∂^α ∘ Q∂^β = Σ_{γ≤α} C(α,γ) P (∂^γ Q) ∂^{α−γ+β}`.
    pub fn compose(&self, o: &DiffOp) -> DiffOp {
        let lhs: Vec<(&Deriv, &PauliCoeff)> = self.terms.iter().collect();
        // derivatives of each right coefficient at every index below a left index
        let needed: BTreeSet<Deriv> = lhs.iter().flat_map(|(a, _)| sub_indices(a)).collect();
        let rhs: Vec<(Deriv, HashMap<Deriv, PauliCoeff>)> =
            crate::par::map(&o.terms.iter().collect::<Vec<_>>(), |(b, q)| {
                (**b, derivative_table(q, &needed))
            });
        let parts = crate::par::map(&lhs, |(a, p)| {
            let mut acc = DiffOp::zero();
            for g in sub_indices(a) {
                let c = binom(a[0], g[0]) * binom(a[1], g[1]) * binom(a[2], g[2]);
                let rest = [a[0] - g[0], a[1] - g[1], a[2] - g[2]];
                for (b, table) in &rhs {
                    let dq = &table[&g];
                    if dq.is_zero() {
                        continue;
                    }
                    let mut t = p.mul(dq);
                    if c != 1 {
                        t = t.scale_const(&Gauss::from_int(c));
                    }
                    acc.add_term([rest[0] + b[0], rest[1] + b[1], rest[2] + b[2]], t);
                }
            }
            acc
        });
        parts.into_iter().fold(DiffOp::zero(), |acc, p| acc.add(&p))
    }

    pub fn commutator(&self, o: &DiffOp) -> DiffOp {
        self.compose(o).sub(&o.compose(self))
    }

    pub fn anticommutator(&self, o: &DiffOp) -> DiffOp {
        self.compose(o).add(&o.compose(self))
    }

    /// Formal adjoint: `(P∂^α)† = (−1)^{|α|} ∂^α ∘ P†`.
    pub fn adjoint(&self) -> DiffOp {
        let mut out = DiffOp::zero();
        for (d, p) in &self.terms {
            let mut t = DiffOp::partial(*d).compose(&DiffOp::multiplication(p.dagger()));
            if order_of(d) % 2 == 1 {
                t = t.neg();
            }
            out = out.add(&t);
        }
        out
    }

    /// Apply to a matrix function (as a multiplication operator) and keep the
    /// order-0 part, i.e. the action `op(F)` on `F` viewed as a function.
    pub fn apply_to(&self, f: &PauliCoeff) -> PauliCoeff {
        self.compose(&DiffOp::multiplication(f.clone()))
            .coeff(&[0, 0, 0])
    }

    /// Terms of the given total order, as stored (coefficients of `∂^α`).
    pub fn momentum_coefficients(&self, order: u32) -> Vec<(Deriv, PauliCoeff)> {
        self.terms
            .iter()
            .filter(|(d, _)| order_of(d) == order)
            .map(|(d, p)| (*d, p.clone()))
            .collect()
    }

    /// Coefficients of `p^α` where `p_k = −iħ∂_k`: the stored coefficient
    /// times `(i/ħ)^{|α|}`.
    pub fn p_coefficients(&self, order: u32, hbar: &FieldElem) -> Vec<(Deriv, PauliCoeff)> {
        let factor = (FieldElem::i() / hbar.clone())
            .pow(order as i32)
            .expect("hbar is nonzero");
        self.momentum_coefficients(order)
            .into_iter()
            .map(|(d, p)| (d, p.scale(&factor)))
            .collect()
    }

    /// Coefficients of every order `0..=max`, zero-filled for missing indices.
    pub fn all_indices(order: u32) -> Vec<Deriv> {
        let mut out = Vec::new();
        for a in (0..=order as u8).rev() {
            for b in (0..=(order as u8 - a)).rev() {
                out.push([a, b, order as u8 - a - b]);
            }
        }
        out
    }

    /// Map every coefficient component through `f`.
    pub fn map_fields(&self, f: impl Fn(&FieldElem) -> FieldElem) -> DiffOp {
        self.map_coeffs(|p| PauliCoeff::new(std::array::from_fn(|k| f(&p.c[k]))))
    }

    /// Total size of all coefficients, for diagnostics.
    pub fn size(&self) -> usize {
        self.terms
            .values()
            .flat_map(|p| p.c.iter())
            .map(FieldElem::size)
            .sum()
    }
}

/// `needed` must be closed under lowering an index; lexicographic order
/// then visits each entry after the one it is derived from.
fn derivative_table(q: &PauliCoeff, needed: &BTreeSet<Deriv>) -> HashMap<Deriv, PauliCoeff> {
    let mut table: HashMap<Deriv, PauliCoeff> = HashMap::new();
    for &g in needed {
        let v = if g == [0, 0, 0] {
            q.clone()
        } else {
            let k = (0..3).find(|&k| g[k] > 0).unwrap();
            let mut prev = g;
            prev[k] -= 1;
            table[&prev].derivative(DiffVar::axis(k))
        };
        table.insert(g, v);
    }
    table
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, p) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{p}·d{:?}", d)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dx() -> DiffOp {
        DiffOp::partial([1, 0, 0])
    }

    #[test]
    fn leibniz_example() {
        let op = dx().compose(&DiffOp::scalar(FieldElem::x()));
        let expected = DiffOp::scalar(FieldElem::x())
            .compose(&dx())
            .add(&DiffOp::identity());
        assert_eq!(op, expected);
    }

    #[test]
    fn pauli_example() {
        let s = |k| DiffOp::multiplication(PauliCoeff::sigma(k, FieldElem::one()));
        assert_eq!(
            s(1).compose(&s(2)),
            DiffOp::multiplication(PauliCoeff::sigma(3, FieldElem::i()))
        );
    }

    #[test]
    fn adjoint_of_partial() {
        assert_eq!(dx().adjoint(), dx().neg());
        let a = DiffOp::scalar(FieldElem::x() * FieldElem::i()).compose(&dx());
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn laplacian_commutator_drops_order() {
        let lap = DiffOp::partial([2, 0, 0])
            .add(&DiffOp::partial([0, 2, 0]))
            .add(&DiffOp::partial([0, 0, 2]));
        let f = DiffOp::scalar(FieldElem::one() / FieldElem::r());
        assert_eq!(lap.commutator(&f).order(), Some(1));
    }

    #[test]
    fn index_enumeration() {
        assert_eq!(DiffOp::all_indices(2).len(), 6);
        assert_eq!(
            DiffOp::all_indices(1),
            vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        );
    }
}
