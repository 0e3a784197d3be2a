//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! The variable set is fixed: Cartesian coordinates, the radicals `r`, `s`,
//! `t` adjoined over them, a free radial coordinate with its own radicals,
//! and the symbolic parameters. Radical exponents are kept at 0 or 1 by
//! rewriting squares through their defining relations after every product.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::gauss::Gauss;

/// Number of polynomial variables.
pub const NVARS: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Var {
    X = 0,
    Y,
    Z,
    /// `r = sqrt(x^2 + y^2 + z^2)`
    R,
    /// `s = sqrt(1 + beta r^2)`
    S,
    /// `t = sqrt(4 r^4 + gamma)`
    T,
    /// Free radial coordinate of the univariate radial field.
    Rad,
    /// `sqrt(1 + beta Rad^2)`
    SRad,
    /// `sqrt(4 Rad^4 + gamma)`
    TRad,
    Hbar,
    Beta,
    Mu,
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    Alpha1,
    Alpha2,
    Alpha3,
    C1,
    C2,
    C3,
    Gamma,
}

pub const ALL_VARS: [Var; NVARS] = [
    Var::X,
    Var::Y,
    Var::Z,
    Var::R,
    Var::S,
    Var::T,
    Var::Rad,
    Var::SRad,
    Var::TRad,
    Var::Hbar,
    Var::Beta,
    Var::Mu,
    Var::A1,
    Var::A2,
    Var::A3,
    Var::B1,
    Var::B2,
    Var::B3,
    Var::Alpha1,
    Var::Alpha2,
    Var::Alpha3,
    Var::C1,
    Var::C2,
    Var::C3,
    Var::Gamma,
];

/// Radicals in elimination order used by rationalization.
pub const RADICALS: [Var; 5] = [Var::T, Var::S, Var::R, Var::TRad, Var::SRad];

impl Var {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::R => "r",
            Var::S => "s",
            Var::T => "t",
            Var::Rad => "rad",
            Var::SRad => "srad",
            Var::TRad => "trad",
            Var::Hbar => "hbar",
            Var::Beta => "beta",
            Var::Mu => "mu",
            Var::A1 => "a1",
            Var::A2 => "a2",
            Var::A3 => "a3",
            Var::B1 => "b1",
            Var::B2 => "b2",
            Var::B3 => "b3",
            Var::Alpha1 => "alpha1",
            Var::Alpha2 => "alpha2",
            Var::Alpha3 => "alpha3",
            Var::C1 => "c1",
            Var::C2 => "c2",
            Var::C3 => "c3",
            Var::Gamma => "gamma",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        ALL_VARS.iter().copied().find(|v| v.name() == name)
    }

    pub fn is_radical(self) -> bool {
        RADICALS.contains(&self)
    }

    pub fn is_parameter(self) -> bool {
        self.index() >= Var::Hbar.index()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector; ordering is lexicographic with `x` most significant.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub [u8; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(v: Var) -> Mono {
        Mono::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u8) -> Mono {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Mono(m)
    }

    pub fn exp(&self, v: Var) -> u8 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = [0u8; NVARS];
        for (k, slot) in m.iter_mut().enumerate() {
            *slot = self.0[k]
                .checked_add(o.0[k])
                .expect("monomial exponent overflow");
        }
        Mono(m)
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        let mut m = [0u8; NVARS];
        for (k, slot) in m.iter_mut().enumerate() {
            *slot = o.0[k] - self.0[k];
        }
        Mono(m)
    }

    fn has_radical_square(&self) -> bool {
        RADICALS.iter().any(|v| self.exp(*v) >= 2)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in ALL_VARS {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    terms: BTreeMap<Mono, Gauss>,
}

fn accumulate(terms: &mut BTreeMap<Mono, Gauss>, m: Mono, c: Gauss) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Defining relation `v^2 = relation(v)` for each radical.
fn relation(v: Var) -> &'static Poly {
    static RELS: OnceLock<[Poly; 5]> = OnceLock::new();
    let rels = RELS.get_or_init(|| {
        let x = Poly::var(Var::X);
        let y = Poly::var(Var::Y);
        let z = Poly::var(Var::Z);
        let rho = x.raw_mul(&x).add(&y.raw_mul(&y)).add(&z.raw_mul(&z));
        let beta = Poly::var(Var::Beta);
        let gamma = Poly::var(Var::Gamma);
        let one = Poly::one();
        let four = Poly::constant(Gauss::from_int(4));
        let rad = Poly::var(Var::Rad);
        let rad2 = rad.raw_mul(&rad);
        [
            rho.clone(),
            one.add(&beta.raw_mul(&rho)),
            four.raw_mul(&rho).raw_mul(&rho).add(&gamma),
            one.add(&beta.raw_mul(&rad2)),
            four.raw_mul(&rad2).raw_mul(&rad2).add(&gamma),
        ]
    });
    match v {
        Var::R => &rels[0],
        Var::S => &rels[1],
        Var::T => &rels[2],
        Var::SRad => &rels[3],
        Var::TRad => &rels[4],
        _ => unreachable!("not a radical: {v}"),
    }
}

/// Radicand of a radical variable, as a polynomial in the base variables.
pub fn radicand(v: Var) -> &'static Poly {
    relation(v)
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Mono::var(v), Gauss::one())
    }

    pub fn monomial(m: Mono, c: Gauss) -> Self {
        let mut p = Poly::zero();
        accumulate(&mut p.terms, m, c);
        p.reduced()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Gauss> {
        if self.is_zero() {
            Some(Gauss::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::ONE).cloned()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Gauss)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Mono, &Gauss)> {
        self.terms.iter().next_back()
    }

    pub fn trailing(&self) -> Option<(&Mono, &Gauss)> {
        self.terms.iter().next()
    }

    pub fn coeff(&self, m: &Mono) -> Gauss {
        self.terms.get(m).cloned().unwrap_or_else(Gauss::zero)
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn contains_any_radical(&self) -> bool {
        RADICALS.iter().any(|v| self.contains_var(*v))
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (big, small) = if self.len() >= o.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        Poly { terms }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            accumulate(&mut terms, *m, -c);
        }
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Gauss) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn conj(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    /// Product without radical reduction; callers guarantee no radical squares arise.
    fn raw_mul(&self, o: &Poly) -> Poly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                accumulate(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Poly { terms }
    }

    fn reduced(self) -> Poly {
        if !self.terms.keys().any(|m| m.has_radical_square()) {
            return self;
        }
        let mut terms = BTreeMap::new();
        for (m, c) in self.terms {
            push_reduced(&mut terms, m, c);
        }
        Poly { terms }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                push_reduced(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Poly { terms }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn mul_mono(&self, m: &Mono, c: &Gauss) -> Poly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            push_reduced(&mut terms, m1.mul(m), c1 * c);
        }
        Poly { terms }
    }

    /// Exact quotient `self / d` when `d` divides `self` in the polynomial ring
    /// (radicals treated as independent variables); `None` otherwise.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dlm, dlc) = d.leading()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (lm, _) = self.leading()?;
        let (tm, _) = self.trailing()?;
        let (dtm, _) = d.trailing()?;
        if !dlm.divides(lm) || !dtm.divides(tm) {
            return None;
        }
        for v in ALL_VARS {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        if !modular::may_divide(self, d) {
            return None;
        }
        let dlc_inv = dlc.inv()?;
        let mut rem = self.terms.clone();
        let mut q = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back() {
            if !dlm.divides(m) {
                return None;
            }
            let qm = dlm.quotient_of(m);
            let qc = c * &dlc_inv;
            for (dm, dc) in &d.terms {
                accumulate(&mut rem, dm.mul(&qm), -&(dc * &qc));
            }
            q.insert(qm, qc);
        }
        Some(Poly { terms: q })
    }

    /// Formal partial derivative treating every variable as independent.
    pub fn formal_derivative(&self, v: Var) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut nm = *m;
            nm.0[v.index()] -= 1;
            accumulate(&mut terms, nm, c * &Gauss::from_int(e as i64));
        }
        Poly { terms }
    }

    /// Split `self = p0 + v * p1` for a radical `v` (degree at most one in `v`).
    pub fn split_radical(&self, v: Var) -> (Poly, Poly) {
        let mut p0 = BTreeMap::new();
        let mut p1 = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exp(v) == 0 {
                p0.insert(*m, c.clone());
            } else {
                let mut nm = *m;
                nm.0[v.index()] -= 1;
                p1.insert(nm, c.clone());
            }
        }
        (Poly { terms: p0 }, Poly { terms: p1 })
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut g = [u8::MAX; NVARS];
        for m in self.terms.keys() {
            for k in 0..NVARS {
                g[k] = g[k].min(m.0[k]);
            }
        }
        if self.is_zero() {
            return Mono::ONE;
        }
        Mono(g)
    }

    /// Divide every term by a monomial that divides all of them.
    pub fn shift_down(&self, m: &Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(tm, c)| (m.quotient_of(tm), c.clone()))
                .collect(),
        }
    }

    /// Rename variables through `map` (applied to each exponent slot), reducing afterwards.
    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut nm = [0u8; NVARS];
            for v in ALL_VARS {
                let e = m.exp(v);
                if e > 0 {
                    let w = map(v);
                    nm[w.index()] += e;
                }
            }
            push_reduced(&mut terms, Mono(nm), c.clone());
        }
        Poly { terms }
    }

    /// Substitute whole polynomials for variables (exact, no radical bookkeeping
    /// beyond the usual reduction).
    pub fn substitute(&self, subs: &dyn Fn(Var) -> Option<Poly>) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for v in ALL_VARS {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let base = subs(v).unwrap_or_else(|| Poly::var(v));
                term = term.mul(&base.pow(e as u32));
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Evaluate with every occurring variable assigned.
    pub fn eval(&self, values: &[Option<Gauss>; NVARS]) -> Result<Gauss, Var> {
        let mut acc = Gauss::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in ALL_VARS {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = values[v.index()].as_ref().ok_or(v)?;
                for _ in 0..e {
                    t = &t * val;
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Floating-point evaluation; `values` holds every variable (radicals included).
    pub fn eval_f64(&self, values: &[f64; NVARS]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = 1.0;
            for v in ALL_VARS {
                let e = m.exp(v);
                if e > 0 {
                    t *= values[v.index()].powi(e as i32);
                }
            }
            let (re, im) = c.to_f64();
            acc += Complex64::new(re * t, im * t);
        }
        acc
    }

    /// Monic normalization: returns `(leading coefficient, self / lc)`.
    pub fn monic(&self) -> (Gauss, Poly) {
        match self.leading() {
            None => (Gauss::one(), Poly::zero()),
            Some((_, lc)) => {
                let lc = lc.clone();
                let inv = lc.inv().expect("nonzero leading coefficient");
                (lc, self.scale(&inv))
            }
        }
    }
}

fn push_reduced(terms: &mut BTreeMap<Mono, Gauss>, m: Mono, c: Gauss) {
    if c.is_zero() {
        return;
    }
    if !m.has_radical_square() {
        accumulate(terms, m, c);
        return;
    }
    let mut base = m;
    let mut factors: Vec<&'static Poly> = Vec::new();
    for v in RADICALS {
        while base.exp(v) >= 2 {
            base.0[v.index()] -= 2;
            factors.push(relation(v));
        }
    }
    let mut expansion = Poly::monomial(base, c);
    for f in factors {
        expansion = expansion.raw_mul(f);
    }
    for (mm, cc) in expansion.terms {
        accumulate(terms, mm, cc);
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative_display();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let plain_one = mag.is_one();
            let simple = mag.im.is_zero() && mag.re.is_integer();
            if m.is_one() {
                if simple || mag == Gauss::i() {
                    write!(f, "{}", mag)?;
                } else {
                    write!(f, "({})", mag)?;
                }
            } else if plain_one {
                write!(f, "{}", m)?;
            } else if simple {
                write!(f, "{}*{}", mag, m)?;
            } else {
                write!(f, "({})*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_squared_reduces() {
        let r = Poly::var(Var::R);
        assert_eq!(r.mul(&r).to_string(), "x^2 + y^2 + z^2");
    }

    #[test]
    fn s_squared_reduces() {
        let s = Poly::var(Var::S);
        assert_eq!(s.mul(&s), *radicand(Var::S));
    }

    #[test]
    fn exact_division_and_rejection() {
        let x = Poly::var(Var::X);
        let y = Poly::var(Var::Y);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.exact_div(&x.add(&y)).unwrap(), x.sub(&y));
        assert!(p.exact_div(&x.add(&Poly::one())).is_none());
    }
}

/// Cheap necessary condition for divisibility: substitute fixed residues
/// for all variables but one and divide in `F_p[v]`.
mod modular {
    use super::{Gauss, Poly, ALL_VARS, NVARS};
    use crate::exactfield::Rat;
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    const P: u64 = 2_147_483_629;
    /// A square root of −1 modulo `P` (`P ≡ 1 mod 4`).
    const I: u64 = 629_208_553;

    fn mul(a: u64, b: u64) -> u64 {
        a * b % P
    }

    fn add(a: u64, b: u64) -> u64 {
        (a + b) % P
    }

    fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn int(n: &BigInt) -> u64 {
        let m = n % BigInt::from(P);
        let m = if m.sign() == num_bigint::Sign::Minus { m + BigInt::from(P) } else { m };
        m.to_u64().expect("reduced residue")
    }

    fn rat(q: &Rat) -> Option<u64> {
        if let Rat::Small(a, 1) = q {
            return Some(a.rem_euclid(P as i64) as u64);
        }
        let (n, d) = match q {
            Rat::Small(a, b) => (a.rem_euclid(P as i64) as u64, *b as u64 % P),
            Rat::Big(q) => (int(q.numer()), int(q.denom())),
        };
        (d != 0).then(|| mul(n, inv(d)))
    }

    fn gauss(c: &Gauss) -> Option<u64> {
        Some(add(rat(&c.re)?, mul(I, rat(&c.im)?)))
    }

    fn point(k: usize) -> u64 {
        ((k as u64 + 7).wrapping_mul(0x9E37_79B9_7F4A_7C15)) % P
    }

    /// Coefficients in the main variable `v`, constant term first.
    fn univariate(p: &Poly, v: usize, deg: usize) -> Option<Vec<u64>> {
        let mut out = vec![0u64; deg + 1];
        for (m, c) in &p.terms {
            let mut t = gauss(c)?;
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 && k != v {
                    t = mul(t, pow(point(k), e as u64));
                }
            }
            let j = m.0[v] as usize;
            out[j] = add(out[j], t);
        }
        Some(out)
    }

    pub(super) fn may_divide(n: &Poly, d: &Poly) -> bool {
        let v = match ALL_VARS.iter().max_by_key(|w| d.degree_in(**w)) {
            Some(w) if d.degree_in(*w) > 0 => w.index(),
            _ => return true,
        };
        debug_assert!(v < NVARS);
        let var = ALL_VARS[v];
        let (Some(mut r), Some(mut a)) = (
            univariate(n, v, n.degree_in(var) as usize),
            univariate(d, v, d.degree_in(var) as usize),
        ) else {
            return true;
        };
        while a.last() == Some(&0) {
            a.pop();
        }
        let Some(&lead) = a.last() else {
            return true;
        };
        let li = inv(lead);
        let da = a.len() - 1;
        while r.len() > da {
            let top = r.pop().expect("nonempty");
            if top == 0 {
                continue;
            }
            let f = mul(top, li);
            let shift = r.len() - da;
            for (j, &aj) in a[..da].iter().enumerate() {
                r[shift + j] = add(r[shift + j], P - mul(f, aj));
            }
        }
        r.iter().all(|&x| x == 0)
    }
}
