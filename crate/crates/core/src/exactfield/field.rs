//! Rational functions over the radical tower.
//!
//! A [`FieldElem`] is `num / ∏ atom^e`. Atoms are monic, radical-free
//! polynomials; the numerator may carry `r`, `s`, `t` (degree ≤ 1 each).
//! Radicals are cleared from denominators by conjugate multiplication, and
//! numerators are trial-divided by every denominator atom after each
//! operation. Zero testing only needs the numerator: `{1, r, s, t, …}`
//! products are linearly independent over the base field, so a reduced
//! numerator is zero exactly when the element is.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use super::gauss::Gauss;
use super::poly::{Poly, Var, ALL_VARS, NVARS, RADICALS};
use super::FieldError;

type Atom = Arc<Poly>;

#[derive(Clone, Debug, Default)]
pub struct FieldElem {
    num: Poly,
    den: Vec<(Atom, u32)>,
}

/// Variables with respect to which elements can be differentiated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiffVar {
    X,
    Y,
    Z,
    /// The free radial coordinate of the univariate radial field.
    Rad,
}

impl DiffVar {
    pub const CARTESIAN: [DiffVar; 3] = [DiffVar::X, DiffVar::Y, DiffVar::Z];

    pub fn var(self) -> Var {
        match self {
            DiffVar::X => Var::X,
            DiffVar::Y => Var::Y,
            DiffVar::Z => Var::Z,
            DiffVar::Rad => Var::Rad,
        }
    }

    pub fn axis(k: usize) -> DiffVar {
        DiffVar::CARTESIAN[k]
    }
}

fn standard_atoms() -> &'static [Atom] {
    static ATOMS: OnceLock<Vec<Atom>> = OnceLock::new();
    ATOMS.get_or_init(|| {
        [Var::R, Var::S, Var::T, Var::SRad, Var::TRad]
            .iter()
            .map(|v| Arc::new(super::poly::radicand(*v).monic().1))
            .collect()
    })
}

/// Factor a radical-free nonzero polynomial into `scalar * ∏ atom^e`.
fn factor_denominator(n: &Poly, hints: &[Atom]) -> (Gauss, Vec<(Atom, u32)>) {
    debug_assert!(!n.contains_any_radical());
    let (lc, mut rest) = n.monic();
    let mut atoms: Vec<(Atom, u32)> = Vec::new();
    let content = rest.monomial_content();
    if !content.is_one() {
        rest = rest.shift_down(&content);
        for v in ALL_VARS {
            let e = content.exp(v);
            if e > 0 {
                atoms.push((Arc::new(Poly::var(v)), e as u32));
            }
        }
    }
    for h in standard_atoms().iter().chain(hints.iter()) {
        if rest.is_constant() {
            break;
        }
        if h.len() == 1 {
            continue;
        }
        let mut count = 0;
        while let Some(q) = rest.exact_div(h) {
            rest = q;
            count += 1;
        }
        if count > 0 {
            atoms.push((h.clone(), count));
        }
    }
    let mut scalar = lc;
    if !rest.is_constant() {
        let (c, m) = rest.monic();
        scalar = &scalar * &c;
        atoms.push((Arc::new(m), 1));
    } else if let Some(c) = rest.as_constant() {
        scalar = &scalar * &c;
    }
    (scalar, normalize_den(atoms))
}

fn normalize_den(mut atoms: Vec<(Atom, u32)>) -> Vec<(Atom, u32)> {
    atoms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Atom, u32)> = Vec::with_capacity(atoms.len());
    for (a, e) in atoms {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((last, le)) if **last == *a => *le += e,
            _ => out.push((a, e)),
        }
    }
    out
}

fn expand_den(den: &[(Atom, u32)]) -> Poly {
    let mut p = Poly::one();
    for (a, e) in den {
        p = p.mul(&a.pow(*e));
    }
    p
}

/// Returns `(c, n)` with `p * c = n` and `n` radical-free.
fn rationalize(p: &Poly) -> (Poly, Poly) {
    let mut conj = Poly::one();
    let mut cur = p.clone();
    for v in RADICALS {
        if !cur.contains_var(v) {
            continue;
        }
        let (p0, p1) = cur.split_radical(v);
        let c = p0.sub(&p1.mul(&Poly::var(v)));
        cur = cur.mul(&c);
        conj = conj.mul(&c);
    }
    (conj, cur)
}

fn cancel(mut num: Poly, den: Vec<(Atom, u32)>) -> FieldElem {
    if num.is_zero() {
        return FieldElem::zero();
    }
    let mut out = Vec::with_capacity(den.len());
    for (a, mut e) in den {
        while e > 0 {
            match num.exact_div(&a) {
                Some(q) => {
                    num = q;
                    e -= 1;
                }
                None => break,
            }
        }
        if e > 0 {
            out.push((a, e));
        }
    }
    FieldElem { num, den: out }
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem::default()
    }

    pub fn one() -> Self {
        FieldElem::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        FieldElem {
            num,
            den: Vec::new(),
        }
    }

    pub fn constant(c: Gauss) -> Self {
        FieldElem::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        FieldElem::constant(Gauss::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        FieldElem::constant(Gauss::from_ratio(n, d))
    }

    pub fn rational(q: BigRational) -> Self {
        FieldElem::constant(Gauss::real(q))
    }

    pub fn i() -> Self {
        FieldElem::constant(Gauss::i())
    }

    pub fn var(v: Var) -> Self {
        FieldElem::from_poly(Poly::var(v))
    }

    pub fn x() -> Self {
        FieldElem::var(Var::X)
    }

    pub fn y() -> Self {
        FieldElem::var(Var::Y)
    }

    pub fn z() -> Self {
        FieldElem::var(Var::Z)
    }

    pub fn r() -> Self {
        FieldElem::var(Var::R)
    }

    pub fn s() -> Self {
        FieldElem::var(Var::S)
    }

    /// Cartesian coordinate `x_k` for `k ∈ {0,1,2}`.
    pub fn coord(k: usize) -> Self {
        FieldElem::var(DiffVar::axis(k).var())
    }

    /// `x^2 + y^2 + z^2`.
    pub fn rho() -> Self {
        FieldElem::from_poly(super::poly::radicand(Var::R).clone())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator_atoms(&self) -> impl Iterator<Item = (&Poly, u32)> {
        self.den.iter().map(|(a, e)| (a.as_ref(), *e))
    }

    pub fn denominator(&self) -> Poly {
        expand_den(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Gauss> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else if self.num.is_zero() {
            Some(Gauss::zero())
        } else {
            None
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.iter().any(|(a, _)| a.contains_var(v))
    }

    /// Numerator term count plus atom sizes; a rough size measure.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.iter().map(|(a, _)| a.len()).sum::<usize>()
    }

    pub fn scale(&self, k: &Gauss) -> FieldElem {
        if k.is_zero() {
            return FieldElem::zero();
        }
        FieldElem {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn add_ref(&self, o: &FieldElem) -> FieldElem {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return cancel(self.num.add(&o.num), self.den.clone());
        }
        let mut lcd: Vec<(Atom, u32)> = Vec::new();
        let mut fa = Poly::one();
        let mut fb = Poly::one();
        let (mut i, mut j) = (0, 0);
        while i < self.den.len() || j < o.den.len() {
            let ord = match (self.den.get(i), o.den.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                std::cmp::Ordering::Less => {
                    let (a, e) = &self.den[i];
                    fb = fb.mul(&a.pow(*e));
                    lcd.push((a.clone(), *e));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let (b, e) = &o.den[j];
                    fa = fa.mul(&b.pow(*e));
                    lcd.push((b.clone(), *e));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (a, ea) = &self.den[i];
                    let eb = o.den[j].1;
                    if ea > &eb {
                        fb = fb.mul(&a.pow(ea - eb));
                    } else if eb > *ea {
                        fa = fa.mul(&a.pow(eb - ea));
                    }
                    lcd.push((a.clone(), (*ea).max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        cancel(self.num.mul(&fa).add(&o.num.mul(&fb)), lcd)
    }

    pub fn sub_ref(&self, o: &FieldElem) -> FieldElem {
        self.add_ref(&o.neg_ref())
    }

    pub fn neg_ref(&self) -> FieldElem {
        FieldElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul_ref(&self, o: &FieldElem) -> FieldElem {
        if self.is_zero() || o.is_zero() {
            return FieldElem::zero();
        }
        if o.den.is_empty() {
            if let Some(c) = o.num.as_constant() {
                return self.scale(&c);
            }
        }
        if self.den.is_empty() {
            if let Some(c) = self.num.as_constant() {
                return o.scale(&c);
            }
        }
        let mut den = self.den.clone();
        den.extend(o.den.iter().cloned());
        cancel(self.num.mul(&o.num), normalize_den(den))
    }

    /// Divide by a polynomial, rationalizing it first.
    fn div_poly(&self, p: &Poly, hints: &[Atom]) -> Result<FieldElem, FieldError> {
        if p.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (conj, n) = rationalize(p);
        let (scalar, atoms) = factor_denominator(&n, hints);
        let inv = scalar.inv().ok_or(FieldError::DivisionByZero)?;
        let mut den = self.den.clone();
        den.extend(atoms);
        Ok(cancel(self.num.mul(&conj).scale(&inv), normalize_den(den)))
    }

    pub fn checked_div(&self, o: &FieldElem) -> Result<FieldElem, FieldError> {
        if o.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if o.den.is_empty() {
            if let Some(c) = o.num.as_constant() {
                return Ok(self.scale(&c.inv().expect("nonzero constant")));
            }
        }
        let numer = FieldElem {
            num: self.num.mul(&expand_den(&o.den)),
            den: self.den.clone(),
        };
        let hints: Vec<Atom> = self
            .den
            .iter()
            .chain(o.den.iter())
            .map(|(a, _)| a.clone())
            .collect();
        numer.div_poly(&o.num, &hints)
    }

    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        FieldElem::one().checked_div(self)
    }

    pub fn pow(&self, e: i32) -> Result<FieldElem, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = FieldElem::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Ok(acc)
    }

    /// Complex conjugate; all variables and parameters are real.
    pub fn conj(&self) -> FieldElem {
        let den = self
            .den
            .iter()
            .map(|(a, e)| (Arc::new(a.conj()), *e))
            .collect();
        FieldElem {
            num: self.num.conj(),
            den: normalize_den(den),
        }
    }

    pub fn re(&self) -> FieldElem {
        self.add_ref(&self.conj()).scale(&Gauss::from_ratio(1, 2))
    }

    pub fn im(&self) -> FieldElem {
        let half_i_inv = Gauss::new(
            BigRational::from_integer(0.into()),
            BigRational::new((-1).into(), 2.into()),
        );
        self.sub_ref(&self.conj()).scale(&half_i_inv)
    }

    pub fn is_real(&self) -> bool {
        self.im().is_zero()
    }

    /// Exact partial derivative.
    pub fn derivative(&self, v: DiffVar) -> FieldElem {
        let dn = poly_total_derivative(&self.num, v);
        let mut res = if dn.is_zero() {
            FieldElem::zero()
        } else {
            dn.mul_ref(&FieldElem {
                num: Poly::one(),
                den: self.den.clone(),
            })
        };
        for (a, e) in &self.den {
            let da = a.formal_derivative(v.var());
            if da.is_zero() {
                continue;
            }
            let log_d = FieldElem {
                num: da.scale(&Gauss::from_int(*e as i64)),
                den: vec![(a.clone(), 1)],
            };
            res = res.sub_ref(&self.mul_ref(&log_d));
        }
        res
    }

    /// `∂/∂x_k` for a Cartesian axis index.
    pub fn d(&self, k: usize) -> FieldElem {
        self.derivative(DiffVar::axis(k))
    }

    /// Radial derivative `x̂·∇`, valid for any element (exact for radial functions).
    pub fn d_dr(&self) -> FieldElem {
        let mut acc = FieldElem::zero();
        for k in 0..3 {
            acc = acc.add_ref(&FieldElem::coord(k).mul_ref(&self.d(k)));
        }
        acc.mul_ref(&inv_r())
    }

    /// Substitute polynomials for variables throughout.
    pub fn substitute(&self, subs: &dyn Fn(Var) -> Option<Poly>) -> Result<FieldElem, FieldError> {
        let num = FieldElem::from_poly(self.num.substitute(subs));
        let mut den = FieldElem::one();
        for (a, e) in &self.den {
            den = den.mul_ref(&FieldElem::from_poly(a.substitute(subs).pow(*e)));
        }
        num.checked_div(&den)
    }

    /// Evaluate at a full assignment of every occurring variable.
    pub fn eval_with(&self, values: &[Option<Gauss>; NVARS]) -> Result<Gauss, FieldError> {
        let n = self.num.eval(values).map_err(FieldError::Unassigned)?;
        let mut d = Gauss::one();
        for (a, e) in &self.den {
            let av = a.eval(values).map_err(FieldError::Unassigned)?;
            for _ in 0..*e {
                d = &d * &av;
            }
        }
        let dinv = d.inv().ok_or(FieldError::Pole)?;
        Ok(&n * &dinv)
    }
}

impl FieldElem {
    /// Floating-point evaluation; see [`float_assignment`](super::float_assignment).
    pub fn eval_f64(&self, values: &[f64; NVARS]) -> Complex64 {
        let n = self.num.eval_f64(values);
        let mut d = Complex64::new(1.0, 0.0);
        for (a, e) in &self.den {
            d *= a.eval_f64(values).powi(*e as i32);
        }
        n / d
    }
}

fn inv_r() -> FieldElem {
    static V: OnceLock<FieldElem> = OnceLock::new();
    V.get_or_init(|| FieldElem::r().inv().expect("r is nonzero"))
        .clone()
}

/// `∂w/∂v` for a radical `w` depending on the base variable `v`.
fn chain_factor(w: Var, v: DiffVar) -> Option<&'static FieldElem> {
    static TABLE: OnceLock<Vec<((Var, DiffVar), FieldElem)>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = Vec::new();
        let beta = FieldElem::var(Var::Beta);
        let rho = FieldElem::rho();
        for dv in DiffVar::CARTESIAN {
            let xv = FieldElem::var(dv.var());
            // d r / d x = x / r
            t.push(((Var::R, dv), xv.checked_div(&FieldElem::r()).unwrap()));
            // d s / d x = beta x / s
            t.push((
                (Var::S, dv),
                beta.mul_ref(&xv).checked_div(&FieldElem::s()).unwrap(),
            ));
            // d t / d x = 8 rho x / t
            t.push((
                (Var::T, dv),
                FieldElem::int(8)
                    .mul_ref(&rho)
                    .mul_ref(&xv)
                    .checked_div(&FieldElem::var(Var::T))
                    .unwrap(),
            ));
        }
        let rad = FieldElem::var(Var::Rad);
        t.push((
            (Var::SRad, DiffVar::Rad),
            beta.mul_ref(&rad)
                .checked_div(&FieldElem::var(Var::SRad))
                .unwrap(),
        ));
        t.push((
            (Var::TRad, DiffVar::Rad),
            FieldElem::int(8)
                .mul_ref(&rad.pow(3).unwrap())
                .checked_div(&FieldElem::var(Var::TRad))
                .unwrap(),
        ));
        t
    });
    table.iter().find(|(k, _)| *k == (w, v)).map(|(_, f)| f)
}

fn poly_total_derivative(p: &Poly, v: DiffVar) -> FieldElem {
    let mut res = FieldElem::from_poly(p.formal_derivative(v.var()));
    for w in RADICALS {
        if !p.contains_var(w) {
            continue;
        }
        if let Some(cf) = chain_factor(w, v) {
            let dw = p.formal_derivative(w);
            if !dw.is_zero() {
                res = res.add_ref(&FieldElem::from_poly(dw).mul_ref(cf));
            }
        }
    }
    res
}

impl PartialEq for FieldElem {
    fn eq(&self, o: &FieldElem) -> bool {
        if self.num == o.num && self.den == o.den {
            return true;
        }
        self.sub_ref(o).is_zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, o: &FieldElem) -> FieldElem {
                self.$impl_fn(o)
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, o: FieldElem) -> FieldElem {
                self.$impl_fn(&o)
            }
        }
        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, o: &FieldElem) -> FieldElem {
                self.$impl_fn(o)
            }
        }
        impl $trait<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, o: FieldElem) -> FieldElem {
                self.$impl_fn(&o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero; use [`FieldElem::checked_div`] otherwise.
    fn div(self, o: &FieldElem) -> FieldElem {
        self.checked_div(o).expect("division by zero")
    }
}

impl Div<FieldElem> for FieldElem {
    type Output = FieldElem;
    fn div(self, o: FieldElem) -> FieldElem {
        self.checked_div(&o).expect("division by zero")
    }
}

impl Div<&FieldElem> for FieldElem {
    type Output = FieldElem;
    fn div(self, o: &FieldElem) -> FieldElem {
        self.checked_div(o).expect("division by zero")
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::int(n)
    }
}

impl From<Var> for FieldElem {
    fn from(v: Var) -> Self {
        FieldElem::var(v)
    }
}

impl From<BigInt> for FieldElem {
    fn from(n: BigInt) -> Self {
        FieldElem::rational(BigRational::from_integer(n))
    }
}

fn fmt_atom(a: &Poly, e: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let single = a.len() == 1 && a.leading().is_some_and(|(_, c)| c.is_one());
    if single {
        write!(f, "{}", a)?;
    } else {
        write!(f, "({})", a)?;
    }
    if e > 1 {
        write!(f, "^{}", e)?;
    }
    Ok(())
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (k, (a, e)) in self.den.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            fmt_atom(a, *e, f)?;
        }
        f.write_str(")")
    }
}
