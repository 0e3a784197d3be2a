//! The published determining equations, transcribed term by term.

use crate::exactfield::FieldElem;
use crate::operator::IntegralAnsatz;

/// Everything the equations refer to, with first derivatives precomputed.
pub(crate) struct Ctx<'a> {
    pub h: &'a FieldElem,
    pub v: &'a FieldElem,
    pub vd: [FieldElem; 3],
    pub v0d: [FieldElem; 3],
    /// `big[f][i]` is `A_{i+1}`, `B_{i+1}`, `C_{i+1}` for `f = 0, 1, 2`.
    pub big: [[FieldElem; 3]; 3],
    /// `dbig[f][i][k] = ∂_k big[f][i]`.
    pub dbig: [[[FieldElem; 3]; 3]; 3],
    pub a: &'a [FieldElem; 3],
    pub b: &'a [FieldElem; 3],
    pub k0: [FieldElem; 3],
    pub phi: &'a [FieldElem; 3],
    pub dphi: [[FieldElem; 3]; 3],
    pub dphi0: [FieldElem; 3],
}

fn grad(f: &FieldElem) -> [FieldElem; 3] {
    [f.d(0), f.d(1), f.d(2)]
}

impl<'a> Ctx<'a> {
    pub fn new(
        h: &'a FieldElem,
        ans: &'a IntegralAnsatz,
        v0: &FieldElem,
        v1: &'a FieldElem,
    ) -> Self {
        let big = [ans.big_a.clone(), ans.big_b.clone(), ans.big_c.clone()];
        let dbig = std::array::from_fn(|f| std::array::from_fn(|i| grad(&big[f][i])));
        Ctx {
            h,
            v: v1,
            vd: grad(v1),
            v0d: grad(v0),
            dbig,
            big,
            a: &ans.a,
            b: &ans.b,
            k0: [ans.a0(), ans.b0(), ans.c0()],
            phi: &ans.phi,
            dphi: std::array::from_fn(|i| grad(&ans.phi[i])),
            dphi0: grad(&ans.phi0),
        }
    }
}

fn x() -> FieldElem {
    FieldElem::x()
}
fn y() -> FieldElem {
    FieldElem::y()
}
fn z() -> FieldElem {
    FieldElem::z()
}
fn two() -> FieldElem {
    FieldElem::int(2)
}

/// The eighteen second-order equations.
pub(crate) fn order2(c: &Ctx) -> Vec<FieldElem> {
    let h = c.h;
    let v = c.v;
    let [a1, a2, a3] = &c.big[0];
    let [b1, b2, b3] = &c.big[1];
    let [c1, c2, c3] = &c.big[2];
    // derivative of component i (1-based) of family f along k (0-based)
    let da = |i: usize, k: usize| &c.dbig[0][i - 1][k];
    let db = |i: usize, k: usize| &c.dbig[1][i - 1][k];
    let dc = |i: usize, k: usize| &c.dbig[2][i - 1][k];
    let (x, y, z) = (x(), y(), z());
    let tv = two() * v;
    vec![
        &tv * &z * a1 + h * da(3, 0),
        &tv * &y * a1 + h * da(2, 0),
        &tv * &x * b2 + h * db(1, 1),
        &tv * &z * b2 + h * db(3, 1),
        &tv * &x * c3 + h * dc(1, 2),
        &tv * &y * c3 + h * dc(2, 2),
        &tv * (&y * a2 + &z * a3) - h * da(1, 0),
        &tv * (&x * b1 + &z * b3) - h * db(2, 1),
        &tv * (&x * c1 + &y * c2) - h * dc(3, 2),
        &tv * &z * (a2 + b1) + h * da(3, 1) + h * db(3, 0),
        &tv * &y * (a3 + c1) + h * da(2, 2) + h * dc(2, 0),
        &tv * &x * (b3 + c2) + h * db(1, 2) + h * dc(1, 1),
        &tv * (&x * a1 + &y * a2 - &z * c1) - h * da(3, 2) - h * dc(3, 0),
        &tv * (&x * b1 + &y * b2 - &z * c2) - h * db(3, 2) - h * dc(3, 1),
        &tv * (&x * a2 - &y * b2 - &z * b3) + h * da(1, 1) + h * db(1, 0),
        &tv * (&x * a1 + &z * a3 - &y * b1) - h * da(2, 1) - h * db(2, 0),
        &tv * (&x * a3 - &y * c2 - &z * c3) + h * da(1, 2) + h * dc(1, 0),
        &tv * (&y * b3 - &x * c1 - &z * c3) + h * db(2, 2) + h * dc(2, 1),
    ]
}

/// The nine φ-equations followed by the three φ0-gradient equations.
pub(crate) fn order1(c: &Ctx) -> Vec<FieldElem> {
    let mut out = phi_equations(c.h, c.v, &c.vd, c.a, c.b, &c.k0, c.phi, &c.dphi);
    out.extend(phi0_equations(c));
    out
}

/// The nine first-order equations that involve only `V1`, `φ_i`, `a_i`, `b_i`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn phi_equations(
    h: &FieldElem,
    v: &FieldElem,
    vd: &[FieldElem; 3],
    a: &[FieldElem; 3],
    b: &[FieldElem; 3],
    k0: &[FieldElem; 3],
    phi: &[FieldElem; 3],
    dphi: &[[FieldElem; 3]; 3],
) -> Vec<FieldElem> {
    let (x, y, z) = (x(), y(), z());
    let [a1, a2, a3] = a;
    let [b1, b2, b3] = b;
    let [p1, p2, p3] = phi;
    let dp = |i: usize, k: usize| &dphi[i - 1][k];
    let g = &k0[0] * &vd[0] + &k0[1] * &vd[1] + &k0[2] * &vd[2];
    let tw = two();
    vec![
        v * (h * (b1 - &(a3 * &y)) + &tw * &y * p3) + h * (&x * &g + dp(2, 2)),
        v * (h * (b1 + &(a2 * &z)) - &tw * &z * p2) + h * (&x * &g - dp(3, 1)),
        v * (h * (b2 - &(a1 * &z)) + &tw * &z * p1) + h * (&y * &g + dp(3, 0)),
        v * (h * (b2 + &(a3 * &x)) - &tw * &x * p3) + h * (&y * &g - dp(1, 2)),
        v * (h * (b3 - &(a2 * &x)) + &tw * &x * p2) + h * (&z * &g + dp(1, 1)),
        v * (h * (b3 + &(a1 * &y)) - &tw * &y * p1) + h * (&z * &g - dp(2, 0)),
        v * (h * (a2 * &y + a3 * &z) - &tw * &y * p2 - &tw * &z * p3) + h * dp(1, 0),
        v * (h * (a1 * &x + a3 * &z) - &tw * &x * p1 - &tw * &z * p3) + h * dp(2, 1),
        v * (h * (a1 * &x + a2 * &y) - &tw * &x * p1 - &tw * &y * p2) + h * dp(3, 2),
    ]
}

fn phi0_equations(c: &Ctx) -> Vec<FieldElem> {
    let v = c.v;
    let (x, y, z) = (x(), y(), z());
    let [vx, vy, vz] = &c.vd;
    let [a1, a2, a3] = &c.big[0];
    let [b1, b2, b3] = &c.big[1];
    let [c1, c2, c3] = &c.big[2];
    // curl-like combination (y F3,x − x F3,y) + (x F2,z − z F2,x) + (z F1,y − y F1,z) for family f
    let rot = |f: usize| {
        let d = |i: usize, k: usize| &c.dbig[f][i - 1][k];
        (&y * d(3, 0) - &x * d(3, 1))
            + (&x * d(2, 2) - &z * d(2, 0))
            + (&z * d(1, 1) - &y * d(1, 2))
    };
    let e1 = v * (rot(0) + (c2 - b3))
        + vx * (&z * a2 - &y * a3)
        + vy * (&z * b2 - &y * b3)
        + vz * (&z * c2 - &y * c3);
    let e2 = v * (rot(1) + (a3 - c1))
        + vx * (&x * a3 - &z * a1)
        + vy * (&x * b3 - &z * b1)
        + vz * (&x * c3 - &z * c1);
    let e3 = v * (rot(2) + (b1 - a2))
        + vx * (&y * a1 - &x * a2)
        + vy * (&y * b1 - &x * b2)
        + vz * (&y * c1 - &x * c2);
    vec![&c.dphi0[0] - &e1, &c.dphi0[1] - &e2, &c.dphi0[2] - &e3]
}

/// The four zero-order equations.
pub(crate) fn order0(c: &Ctx) -> Vec<FieldElem> {
    let h = c.h;
    let v = c.v;
    let (x, y, z) = (x(), y(), z());
    let [vx, vy, vz] = &c.vd;
    let [v0x, v0y, v0z] = &c.v0d;
    let dp = |i: usize, k: usize| &c.dphi[i - 1][k];
    let d = |f: usize, i: usize, k: usize| &c.dbig[f][i - 1][k];
    let [a0, b0, c0] = &c.k0;
    let [p0x, p0y, p0z] = &c.dphi0;
    let tw = two();

    let e0 = a0 * v0x
        + b0 * v0y
        + c0 * v0z
        + v * (&x * (dp(2, 2) - dp(3, 1))
            + &y * (dp(3, 0) - dp(1, 2))
            + &z * (dp(1, 1) - dp(2, 0)));

    // V1-gradient blocks: Σ_f V1,f · (pair of angular derivatives of family f)
    let block = |pair: &dyn Fn(usize) -> FieldElem| vx * pair(0) + vy * pair(1) + vz * pair(2);
    let v0dot = |i: usize| &c.big[0][i - 1] * v0x + &c.big[1][i - 1] * v0y + &c.big[2][i - 1] * v0z;

    let e1 = h
        * (v * (d(0, 1, 2) + d(1, 2, 2) - d(2, 2, 1) - d(2, 1, 0))
            + block(&|f| {
                (&x * d(f, 1, 2) - &z * d(f, 1, 0)) + (&y * d(f, 2, 2) - &z * d(f, 2, 1))
            }))
        + &tw * v0dot(3)
        + &tw * v * (&y * p0x - &x * p0y);
    let e2 = h
        * (v * (d(1, 2, 0) + d(2, 3, 0) - d(0, 3, 2) - d(0, 2, 1))
            + block(&|f| {
                (&z * d(f, 3, 0) - &x * d(f, 3, 2)) + (&y * d(f, 2, 0) - &x * d(f, 2, 1))
            }))
        + &tw * v0dot(1)
        + &tw * v * (&z * p0y - &y * p0z);
    let e3 = h
        * (v * (d(0, 1, 1) + d(2, 3, 1) - d(1, 3, 2) - d(1, 1, 0))
            + block(&|f| {
                (&z * d(f, 3, 1) - &y * d(f, 3, 2)) + (&x * d(f, 1, 1) - &y * d(f, 1, 0))
            }))
        + &tw * v0dot(2)
        + &tw * v * (&x * p0z - &z * p0x);
    vec![e0, e1, e2, e3]
}
