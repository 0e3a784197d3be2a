//! Exact operator action against a plain finite-difference evaluation of the
//! same Hamiltonian written out in components.

use num_complex::Complex64;
use sointegra_core::exactfield::{float_assignment, FieldElem, Var, NVARS};
use sointegra_core::operator::{Algebra, PauliCoeff};

type Spinor = [Complex64; 2];

const BETA: f64 = 0.7;
const MU: f64 = -1.3;

fn values(p: [f64; 3]) -> [f64; NVARS] {
    float_assignment(p, &[(Var::Beta, BETA), (Var::Mu, MU), (Var::Hbar, 1.0)], None)
}

fn psi_exact() -> [FieldElem; 2] {
    let (x, y, z) = (FieldElem::x(), FieldElem::y(), FieldElem::z());
    let p1 = (&x + &(FieldElem::i() * &y * &z)) / (FieldElem::one() + FieldElem::rho());
    let p2 = &z * &FieldElem::s() + FieldElem::r() * &x;
    [p1, p2]
}

fn psi_numeric(p: [f64; 3]) -> Spinor {
    let [x, y, z] = p;
    let rho = x * x + y * y + z * z;
    let i = Complex64::i();
    [
        (x + i * y * z) / (1.0 + rho),
        Complex64::from(z * (1.0 + BETA * rho).sqrt() + rho.sqrt() * x),
    ]
}

fn shift(p: [f64; 3], k: usize, h: f64) -> [f64; 3] {
    let mut q = p;
    q[k] += h;
    q
}

/// Fourth-order central first derivative.
fn d1(f: &dyn Fn([f64; 3]) -> Spinor, p: [f64; 3], k: usize, h: f64) -> Spinor {
    let g = |t: f64| f(shift(p, k, t * h));
    let (a, b, c, d) = (g(2.0), g(1.0), g(-1.0), g(-2.0));
    [0, 1].map(|s| (-a[s] + 8.0 * b[s] - 8.0 * c[s] + d[s]) / (12.0 * h))
}

/// Fourth-order central second derivative.
fn d2(f: &dyn Fn([f64; 3]) -> Spinor, p: [f64; 3], k: usize, h: f64) -> Spinor {
    let g = |t: f64| f(shift(p, k, t * h));
    let (a, b, o, c, d) = (g(2.0), g(1.0), g(0.0), g(-1.0), g(-2.0));
    [0, 1].map(|s| (-a[s] + 16.0 * b[s] - 30.0 * o[s] + 16.0 * c[s] - d[s]) / (12.0 * h * h))
}

/// `(σ, L) f` with `L = −i x × ∇`.
fn sigma_l(f: &dyn Fn([f64; 3]) -> Spinor, p: [f64; 3], h: f64) -> Spinor {
    let i = Complex64::i();
    let g: Vec<Spinor> = (0..3).map(|k| d1(f, p, k, h)).collect();
    let [x, y, z] = p;
    let l = [
        [0, 1].map(|s| -i * (y * g[2][s] - z * g[1][s])),
        [0, 1].map(|s| -i * (z * g[0][s] - x * g[2][s])),
        [0, 1].map(|s| -i * (x * g[1][s] - y * g[0][s])),
    ];
    // σ1 l1 + σ2 l2 + σ3 l3 on a column
    [
        l[0][1] - i * l[1][1] + l[2][0],
        l[0][0] + i * l[1][0] - l[2][1],
    ]
}

fn v1(p: [f64; 3]) -> f64 {
    let rho: f64 = p.iter().map(|c| c * c).sum();
    0.5 / rho + 0.25 * rho
}

fn h_numeric(p: [f64; 3]) -> Spinor {
    let h = 1e-3;
    let f = |q: [f64; 3]| psi_numeric(q);
    let lap = (0..3).fold([Complex64::default(); 2], |acc, k| {
        let d = d2(&f, p, k, h);
        [acc[0] + d[0], acc[1] + d[1]]
    });
    let r = p.iter().map(|c| c * c).sum::<f64>().sqrt();
    let v1f = |q: [f64; 3]| psi_numeric(q).map(|c| c * v1(q));
    let a = sigma_l(&f, p, h);
    let b = sigma_l(&v1f, p, h);
    let psi = psi_numeric(p);
    [0, 1].map(|s| -0.5 * lap[s] + MU / r * psi[s] + 0.5 * (v1(p) * a[s] + b[s]))
}

#[test]
fn hamiltonian_action_matches_finite_differences() {
    let alg = Algebra::unit();
    let v0 = FieldElem::var(Var::Mu) / FieldElem::r();
    let v1 = FieldElem::ratio(1, 2) / FieldElem::rho() + FieldElem::ratio(1, 4) * FieldElem::rho();
    let ham = alg.hamiltonian(&v0, &v1);
    let [p1, p2] = psi_exact();
    let col = PauliCoeff::from_matrix([[p1, FieldElem::zero()], [p2, FieldElem::zero()]]);
    let out = ham.apply_to(&col).to_matrix();
    for p in [[0.3, -0.7, 0.5], [1.1, 0.2, -0.4], [-0.6, 0.9, 1.3]] {
        let vals = values(p);
        let num = h_numeric(p);
        for s in 0..2 {
            let ex = out[s][0].eval_f64(&vals);
            assert!((ex - num[s]).norm() < 1e-6, "{p:?} component {s}: {ex} vs {}", num[s]);
        }
        // the numeric spinor matches its exact counterpart
        let psi = psi_numeric(p);
        let [e1, e2] = psi_exact().map(|f| f.eval_f64(&vals));
        assert!((e1 - psi[0]).norm() < 1e-14 && (e2 - psi[1]).norm() < 1e-14);
    }
}
