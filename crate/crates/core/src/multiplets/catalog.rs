//! The four superintegrable cases and their first-order integrals.

use serde::Serialize;

use crate::exactfield::{FieldElem, Var};
use crate::gauge::{generators, levi_civita, AlgebraFamily};
use crate::operator::{Algebra, DiffOp};

use super::basis::Ops;

/// An integral written two ways: directly, and as a polynomial in the
/// generators `J`, `S`, `Π`.
#[derive(Clone, Debug)]
pub struct EnvelopeIdentity {
    pub name: String,
    pub polynomial: &'static str,
    pub direct: DiffOp,
    pub in_generators: DiffOp,
}

#[derive(Clone, Debug)]
pub struct CatalogCase {
    pub id: u8,
    pub label: &'static str,
    /// Scalar potentials to test. Where the scalar potential is arbitrary
    /// these are independent witnesses.
    pub v0: Vec<FieldElem>,
    pub v1: FieldElem,
    pub integrals: Vec<(String, DiffOp)>,
    pub algebra: Option<AlgebraFamily>,
    pub envelope: Vec<EnvelopeIdentity>,
}

fn mu() -> FieldElem {
    FieldElem::var(Var::Mu)
}

/// Witnesses for an arbitrary radial scalar potential.
pub fn arbitrary_v0_witnesses() -> Vec<FieldElem> {
    vec![mu() / FieldElem::r(), mu() * FieldElem::rho()]
}

fn j_ops(alg: &Algebra) -> Vec<(String, DiffOp)> {
    (1..=3).map(|i| (format!("J{i}"), alg.j(i))).collect()
}

/// `X_P¹ = (σ, x)/r`
pub fn pseudoscalar_one(alg: &Algebra) -> DiffOp {
    alg.sigma_dot_x()
        .scale(&(FieldElem::one() / FieldElem::r()))
}

/// `X_P² = −r(σ, p) + (σ, x)(x, p)/r − iħ(σ, x)/r`
pub fn pseudoscalar_two(alg: &Algebra) -> DiffOp {
    let r = FieldElem::r();
    let inv = FieldElem::one() / r.clone();
    let ih = FieldElem::i() * alg.hbar.clone();
    alg.sigma_dot_p()
        .scale(&(-r))
        .add(&alg.sigma_dot_x().compose(&alg.x_dot_p()).scale(&inv))
        .sub(&alg.sigma_dot_x().scale(&(ih * inv)))
}

/// `X_P = −(s/β)(σ, p) + (σ, x)((x, p) − iħ)/(s − α)`, `s = √(1 + βr²)`.
pub fn pseudoscalar_beta(alg: &Algebra, alpha: i64) -> DiffOp {
    let s = FieldElem::s();
    let beta = FieldElem::var(Var::Beta);
    let ih = FieldElem::i() * alg.hbar.clone();
    let shifted = alg.x_dot_p().sub(&alg.scalar(ih));
    alg.sigma_dot_p().scale(&(-(&s / &beta))).add(
        &alg.sigma_dot_x()
            .compose(&shifted)
            .scale(&(FieldElem::one() / (s - FieldElem::int(alpha)))),
    )
}

/// The extra integrals of the `V0 = ħ²/r², V1 = ħ/r²` case, written directly
/// and as elements of the enveloping algebra of `{J − S, Π} ⊕ {S}`.
/// The axial vector carries `(iħ/2)σ`, the value its Hermitian completion
/// requires.
pub fn case1_extras(alg: &Algebra) -> Vec<EnvelopeIdentity> {
    let o = Ops { alg };
    let h = &alg.hbar;
    let ih = FieldElem::i() * h.clone();
    let inv = FieldElem::one() / FieldElem::rho();
    let inv_h = FieldElem::one() / h.clone();
    let g = generators(alg);
    let k: Vec<DiffOp> = (0..3).map(|i| g.j[i].sub(&g.s[i])).collect();
    let cross = |a: &[DiffOp], b: &[DiffOp], i: usize| {
        let mut acc = DiffOp::zero();
        for j in 0..3 {
            for l in 0..3 {
                let e = levi_civita(i + 1, j + 1, l + 1);
                if e != 0 {
                    acc = acc.add(&a[j].compose(&b[l]).scale(&FieldElem::int(e)));
                }
            }
        }
        acc
    };
    let mut out = Vec::new();
    let sdotpi = (0..3).fold(DiffOp::zero(), |acc, i| acc.add(&g.s[i].compose(&g.pi[i])));
    let xp = o
        .sp()
        .scale(&FieldElem::ratio(-1, 2))
        .add(&o.sx().compose(&o.xp()).scale(&inv))
        .sub(&o.sx().scale(&(&ih * &inv)));
    out.push(EnvelopeIdentity {
        name: "X_P".into(),
        polynomial: "(S, Pi)/hbar",
        direct: xp,
        in_generators: sdotpi.scale(&inv_h),
    });
    for i in 0..3 {
        // x ∧ p = L, x ∧ σ = −σ ∧ x
        let v = DiffOp::scalar(FieldElem::int(2) * h * FieldElem::coord(i) * &inv)
            .sub(&o.spw(i))
            .add(&o.sx().compose(&o.l(i)).scale(&(FieldElem::int(2) * &inv)))
            .add(&o.sxw(i).scale(&(&ih * &inv)));
        out.push(EnvelopeIdentity {
            name: format!("V{}", i + 1),
            polynomial: "2 (S x Pi)/hbar",
            direct: v,
            in_generators: cross(&g.s, &g.pi, i).scale(&(FieldElem::int(2) * &inv_h)),
        });
    }
    for i in 0..3 {
        let x = FieldElem::coord(i);
        let a = o
            .x(i)
            .compose(&o.sp())
            .scale(&FieldElem::ratio(-1, 2))
            .add(&o.sig(i).scale(&(&ih / &FieldElem::int(2))))
            .sub(&o.sx().compose(&o.p(i)).scale(&FieldElem::ratio(1, 2)))
            .add(&o.sx().compose(&o.xp()).scale(&(&x * &inv)))
            .sub(&o.sx().scale(&(&ih * FieldElem::ratio(3, 2) * &x * &inv)));
        out.push(EnvelopeIdentity {
            name: format!("A{}", i + 1),
            polynomial: "(S x (J - S))/hbar",
            direct: a,
            in_generators: cross(&g.s, &k, i).scale(&inv_h),
        });
    }
    out
}

/// The axial vector exactly as printed, with `+(ħ/2)σ`.
pub fn case1_axial_as_printed(alg: &Algebra, i: usize) -> DiffOp {
    let ext = case1_extras(alg);
    let a = &ext[4 + i - 1].direct;
    let ih = FieldElem::i() * alg.hbar.clone();
    a.sub(&alg.sigma(i).scale(&(&ih / &FieldElem::int(2))))
        .add(&alg.sigma(i).scale(&(&alg.hbar / &FieldElem::int(2))))
}

/// The four cases of first-order superintegrability.
pub fn theorem1_catalog(alg: &Algebra) -> Vec<CatalogCase> {
    let h = alg.hbar.clone();
    let inv = FieldElem::one() / FieldElem::rho();
    let g = generators(alg);
    let name = |p: &str, i: usize| format!("{p}{}", i + 1);
    let mut case1: Vec<(String, DiffOp)> = Vec::new();
    let mut case2: Vec<(String, DiffOp)> = Vec::new();
    for i in 0..3 {
        case1.push((name("J", i), g.j[i].clone()));
        case2.push((name("J", i), g.j[i].clone()));
    }
    for i in 0..3 {
        case1.push((name("S", i), g.s[i].clone()));
        case2.push((name("S", i), g.s[i].clone()));
    }
    for i in 0..3 {
        case1.push((name("Pi", i), g.pi[i].clone()));
    }
    let envelope = case1_extras(alg);
    for e in &envelope {
        case1.push((e.name.clone(), e.direct.clone()));
    }
    let mut case3 = vec![
        ("X_P1".to_string(), pseudoscalar_one(alg)),
        ("X_P2".to_string(), pseudoscalar_two(alg)),
    ];
    case3.extend(j_ops(alg));
    let beta_potential = |alpha: i64| {
        &h / &(FieldElem::int(2) * FieldElem::rho())
            * (FieldElem::one() + FieldElem::int(alpha) / FieldElem::s())
    };
    let mut out = vec![
        CatalogCase {
            id: 1,
            label: "V0 = hbar^2/r^2, V1 = hbar/r^2",
            v0: vec![&h * &h * &inv],
            v1: &h * &inv,
            integrals: case1,
            algebra: Some(AlgebraFamily::NineDim),
            envelope,
        },
        CatalogCase {
            id: 2,
            label: "V0 = V0(r), V1 = hbar/r^2",
            v0: arbitrary_v0_witnesses(),
            v1: &h * &inv,
            integrals: case2,
            algebra: Some(AlgebraFamily::SixDim),
            envelope: Vec::new(),
        },
        CatalogCase {
            id: 3,
            label: "V0 = V0(r), V1 = hbar/(2r^2)",
            v0: arbitrary_v0_witnesses(),
            v1: &h / &(FieldElem::int(2) * FieldElem::rho()),
            integrals: case3,
            algebra: None,
            envelope: Vec::new(),
        },
    ];
    for (alpha, label) in [
        (
            1,
            "V0 = hbar V1, V1 = hbar/(2r^2) (1 + 1/sqrt(1 + beta r^2))",
        ),
        (
            -1,
            "V0 = hbar V1, V1 = hbar/(2r^2) (1 - 1/sqrt(1 + beta r^2))",
        ),
    ] {
        let v1 = beta_potential(alpha);
        let mut ints = vec![("X_P".to_string(), pseudoscalar_beta(alg, alpha))];
        ints.extend(j_ops(alg));
        out.push(CatalogCase {
            id: 4,
            label,
            v0: vec![&h * &v1],
            v1,
            integrals: ints,
            algebra: None,
            envelope: Vec::new(),
        });
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogCheck {
    pub case: u8,
    pub integral: String,
    pub v0: String,
    pub commutes: bool,
}

/// `[H, X] = 0` for every integral and every scalar-potential witness.
pub fn verify_catalog(alg: &Algebra, cases: &[CatalogCase]) -> Vec<CatalogCheck> {
    let mut jobs = Vec::new();
    for c in cases {
        for v0 in &c.v0 {
            let h = alg.hamiltonian(v0, &c.v1);
            for (name, x) in &c.integrals {
                jobs.push((c.id, name.clone(), v0.clone(), h.clone(), x.clone()));
            }
        }
    }
    crate::par::map(&jobs, |(id, name, v0, h, x)| CatalogCheck {
        case: *id,
        integral: name.clone(),
        v0: v0.to_string(),
        commutes: h.commutator(x).is_zero(),
    })
}
