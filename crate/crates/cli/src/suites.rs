//! The check lists behind `verify catalog`, `algebra`, `deteq` and
//! `verify integral`.

use std::sync::Arc;
use std::time::Instant;

use sointegra_core::deteq::{
    check_phi_solution, crosscheck_commutator, rank_probe, PhiCase, RankProbe,
};
use sointegra_core::exactfield::FieldElem;
use sointegra_core::exprdsl::print_scalar;
use sointegra_core::gauge::{
    build_u, conjugate, nine_generators, transformed_hamiltonian, verify_algebra,
    verify_generator_relation, AlgebraFamily, GaugeBranch,
};
use sointegra_core::multiplets::{theorem1_catalog, verify_case_closures};
use sointegra_core::operator::{Algebra, DiffOp, IntegralAnsatz, PauliCoeff};

use crate::report::{num, Check, Job, Outcome, Status};

pub const A_GAUGE: &str = "explicit form of the gauge transformation $U$";
pub const A_TRANSFORMED: &str = "transformed Hamiltonian is found";
pub const A_GENERATOR: &str = "to generate a spin-orbit term";
pub const A_GAUGE_TRANSFORMS: &str = "just the gauge transforms";
pub const A_SIX: &str = "satisfy the following commutation relations";
pub const A_NINE: &str = "Euclidean Lie algebra";
pub const A_THEOREM: &str = "only first-order spherically symmetric";
pub const A_PSEUDOSCALARS: &str = "The integrals are the two pseudoscalars";
pub const A_ENVELOPE: &str = "they all lie in the enveloping algebra";
pub const A_PHI: &str = "has the following solution";
pub const A_RANK0: &str = "It can be $0$ if and only if";
pub const A_RANK2: &str = "can be $2$ if and only if";
pub const A_RANK3: &str = "system of algebraic equations";
pub const A_CLOSURE: &str = "are special solutions of";
pub const A_COMMUTATIVITY: &str = "obtained from the commutativity condition $[H, X]=0$";
pub const A_MOMENTA: &str = "coefficients of different powers of the momenta";
pub const A_ENERGIES: &str = "bound state energies to be";
pub const A_SYSTEM: &str = "system of equations to solve";

fn branches() -> Vec<(String, GaugeBranch)> {
    let sign = |b: bool| if b { '+' } else { '-' };
    let mut out: Vec<(String, GaugeBranch)> = GaugeBranch::sign_branches()
        .into_iter()
        .map(|b| (format!("c1{},c3{},c2=0", sign(b.c1_plus), sign(b.c3_plus)), b))
        .collect();
    out.push(("c1+,c3+,c2=pi/2".into(), GaugeBranch::quarter_turns(1, true, true)));
    out.push(("c1-,c3+,c2=pi".into(), GaugeBranch::quarter_turns(2, false, true)));
    out
}

fn gauge_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for (label, b) in branches() {
        let br = b.clone();
        jobs.push(Job::new(format!("gauge.unitarity[{label}]"), A_GAUGE, move || {
            let u = match build_u(&br) {
                Ok(u) => u,
                Err(e) => return Outcome::ok(false).with("error", e.to_string()),
            };
            let unit = u.unitarity_product() == PauliCoeff::scalar(FieldElem::one());
            let det = u.determinant();
            let det_unit = (&det * &det.conj()).is_one();
            Outcome::ok(unit && det_unit)
                .with("u_dagger_u_is_identity", unit)
                .with("det_modulus_one", det_unit)
        }));
        let br = b.clone();
        jobs.push(Job::new(format!("gauge.kinetic_conjugation[{label}]"), A_TRANSFORMED, move || {
            let alg = Algebra::symbolic();
            let u = build_u(&br).expect("unit phase");
            let got = conjugate(&alg.kinetic(), &u);
            let diff = got.sub(&transformed_hamiltonian(&alg, &FieldElem::zero()));
            Outcome::ok(diff.is_zero()).with("nonzero_terms", diff.terms().len())
        }));
        let br = b;
        jobs.push(Job::new(format!("gauge.generator_relation[{label}]"), A_GENERATOR, move || {
            let alg = Algebra::symbolic();
            let u = build_u(&br).expect("unit phase");
            let g = verify_generator_relation(&alg, &u);
            let expected = -(&alg.hbar / &FieldElem::rho());
            let ok = g.holds && g.gamma == expected;
            Outcome::ok(ok).with("gamma", print_scalar(&g.gamma))
        }));
    }
    jobs.push(Job::new("gauge.nine_generators_commute", A_GAUGE_TRANSFORMS, || {
        let alg = Algebra::symbolic();
        let h = transformed_hamiltonian(&alg, &FieldElem::zero());
        let bad: Vec<String> = nine_generators(&alg)
            .into_iter()
            .filter(|(_, g)| !h.commutator(g).is_zero())
            .map(|(n, _)| n)
            .collect();
        Outcome::ok(bad.is_empty()).with("failing", bad)
    }));
    jobs
}

fn algebra_summary_job(family: AlgebraFamily) -> Job {
    let (name, anchor) = match family {
        AlgebraFamily::SixDim => ("algebra.six_dim", A_SIX),
        AlgebraFamily::NineDim => ("algebra.nine_dim", A_NINE),
    };
    Job::new(name, anchor, move || {
        let t = verify_algebra(&Algebra::symbolic(), family);
        let bad: Vec<String> = t
            .failures()
            .iter()
            .map(|e| format!("[{}, {}]", e.left, e.right))
            .collect();
        Outcome::ok(bad.is_empty())
            .with("commutators", t.entries.len())
            .with("failing", bad)
    })
}

fn commutator_outcome(h: &DiffOp, x: &DiffOp) -> Outcome {
    let c = h.commutator(x);
    Outcome::ok(c.is_zero()).with("nonzero_terms", c.terms().len())
}

fn catalog_jobs() -> Vec<Job> {
    let alg = Arc::new(Algebra::symbolic());
    let mut jobs = Vec::new();
    let mut case4 = 0;
    for case in theorem1_catalog(&alg) {
        let tag = if case.id == 4 {
            case4 += 1;
            format!("case4{}", if case4 == 1 { "+" } else { "-" })
        } else {
            format!("case{}", case.id)
        };
        let anchor = if case.id == 3 { A_PSEUDOSCALARS } else { A_THEOREM };
        for (k, v0) in case.v0.iter().enumerate() {
            let h = Arc::new(alg.hamiltonian(v0, &case.v1));
            let v0_text = print_scalar(v0);
            for (name, x) in &case.integrals {
                let (h, x, v0_text) = (h.clone(), x.clone(), v0_text.clone());
                jobs.push(Job::new(
                    format!("catalog.{tag}.{name}[v0#{k}]"),
                    anchor,
                    move || commutator_outcome(&h, &x).with("v0", v0_text.as_str()),
                ));
            }
        }
        for e in case.envelope {
            jobs.push(Job::new(
                format!("catalog.{tag}.envelope.{}", e.name),
                A_ENVELOPE,
                move || {
                    let d = e.direct.sub(&e.in_generators);
                    Outcome::ok(d.is_zero())
                        .with("polynomial", e.polynomial)
                        .with("nonzero_terms", d.terms().len())
                },
            ));
        }
    }
    jobs
}

/// Rank witnesses: `1/r²`, `1/(2r²)` and `1/(1 + r²)`.
pub fn rank_witnesses() -> Vec<(&'static str, FieldElem, usize, &'static str)> {
    let rho = FieldElem::rho;
    vec![
        ("1/r^2", FieldElem::one() / rho(), 0, A_RANK0),
        ("1/(2r^2)", FieldElem::ratio(1, 2) / rho(), 2, A_RANK2),
        ("1/(1+r^2)", FieldElem::one() / (FieldElem::one() + rho()), 3, A_RANK3),
    ]
}

fn probe_outcome(p: &RankProbe) -> Outcome {
    let mut o = Outcome::ok(true)
        .with("rank", p.rank)
        .with("points_used", p.points_used);
    if let Some(w) = &p.witness {
        o = o
            .with("witness_point", w.point.to_vec())
            .with("witness_rows", w.rows.iter().map(|r| r + 1).collect::<Vec<_>>())
            .with("witness_cols", w.cols.iter().map(|c| c + 1).collect::<Vec<_>>());
    }
    o
}

fn zero3() -> [FieldElem; 3] {
    [FieldElem::zero(), FieldElem::zero(), FieldElem::zero()]
}

fn deteq_catalog_jobs() -> Vec<Job> {
    let mut jobs = vec![
        Job::new("deteq.phi.gauge_case", A_PHI, || {
            Outcome::ok(check_phi_solution(&PhiCase::Gauge))
        }),
        Job::new("deteq.phi.radial_case", A_PHI, || {
            let v1 = FieldElem::ratio(1, 2) / FieldElem::rho();
            Outcome::ok(check_phi_solution(&PhiCase::Radial { v1, b: zero3() }))
        }),
    ];
    for (label, v1, expected, anchor) in rank_witnesses() {
        jobs.push(Job::new(format!("deteq.rank[V1={label}]"), anchor, move || {
            match rank_probe(&v1) {
                Ok(p) => {
                    let mut o = probe_outcome(&p).with("expected", expected);
                    o.status = Status::from_bool(p.rank == expected);
                    o
                }
                Err(e) => Outcome::ok(false).with("error", e.to_string()),
            }
        }));
    }
    jobs
}

/// The full `verify catalog` suite.
pub fn catalog_checks(timing: bool) -> Vec<Check> {
    let mut jobs = gauge_jobs();
    jobs.push(algebra_summary_job(AlgebraFamily::SixDim));
    jobs.push(algebra_summary_job(AlgebraFamily::NineDim));
    jobs.extend(catalog_jobs());
    jobs.extend(deteq_catalog_jobs());
    let mut checks = crate::report::run_jobs(jobs, timing);
    checks.extend(closure_checks(timing));
    checks
}

fn closure_checks(timing: bool) -> Vec<Check> {
    let t = Instant::now();
    let all = verify_case_closures();
    let ms = t.elapsed().as_secs_f64() * 1e3 / all.len().max(1) as f64;
    all.into_iter()
        .map(|c| {
            let mut residual = std::collections::BTreeMap::new();
            residual.insert("claim".to_string(), c.claim.into());
            Check {
                name: format!("closure.{:?}.case_{}", c.family, c.case),
                paper_anchor: A_CLOSURE.to_string(),
                status: Status::from_bool(c.ok),
                residual,
                timing_ms: timing.then(|| num(ms)),
            }
        })
        .collect()
}

/// Every commutator of one algebra, as separate checks.
pub fn algebra_checks(family: AlgebraFamily, timing: bool) -> Vec<Check> {
    let (tag, anchor) = match family {
        AlgebraFamily::SixDim => ("six", A_SIX),
        AlgebraFamily::NineDim => ("nine", A_NINE),
    };
    let t = Instant::now();
    let table = verify_algebra(&Algebra::symbolic(), family);
    let ms = t.elapsed().as_secs_f64() * 1e3 / table.entries.len().max(1) as f64;
    table
        .entries
        .into_iter()
        .map(|e| {
            let mut residual = std::collections::BTreeMap::new();
            residual.insert("expected".to_string(), e.expected.into());
            Check {
                name: format!("algebra.{tag}.[{},{}]", e.left, e.right),
                paper_anchor: anchor.to_string(),
                status: Status::from_bool(e.ok),
                residual,
                timing_ms: timing.then(|| num(ms)),
            }
        })
        .collect()
}

/// `L_k f = 0` for all `k`.
fn is_spherical(f: &FieldElem) -> bool {
    let (x, y, z) = (FieldElem::x(), FieldElem::y(), FieldElem::z());
    let (fx, fy, fz) = (f.d(0), f.d(1), f.d(2));
    (&y * &fz - &z * &fy).is_zero()
        && (&z * &fx - &x * &fz).is_zero()
        && (&x * &fy - &y * &fx).is_zero()
}

/// `deteq --v1 .. [--v0 ..]`, at `ħ = 1`.
pub fn deteq_checks(v1: FieldElem, v0: FieldElem, timing: bool) -> Vec<Check> {
    let v1 = Arc::new(v1);
    let v0 = Arc::new(v0);
    let mut jobs = Vec::new();
    let p = v1.clone();
    jobs.push(Job::new("deteq.rank", A_RANK2, move || match rank_probe(&p) {
        Ok(p) => probe_outcome(&p),
        Err(e) => {
            let mut o = Outcome::ok(true).with("error", e.to_string());
            o.status = Status::Skipped;
            o
        }
    }));
    let p = v1.clone();
    jobs.push(Job::new("deteq.phi.gauge_case", A_PHI, move || {
        if *p != FieldElem::one() / FieldElem::rho() {
            let mut o = Outcome::ok(true).with("reason", "requires V1 = 1/r^2");
            o.status = Status::Skipped;
            return o;
        }
        Outcome::ok(check_phi_solution(&PhiCase::Gauge))
    }));
    let p = v1.clone();
    jobs.push(Job::new("deteq.phi.radial_case", A_PHI, move || {
        if !is_spherical(&p) {
            let mut o = Outcome::ok(true).with("reason", "requires a radial V1");
            o.status = Status::Skipped;
            return o;
        }
        Outcome::ok(check_phi_solution(&PhiCase::Radial { v1: (*p).clone(), b: zero3() }))
    }));
    jobs.push(Job::new("deteq.crosscheck", A_COMMUTATIVITY, move || {
        let c = crosscheck_commutator(
            &Algebra::unit(),
            &IntegralAnsatz::symbolic_linear(),
            &v0,
            &v1,
        );
        let bad: Vec<String> = c
            .mismatches
            .iter()
            .map(|(o, i)| format!("order{o}#{}", i + 1))
            .collect();
        Outcome::ok(c.is_ok())
            .with("mismatches", bad)
            .with("commutator_nonzero", c.commutator_nonzero)
    }));
    crate::report::run_jobs(jobs, timing)
}

/// `[H, X] = 0` split by momentum order.
pub fn integral_checks(h: DiffOp, x: DiffOp, timing: bool) -> Vec<Check> {
    let t = Instant::now();
    let c = h.commutator(&x);
    let top = h.order().unwrap_or(0) + x.order().unwrap_or(0);
    let ms = t.elapsed().as_secs_f64() * 1e3;
    let mut out: Vec<Check> = (0..=top)
        .rev()
        .map(|k| {
            let n = c.momentum_coefficients(k).iter().filter(|(_, p)| !p.is_zero()).count();
            let mut residual = std::collections::BTreeMap::new();
            residual.insert("nonzero_terms".to_string(), n.into());
            Check {
                name: format!("integral.commutator.order{k}"),
                paper_anchor: A_MOMENTA.to_string(),
                status: Status::from_bool(n == 0),
                residual,
                timing_ms: None,
            }
        })
        .collect();
    let mut residual = std::collections::BTreeMap::new();
    residual.insert("hamiltonian_order".to_string(), h.order().unwrap_or(0).into());
    residual.insert("integral_order".to_string(), x.order().unwrap_or(0).into());
    out.push(Check {
        name: "integral.commutator".into(),
        paper_anchor: A_COMMUTATIVITY.to_string(),
        status: Status::from_bool(c.is_zero()),
        residual,
        timing_ms: timing.then(|| num(ms)),
    });
    out
}
