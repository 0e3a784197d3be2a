//! End-to-end acceptance run: one line per criterion, nonzero exit on failure.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;

use sointegra_cli::suites::rank_witnesses;
use sointegra_cli::tables::{spectrum, Solver, SOLVER_TOLERANCE};
use sointegra_core::deteq::{
    check_phi_solution, crosscheck_commutator, random_draw, rank_probe, PhiCase,
};
use sointegra_core::exactfield::{DiffVar, FieldElem, Var};
use sointegra_core::gauge::{
    build_u, conjugate, generators, verify_algebra, AlgebraFamily, GaugeBranch,
};
use sointegra_core::multiplets::{theorem1_catalog, verify_case_closures, verify_catalog};
use sointegra_core::operator::{Algebra, DiffOp, PauliCoeff};
use sointegra_core::spectral::{build_eigenspinor, eigen_residuals, energy_exact, QuantumNumbers};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn within(v: Verdict, took: Duration, limit: Duration) -> Verdict {
    if took <= limit {
        v
    } else {
        verdict(false, format!("{} (took {:.1}s, limit {}s)", v.detail, took.as_secs_f64(), limit.as_secs()))
    }
}

fn zero3() -> [FieldElem; 3] {
    [FieldElem::zero(), FieldElem::zero(), FieldElem::zero()]
}

fn gauge_induction() -> Verdict {
    let alg = Algebra::symbolic();
    let h = &alg.hbar;
    let inv_rho = FieldElem::one() / FieldElem::rho();
    let target = alg
        .kinetic()
        .add(&alg.scalar(h * h * &inv_rho))
        .add(&alg.sigma_dot_l().scale(&(h * &inv_rho)));
    let spin_orbit = alg.sigma_dot_l().scale(&-(h * &inv_rho));
    let mut branches: Vec<GaugeBranch> = GaugeBranch::sign_branches().to_vec();
    branches.push(GaugeBranch::quarter_turns(1, true, true));
    let mut bad = Vec::new();
    for (k, b) in branches.iter().enumerate() {
        let u = match build_u(b) {
            Ok(u) => u,
            Err(e) => return verdict(false, format!("branch {k}: {e}")),
        };
        if u.unitarity_product() != PauliCoeff::scalar(FieldElem::one()) {
            bad.push(format!("branch {k}: U†U"));
        }
        if conjugate(&alg.kinetic(), &u) != target {
            bad.push(format!("branch {k}: conjugated kinetic term"));
        }
        let ud = u.dagger();
        let mut lhs = DiffOp::zero();
        for i in 0..3 {
            let c = ud.mul(&u.u.derivative(DiffVar::axis(i))).scale(&(h * h));
            lhs = lhs.add(&DiffOp::multiplication(c).compose(&alg.d(i)));
        }
        if lhs != spin_orbit {
            bad.push(format!("branch {k}: generator relation"));
        }
    }
    let n = branches.len();
    verdict(bad.is_empty(), if bad.is_empty() { format!("{n} branches exact") } else { bad.join("; ") })
}

fn lie_tables() -> Verdict {
    let alg = Algebra::symbolic();
    let six = verify_algebra(&alg, AlgebraFamily::SixDim);
    let nine = verify_algebra(&alg, AlgebraFamily::NineDim);
    let g = generators(&alg);
    let pi_commute = (0..3).all(|i| (0..3).all(|j| g.pi[i].commutator(&g.pi[j]).is_zero()));
    let pi_rows = nine
        .entries
        .iter()
        .filter(|e| e.left.starts_with("Pi") && e.right.starts_with("Pi"))
        .all(|e| e.ok && e.expected == "0");
    let ok = six.entries.len() == 36
        && nine.entries.len() == 81
        && six.all_ok()
        && nine.all_ok()
        && pi_commute
        && pi_rows;
    verdict(
        ok,
        format!(
            "six-dim {}/{} ok, nine-dim {}/{} ok, [Pi_i,Pi_j]=0: {}",
            six.entries.iter().filter(|e| e.ok).count(),
            six.entries.len(),
            nine.entries.iter().filter(|e| e.ok).count(),
            nine.entries.len(),
            pi_commute && pi_rows
        ),
    )
}

fn catalog() -> Verdict {
    let alg = Algebra::symbolic();
    let cases = theorem1_catalog(&alg);
    let mu_over_r = FieldElem::var(Var::Mu) / FieldElem::r();
    let witnessed = cases.iter().any(|c| c.v0.contains(&mu_over_r));
    let checks = verify_catalog(&alg, &cases);
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.commutes)
        .map(|c| format!("case {} {} (V0 = {})", c.case, c.integral, c.v0))
        .collect();
    let ids: std::collections::BTreeSet<u8> = cases.iter().map(|c| c.id).collect();
    let ok = bad.is_empty() && witnessed && ids.len() == 4;
    let detail = if bad.is_empty() {
        format!("{} commutators vanish over cases {:?}, mu/r witnessed: {witnessed}", checks.len(), ids)
    } else {
        bad.join("; ")
    };
    verdict(ok, detail)
}

fn determining_equations() -> Verdict {
    let mut bad = Vec::new();
    let mut nonzero = 0;
    for seed in 0..100u64 {
        let d = random_draw(seed);
        let c = crosscheck_commutator(&d.algebra(), &d.ansatz, &d.v0, &d.v1);
        nonzero += c.commutator_nonzero as usize;
        if !c.is_ok() {
            bad.push(format!("seed {seed}: {:?}", c.mismatches));
        }
    }
    let detail = if bad.is_empty() {
        format!("100 draws agree ({nonzero} with nonzero commutator)")
    } else {
        bad.join("; ")
    };
    verdict(bad.is_empty(), detail)
}

fn phi_and_rank() -> Verdict {
    let mut bad = Vec::new();
    if !check_phi_solution(&PhiCase::Gauge) {
        bad.push("gauge-case Phi".to_string());
    }
    let radial = [
        FieldElem::ratio(1, 2) / FieldElem::rho(),
        FieldElem::one() / (FieldElem::one() + FieldElem::rho()),
    ];
    for v1 in radial {
        if !check_phi_solution(&PhiCase::Radial { v1: v1.clone(), b: zero3() }) {
            bad.push(format!("radial-case Phi at V1 = {v1}"));
        }
    }
    let mut ranks = Vec::new();
    for (label, v1, expected, _) in rank_witnesses() {
        match rank_probe(&v1) {
            Ok(p) if p.rank == expected => ranks.push(format!("{label}->{}", p.rank)),
            Ok(p) => bad.push(format!("rank at {label}: {} (expected {expected})", p.rank)),
            Err(e) => bad.push(format!("rank at {label}: {e}")),
        }
    }
    let detail = if bad.is_empty() {
        format!("Phi solutions exact, ranks {}", ranks.join(", "))
    } else {
        bad.join("; ")
    };
    verdict(bad.is_empty(), detail)
}

fn closures() -> Verdict {
    let all = verify_case_closures();
    let bad: Vec<String> = all
        .iter()
        .filter(|c| !c.ok)
        .map(|c| format!("{:?} case {}", c.family, c.case))
        .collect();
    let detail = if bad.is_empty() {
        format!("{} case closures exact", all.len())
    } else {
        bad.join("; ")
    };
    verdict(bad.is_empty() && !all.is_empty(), detail)
}

fn spectrum_agreement() -> Verdict {
    let mu = BigRational::from_integer((-1).into());
    let rows = match spectrum(&mu, -1.0, 5, 7, Solver::Both) {
        Ok(r) => r,
        Err(e) => return verdict(false, e.to_string()),
    };
    let worst = rows.iter().filter_map(|r| r.rel_diff()).fold(0.0f64, f64::max);
    let complete = rows.len() == 24 && rows.iter().all(|r| r.rel_diff().is_some());
    let exact = |n, num: i64, den: i64| energy_exact(n, 1, &mu) == Some(BigRational::new(num.into(), den.into()));
    let e0 = exact(0, -1, 2);
    let e1 = exact(1, -1, 8);
    verdict(
        complete && worst <= SOLVER_TOLERANCE && e0 && e1,
        format!("max relative difference {worst:.2e} over {} levels, E(0,1/2)=-1/2: {e0}, E(1,1/2)=-1/8: {e1}", rows.len()),
    )
}

fn eigenspinors() -> Verdict {
    let mut states = Vec::new();
    for n in 0..=3u32 {
        for two_j in [1u32, 3, 5] {
            for two_m in (-(two_j as i32)..=two_j as i32).step_by(2) {
                for eps in [1i8, -1] {
                    states.push((n, two_j, two_m, eps));
                }
            }
        }
    }
    let results = sointegra_core::par::map(&states, |&(n, two_j, two_m, eps)| {
        let qn = QuantumNumbers::new(n, two_j, two_m, eps).map_err(|e| e.to_string())?;
        let psi = build_eigenspinor(qn, -1.0).map_err(|e| e.to_string())?;
        Ok::<_, String>(eigen_residuals(&psi).max())
    });
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (s, r) in states.iter().zip(results) {
        match r {
            Ok(v) if v <= 1e-8 => worst = worst.max(v),
            Ok(v) => bad.push(format!("{s:?}: residual {v:.2e}")),
            Err(e) => bad.push(format!("{s:?}: {e}")),
        }
    }
    let detail = if bad.is_empty() {
        format!("{} states, max relative residual {worst:.2e}", states.len())
    } else {
        bad.join("; ")
    };
    verdict(bad.is_empty(), detail)
}

fn properties() -> Verdict {
    let names: Vec<&str> = common::suites().iter().map(|(n, _)| *n).collect();
    let results: Vec<(String, Result<(), String>)> = std::thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|&name| {
                s.spawn(move || {
                    let suites = common::suites();
                    let (_, run) = suites.iter().find(|(n, _)| *n == name).expect("known suite");
                    (name.to_string(), run(common::CASES))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    });
    let bad: Vec<String> = results
        .iter()
        .filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}")))
        .collect();
    let detail = if bad.is_empty() {
        format!("{} suites x {} cases: {}", results.len(), common::CASES, names.join(", "))
    } else {
        bad.join("; ")
    };
    verdict(bad.is_empty(), detail)
}

fn determinism() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sointegra"))
            .args(["verify", "catalog"])
            .output()
            .expect("spawn sointegra")
    };
    let (a, b) = (run(), run());
    let codes = (a.status.code(), b.status.code());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    verdict(
        same && codes == (Some(0), Some(0)),
        format!("{} bytes, identical: {same}, exit codes {:?}", a.stdout.len(), codes),
    )
}

fn main() {
    type Criterion = (u32, fn() -> Verdict, Option<u64>);
    let criteria: [Criterion; 10] = [
        (1, gauge_induction, Some(10)),
        (2, lie_tables, None),
        (3, catalog, Some(120)),
        (4, determining_equations, None),
        (5, phi_and_rank, None),
        (6, closures, None),
        (7, spectrum_agreement, Some(60)),
        (8, eigenspinors, None),
        (9, properties, None),
        (10, determinism, None),
    ];
    let mut failed = 0;
    for (k, f, limit) in criteria {
        let t = Instant::now();
        let v = f();
        let took = t.elapsed();
        let v = match limit {
            Some(s) => within(v, took, Duration::from_secs(s)),
            None => v,
        };
        let tag = if v.ok { "PASS" } else { "FAIL" };
        println!("criterion {k}: {tag} {} [{:.2}s]", v.detail, took.as_secs_f64());
        failed += !v.ok as usize;
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
