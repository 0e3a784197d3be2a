//! CSV tables for `spectrum` and `wavefunction`.

use sointegra_core::par;
use sointegra_core::spectral::{
    build_eigenspinor, energy, energy_exact, kappa, shooting_solve, QuantumNumbers,
    SpectralError,
};

use num_rational::BigRational;

use crate::report::num_text;

/// Relative agreement required between the two solvers.
pub const SOLVER_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Solver {
    Formula,
    Shooting,
    Both,
}

#[derive(Clone, Debug)]
pub struct SpectrumRow {
    pub n: u32,
    pub two_j: u32,
    pub formula: Option<f64>,
    pub exact: Option<BigRational>,
    pub shooting: Option<f64>,
}

impl SpectrumRow {
    pub fn rel_diff(&self) -> Option<f64> {
        match (self.formula, self.shooting) {
            (Some(a), Some(b)) => Some(((a - b) / a).abs()),
            _ => None,
        }
    }
}

pub fn half_int(two: i64) -> String {
    if two % 2 == 0 {
        (two / 2).to_string()
    } else {
        format!("{two}/2")
    }
}

/// Rows for every `n ≤ n_max` and odd `2j ≤ two_j_max`, ordered by `j` then `n`.
pub fn spectrum(
    mu: &BigRational,
    mu_f: f64,
    n_max: u32,
    two_j_max: u32,
    solver: Solver,
) -> Result<Vec<SpectrumRow>, SpectralError> {
    let js: Vec<u32> = (1..=two_j_max).step_by(2).collect();
    let shoot = solver != Solver::Formula;
    let form = solver != Solver::Shooting;
    let levels = par::map(&js, |&tj| {
        if shoot {
            shooting_solve(tj, mu_f, n_max).map(Some)
        } else {
            Ok(None)
        }
    });
    let mut rows = Vec::new();
    for (tj, lv) in js.iter().zip(levels) {
        let lv = lv?;
        for n in 0..=n_max {
            rows.push(SpectrumRow {
                n,
                two_j: *tj,
                formula: form.then(|| energy(n, *tj, mu_f)),
                exact: if form { energy_exact(n, *tj, mu) } else { None },
                shooting: lv.as_ref().map(|v| v[n as usize]),
            });
        }
    }
    Ok(rows)
}

fn opt(x: Option<f64>) -> String {
    x.map(num_text).unwrap_or_default()
}

pub fn spectrum_csv(rows: &[SpectrumRow]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "j", "kappa", "energy_formula", "energy_exact", "energy_shooting", "rel_diff"])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            half_int(r.two_j as i64),
            num_text(kappa(r.two_j)),
            opt(r.formula),
            r.exact.as_ref().map(|q| q.to_string()).unwrap_or_default(),
            opt(r.shooting),
            opt(r.rel_diff()),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 csv"))
}

/// Samples of `Ψ` on `n_r × n_θ` points at fixed `φ`. Radii are evenly
/// spaced up to `(12 + 4n)` decay lengths; angles are cell midpoints.
pub fn wavefunction_csv(
    qn: QuantumNumbers,
    mu: f64,
    n_r: usize,
    n_theta: usize,
    phi: f64,
) -> Result<String, SpectralError> {
    let psi = build_eigenspinor(qn, mu)?;
    let r_max = (12.0 + 4.0 * qn.n as f64) / psi.w.abs();
    let mut w = csv::Writer::from_writer(Vec::new());
    let head = ["r", "theta", "phi", "re_psi1", "im_psi1", "re_psi2", "im_psi2"];
    w.write_record(head).expect("in-memory writer");
    for i in 0..n_r {
        let r = r_max * (i + 1) as f64 / n_r as f64;
        for k in 0..n_theta {
            let th = std::f64::consts::PI * (k as f64 + 0.5) / n_theta as f64;
            let [a, b] = psi.psi(r, th, phi);
            w.write_record([r, th, phi, a.re, a.im, b.re, b.im].map(num_text))
                .expect("in-memory writer");
        }
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 csv"))
}
