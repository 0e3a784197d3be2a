//! The U(2) gauge transformation that induces `V1 = ħ/r²` from a scalar
//! Hamiltonian, its action on operators, and the generator algebras.

use serde::Serialize;
use thiserror::Error;

use num_traits::Zero;

use crate::exactfield::{eval_exact, q, EvalPoint, FieldElem, FieldError, Gauss};
use crate::operator::{Algebra, DiffOp, PauliCoeff};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaugeError {
    #[error("phase e^(i c2) = {0} is not a unit Gaussian rational; entries would leave the field")]
    NonRationalPhase(String),
}

/// Constants of the angle parametrization: `e^{i c2}` as an exact unit
/// phase, `c1 = c2 ± π`, `c3 = ±π/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeBranch {
    pub phase: Gauss,
    pub c1_plus: bool,
    pub c3_plus: bool,
}

impl Default for GaugeBranch {
    fn default() -> Self {
        GaugeBranch {
            phase: Gauss::one(),
            c1_plus: true,
            c3_plus: true,
        }
    }
}

impl GaugeBranch {
    /// `c2 = k·π/2`.
    pub fn quarter_turns(k: i64, c1_plus: bool, c3_plus: bool) -> Self {
        let phase = match k.rem_euclid(4) {
            0 => Gauss::one(),
            1 => Gauss::i(),
            2 => Gauss::from_int(-1),
            _ => Gauss::new(q(0, 1), q(-1, 1)),
        };
        GaugeBranch {
            phase,
            c1_plus,
            c3_plus,
        }
    }

    /// The four sign branches at `c2 = 0`.
    pub fn sign_branches() -> [GaugeBranch; 4] {
        [(true, true), (true, false), (false, true), (false, false)].map(|(a, b)| GaugeBranch {
            phase: Gauss::one(),
            c1_plus: a,
            c3_plus: b,
        })
    }
}

#[derive(Clone, Debug)]
pub struct GaugeMatrix {
    pub u: PauliCoeff,
    pub branch: GaugeBranch,
}

/// Where the angle parametrization breaks down. The Cartesian entries are
/// smooth away from the origin; only the azimuth is undefined on the axis.
pub const COORDINATE_SINGULAR_SET: &str = "x = y = 0";
pub const POLE_SET: &str = "x = y = z = 0";

impl GaugeMatrix {
    pub fn entries(&self) -> [[FieldElem; 2]; 2] {
        self.u.to_matrix()
    }

    pub fn dagger(&self) -> PauliCoeff {
        self.u.dagger()
    }

    /// Exact entries at a point, flagging the coordinate singular set.
    pub fn evaluate(&self, p: &EvalPoint) -> Result<GaugeValue, FieldError> {
        let e = self.entries();
        let v = |i: usize, j: usize| eval_exact(&e[i][j], p);
        let out = [[v(0, 0)?, v(0, 1)?], [v(1, 0)?, v(1, 1)?]];
        let axis = p.coords[0].is_zero() && p.coords[1].is_zero();
        Ok(GaugeValue {
            entries: out,
            on_coordinate_singularity: axis,
        })
    }

    /// The identity, for trivial checks.
    pub fn identity() -> Self {
        GaugeMatrix {
            u: PauliCoeff::scalar(FieldElem::one()),
            branch: GaugeBranch::default(),
        }
    }

    /// `U†U`.
    pub fn unitarity_product(&self) -> PauliCoeff {
        self.u.dagger().mul(&self.u)
    }

    pub fn determinant(&self) -> FieldElem {
        let [[a, b], [c, d]] = self.entries();
        a * d - b * c
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaugeValue {
    pub entries: [[Gauss; 2]; 2],
    /// True on `x = y = 0`, where the azimuth in `β1 = φ + c1` is undefined.
    /// The Cartesian entries still take the limiting value.
    pub on_coordinate_singularity: bool,
}

/// `U = [[e^{iβ1} cos β3, e^{iβ2} sin β3], [−e^{−iβ2} sin β3, e^{−iβ1} cos β3]]`
/// with `β1 = φ + c1`, `β2 = c2`, `β3 = −θ + c3`, written in Cartesian form.
pub fn build_u(branch: &GaugeBranch) -> Result<GaugeMatrix, GaugeError> {
    if !Gauss::real(branch.phase.norm_sqr()).is_one() {
        return Err(GaugeError::NonRationalPhase(branch.phase.to_string()));
    }
    let w = FieldElem::constant(branch.phase.clone());
    let wb = FieldElem::constant(branch.phase.conj());
    let sign = FieldElem::int(if branch.c3_plus { 1 } else { -1 });
    let inv_r = FieldElem::one() / FieldElem::r();
    // cos β3 = ± sin θ, sin β3 = ± cos θ; e^{iβ1} = −e^{iφ} e^{i c2}
    let e_iphi_sin = (FieldElem::x() + FieldElem::i() * FieldElem::y()) * &inv_r;
    let e_miphi_sin = (FieldElem::x() - FieldElem::i() * FieldElem::y()) * &inv_r;
    let cos_t = FieldElem::z() * &inv_r;
    let m = [
        [-(&w * &e_iphi_sin * &sign), &w * &cos_t * &sign],
        [-(&wb * &cos_t * &sign), -(&wb * &e_miphi_sin * &sign)],
    ];
    Ok(GaugeMatrix {
        u: PauliCoeff::from_matrix(m),
        branch: branch.clone(),
    })
}

/// `U† ∘ op ∘ U`.
pub fn conjugate(op: &DiffOp, u: &GaugeMatrix) -> DiffOp {
    DiffOp::multiplication(u.dagger())
        .compose(op)
        .compose(&DiffOp::multiplication(u.u.clone()))
}

#[derive(Clone, Debug)]
pub struct GeneratorCheck {
    pub holds: bool,
    pub gamma: FieldElem,
}

/// Checks `ħ² Σ_k U†(∂_k U) ∂_k = Γ (σ, L)` and returns `Γ`.
pub fn verify_generator_relation(alg: &Algebra, u: &GaugeMatrix) -> GeneratorCheck {
    let h2 = &alg.hbar * &alg.hbar;
    let ud = u.dagger();
    let mut lhs = DiffOp::zero();
    for k in 0..3 {
        let c = ud
            .mul(&u.u.derivative(crate::exactfield::DiffVar::axis(k)))
            .scale(&h2);
        lhs = lhs.add(&DiffOp::multiplication(c).compose(&alg.d(k)));
    }
    let sl = alg.sigma_dot_l();
    if lhs.is_zero() {
        return GeneratorCheck {
            holds: true,
            gamma: FieldElem::zero(),
        };
    }
    // read Γ off any nonzero coefficient of (σ, L)
    let (d, p) = sl.terms().iter().next().expect("sigma.L is nonzero");
    let k = (0..4).find(|&k| !p.c[k].is_zero()).unwrap();
    let gamma = &lhs.coeff(d).c[k] / &p.c[k];
    let holds = lhs == sl.scale(&gamma);
    GeneratorCheck { holds, gamma }
}

/// The hamiltonian `−(ħ²/2)Δ + V0 + ħ²/r² + (ħ/r²)(σ, L)` obtained from a
/// scalar one.
pub fn transformed_hamiltonian(alg: &Algebra, v0: &FieldElem) -> DiffOp {
    let h = &alg.hbar;
    let inv = FieldElem::one() / FieldElem::rho();
    alg.kinetic()
        .add(&alg.scalar(v0 + &(h * h * &inv)))
        .add(&alg.sigma_dot_l().scale(&(h * &inv)))
}

/// Gauge-transformed integrals for `V1 = ħ/r²`.
pub struct Generators {
    pub j: [DiffOp; 3],
    pub s: [DiffOp; 3],
    pub pi: [DiffOp; 3],
}

/// `S_i = −(ħ/2)σ_i + ħ x_i (x, σ)/r²`.
pub fn s_generator(alg: &Algebra, i: usize) -> DiffOp {
    let half = &alg.hbar / &FieldElem::int(2);
    let c = &alg.hbar * FieldElem::coord(i - 1) / FieldElem::rho();
    alg.sigma(i)
        .scale(&(-half))
        .add(&alg.sigma_dot_x().scale(&c))
}

/// `Π_i = p_i − (ħ/r²) ε_ikl x_k σ_l`.
pub fn pi_generator(alg: &Algebra, i: usize) -> DiffOp {
    let c = -(&alg.hbar / &FieldElem::rho());
    let mut cross = PauliCoeff::zero();
    for k in 1..=3 {
        for l in 1..=3 {
            let e = levi_civita(i, k, l);
            if e != 0 {
                cross = cross.add(&PauliCoeff::sigma(
                    l,
                    FieldElem::int(e) * FieldElem::coord(k - 1),
                ));
            }
        }
    }
    alg.p(i).add(&DiffOp::multiplication(cross.scale(&c)))
}

pub fn generators(alg: &Algebra) -> Generators {
    Generators {
        j: [1, 2, 3].map(|i| alg.j(i)),
        s: [1, 2, 3].map(|i| s_generator(alg, i)),
        pi: [1, 2, 3].map(|i| pi_generator(alg, i)),
    }
}

pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraFamily {
    SixDim,
    NineDim,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorEntry {
    pub left: String,
    pub right: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraTable {
    pub family: AlgebraFamily,
    pub entries: Vec<CommutatorEntry>,
}

impl AlgebraTable {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> Vec<&CommutatorEntry> {
        self.entries.iter().filter(|e| !e.ok).collect()
    }
}

/// Expected `[g_a, g_b] = Σ_c f_abc g_c`, as `(coefficient of iħ, index)` pairs.
type Structure = Vec<(i64, usize)>;

fn check_table(
    alg: &Algebra,
    family: AlgebraFamily,
    names: &[String],
    ops: &[DiffOp],
    structure: impl Fn(usize, usize) -> Structure + Sync,
) -> AlgebraTable {
    let ih = FieldElem::i() * alg.hbar.clone();
    let pairs: Vec<(usize, usize)> = (0..ops.len())
        .flat_map(|a| (0..ops.len()).map(move |b| (a, b)))
        .collect();
    let entries = crate::par::map(&pairs, |&(a, b)| {
        let st = structure(a, b);
        let mut expected = DiffOp::zero();
        let mut text = Vec::new();
        for (c, k) in &st {
            expected = expected.add(&ops[*k].scale(&(&ih * FieldElem::int(*c))));
            let sign = if *c < 0 { "-" } else { "" };
            text.push(format!("{sign}i*hbar*{}", names[*k]));
        }
        let got = ops[a].commutator(&ops[b]);
        CommutatorEntry {
            left: names[a].clone(),
            right: names[b].clone(),
            expected: if text.is_empty() {
                "0".into()
            } else {
                text.join(" + ")
            },
            ok: got == expected,
        }
    });
    AlgebraTable { family, entries }
}

/// All pairwise commutators of `{J, S}` (36) or `{J − S, Π, S}` (81),
/// matched against the published structure constants.
pub fn verify_algebra(alg: &Algebra, family: AlgebraFamily) -> AlgebraTable {
    let g = generators(alg);
    // so(3) block: [X_i, X_j] = iħ ε_ijk X_k inside a block starting at `base`
    let so3 = |i: usize, j: usize, base: usize| -> Structure {
        (1..=3)
            .filter_map(|k| {
                let e = levi_civita(i + 1, j + 1, k);
                (e != 0).then_some((e, base + k - 1))
            })
            .collect()
    };
    match family {
        AlgebraFamily::SixDim => {
            let names: Vec<String> = ["J1", "J2", "J3", "S1", "S2", "S3"]
                .map(String::from)
                .to_vec();
            let ops: Vec<DiffOp> = g.j.iter().chain(g.s.iter()).cloned().collect();
            check_table(alg, family, &names, &ops, |a, b| {
                let (ba, ia) = (a / 3, a % 3);
                let (bb, ib) = (b / 3, b % 3);
                match (ba, bb) {
                    (0, 0) => so3(ia, ib, 0),
                    // [J_i, S_j] = [S_i, J_j] = [S_i, S_j] = iħ ε_ijk S_k
                    _ => so3(ia, ib, 3),
                }
            })
        }
        AlgebraFamily::NineDim => {
            let names: Vec<String> = ["K1", "K2", "K3", "Pi1", "Pi2", "Pi3", "S1", "S2", "S3"]
                .map(String::from)
                .to_vec();
            let k: Vec<DiffOp> = (0..3).map(|i| g.j[i].sub(&g.s[i])).collect();
            let ops: Vec<DiffOp> = k
                .into_iter()
                .chain(g.pi.iter().cloned())
                .chain(g.s.iter().cloned())
                .collect();
            check_table(alg, family, &names, &ops, |a, b| {
                let (ba, ia) = (a / 3, a % 3);
                let (bb, ib) = (b / 3, b % 3);
                match (ba, bb) {
                    (0, 0) => so3(ia, ib, 0),
                    (0, 1) | (1, 0) => so3(ia, ib, 3),
                    (2, 2) => so3(ia, ib, 6),
                    _ => Vec::new(),
                }
            })
        }
    }
}

/// Names of the nine generator operators, K = J − S.
pub fn nine_generators(alg: &Algebra) -> Vec<(String, DiffOp)> {
    let g = generators(alg);
    let mut out = Vec::new();
    for i in 0..3 {
        out.push((format!("J{}-S{}", i + 1, i + 1), g.j[i].sub(&g.s[i])));
    }
    for i in 0..3 {
        out.push((format!("Pi{}", i + 1), g.pi[i].clone()));
    }
    for i in 0..3 {
        out.push((format!("S{}", i + 1), g.s[i].clone()));
    }
    out
}

/// Floating-point check of the nine printed β-equations at a point, with
/// `β1 = φ + c1`, `β2 = c2`, `β3 = −θ + c3` and `Γ = −ħ/r²` (`ħ = 1`).
/// Returns `lhs − rhs` for each equation as printed.
pub fn beta_equation_residuals(p: [f64; 3], c2: f64, c1_plus: bool, c3_plus: bool) -> [f64; 9] {
    let [x, y, z] = p;
    let rho = x * x + y * y + z * z;
    let perp2 = x * x + y * y;
    let perp = perp2.sqrt();
    let theta = (z / rho.sqrt()).acos();
    let c1 = c2
        + if c1_plus {
            std::f64::consts::PI
        } else {
            -std::f64::consts::PI
        };
    let c3 = if c3_plus {
        std::f64::consts::FRAC_PI_2
    } else {
        -std::f64::consts::FRAC_PI_2
    };
    let b3 = -theta + c3;
    let b1 = y.atan2(x) + c1;
    let b2 = c2;
    // gradients of φ and θ
    let dphi = [-y / perp2, x / perp2, 0.0];
    let dtheta = [x * z / (rho * perp), y * z / (rho * perp), -perp / rho];
    let db1 = dphi;
    let db2 = [0.0; 3];
    let db3 = dtheta.map(|t| -t);
    let gamma = -1.0 / rho;
    let (c, s) = (b3.cos(), b3.sin());
    let d21 = b2 - b1;
    let s2 = (2.0 * b3).sin();
    let sum = |k: usize| db2[k] + db1[k];
    let cos_form = |k: usize| d21.cos() * db3[k] - 0.5 * d21.sin() * s2 * sum(k);
    let sin_form = |k: usize| d21.sin() * db3[k] + 0.5 * d21.cos() * s2 * sum(k);
    let mix = |k: usize| c * c * db1[k] - s * s * db2[k];
    [
        mix(2),
        mix(0),
        mix(1) + x * gamma,
        cos_form(0) + z * gamma,
        cos_form(2) - x * gamma,
        sin_form(1) - z * gamma,
        sin_form(2) + y * gamma,
        cos_form(1),
        sin_form(0),
    ]
}

/// Residual of the second β-equation in the form `ħ(cos²β3 β1,x − sin²β3 β2,x) = yΓ`,
/// the one consistent with the generator relation.
pub fn beta_equation2_corrected(p: [f64; 3], c2: f64, c1_plus: bool, c3_plus: bool) -> f64 {
    let [_, y, _] = p;
    let rho: f64 = p.iter().map(|v| v * v).sum();
    beta_equation_residuals(p, c2, c1_plus, c3_plus)[1] - y * (-1.0 / rho)
}
