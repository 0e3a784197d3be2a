//! The algebraic system `M·Φ = R` obtained from compatibility of the
//! φ-equations (with `ħ = 1`), and rank probing of `M`.

use serde::Serialize;
use thiserror::Error;

use crate::exactfield::{eval_exact, EvalPoint, FieldElem, Gauss, Var, PYTHAGOREAN_POINTS};

use super::equations::phi_equations;

#[derive(Clone, Debug)]
pub struct MSystem {
    pub delta: [FieldElem; 6],
    pub m: [[FieldElem; 3]; 9],
    pub r: [FieldElem; 9],
}

impl MSystem {
    /// Build `δ`, `M` and `R` from the printed entries.
    pub fn build(v1: &FieldElem, a: &[FieldElem; 3], b: &[FieldElem; 3]) -> MSystem {
        let (x, y, z) = (FieldElem::x(), FieldElem::y(), FieldElem::z());
        let v = v1;
        let [vx, vy, vz] = [v.d(0), v.d(1), v.d(2)];
        let (vxx, vxy, vxz) = (vx.d(0), vx.d(1), vx.d(2));
        let (vyy, vyz, vzz) = (vy.d(1), vy.d(2), vz.d(2));
        let v2 = v * v;
        let two = FieldElem::int(2);
        let delta = [
            &two * v - &two * &z * &z * &v2 + &y * &vy + &x * &vx,
            &two * &z * &v2 + &vz,
            &two * &y * &v2 + &vy,
            &two * &x * &v2 + &vx,
            &two * v - &two * &y * &y * &v2 + &z * &vz + &x * &vx,
            &two * v - &two * &x * &x * &v2 + &y * &vy + &z * &vz,
        ];
        let [d1, d2, d3, d4, d5, d6] = &delta;
        let zero = FieldElem::zero;
        let t = |f: &FieldElem| &two * f;
        let m = [
            [zero(), t(d1), t(&(&z * d3))],
            [zero(), -t(&(&x * d2)), t(&(&x * d3))],
            [zero(), t(&(&y * d2)), t(d5)],
            [-t(d1), zero(), -t(&(&z * d4))],
            [t(&(&x * d2)), zero(), t(d6)],
            [-t(&(&y * d2)), zero(), t(&(&y * d4))],
            [-t(&(&z * d3)), t(&(&z * d4)), zero()],
            [-t(&(&x * d3)), -t(d6), zero()],
            [-t(d5), -t(&(&y * d4)), zero()],
        ];

        let [a1, a2, a3] = a;
        let [b1, b2, b3] = b;
        let a0 = b1 - &(a3 * &y) + a2 * &z;
        let b0 = b2 + &(a3 * &x) - a1 * &z;
        let c0 = b3 - &(a2 * &x) + a1 * &y;
        let g = &a0 * &vx + &b0 * &vy + &c0 * &vz;
        let p = &x * &vx + &y * &vy + &z * &vz;
        let hx = &a0 * &vxx + &b0 * &vxy + &c0 * &vxz;
        let hy = &a0 * &vxy + &b0 * &vyy + &c0 * &vyz;
        let hz = &a0 * &vxz + &b0 * &vyz + &c0 * &vzz;
        let three = FieldElem::int(3);
        let four = FieldElem::int(4);
        let r = [
            &two * v * (a2 - &(&two * &x * &z * &g)) + a2 * &p
                - &two * (b3 * &x + &z * &a0) * &v2
                - b3 * &vx
                - &z * &hx,
            &y * &hy + &z * &hz - &two * &x * (b1 + &a0) * &v2
                + (&three - &four * &x * &x * v) * &g
                - b1 * &vx,
            &two * v * (a3 + &(&two * &x * &y * &g))
                + a3 * &p
                + &two * (b2 * &x + &y * &a0) * &v2
                + b2 * &vx
                + &y * &hx,
            -(&two * v * (a1 + &(&two * &y * &z * &g)))
                - a1 * &p
                - &two * (b3 * &y + &z * &b0) * &v2
                - b3 * &vy
                - &z * &hy,
            &two * v * (a3 - &(&two * &x * &y * &g)) + a3 * &p
                - &two * (b1 * &y + &x * &b0) * &v2
                - b1 * &vy
                - &x * &hy,
            -(&x * &hx) - &z * &hz + &two * &y * (b2 + &b0) * &v2
                - (&three - &four * &y * &y * v) * &g
                + b2 * &vy,
            &x * &hx + &y * &hy - &two * &z * (b3 + &c0) * &v2
                + (&three - &four * &z * &z * v) * &g
                - b3 * &vz,
            -(&two * v * (a2 + &(&two * &x * &z * &g)))
                - a2 * &p
                - &two * (b1 * &z + &x * &c0) * &v2
                - b1 * &vz
                - &x * &hz,
            &two * v * (-a1 + &(&two * &y * &z * &g)) - a1 * &p
                + &two * (b2 * &z + &y * &c0) * &v2
                + b2 * &vz
                + &y * &hz,
        ];
        MSystem { delta, m, r }
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.m.iter().flatten().all(FieldElem::is_zero)
    }
}

/// `M·Φ − R`, entry by entry.
pub fn m_residual(sys: &MSystem, phi: &[FieldElem; 3]) -> [FieldElem; 9] {
    std::array::from_fn(|i| {
        let row = &sys.m[i];
        &row[0] * &phi[0] + &row[1] * &phi[1] + &row[2] * &phi[2] - &sys.r[i]
    })
}

/// Published Φ for `V1 = 1/r²`, with free constants `α_i`.
pub fn gauge_case_phi(
    a: &[FieldElem; 3],
    b: &[FieldElem; 3],
    alpha: &[FieldElem; 3],
) -> [FieldElem; 3] {
    let (x, y, z) = (FieldElem::x(), FieldElem::y(), FieldElem::z());
    let two = FieldElem::int(2);
    let den = &two * FieldElem::rho();
    let half = |f: &FieldElem| f / &two;
    let [a1, a2, a3] = a;
    let [b1, b2, b3] = b;
    let [al1, al2, al3] = alpha;
    let (xx, yy, zz) = (&x * &x, &y * &y, &z * &z);
    let n1 = (&xx - &yy - &zz) * al1 + &two * &x * &y * al2 + &two * &x * &z * al3 - &two * b2 * &z
        + &two * b3 * &y;
    let n2 = (&yy - &xx - &zz) * al2 + &two * &x * &y * al1 + &two * &y * &z * al3 + &two * b1 * &z
        - &two * b3 * &x;
    let n3 = (&zz - &xx - &yy) * al3 + &two * &x * &z * al1 + &two * &y * &z * al2 - &two * b1 * &y
        + &two * b2 * &x;
    [
        half(a1) + n1 / &den,
        half(a2) + n2 / &den,
        half(a3) + n3 / &den,
    ]
}

/// Published Φ for radial `V1` with `b = 0`.
pub fn radial_case_phi(a: &[FieldElem; 3]) -> [FieldElem; 3] {
    a.clone().map(|ai| ai / FieldElem::int(2))
}

pub fn symbolic_a() -> [FieldElem; 3] {
    [Var::A1, Var::A2, Var::A3].map(FieldElem::var)
}

pub fn symbolic_b() -> [FieldElem; 3] {
    [Var::B1, Var::B2, Var::B3].map(FieldElem::var)
}

pub fn symbolic_alpha() -> [FieldElem; 3] {
    [Var::Alpha1, Var::Alpha2, Var::Alpha3].map(FieldElem::var)
}

#[derive(Clone, Debug)]
pub enum PhiCase {
    /// `V1 = 1/r²`, symbolic `a_i`, `b_i`, `α_i`.
    Gauge,
    /// Radial `V1`, symbolic `a_i`, given `b_i`.
    Radial { v1: FieldElem, b: [FieldElem; 3] },
}

/// Residuals of the nine φ-equations (`ħ = 1`, `A_i = B_i = C_i = 0` are not involved).
pub fn phi_equation_residuals(
    v1: &FieldElem,
    a: &[FieldElem; 3],
    b: &[FieldElem; 3],
    phi: &[FieldElem; 3],
) -> Vec<FieldElem> {
    let h = FieldElem::one();
    let vd = [v1.d(0), v1.d(1), v1.d(2)];
    let (x, y, z) = (FieldElem::x(), FieldElem::y(), FieldElem::z());
    let k0 = [
        &b[0] - &(&a[2] * &y) + &a[1] * &z,
        &b[1] + &(&a[2] * &x) - &a[0] * &z,
        &b[2] - &(&a[1] * &x) + &a[0] * &y,
    ];
    let dphi = std::array::from_fn(|i| [phi[i].d(0), phi[i].d(1), phi[i].d(2)]);
    phi_equations(&h, v1, &vd, a, b, &k0, phi, &dphi)
}

/// Whether the published Φ of `case` satisfies the nine φ-equations.
pub fn check_phi_solution(case: &PhiCase) -> bool {
    let a = symbolic_a();
    match case {
        PhiCase::Gauge => {
            let b = symbolic_b();
            let phi = gauge_case_phi(&a, &b, &symbolic_alpha());
            let v1 = FieldElem::one() / FieldElem::rho();
            phi_equation_residuals(&v1, &a, &b, &phi)
                .iter()
                .all(FieldElem::is_zero)
        }
        PhiCase::Radial { v1, b } => {
            let phi = radial_case_phi(&a);
            phi_equation_residuals(v1, &a, b, &phi)
                .iter()
                .all(FieldElem::is_zero)
        }
    }
}

/// A nonzero minor: rows and columns of the matrix at a probe point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankWitness {
    pub point: [i64; 3],
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankProbe {
    pub rank: usize,
    pub points_used: usize,
    pub witness: Option<RankWitness>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RankError {
    #[error("every probe point was degenerate; supply more points")]
    AllDegenerate,
}

fn det(m: &[Vec<Gauss>]) -> Gauss {
    match m.len() {
        0 => Gauss::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Gauss::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Gauss>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let t = &m[0][j] * &det(&minor);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.sort();
    out
}

/// Largest nonzero minor of a numeric matrix, with its location.
fn numeric_rank(m: &[Vec<Gauss>]) -> (usize, Option<(Vec<usize>, Vec<usize>)>) {
    let nr = m.len();
    let nc = m.first().map_or(0, Vec::len);
    for k in (1..=nr.min(nc)).rev() {
        for cols in subsets(nc, k) {
            for rows in subsets(nr, k) {
                let sub: Vec<Vec<Gauss>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return (k, Some((rows, cols)));
                }
            }
        }
    }
    (0, None)
}

fn probe(matrix: &[Vec<FieldElem>]) -> Result<RankProbe, RankError> {
    let mut best = RankProbe {
        rank: 0,
        points_used: 0,
        witness: None,
    };
    for &(x, y, z, _) in PYTHAGOREAN_POINTS.iter() {
        let pt = EvalPoint::new(x, y, z);
        let vals: Result<Vec<Vec<Gauss>>, _> = matrix
            .iter()
            .map(|row| row.iter().map(|e| eval_exact(e, &pt)).collect())
            .collect();
        let Ok(vals) = vals else { continue };
        best.points_used += 1;
        let (k, w) = numeric_rank(&vals);
        if k > best.rank || best.points_used == 1 {
            best.rank = best.rank.max(k);
            if let Some((rows, cols)) = w {
                if k == best.rank {
                    best.witness = Some(RankWitness {
                        point: [x, y, z],
                        rows,
                        cols,
                    });
                }
            }
        }
    }
    if best.points_used < 3 {
        return Err(RankError::AllDegenerate);
    }
    Ok(best)
}

/// Generic rank of `M` for the given `V1`: maximum exact rank over the
/// Pythagorean probe points, with a witnessing nonzero minor.
pub fn rank_probe(v1: &FieldElem) -> Result<RankProbe, RankError> {
    let zero = [FieldElem::zero(), FieldElem::zero(), FieldElem::zero()];
    let sys = MSystem::build(v1, &zero, &zero);
    let rows: Vec<Vec<FieldElem>> = sys.m.iter().map(|r| r.to_vec()).collect();
    probe(&rows)
}

/// Rank of the extended matrix `[M | R]` for numeric `a`, `b`.
pub fn extended_rank_probe(
    v1: &FieldElem,
    a: &[FieldElem; 3],
    b: &[FieldElem; 3],
) -> Result<RankProbe, RankError> {
    let sys = MSystem::build(v1, a, b);
    let rows: Vec<Vec<FieldElem>> = sys
        .m
        .iter()
        .zip(sys.r.iter())
        .map(|(r, ri)| {
            r.iter()
                .cloned()
                .chain(std::iter::once(ri.clone()))
                .collect()
        })
        .collect();
    probe(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauge_potential_gives_zero_matrix() {
        let sys = MSystem::build(
            &(FieldElem::one() / FieldElem::rho()),
            &symbolic_a(),
            &symbolic_b(),
        );
        assert!(sys.delta.iter().all(FieldElem::is_zero));
        assert!(sys.is_zero_matrix());
    }

    #[test]
    fn half_inverse_square_delta4() {
        let v1 = FieldElem::ratio(1, 2) / FieldElem::rho();
        let sys = MSystem::build(&v1, &symbolic_a(), &symbolic_b());
        let expected = -FieldElem::x() / (FieldElem::int(2) * FieldElem::rho().pow(2).unwrap());
        assert_eq!(sys.delta[3], expected);
    }

    fn zero3() -> [FieldElem; 3] {
        [FieldElem::zero(), FieldElem::zero(), FieldElem::zero()]
    }

    #[test]
    fn published_phi_solve_m_system() {
        let a = symbolic_a();
        let b = symbolic_b();
        let gauge = MSystem::build(&(FieldElem::one() / FieldElem::rho()), &a, &b);
        let phi = gauge_case_phi(&a, &b, &symbolic_alpha());
        assert!(m_residual(&gauge, &phi).iter().all(FieldElem::is_zero));
        let v1 = FieldElem::ratio(1, 2) / FieldElem::rho();
        let radial = MSystem::build(&v1, &a, &zero3());
        assert!(m_residual(&radial, &radial_case_phi(&a))
            .iter()
            .all(FieldElem::is_zero));
    }

    #[test]
    fn phi_solution_checks() {
        assert!(check_phi_solution(&PhiCase::Gauge));
        let v1 = FieldElem::ratio(1, 2) / FieldElem::rho();
        assert!(check_phi_solution(&PhiCase::Radial {
            v1: v1.clone(),
            b: zero3()
        }));
        let mut b = zero3();
        b[0] = FieldElem::one();
        assert!(!check_phi_solution(&PhiCase::Radial { v1, b }));
    }

    #[test]
    fn rank_trichotomy() {
        let rank = |v: FieldElem| rank_probe(&v).unwrap().rank;
        assert_eq!(rank(FieldElem::one() / FieldElem::rho()), 0);
        assert_eq!(rank(FieldElem::ratio(1, 2) / FieldElem::rho()), 2);
        assert_eq!(rank(FieldElem::int(3) / FieldElem::rho()), 2);
        assert_eq!(
            rank(FieldElem::one() / (FieldElem::one() + FieldElem::rho())),
            3
        );
    }

    #[test]
    fn extended_rank_witnesses() {
        let a = [FieldElem::int(1), FieldElem::int(2), FieldElem::int(3)];
        let b = [FieldElem::int(-1), FieldElem::int(1), FieldElem::int(2)];
        let generic = FieldElem::one() / (FieldElem::one() + FieldElem::rho());
        let p = extended_rank_probe(&generic, &a, &b).unwrap();
        assert_eq!(p.rank, 4);
        assert_eq!(
            p.witness.unwrap(),
            RankWitness {
                point: [1, 2, 2],
                rows: vec![0, 1, 2, 3],
                cols: vec![0, 1, 2, 3]
            }
        );
        assert_eq!(extended_rank_probe(&generic, &a, &zero3()).unwrap().rank, 3);
        let half = FieldElem::ratio(1, 2) / FieldElem::rho();
        assert_eq!(extended_rank_probe(&half, &a, &b).unwrap().rank, 3);
        assert_eq!(extended_rank_probe(&half, &a, &zero3()).unwrap().rank, 2);
    }

    #[test]
    fn degenerate_probe_is_error() {
        let v = FieldElem::var(Var::Mu) / FieldElem::rho();
        assert_eq!(rank_probe(&v).unwrap_err(), RankError::AllDegenerate);
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(9, 3).len(), 84);
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
