//! Separated eigenspinors `Ψ = (f1 e^{i(m−½)φ}, f2 e^{i(m+½)φ})` with
//! `f1 = R(r) F(θ)`, `f2 = ((ε − cos θ)/sin θ) f1`, and their residuals.

use num_complex::Complex64;
use serde::Serialize;

use super::quadrature::{gauss_legendre, integrate, log_grid};
use super::special::{jacobi, jacobi_deriv, laguerre, laguerre_deriv};
use super::{energy, kappa, QuantumNumbers, SpectralError};

/// `sign (1−z)^a (1+z)^b P_deg^{(α,β)}(z)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AngularBranch {
    pub sign: f64,
    pub a: f64,
    pub b: f64,
    pub degree: u32,
    pub alpha: f64,
    pub beta: f64,
}

impl AngularBranch {
    /// Value and first two `z`-derivatives, for `|z| < 1`.
    pub fn eval(&self, z: f64) -> [f64; 3] {
        let w = self.sign * (1.0 - z).powf(self.a) * (1.0 + z).powf(self.b);
        let u = -self.a / (1.0 - z) + self.b / (1.0 + z);
        let du = -self.a / ((1.0 - z) * (1.0 - z)) - self.b / ((1.0 + z) * (1.0 + z));
        let p = jacobi(self.degree, self.alpha, self.beta, z);
        let dp = jacobi_deriv(self.degree, self.alpha, self.beta, z, 1);
        let ddp = jacobi_deriv(self.degree, self.alpha, self.beta, z, 2);
        [w * p, w * (u * p + dp), w * ((u * u + du) * p + 2.0 * u * dp + ddp)]
    }
}

/// The `F` branch and the matching `(ε − z)/√(1 − z²) F` branch.
fn angular_branches(two_j: u32, two_m: i32, eps: i8) -> (AngularBranch, AngularBranch) {
    let m = two_m as f64 / 2.0;
    let e = eps as f64;
    let (a, b, degree, alpha, beta) = if two_m < 0 {
        let a = 0.25 - m / 2.0;
        (a, a, ((two_j as i32 + two_m) / 2) as u32, -m + e / 2.0, -m - e / 2.0)
    } else {
        (
            m / 2.0 - e / 2.0 + 0.25,
            m / 2.0 + e / 2.0 + 0.25,
            ((two_j as i32 - two_m) / 2) as u32,
            m - e / 2.0,
            m + e / 2.0,
        )
    };
    let f = AngularBranch { sign: 1.0, a, b, degree, alpha, beta };
    // ε − z is ε(1 − z) for ε = 1 and ε(1 + z) for ε = −1
    let (ga, gb) = if eps == 1 { (a + 0.5, b - 0.5) } else { (a - 0.5, b + 0.5) };
    let g = AngularBranch { sign: e, a: ga, b: gb, ..f };
    (f, g)
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenSpinor {
    pub qn: QuantumNumbers,
    pub mu: f64,
    pub energy: f64,
    /// `R = c e^{wr} r^p L_n^{α_lag}(σ r)`
    pub p: f64,
    pub w: f64,
    pub sigma: f64,
    pub alpha_lag: f64,
    pub alpha_jac: f64,
    pub beta_jac: f64,
    /// `c`, fixing unit `L²` norm and the phase.
    pub norm: f64,
    pub f: AngularBranch,
    pub g: AngularBranch,
}

impl EigenSpinor {
    /// `R, R', R''`
    pub fn radial(&self, r: f64) -> [f64; 3] {
        let n = self.qn.n;
        let x = self.sigma * r;
        let l = laguerre(n, self.alpha_lag, x);
        let dl = self.sigma * laguerre_deriv(n, self.alpha_lag, x, 1);
        let ddl = self.sigma * self.sigma * laguerre_deriv(n, self.alpha_lag, x, 2);
        let a = self.norm * (self.w * r).exp() * r.powf(self.p);
        let g = self.w + self.p / r;
        [a * l, a * (g * l + dl), a * ((g * g - self.p / (r * r)) * l + 2.0 * g * dl + ddl)]
    }

    pub fn f1(&self, r: f64, theta: f64) -> f64 {
        self.radial(r)[0] * self.f.eval(theta.cos())[0]
    }

    pub fn f2(&self, r: f64, theta: f64) -> f64 {
        self.radial(r)[0] * self.g.eval(theta.cos())[0]
    }

    /// The two components at `(r, θ, φ)`.
    pub fn psi(&self, r: f64, theta: f64, phi: f64) -> [Complex64; 2] {
        let m = self.qn.m();
        [
            Complex64::from_polar(self.f1(r, theta), (m - 0.5) * phi),
            Complex64::from_polar(1.0, (m + 0.5) * phi) * self.f2(r, theta),
        ]
    }
}

/// Build the closed-form state. Requires `μ < 0`.
pub fn build_eigenspinor(qn: QuantumNumbers, mu: f64) -> Result<EigenSpinor, SpectralError> {
    if !(mu < 0.0) {
        return Err(SpectralError::Coupling(mu));
    }
    let k = kappa(qn.two_j);
    let e = energy(qn.n, qn.two_j, mu);
    let root = (-2.0 * e).sqrt();
    let (f, g) = angular_branches(qn.two_j, qn.two_m, qn.eps);
    let mut psi = EigenSpinor {
        qn,
        mu,
        energy: e,
        p: -0.5 + k,
        w: -root,
        sigma: 2.0 * root,
        alpha_lag: 2.0 * k,
        alpha_jac: f.alpha,
        beta_jac: f.beta,
        norm: 1.0,
        f,
        g,
    };
    let (z, wz) = gauss_legendre(128);
    let ang: f64 = z
        .iter()
        .zip(&wz)
        .map(|(z, w)| w * (f.eval(*z)[0].powi(2) + g.eval(*z)[0].powi(2)))
        .sum();
    let r_max = (100.0 + 10.0 * qn.n as f64 + 5.0 * psi.p) / root;
    let rad = integrate(|r| (r * psi.radial(r)[0]).powi(2), 0.0, r_max, 400, 8);
    // f1 > 0 near θ = π/2 (R > 0 near the origin)
    let scale = (0..=50).map(|k| f.eval(0.02 * k as f64)[0].abs()).fold(0.0, f64::max);
    let sign = [0.0, 0.01, -0.01, 0.02, -0.02, 0.05, -0.05, 0.1, -0.1]
        .iter()
        .map(|z| f.eval(*z)[0])
        .find(|v| v.abs() > 1e-8 * scale)
        .map_or(1.0, f64::signum);
    psi.norm = sign / (2.0 * std::f64::consts::PI * ang * rad).sqrt();
    Ok(psi)
}

/// Relative residuals `‖(O − λ)Ψ‖ / ‖Ψ‖`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EigenResiduals {
    pub hamiltonian: f64,
    pub j_squared: f64,
    pub j3: f64,
    pub pseudoscalar: f64,
}

impl EigenResiduals {
    pub fn max(&self) -> f64 {
        self.hamiltonian.max(self.j_squared).max(self.j3).max(self.pseudoscalar)
    }
}

/// Quadrature used by the residuals: Gauss-Legendre in `z = cos θ`, a
/// log-spaced radial grid on `[r_lo, r_hi] / |w|`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ResidualGrid {
    pub z_points: usize,
    pub r_points: usize,
    pub r_lo: f64,
    pub r_hi: f64,
}

impl Default for ResidualGrid {
    fn default() -> Self {
        ResidualGrid { z_points: 128, r_points: 400, r_lo: 1e-4, r_hi: 40.0 }
    }
}

pub fn eigen_residuals(psi: &EigenSpinor) -> EigenResiduals {
    eigen_residuals_at(psi, psi.energy, &ResidualGrid::default())
}

/// Residuals with `energy` in place of the state's own eigenvalue.
pub fn eigen_residuals_at(psi: &EigenSpinor, energy: f64, grid: &ResidualGrid) -> EigenResiduals {
    let qn = psi.qn;
    let (j, m) = (qn.j(), qn.m());
    let (k1, k2) = (m - 0.5, m + 0.5);
    let eps = qn.eps as f64;
    let scale = 1.0 / psi.w.abs();
    let (zs, wz) = gauss_legendre(grid.z_points);
    let (rs, wr) = log_grid(grid.r_lo * scale, grid.r_hi * scale, grid.r_points);
    let ang: Vec<_> = zs.iter().map(|z| (psi.f.eval(*z), psi.g.eval(*z))).collect();
    let rows = crate::par::map_range(rs.len(), |ir| {
        let r = rs[ir];
        let [rv, rd, rdd] = psi.radial(r);
        let kin = -0.5 * (rdd + 2.0 * rd / r);
        let mut acc = [0.0f64; 5];
        for (iz, z) in zs.iter().enumerate() {
            let ([f, fz, fzz], [g, gz, gzz]) = ang[iz];
            let s2 = 1.0 - z * z;
            let s = s2.sqrt();
            let l2 = |a: f64, az: f64, azz: f64, k: f64| -s2 * azz + 2.0 * z * az + k * k * a / s2;
            let (l2f, l2g) = (l2(f, fz, fzz, k1), l2(g, gz, gzz, k2));
            let sl1 = k1 * f + s * gz - k2 * z / s * g;
            let sl2 = -s * fz - k1 * z / s * f - k2 * g;
            let pot = psi.mu / r;
            let h1 = kin * f + rv * (l2f / (2.0 * r * r) + pot * f + sl1 / (2.0 * r * r)) - energy * rv * f;
            let h2 = kin * g + rv * (l2g / (2.0 * r * r) + pot * g + sl2 / (2.0 * r * r)) - energy * rv * g;
            let jj = j * (j + 1.0);
            let j1 = rv * (l2f + sl1 + 0.75 * f - jj * f);
            let j2 = rv * (l2g + sl2 + 0.75 * g - jj * g);
            let m1 = rv * ((k1 + 0.5) * f - m * f);
            let m2 = rv * ((k2 - 0.5) * g - m * g);
            let x1 = rv * (z * f + s * g - eps * f);
            let x2 = rv * (s * f - z * g - eps * g);
            let wgt = wz[iz] * wr[ir] * r * r;
            acc[0] += wgt * rv * rv * (f * f + g * g);
            acc[1] += wgt * (h1 * h1 + h2 * h2);
            acc[2] += wgt * (j1 * j1 + j2 * j2);
            acc[3] += wgt * (m1 * m1 + m2 * m2);
            acc[4] += wgt * (x1 * x1 + x2 * x2);
        }
        acc
    });
    let tot = rows.iter().fold([0.0; 5], |mut a, r| {
        for k in 0..5 {
            a[k] += r[k];
        }
        a
    });
    let rel = |k: usize| (tot[k] / tot[0]).sqrt();
    EigenResiduals { hamiltonian: rel(1), j_squared: rel(2), j3: rel(3), pseudoscalar: rel(4) }
}

/// Residual of the printed angular equation for `F` at `z = cos θ`.
pub fn angular_ode_residual(two_j: u32, two_m: i32, eps: i8, z: f64) -> f64 {
    let (f, _) = angular_branches(two_j, two_m, eps);
    let [v, vz, vzz] = f.eval(z);
    let (j, m, e) = (two_j as f64 / 2.0, two_m as f64 / 2.0, eps as f64);
    let s2 = 1.0 - z * z;
    let s = s2.sqrt();
    let ft = -s * vz;
    let ftt = s2 * vzz - z * vz;
    let brace = m * m - 0.25 - e * (m - 0.5) * z - (j * (j + 1.0) + 0.25) * s2;
    ftt + e / s * ft - brace / s2 * v
}

/// Normalized Gram determinant of the `ε = ±1` angular spinors at fixed
/// `(j, m)`; 1 means orthogonal, 0 dependent.
pub fn angular_gram_determinant(two_j: u32, two_m: i32) -> f64 {
    let (z, w) = gauss_legendre(128);
    let (fa, ga) = angular_branches(two_j, two_m, 1);
    let (fb, gb) = angular_branches(two_j, two_m, -1);
    let (mut aa, mut bb, mut ab) = (0.0, 0.0, 0.0);
    for (z, w) in z.iter().zip(&w) {
        let (u, v) = ([fa.eval(*z)[0], ga.eval(*z)[0]], [fb.eval(*z)[0], gb.eval(*z)[0]]);
        aa += w * (u[0] * u[0] + u[1] * u[1]);
        bb += w * (v[0] * v[0] + v[1] * v[1]);
        ab += w * (u[0] * v[0] + u[1] * v[1]);
    }
    (aa * bb - ab * ab) / (aa * bb)
}
