//! Radial eigenvalues by Numerov shooting on `x = ln r`, independent of the
//! closed form. With `u = rR = r^{1/2} y(x)` the radial equation becomes
//! `y'' = (κ² + 2r²(V0(r) − E)) y`, `κ² = j² + j − 1/2`.

use serde::Serialize;

use super::{kappa, SpectralError};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ShootingConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
    /// Upper end of the energy search.
    pub e_max: f64,
    /// Relative tolerance on each eigenvalue.
    pub tol: f64,
    pub max_iter: u32,
}

impl ShootingConfig {
    /// Grid sized for the lowest `n_max + 1` Coulomb levels of coupling `mu`.
    pub fn coulomb(two_j: u32, mu: f64, n_max: u32) -> Self {
        // n + 1/2 + κ < n + j + 1
        let n_eff = n_max as f64 + two_j as f64 / 2.0 + 1.0;
        let a = 1.0 / mu.abs();
        ShootingConfig {
            r_min: 1e-6 * a,
            r_max: (2.0 * n_eff * n_eff + 40.0 * n_eff) * a,
            steps: 40_000,
            e_max: -1e-12 * mu * mu,
            tol: 1e-12,
            max_iter: 200,
        }
    }
}

struct Grid<'a> {
    x0: f64,
    h: f64,
    n: usize,
    kappa2: f64,
    seed: f64,
    v0: &'a (dyn Fn(f64) -> f64 + Sync),
}

impl Grid<'_> {
    fn r(&self, k: usize) -> f64 {
        (self.x0 + k as f64 * self.h).exp()
    }

    fn q(&self, k: usize, e: f64) -> f64 {
        let r = self.r(k);
        self.kappa2 + 2.0 * r * r * ((self.v0)(r) - e)
    }

    /// `y ≈ r^κ (1 + a r)` near the origin.
    fn start(&self, k: usize) -> f64 {
        let r = self.r(k);
        r.powf(self.kappa2.sqrt()) * (1.0 + self.seed * r)
    }

    /// Outward Numerov from the origin through index `stop >= 2`; returns
    /// `[y_{stop−2}, y_{stop−1}, y_stop]` on a common scale and the number
    /// of sign changes.
    fn outward(&self, e: f64, stop: usize, count_only: bool) -> ([f64; 3], u32) {
        let c = self.h * self.h / 12.0;
        let (mut y0, mut y1) = (self.start(0), self.start(1));
        let (mut q0, mut q1) = (self.q(0, e), self.q(1, e));
        let mut older = 0.0;
        let mut nodes = 0;
        let mut prev = y0;
        for k in 2..=stop {
            let q2 = self.q(k, e);
            if count_only && c * q2 > 1.0 && y1.abs() > y0.abs() && y1.signum() == y0.signum() {
                // deep in a forbidden region, growing: no further nodes, and
                // the recurrence is no longer stable here
                break;
            }
            let mut y2 = (2.0 * y1 * (1.0 + 5.0 * c * q1) - y0 * (1.0 - c * q0)) / (1.0 - c * q2);
            if y2 != 0.0 {
                if prev != 0.0 && y2.signum() != prev.signum() {
                    nodes += 1;
                }
                prev = y2;
            }
            if y2.abs() > 1e200 {
                y0 *= 1e-200;
                y1 *= 1e-200;
                y2 *= 1e-200;
            }
            older = y0;
            y0 = y1;
            y1 = y2;
            q0 = q1;
            q1 = q2;
        }
        ([older, y0, y1], nodes)
    }

    /// Inward Numerov from `y(r_max) = 0` down to index `stop`; returns
    /// `[y_stop, y_{stop+1}, y_{stop+2}]` on a common scale.
    fn inward(&self, e: f64, stop: usize) -> [f64; 3] {
        let c = self.h * self.h / 12.0;
        let last = self.n - 1;
        let (mut y0, mut y1) = (0.0, 1e-300);
        let (mut q0, mut q1) = (self.q(last, e), self.q(last - 1, e));
        let mut older = 0.0;
        for k in (stop..last - 1).rev() {
            let q2 = self.q(k, e);
            let mut y2 = (2.0 * y1 * (1.0 + 5.0 * c * q1) - y0 * (1.0 - c * q0)) / (1.0 - c * q2);
            if y2.abs() > 1e200 {
                y0 *= 1e-200;
                y1 *= 1e-200;
                y2 *= 1e-200;
            }
            older = y0;
            y0 = y1;
            y1 = y2;
            q0 = q1;
            q1 = q2;
        }
        [y1, y0, older]
    }

    fn nodes(&self, e: f64) -> u32 {
        self.outward(e, self.n - 1, true).1
    }

    /// Matching index: the outer classical turning point, or the bottom of
    /// the well when there is no allowed region.
    fn matching_index(&self, e: f64) -> usize {
        let lo = 2;
        let hi = self.n - 3;
        match (lo..=hi).rev().find(|&k| self.q(k, e) < 0.0) {
            Some(k) => k,
            None => (lo..=hi)
                .min_by(|a, b| self.q(*a, e).total_cmp(&self.q(*b, e)))
                .unwrap_or(lo),
        }
    }

    /// `sin(θ_out − θ_in)` of the Prüfer angles at the matching point.
    fn mismatch(&self, e: f64) -> f64 {
        let km = self.matching_index(e);
        let (o, _) = self.outward(e, km + 1, false);
        let i = self.inward(e, km - 1);
        let (yo, dyo) = (o[1], (o[2] - o[0]) / (2.0 * self.h));
        let (yi, dyi) = (i[1], (i[2] - i[0]) / (2.0 * self.h));
        let (no, ni) = (yo.hypot(dyo), yi.hypot(dyi));
        (yo * dyi - dyo * yi) / (no * ni)
    }
}

fn solve_level(g: &Grid, level: u32, cfg: &ShootingConfig, e_min: f64) -> Result<f64, SpectralError> {
    let (mut lo, mut hi) = (e_min, cfg.e_max);
    let mut it = 0;
    // bisection on the node count
    while hi - lo > 1e-6 * hi.abs().max(1e-300) {
        let mid = 0.5 * (lo + hi);
        if g.nodes(mid) > level {
            hi = mid;
        } else {
            lo = mid;
        }
        it += 1;
        if it > cfg.max_iter {
            return Err(SpectralError::NoConvergence { level, lower: lo, upper: hi, iterations: it, mismatch: f64::NAN });
        }
    }
    // Illinois false position on the matching mismatch
    let (mut flo, mut fhi) = (g.mismatch(lo), g.mismatch(hi));
    if flo.signum() == fhi.signum() {
        while hi - lo > cfg.tol * hi.abs() {
            let mid = 0.5 * (lo + hi);
            if g.nodes(mid) > level {
                hi = mid;
            } else {
                lo = mid;
            }
            it += 1;
            if it > 4 * cfg.max_iter {
                return Err(SpectralError::NoConvergence { level, lower: lo, upper: hi, iterations: it, mismatch: flo });
            }
        }
        return Ok(0.5 * (lo + hi));
    }
    let mut side = 0;
    for _ in 0..cfg.max_iter {
        let e = (lo * fhi - hi * flo) / (fhi - flo);
        let f = g.mismatch(e);
        if f == 0.0 || (hi - lo) < cfg.tol * e.abs() {
            return Ok(e);
        }
        if f.signum() == flo.signum() {
            lo = e;
            flo = f;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        } else {
            hi = e;
            fhi = f;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        }
        if (hi - lo) < cfg.tol * hi.abs() {
            return Ok(0.5 * (lo + hi));
        }
        it += 1;
    }
    Err(SpectralError::NoConvergence { level, lower: lo, upper: hi, iterations: it, mismatch: flo.min(fhi) })
}

/// Lowest `n_max + 1` eigenvalues of
/// `−½(R'' + (2/r)R') + [V0(r) + (j(j+1) − 3/4)/(2r²)] R = E R`.
pub fn shooting_solve_potential(
    two_j: u32,
    v0: &(dyn Fn(f64) -> f64 + Sync),
    n_max: u32,
    cfg: &ShootingConfig,
) -> Result<Vec<f64>, SpectralError> {
    if n_max > 10 {
        return Err(SpectralError::TooManyLevels(n_max));
    }
    let k = kappa(two_j);
    let x0 = cfg.r_min.ln();
    let h = (cfg.r_max.ln() - x0) / (cfg.steps - 1) as f64;
    let g = Grid { x0, h, n: cfg.steps, kappa2: k * k, seed: cfg.r_min * v0(cfg.r_min) / (k + 0.5), v0 };
    let e_min = (0..cfg.steps)
        .map(|i| {
            let r = g.r(i);
            v0(r) + (k * k - 0.25) / (2.0 * r * r)
        })
        .fold(f64::INFINITY, f64::min);
    let found = g.nodes(cfg.e_max);
    if found <= n_max {
        return Err(SpectralError::MissingLevel { level: n_max, found, e_max: cfg.e_max });
    }
    crate::par::map_range(n_max as usize + 1, |n| solve_level(&g, n as u32, cfg, e_min))
        .into_iter()
        .collect()
}

/// Coulomb case `V0 = μ/r`.
pub fn shooting_solve(two_j: u32, mu: f64, n_max: u32) -> Result<Vec<f64>, SpectralError> {
    if !(mu < 0.0) {
        return Err(SpectralError::Coupling(mu));
    }
    let cfg = ShootingConfig::coulomb(two_j, mu, n_max);
    shooting_solve_potential(two_j, &move |r| mu / r, n_max, &cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::energy;

    #[test]
    fn coulomb_levels() {
        let e = shooting_solve(1, -1.0, 1).unwrap();
        assert!((e[0] + 0.5).abs() < 1e-6 * 0.5, "{e:?}");
        assert!((e[1] + 0.125).abs() < 1e-6 * 0.125, "{e:?}");
        let e = shooting_solve(3, -1.0, 0).unwrap();
        assert!((e[0] + 0.09429).abs() < 1e-5, "{e:?}");
    }

    #[test]
    fn agrees_with_closed_form() {
        for two_j in [1, 3, 5] {
            let e = shooting_solve(two_j, -2.0, 5).unwrap();
            for (n, v) in e.iter().enumerate() {
                let f = energy(n as u32, two_j, -2.0);
                assert!((v - f).abs() < 1e-8 * f.abs(), "j={two_j}/2 n={n}: {v} vs {f}");
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(shooting_solve(1, 1.0, 2), Err(SpectralError::Coupling(1.0)));
        assert_eq!(shooting_solve(1, -1.0, 11), Err(SpectralError::TooManyLevels(11)));
        // a shallow well with a short grid holds few levels
        let cfg = ShootingConfig { r_max: 20.0, ..ShootingConfig::coulomb(1, -1.0, 3) };
        assert!(matches!(
            shooting_solve_potential(1, &|r| -1.0 / r, 8, &cfg),
            Err(SpectralError::MissingLevel { .. })
        ));
    }
}
