//! Gauss-Legendre rules and the log-spaced radial grid.

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[−1, 1]`,
/// nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = nf * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let wt = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wt;
        w[n - 1 - i] = wt;
    }
    (x, w)
}

/// `∫_a^b f` with `panels` equal panels of an `order`-point rule.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let (x, w) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for k in 0..panels {
        let mid = a + (k as f64 + 0.5) * h;
        for (xi, wi) in x.iter().zip(&w) {
            acc += wi * f(mid + 0.5 * h * xi);
        }
    }
    acc * 0.5 * h
}

/// `n` log-spaced radii on `[lo, hi]` with trapezoid weights for `∫ f dr`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let (a, b) = (lo.ln(), hi.ln());
    let h = (b - a) / (n - 1) as f64;
    let r: Vec<f64> = (0..n).map(|k| (a + k as f64 * h).exp()).collect();
    let w = r
        .iter()
        .enumerate()
        .map(|(k, ri)| if k == 0 || k == n - 1 { 0.5 * h * ri } else { h * ri })
        .collect();
    (r, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_polynomials() {
        let (x, w) = gauss_legendre(5);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let m8: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(8)).sum();
        assert!((m8 - 2.0 / 9.0).abs() < 1e-14);
        let (x, w) = gauss_legendre(128);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        assert!(x[0] > -1.0 && x[127] < 1.0);
        let m: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(200)).sum();
        assert!((m - 2.0 / 201.0).abs() < 1e-13);
    }

    #[test]
    fn log_grid_integrates() {
        let (r, w) = log_grid(1e-4, 40.0, 4000);
        let s: f64 = r.iter().zip(&w).map(|(r, w)| w * (-r).exp()).sum();
        assert!((s - (-(1e-4f64)).exp() + (-40f64).exp()).abs() < 1e-6);
    }
}
