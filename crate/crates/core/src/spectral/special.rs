//! Jacobi and Laguerre polynomials by three-term recurrence, with
//! derivatives through the parameter-shift identities.

use serde::{Deserialize, Serialize};

use super::SpectralError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecialKind {
    Jacobi { n: u32, alpha: f64, beta: f64 },
    Laguerre { n: u32, alpha: f64 },
}

fn check_param(name: &'static str, v: f64) -> Result<(), SpectralError> {
    if v.is_finite() && v > -1.0 {
        Ok(())
    } else {
        Err(SpectralError::Parameter { name, value: v })
    }
}

/// `P_n^{(α,β)}(z)`, no parameter checks.
pub(crate) fn jacobi(n: u32, a: f64, b: f64, z: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * z;
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * z + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `d^order/dz^order P_n^{(α,β)}`.
pub(crate) fn jacobi_deriv(n: u32, a: f64, b: f64, z: f64, order: u32) -> f64 {
    if order > n {
        return 0.0;
    }
    let mut c = 1.0;
    for k in 0..order {
        c *= 0.5 * (n as f64 + a + b + 1.0 + k as f64);
    }
    let o = order as f64;
    c * jacobi(n - order, a + o, b + o, z)
}

/// `L_n^{(α)}(x)`, no parameter checks.
pub(crate) fn laguerre(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut l0 = 1.0;
    let mut l1 = 1.0 + a - x;
    for k in 1..n {
        let kf = k as f64;
        let l2 = ((2.0 * kf + 1.0 + a - x) * l1 - (kf + a) * l0) / (kf + 1.0);
        l0 = l1;
        l1 = l2;
    }
    l1
}

/// `d^order/dx^order L_n^{(α)} = (−1)^order L_{n−order}^{(α+order)}`.
pub(crate) fn laguerre_deriv(n: u32, a: f64, x: f64, order: u32) -> f64 {
    if order > n {
        return 0.0;
    }
    let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
    sign * laguerre(n - order, a + order as f64, x)
}

/// Evaluate a special polynomial.
pub fn special(kind: SpecialKind, x: f64) -> Result<f64, SpectralError> {
    special_derivative(kind, x, 0)
}

/// Derivative of order `order` (0 gives the value).
pub fn special_derivative(kind: SpecialKind, x: f64, order: u32) -> Result<f64, SpectralError> {
    match kind {
        SpecialKind::Jacobi { n, alpha, beta } => {
            check_param("alpha", alpha)?;
            check_param("beta", beta)?;
            Ok(jacobi_deriv(n, alpha, beta, x, order))
        }
        SpecialKind::Laguerre { n, alpha } => {
            check_param("alpha", alpha)?;
            Ok(laguerre_deriv(n, alpha, x, order))
        }
    }
}
