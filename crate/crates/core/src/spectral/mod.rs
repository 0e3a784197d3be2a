//! Bound states of `V1 = 1/(2r²)`, `V0 = μ/r` (ħ = 1): closed-form
//! energies, the separated eigenspinors, their residuals against the four
//! commuting operators, and an independent radial shooting solver.

mod eigen;
mod quadrature;
mod shooting;
mod special;

pub use eigen::{
    angular_gram_determinant, angular_ode_residual, build_eigenspinor, eigen_residuals, eigen_residuals_at,
    AngularBranch, EigenResiduals, EigenSpinor, ResidualGrid,
};
pub use quadrature::{gauss_legendre, integrate, log_grid};
pub use shooting::{shooting_solve, shooting_solve_potential, ShootingConfig};
pub use special::{special, special_derivative, SpecialKind};

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::exactfield::rational_sqrt;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("parameter {name} = {value} must exceed -1")]
    Parameter { name: &'static str, value: f64 },
    #[error("invalid quantum numbers: {0}")]
    QuantumNumbers(String),
    #[error("coupling mu = {0} must be negative")]
    Coupling(f64),
    #[error("n_max = {0} exceeds the supported maximum of 10")]
    TooManyLevels(u32),
    #[error(
        "no convergence for level {level}: bracket [{lower:e}, {upper:e}], {iterations} iterations, mismatch {mismatch:e}"
    )]
    NoConvergence { level: u32, lower: f64, upper: f64, iterations: u32, mismatch: f64 },
    #[error("only {found} bound levels below {e_max:e} on the shooting grid, level {level} requested")]
    MissingLevel { level: u32, found: u32, e_max: f64 },
}

/// `(n, j, m, ε)` with `j`, `m` stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub two_j: u32,
    pub two_m: i32,
    pub eps: i8,
}

impl QuantumNumbers {
    pub fn new(n: u32, two_j: u32, two_m: i32, eps: i8) -> Result<Self, SpectralError> {
        if two_j % 2 != 1 {
            return Err(SpectralError::QuantumNumbers(format!("j = {two_j}/2 is not a positive half-integer")));
        }
        if two_m.rem_euclid(2) != 1 || two_m.unsigned_abs() > two_j {
            return Err(SpectralError::QuantumNumbers(format!("m = {two_m}/2 not in -j..=j for j = {two_j}/2")));
        }
        if eps != 1 && eps != -1 {
            return Err(SpectralError::QuantumNumbers(format!("epsilon = {eps} is not ±1")));
        }
        Ok(QuantumNumbers { n, two_j, two_m, eps })
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn m(&self) -> f64 {
        self.two_m as f64 / 2.0
    }
}

/// `√(j² + j − 1/2)`, the shifted angular momentum.
pub fn kappa(two_j: u32) -> f64 {
    let j = two_j as f64 / 2.0;
    (j * j + j - 0.5).sqrt()
}

/// `E = −μ²/(2(n + 1/2 + √(j² + j − 1/2))²)`.
pub fn energy(n: u32, two_j: u32, mu: f64) -> f64 {
    let d = n as f64 + 0.5 + kappa(two_j);
    -mu * mu / (2.0 * d * d)
}

/// The same energy in exact arithmetic, when the surd is rational (only
/// `j = 1/2`).
pub fn energy_exact(n: u32, two_j: u32, mu: &BigRational) -> Option<BigRational> {
    // j² + j − 1/2 = (4j² + 4j − 2)/4 with 2j = k: (k² + 2k − 2)/4
    let k = BigRational::from_integer((two_j as i64).into());
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    let rad = (&k * &k + &two * &k - &two) / &four;
    let s = rational_sqrt(&rad)?;
    let half = BigRational::new(1.into(), 2.into());
    let d = BigRational::from_integer((n as i64).into()) + half + s;
    Some(-(mu * mu) / (two * &d * &d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::q;

    #[test]
    fn energies() {
        assert_eq!(energy(0, 1, -1.0), -0.5);
        assert_eq!(energy(1, 1, -1.0), -0.125);
        assert!((energy(0, 3, -1.0) + 0.094_290_242_348).abs() < 1e-11);
        assert_eq!(energy_exact(0, 1, &q(-1, 1)), Some(q(-1, 2)));
        assert_eq!(energy_exact(1, 1, &q(-1, 1)), Some(q(-1, 8)));
        assert_eq!(energy_exact(2, 1, &q(-3, 1)), Some(q(-1, 2)));
        assert_eq!(energy_exact(0, 3, &q(-1, 1)), None);
    }

    #[test]
    fn quantum_number_validation() {
        assert!(QuantumNumbers::new(0, 1, -1, -1).is_ok());
        assert!(QuantumNumbers::new(0, 2, 0, 1).is_err());
        assert!(QuantumNumbers::new(0, 1, 3, 1).is_err());
        assert!(QuantumNumbers::new(0, 3, 0, 1).is_err());
        assert!(QuantumNumbers::new(0, 3, 1, 0).is_err());
    }
}
