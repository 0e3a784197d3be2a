//! Normal-ordered differential operators with 2×2 (Pauli-basis) coefficients.

mod algebra;
mod diffop;
mod pauli;

pub use algebra::{Algebra, IntegralAnsatz};
pub use diffop::{order_of, Deriv, DiffOp};
pub use pauli::PauliCoeff;
