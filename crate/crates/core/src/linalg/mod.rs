//! Exact rational scalars, vectors and matrices.

mod elim;
mod matrix;
mod rational;

pub use elim::{determinant, invert, rank, solve, solve_many};
pub use matrix::{Matrix, Vector};
pub use rational::Rational;

/// Exact product `a * b`.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> crate::Result<Matrix> {
    a.mat_mul(b)
}
