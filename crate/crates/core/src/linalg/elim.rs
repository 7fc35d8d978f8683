//! Fraction-free (Bareiss) elimination.
//!
//! Rational rows are first cleared of denominators row by row, which leaves the
//! solution set unchanged. Elimination then runs over `BigInt`; every division
//! performed is exact, so intermediate entries stay bounded by minors of the
//! integer matrix. Back substitution happens in rationals at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Matrix, Rational, Vector};
use crate::error::{Error, Result};

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// Pivot column of each leading row, in order.
    pivots: Vec<usize>,
    /// `+1` or `-1` from row swaps.
    swap_sign: i8,
    /// Product of the per-row denominator multipliers.
    row_scale: BigInt,
}

fn clear_denominators(row: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    (ints, lcm)
}

/// Row-echelon form of `[a | b]`, choosing pivots only among the first
/// `a.cols()` columns.
fn echelon(a: &Matrix, b: Option<&Matrix>) -> Echelon {
    let pivot_cols = a.cols();
    let mut row_scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = (0..a.rows())
        .map(|i| {
            let mut full = a.row(i).to_vec();
            if let Some(b) = b {
                full.extend_from_slice(b.row(i));
            }
            let (ints, lcm) = clear_denominators(&full);
            row_scale *= lcm;
            ints
        })
        .collect();
    let width = rows.first().map_or(0, Vec::len);

    let mut prev = BigInt::one();
    let mut swap_sign = 1i8;
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            swap_sign = -swap_sign;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..width {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(col);
        r += 1;
    }
    Echelon {
        rows,
        pivots,
        swap_sign,
        row_scale,
    }
}

/// Rank of a matrix.
pub fn rank(a: &Matrix) -> usize {
    echelon(a, None).pivots.len()
}

/// Exact determinant of a square matrix.
pub fn determinant(a: &Matrix) -> Result<Rational> {
    a.require_square()?;
    let n = a.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let e = echelon(a, None);
    if e.pivots.len() < n {
        return Ok(Rational::zero());
    }
    // The last Bareiss pivot is the determinant of the integer matrix.
    let mut det = e.rows[n - 1][n - 1].clone();
    if e.swap_sign < 0 {
        det = -det;
    }
    Rational::new(det, e.row_scale)
}

/// Solves `a X = b` column by column; `Ok(None)` when inconsistent.
/// Free variables are set to zero.
pub fn solve_many(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "system with {} equations but right-hand side of {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let e = echelon(a, Some(b));
    let rank = e.pivots.len();
    // Rows past the rank have zero coefficient part; any nonzero rhs is a contradiction.
    if e.rows[rank..]
        .iter()
        .any(|row| row[n..].iter().any(|x| !x.is_zero()))
    {
        return Ok(None);
    }
    let mut x = Matrix::zeros(n, b.cols());
    for rhs in 0..b.cols() {
        for k in (0..rank).rev() {
            let pc = e.pivots[k];
            let row = &e.rows[k];
            let mut acc = Rational::from(row[n + rhs].clone());
            for (j, c) in row.iter().enumerate().take(n).skip(pc + 1) {
                if !c.is_zero() {
                    acc -= &(Rational::from(c.clone()) * x.get(j, rhs));
                }
            }
            x.set(pc, rhs, acc / Rational::from(row[pc].clone()));
        }
    }
    Ok(Some(x))
}

/// Solves `a x = b`, failing with [`Error::NoSolution`] when inconsistent.
pub fn solve(a: &Matrix, b: &Vector) -> Result<Vector> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "system with {} equations but right-hand side of dimension {}",
            a.rows(),
            b.dim()
        )));
    }
    solve_many(a, &b.as_column())?
        .map(|x| x.column(0))
        .ok_or(Error::NoSolution)
}

/// Exact inverse; [`Error::NotInvertible`] for singular input.
pub fn invert(a: &Matrix) -> Result<Matrix> {
    a.require_square()?;
    let n = a.rows();
    if rank(a) < n {
        return Err(Error::NotInvertible);
    }
    solve_many(a, &Matrix::identity(n))?.ok_or(Error::NotInvertible)
}

impl Matrix {
    pub fn invert(&self) -> Result<Matrix> {
        invert(self)
    }

    pub fn determinant(&self) -> Result<Rational> {
        determinant(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn solve(&self, b: &Vector) -> Result<Vector> {
        solve(self, b)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows()
    }
}
