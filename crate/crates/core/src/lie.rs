//! Lie algebras given by structure constants.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Vector};
use crate::rep::Representation;
use crate::report::{CheckReport, Collector};

/// An antisymmetric bilinear product on `Q^n`, given on basis pairs.
///
/// Only the values `[e_i, e_j]` with `i < j` are ever supplied; the rest of
/// the table follows from antisymmetry. Jacobi is not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    dim: usize,
    // Full n*n table, row-major; diagonal is zero and (j,i) = -(i,j).
    table: Vec<Vector>,
}

impl Bracket {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            table: vec![Vector::zeros(dim); dim * dim],
        }
    }

    /// Builds the table from `f(i, j)` for `i < j`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let mut b = Self::zero(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                b.set_upper(i, j, v)?;
            }
        }
        Ok(b)
    }

    /// Builds the table from entries `((i, j), [e_i, e_j])` with `i < j`;
    /// unlisted pairs bracket to zero.
    pub fn from_upper(
        dim: usize,
        entries: impl IntoIterator<Item = ((usize, usize), Vector)>,
    ) -> Result<Self> {
        let mut b = Self::zero(dim);
        let mut seen = std::collections::BTreeSet::new();
        for ((i, j), v) in entries {
            if i >= j || j >= dim {
                return Err(Error::InvalidTable(format!(
                    "bracket index pair ({i}, {j}) must satisfy i < j < {dim}"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidTable(format!(
                    "duplicate bracket entry ({i}, {j})"
                )));
            }
            b.set_upper(i, j, v)?;
        }
        Ok(b)
    }

    fn set_upper(&mut self, i: usize, j: usize, v: Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket value of dimension {} in a {}-dimensional table",
                v.dim(),
                self.dim
            )));
        }
        self.table[j * self.dim + i] = -&v;
        self.table[i * self.dim + j] = v;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[e_i, e_j]`.
    pub fn basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    /// Nonzero table entries with `i < j`, in lexicographic order.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.basis(i, j)))
            .filter(|(_, _, v)| !v.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    /// Bilinear extension of the table. Panics on dimension mismatch.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        assert!(
            x.dim() == self.dim && y.dim() == self.dim,
            "bracket argument dimension mismatch"
        );
        let mut out = Vector::zeros(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if i == j || y[j].is_zero() {
                    continue;
                }
                out.axpy(&(&x[i] * &y[j]), self.basis(i, j));
            }
        }
        out
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket on dimension {} applied to vectors of dimension {} and {}",
                self.dim,
                x.dim(),
                y.dim()
            )));
        }
        Ok(self.apply(x, y))
    }

    pub fn scale(&self, c: &Rational) -> Bracket {
        Bracket {
            dim: self.dim,
            table: self.table.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad_matrix(&self, x: &Vector) -> Matrix {
        Matrix::from_column_fn(self.dim, self.dim, |j| {
            self.apply(x, &Vector::basis(self.dim, j))
        })
    }

    /// Matrix of `y -> [e_i, y]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_column_fn(self.dim, self.dim, |j| self.basis(i, j).clone())
    }

    /// Cyclic Jacobi sum on every basis triple `i < j < k`.
    pub fn check_jacobi(&self) -> CheckReport {
        let n = self.dim;
        let mut c = Collector::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |a| Vector::basis(n, a);
                    let s1 = self.apply(self.basis(i, j), &e(k));
                    let s2 = self.apply(self.basis(j, k), &e(i));
                    let s3 = self.apply(self.basis(k, i), &e(j));
                    c.vector("jacobi", &[i, j, k], &(&s1 + &s2) + &s3);
                }
            }
        }
        c.finish()
    }

    /// `[x, y]_S = [Sx, y] + [x, Sy] - S[x, y]`, the product deformed by a
    /// linear map `S` of the underlying space.
    pub fn deform_by(&self, s: &Matrix) -> Result<Bracket> {
        s.require_shape(self.dim, self.dim, "deforming map")?;
        let n = self.dim;
        let images: Vec<Vector> = (0..n).map(|i| s.column(i)).collect();
        Bracket::from_fn(n, |i, j| {
            let e = |a| Vector::basis(n, a);
            let a = self.apply(&images[i], &e(j));
            let b = self.apply(&e(i), &images[j]);
            let c = s * self.basis(i, j);
            &(&a + &b) - &c
        })
    }
}

/// A validated finite-dimensional Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    basis_names: Vec<String>,
    bracket: Bracket,
}

impl LieAlgebra {
    /// Validates Jacobi eagerly and fails with the full witness list.
    pub fn new(basis_names: Vec<String>, bracket: Bracket) -> Result<Self> {
        if basis_names.len() != bracket.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for a {}-dimensional algebra",
                basis_names.len(),
                bracket.dim()
            )));
        }
        let report = bracket.check_jacobi();
        if !report.passed() {
            return Err(Error::NotLie(report));
        }
        Ok(Self {
            basis_names,
            bracket,
        })
    }

    /// Promotes a bracket with default basis names `e1, e2, ...`.
    pub fn from_bracket(bracket: Bracket) -> Result<Self> {
        let names = (1..=bracket.dim()).map(|i| format!("e{i}")).collect();
        Self::new(names, bracket)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_bracket(Bracket::zero(dim)).expect("abelian bracket is Lie")
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    pub fn into_bracket(self) -> Bracket {
        self.bracket
    }

    /// The deformed bracket `[x, y]_N`; a Lie bracket whenever `N` is Nijenhuis.
    pub fn deformed(&self, n: &Matrix) -> Result<Bracket> {
        self.bracket.deform_by(n)
    }

    /// `g ⋉_ρ V` with `[x + u, y + v] = [x, y] + ρ(x)v - ρ(y)u`; algebra
    /// coordinates come first.
    pub fn semidirect_product(&self, rho: &Representation) -> Result<LieAlgebra> {
        let report = rho.check(&self.bracket)?;
        if !report.passed() {
            return Err(Error::NotRepresentation(report));
        }
        let n = self.dim();
        let m = rho.module_dim();
        let zero_v = Vector::zeros(m);
        let zero_g = Vector::zeros(n);
        let bracket = Bracket::from_fn(n + m, |i, j| match (i < n, j < n) {
            (true, true) => self.bracket.basis(i, j).concat(&zero_v),
            (true, false) => zero_g.concat(&rho.action(i).column(j - n)),
            _ => Vector::zeros(n + m),
        })?;
        let mut names = self.basis_names.clone();
        names.extend((1..=m).map(|k| format!("v{k}")));
        LieAlgebra::new(names, bracket)
    }
}

impl Deref for LieAlgebra {
    type Target = Bracket;

    fn deref(&self) -> &Bracket {
        &self.bracket
    }
}
