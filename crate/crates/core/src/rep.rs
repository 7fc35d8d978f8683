//! Representations as families of action matrices.

use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::report::{CheckReport, Collector};

/// `ρ(x) = Σ x_i R_i` on a module of dimension `module_dim`.
///
/// The type carries no proof of the representation axiom; use
/// [`Representation::validated`] or [`Representation::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    module_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Candidate action; only shapes are checked.
    pub fn from_matrices(module_dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for (i, m) in action.iter().enumerate() {
            m.require_shape(module_dim, module_dim, &format!("action matrix {i}"))?;
        }
        Ok(Self { module_dim, action })
    }

    /// Candidate action with the module dimension read off the first matrix.
    pub fn unchecked(action: Vec<Matrix>) -> Result<Self> {
        let m = action
            .first()
            .map(Matrix::rows)
            .ok_or_else(|| Error::DimensionMismatch("empty action list".into()))?;
        Self::from_matrices(m, action)
    }

    /// Checked representation of `g`.
    pub fn validated(g: &Bracket, module_dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let rep = Self::from_matrices(module_dim, action)?;
        let report = rep.check(g)?;
        if !report.passed() {
            return Err(Error::NotRepresentation(report));
        }
        Ok(rep)
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Self {
            module_dim,
            action: vec![Matrix::zeros(module_dim, module_dim); algebra_dim],
        }
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    /// `ρ(e_i)`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x)`; panics if `x` has the wrong dimension.
    pub fn act(&self, x: &Vector) -> Matrix {
        assert_eq!(
            x.dim(),
            self.algebra_dim(),
            "representation argument dimension"
        );
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (c, r) in x.coords().iter().zip(&self.action) {
            out.axpy(c, r);
        }
        out
    }

    pub fn require_shape(&self, algebra_dim: usize, module_dim: usize) -> Result<()> {
        if self.algebra_dim() != algebra_dim || self.module_dim != module_dim {
            return Err(Error::DimensionMismatch(format!(
                "representation of a {}-dimensional algebra on a {}-dimensional module, expected {algebra_dim} and {module_dim}",
                self.algebra_dim(),
                self.module_dim
            )));
        }
        Ok(())
    }

    /// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on all basis pairs `i < j`.
    pub fn check(&self, g: &Bracket) -> Result<CheckReport> {
        if self.algebra_dim() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a {}-dimensional algebra",
                self.algebra_dim(),
                g.dim()
            )));
        }
        let mut c = Collector::new();
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = self.act(g.basis(i, j));
                let rhs = self.action[i].commutator(&self.action[j])?;
                c.matrix("representation", &[i, j], &lhs - &rhs);
            }
        }
        Ok(c.finish())
    }

    /// `ρ*(x) = -ρ(x)^T` in the dual basis.
    pub fn dual(&self) -> Representation {
        Representation {
            module_dim: self.module_dim,
            action: self.action.iter().map(|r| -&r.transpose()).collect(),
        }
    }

    fn check_pair_shapes(&self, n: &Matrix, s: &Matrix) -> Result<()> {
        n.require_shape(self.algebra_dim(), self.algebra_dim(), "N")?;
        s.require_shape(self.module_dim, self.module_dim, "S")
    }

    fn deformed_action(&self, n: &Matrix, s: &Matrix, sign: bool) -> Result<Representation> {
        self.check_pair_shapes(n, s)?;
        let action = (0..self.algebra_dim())
            .map(|i| {
                let r = &self.action[i];
                let comm = &(r * s) - &(s * r);
                let base = self.act(&n.column(i));
                if sign {
                    &base + &comm
                } else {
                    &base - &comm
                }
            })
            .collect();
        Ok(Representation {
            module_dim: self.module_dim,
            action,
        })
    }

    /// `x ↦ ρ(Nx) + [ρ(x), S]`.
    pub fn hat(&self, n: &Matrix, s: &Matrix) -> Result<Representation> {
        self.deformed_action(n, s, true)
    }

    /// `x ↦ ρ(Nx) - [ρ(x), S]`.
    pub fn tilde(&self, n: &Matrix, s: &Matrix) -> Result<Representation> {
        self.deformed_action(n, s, false)
    }
}

impl Bracket {
    /// `ad(e_i) y = [e_i, y]`.
    pub fn adjoint(&self) -> Representation {
        let n = self.dim();
        Representation {
            module_dim: n,
            action: (0..n).map(|i| self.ad_basis(i)).collect(),
        }
    }

    /// `ad* = -ad^T`.
    pub fn coadjoint(&self) -> Representation {
        self.adjoint().dual()
    }
}

pub fn check_representation(g: &Bracket, rho: &Representation) -> Result<CheckReport> {
    rho.check(g)
}

pub fn adjoint_rep(g: &LieAlgebra) -> Representation {
    g.adjoint()
}

pub fn dual_representation(rho: &Representation) -> Representation {
    rho.dual()
}

pub fn rho_hat(rho: &Representation, n: &Matrix, s: &Matrix) -> Result<Representation> {
    rho.hat(n, s)
}

pub fn rho_tilde(rho: &Representation, n: &Matrix, s: &Matrix) -> Result<Representation> {
    rho.tilde(n, s)
}
