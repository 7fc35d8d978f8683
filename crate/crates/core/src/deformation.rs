//! Infinitesimal deformations `[x, y]_t = [x, y] + tω(x, y)`,
//! `ρ_t(x) = ρ(x) + tϖ(x)` of a Lie algebra with a representation.
//!
//! The formal parameter never appears: validity and triviality are the
//! coefficient-wise identities in `t`, checked on basis tuples.

use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::operators::is_nijenhuis_pair;
use crate::rep::Representation;
use crate::report::{CheckReport, Collector};

/// A candidate 2-cochain `ω` together with a candidate map `ϖ: g -> gl(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationPair {
    pub omega: Bracket,
    pub varpi: Representation,
}

impl DeformationPair {
    pub fn new(omega: Bracket, varpi: Representation) -> Result<Self> {
        if omega.dim() != varpi.algebra_dim() {
            return Err(Error::DimensionMismatch(format!(
                "omega on dimension {} but varpi on {}",
                omega.dim(),
                varpi.algebra_dim()
            )));
        }
        Ok(Self { omega, varpi })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Self {
            omega: Bracket::zero(algebra_dim),
            varpi: Representation::zero(algebra_dim, module_dim),
        }
    }

    fn require_shape(&self, g: &LieAlgebra, rho: &Representation) -> Result<()> {
        if self.omega.dim() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "omega on dimension {}, algebra of dimension {}",
                self.omega.dim(),
                g.dim()
            )));
        }
        rho.require_shape(g.dim(), rho.module_dim())?;
        self.varpi.require_shape(g.dim(), rho.module_dim())
    }
}

/// Checks the four conditions for `(ω, ϖ)` to generate a deformation:
///
/// * `cocycle`: `Σ_cyc [ω(x,y), z] = Σ_cyc ω(z, [x,y])`
/// * `omega_jacobi`: `ω` is itself a Lie bracket
/// * `varpi_morphism`: `ϖ(ω(x,y)) = [ϖ(x), ϖ(y)]`
/// * `mixed`: `ρ(ω(x,y)) + ϖ([x,y]) = [ρ(x), ϖ(y)] + [ϖ(x), ρ(y)]`
pub fn check_deformation_pair(
    g: &LieAlgebra,
    rho: &Representation,
    d: &DeformationPair,
) -> Result<CheckReport> {
    d.require_shape(g, rho)?;
    let n = g.dim();
    let omega = &d.omega;
    let varpi = &d.varpi;
    let mut c = Collector::new();

    // Both cyclic sums are alternating, so i < j < k suffices.
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let e = |a| Vector::basis(n, a);
                let (x, y, z) = (e(i), e(j), e(k));
                let lhs = &(&g.apply(omega.basis(i, j), &z) + &g.apply(omega.basis(k, i), &y))
                    + &g.apply(omega.basis(j, k), &x);
                let rhs = &(&omega.apply(&x, g.basis(j, k)) + &omega.apply(&z, g.basis(i, j)))
                    + &omega.apply(&y, g.basis(k, i));
                c.vector("cocycle", &[i, j, k], &lhs - &rhs);
            }
        }
    }
    for w in omega.check_jacobi().witnesses {
        c.push("omega_jacobi", &w.indices, w.defect);
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = varpi.act(omega.basis(i, j));
            let rhs = varpi.action(i).commutator(varpi.action(j))?;
            c.matrix("varpi_morphism", &[i, j], &lhs - &rhs);

            let lhs = &rho.act(omega.basis(i, j)) + &varpi.act(g.basis(i, j));
            let rhs = &rho.action(i).commutator(varpi.action(j))?
                + &varpi.action(i).commutator(rho.action(j))?;
            c.matrix("mixed", &[i, j], &lhs - &rhs);
        }
    }
    Ok(c.finish())
}

/// The deformation generated by a Nijenhuis pair:
/// `ω(x,y) = [Nx,y] + [x,Ny] - N[x,y]`, `ϖ(x) = ρ(Nx) + ρ(x)S - Sρ(x)`.
pub fn trivial_deformation_from_pair(
    g: &LieAlgebra,
    rho: &Representation,
    n: &Matrix,
    s: &Matrix,
) -> Result<DeformationPair> {
    let pair = is_nijenhuis_pair(g, rho, n, s)?;
    if !pair.passed() {
        return Err(Error::precondition("(N, S) is a Nijenhuis pair", pair));
    }
    DeformationPair::new(g.deformed(n)?, rho.hat(n, s)?)
}

/// Checks whether `(ω, ϖ)` is the trivial deformation induced by `(N, S)`:
///
/// * `omega_from_n`: `ω(x,y) = [Nx,y] + [x,Ny] - N[x,y]`
/// * `n_morphism`: `Nω(x,y) = [Nx, Ny]`
/// * `varpi_from_pair`: `ϖ(x) = ρ(Nx) + ρ(x)S - Sρ(x)`
/// * `s_intertwines`: `ρ(Nx)S = Sϖ(x)`
pub fn check_trivial_equivalence(
    g: &LieAlgebra,
    rho: &Representation,
    n: &Matrix,
    s: &Matrix,
    d: &DeformationPair,
) -> Result<CheckReport> {
    d.require_shape(g, rho)?;
    let dim = g.dim();
    n.require_shape(dim, dim, "N")?;
    s.require_shape(rho.module_dim(), rho.module_dim(), "S")?;
    let expected_omega = g.deformed(n)?;
    let mut c = Collector::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let w = d.omega.basis(i, j);
            c.vector("omega_from_n", &[i, j], w - expected_omega.basis(i, j));
            let nx = n.column(i);
            let ny = n.column(j);
            c.vector("n_morphism", &[i, j], &(n * w) - &g.apply(&nx, &ny));
        }
    }
    let expected_varpi = rho.hat(n, s)?;
    for i in 0..dim {
        c.matrix(
            "varpi_from_pair",
            &[i],
            d.varpi.action(i) - expected_varpi.action(i),
        );
        let rho_nx = rho.act(&n.column(i));
        c.matrix(
            "s_intertwines",
            &[i],
            &(&rho_nx * s) - &(s * d.varpi.action(i)),
        );
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Defect;

    fn aff1() -> LieAlgebra {
        LieAlgebra::from_bracket(
            Bracket::from_upper(2, [((0, 1), Vector::from_ints(&[0, 1]))]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn zero_pair_is_a_deformation() {
        let g = aff1();
        let ad = g.adjoint();
        let d = DeformationPair::zero(2, 2);
        assert!(check_deformation_pair(&g, &ad, &d).unwrap().passed());
    }

    #[test]
    fn rescaling_is_a_deformation() {
        let g = aff1();
        let ad = g.adjoint();
        let d = DeformationPair::new(g.bracket().clone(), ad.clone()).unwrap();
        assert!(check_deformation_pair(&g, &ad, &d).unwrap().passed());
    }

    #[test]
    fn central_shift_of_e1_is_a_deformation() {
        // ω = 0, ϖ(e1) = I, ϖ(e2) = 0: ϖ(e1) is central in gl(V), so every
        // condition holds. Evaluated directly: mixed at (e1,e2) reads
        // ϖ(e2) = 0 = [ad e1, 0] + [I, ad e2].
        let g = aff1();
        let ad = g.adjoint();
        let varpi =
            Representation::from_matrices(2, vec![Matrix::identity(2), Matrix::zeros(2, 2)])
                .unwrap();
        let d = DeformationPair::new(Bracket::zero(2), varpi).unwrap();
        assert!(check_deformation_pair(&g, &ad, &d).unwrap().passed());
    }

    #[test]
    fn shift_of_e2_fails_mixed_condition() {
        // ϖ(e2) = I: mixed at (e1,e2) has ϖ([e1,e2]) = I but
        // [ad e1, I] + [0, ad e2] = 0.
        let g = aff1();
        let ad = g.adjoint();
        let varpi =
            Representation::from_matrices(2, vec![Matrix::zeros(2, 2), Matrix::identity(2)])
                .unwrap();
        let d = DeformationPair::new(Bracket::zero(2), varpi).unwrap();
        let report = check_deformation_pair(&g, &ad, &d).unwrap();
        assert_eq!(report.failing_conditions(), vec!["mixed"]);
        assert_eq!(
            report.witnesses[0].defect,
            Defect::Matrix(Matrix::identity(2))
        );
    }

    #[test]
    fn broken_omega_fails_jacobi_and_cocycle() {
        let g = LieAlgebra::abelian(3);
        let rho = Representation::zero(3, 1);
        let omega = Bracket::from_upper(
            3,
            [
                ((0, 1), Vector::from_ints(&[0, 0, 1])),
                ((0, 2), Vector::from_ints(&[1, 0, 0])),
            ],
        )
        .unwrap();
        let d = DeformationPair::new(omega, Representation::zero(3, 1)).unwrap();
        let report = check_deformation_pair(&g, &rho, &d).unwrap();
        assert!(!report.holds("omega_jacobi"));
        // On an abelian algebra the cocycle identity is vacuous.
        assert!(report.holds("cocycle"));
    }

    #[test]
    fn trivial_deformation_special_cases() {
        let g = aff1();
        let ad = g.adjoint();
        let zero = Matrix::zeros(2, 2);
        let id = Matrix::identity(2);
        assert_eq!(
            trivial_deformation_from_pair(&g, &ad, &zero, &zero).unwrap(),
            DeformationPair::zero(2, 2)
        );
        let d = trivial_deformation_from_pair(&g, &ad, &id, &id).unwrap();
        assert_eq!(&d.omega, g.bracket());
        assert_eq!(d.varpi, ad);
    }

    #[test]
    fn trivial_deformation_from_idempotent_pair() {
        let g = aff1();
        let ad = g.adjoint();
        let p = Matrix::from_ints(&[[1, 0], [0, 0]]);
        let d = trivial_deformation_from_pair(&g, &ad, &p, &p).unwrap();
        assert!(check_deformation_pair(&g, &ad, &d).unwrap().passed());
        assert!(check_trivial_equivalence(&g, &ad, &p, &p, &d)
            .unwrap()
            .passed());
    }

    #[test]
    fn trivial_deformation_requires_pair() {
        let g = aff1();
        let ad = g.adjoint();
        let s = Matrix::from_ints(&[[0, 1], [0, 0]]);
        assert!(matches!(
            trivial_deformation_from_pair(&g, &ad, &Matrix::identity(2), &s),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn trivial_equivalence_examples() {
        let g = aff1();
        let ad = g.adjoint();
        let id = Matrix::identity(2);
        let zero = Matrix::zeros(2, 2);
        let d = DeformationPair::new(g.bracket().clone(), ad.clone()).unwrap();
        assert!(check_trivial_equivalence(&g, &ad, &id, &id, &d)
            .unwrap()
            .passed());
        let d0 = DeformationPair::zero(2, 2);
        assert!(check_trivial_equivalence(&g, &ad, &zero, &zero, &d0)
            .unwrap()
            .passed());
        // N = Id, S = 0 with ω = [-,-] and ϖ = ρ: all four hold.
        assert!(check_trivial_equivalence(&g, &ad, &id, &zero, &d)
            .unwrap()
            .passed());
        // Supplying ϖ = 0 instead breaks only the ϖ condition.
        let bad = DeformationPair::new(g.bracket().clone(), Representation::zero(2, 2)).unwrap();
        let report = check_trivial_equivalence(&g, &ad, &id, &zero, &bad).unwrap();
        assert_eq!(report.failing_conditions(), vec!["varpi_from_pair"]);
    }
}
