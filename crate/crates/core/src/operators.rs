//! Single-operator and operator-pair predicates, the pre-Lie product induced
//! by a Kupershmidt operator, and the brackets derived from it.
//!
//! Every identity is bilinear (or linear) in its vector arguments, so each
//! predicate quantifies over basis tuples only. Antisymmetric identities are
//! checked on pairs `i < j`.

use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::linalg::{Matrix, Rational, Vector};
use crate::rep::Representation;
use crate::report::{CheckReport, Collector};

fn square_for(g: &Bracket, m: &Matrix, what: &str) -> Result<()> {
    m.require_shape(g.dim(), g.dim(), what)
}

fn module_map_for(rho: &Representation, t: &Matrix) -> Result<()> {
    t.require_shape(rho.algebra_dim(), rho.module_dim(), "module-to-algebra map")
}

fn rep_for(g: &Bracket, rho: &Representation) -> Result<()> {
    if rho.algebra_dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "representation of a {}-dimensional algebra used with a {}-dimensional one",
            rho.algebra_dim(),
            g.dim()
        )));
    }
    Ok(())
}

fn check_vectors(expected: usize, vs: &[&Vector]) -> Result<()> {
    if let Some(v) = vs.iter().find(|v| v.dim() != expected) {
        return Err(Error::DimensionMismatch(format!(
            "vector of dimension {} where {expected} was expected",
            v.dim()
        )));
    }
    Ok(())
}

/// `[Nx, Ny] - N([Nx, y] + [x, Ny] - N[x, y])`.
pub fn nijenhuis_defect(g: &Bracket, n: &Matrix, x: &Vector, y: &Vector) -> Result<Vector> {
    square_for(g, n, "N")?;
    check_vectors(g.dim(), &[x, y])?;
    let nx = n * x;
    let ny = n * y;
    let deformed = &(&g.apply(&nx, y) + &g.apply(x, &ny)) - &(n * &g.apply(x, y));
    Ok(&g.apply(&nx, &ny) - &(n * &deformed))
}

pub fn is_nijenhuis(g: &Bracket, n: &Matrix) -> Result<CheckReport> {
    square_for(g, n, "N")?;
    Ok(nijenhuis_report(g, n))
}

pub(crate) fn nijenhuis_report(g: &Bracket, n: &Matrix) -> CheckReport {
    let d = g.dim();
    let mut c = Collector::new();
    for i in 0..d {
        for j in i + 1..d {
            let defect = nijenhuis_defect(g, n, &Vector::basis(d, i), &Vector::basis(d, j))
                .expect("shapes checked");
            c.vector("nijenhuis", &[i, j], defect);
        }
    }
    c.finish()
}

/// `[Rx, Ry] = R([Rx, y] + [x, Ry])`.
pub fn is_rota_baxter(g: &Bracket, r: &Matrix) -> Result<CheckReport> {
    square_for(g, r, "R")?;
    Ok(rota_baxter_report(g, r))
}

pub(crate) fn rota_baxter_report(g: &Bracket, r: &Matrix) -> CheckReport {
    let d = g.dim();
    let images: Vec<Vector> = (0..d).map(|i| r.column(i)).collect();
    let mut c = Collector::new();
    for i in 0..d {
        for j in i + 1..d {
            let (x, y) = (Vector::basis(d, i), Vector::basis(d, j));
            let lhs = g.apply(&images[i], &images[j]);
            let inner = &g.apply(&images[i], &y) + &g.apply(&x, &images[j]);
            c.vector("rota_baxter", &[i, j], &lhs - &(r * &inner));
        }
    }
    c.finish()
}

/// `[Tu, Tv] - T(ρ(Tu)v - ρ(Tv)u)`.
pub fn kupershmidt_defect(
    g: &Bracket,
    rho: &Representation,
    t: &Matrix,
    u: &Vector,
    v: &Vector,
) -> Result<Vector> {
    rep_for(g, rho)?;
    module_map_for(rho, t)?;
    check_vectors(rho.module_dim(), &[u, v])?;
    let tu = t * u;
    let tv = t * v;
    let inner = &(&rho.act(&tu) * v) - &(&rho.act(&tv) * u);
    Ok(&g.apply(&tu, &tv) - &(t * &inner))
}

/// Kupershmidt identity on all module basis pairs. Fails with
/// [`Error::NotRepresentation`] when `rho` is not a representation of `g`.
pub fn is_kupershmidt(g: &Bracket, rho: &Representation, t: &Matrix) -> Result<CheckReport> {
    rep_for(g, rho)?;
    module_map_for(rho, t)?;
    let rep_report = rho.check(g)?;
    if !rep_report.passed() {
        return Err(Error::NotRepresentation(rep_report));
    }
    Ok(kupershmidt_report(g, rho, t))
}

/// Kupershmidt identity without revalidating `rho`; shapes must already match.
pub(crate) fn kupershmidt_report(g: &Bracket, rho: &Representation, t: &Matrix) -> CheckReport {
    let m = rho.module_dim();
    let images: Vec<Vector> = (0..m).map(|a| t.column(a)).collect();
    let actions: Vec<Matrix> = images.iter().map(|x| rho.act(x)).collect();
    let mut c = Collector::new();
    for a in 0..m {
        for b in a + 1..m {
            let lhs = g.apply(&images[a], &images[b]);
            let inner = &actions[a].column(b) - &actions[b].column(a);
            c.vector("kupershmidt", &[a, b], &lhs - &(t * &inner));
        }
    }
    c.finish()
}

fn pair_shapes(g: &Bracket, rho: &Representation, n: &Matrix, s: &Matrix) -> Result<()> {
    rep_for(g, rho)?;
    square_for(g, n, "N")?;
    s.require_shape(rho.module_dim(), rho.module_dim(), "S")
}

/// Per-generator matrix identity, reported per `(x, v)` basis pair.
fn pair_identity(
    rho: &Representation,
    n: &Matrix,
    condition: &str,
    defect: impl Fn(&Matrix, &Matrix) -> Matrix,
) -> CheckReport {
    let mut c = Collector::new();
    for i in 0..rho.algebra_dim() {
        let rho_nx = rho.act(&n.column(i));
        let d = defect(rho.action(i), &rho_nx);
        for j in 0..rho.module_dim() {
            c.vector(condition, &[i, j], d.column(j));
        }
    }
    c.finish()
}

/// `N` Nijenhuis and `ρ(Nx)S = Sρ(Nx) + Sρ(x)S - S²ρ(x)`.
pub fn is_nijenhuis_pair(
    g: &Bracket,
    rho: &Representation,
    n: &Matrix,
    s: &Matrix,
) -> Result<CheckReport> {
    pair_shapes(g, rho, n, s)?;
    let s2 = s * s;
    let pair = pair_identity(rho, n, "nijenhuis_pair", |r, rn| {
        let mut d = &(rn * s) - &(s * rn);
        d = &d - &(&(s * r) * s);
        &d + &(&s2 * r)
    });
    Ok(nijenhuis_report(g, n).merge(pair))
}

/// `N` Nijenhuis and `ρ(Nx)S = Sρ(Nx) + ρ(x)S² - Sρ(x)S`.
pub fn is_dual_nijenhuis_pair(
    g: &Bracket,
    rho: &Representation,
    n: &Matrix,
    s: &Matrix,
) -> Result<CheckReport> {
    pair_shapes(g, rho, n, s)?;
    let s2 = s * s;
    let pair = pair_identity(rho, n, "dual_nijenhuis_pair", |r, rn| {
        let mut d = &(rn * s) - &(s * rn);
        d = &d - &(r * &s2);
        &d + &(&(s * r) * s)
    });
    Ok(nijenhuis_report(g, n).merge(pair))
}

/// Nijenhuis pair with `S²ρ(x) + ρ(x)S² = 2Sρ(x)S`.
pub fn is_perfect_pair(
    g: &Bracket,
    rho: &Representation,
    n: &Matrix,
    s: &Matrix,
) -> Result<CheckReport> {
    let base = is_nijenhuis_pair(g, rho, n, s)?;
    let s2 = s * s;
    let two = Rational::from(2);
    let perfect = pair_identity(rho, n, "perfect", |r, _| {
        let d = &(&s2 * r) + &(r * &s2);
        &d - &(&(s * r) * s).scale(&two)
    });
    Ok(base.merge(perfect))
}

/// Tests `N ⊕ S` for the Nijenhuis property on `g ⋉_ρ V` and, when the pair is
/// perfect, `N ⊕ S^T` on `g ⋉_ρ* V*`.
pub fn nijenhuis_pair_semidirect_test(
    g: &LieAlgebra,
    rho: &Representation,
    n: &Matrix,
    s: &Matrix,
) -> Result<CheckReport> {
    pair_shapes(g, rho, n, s)?;
    let relabel = |report: CheckReport, name: &str| {
        CheckReport::from_witnesses(
            report
                .witnesses
                .into_iter()
                .map(|mut w| {
                    w.condition = name.to_string();
                    w
                })
                .collect(),
        )
    };
    let sd = g.semidirect_product(rho)?;
    let mut report = relabel(
        nijenhuis_report(&sd, &n.direct_sum(s)),
        "semidirect_nijenhuis",
    );
    if is_perfect_pair(g, rho, n, s)?.passed() {
        let dual_sd = g.semidirect_product(&rho.dual())?;
        let dual = nijenhuis_report(&dual_sd, &n.direct_sum(&s.transpose()));
        report = report.merge(relabel(dual, "dual_semidirect_nijenhuis"));
    }
    Ok(report)
}

/// A bilinear product on `Q^m`, stored on all ordered basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieProduct {
    dim: usize,
    table: Vec<Vector>,
}

impl PreLieProduct {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let table = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    pub fn product(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if !v[j].is_zero() {
                    out.axpy(&(&u[i] * &v[j]), self.basis(i, j));
                }
            }
        }
        out
    }

    /// `(u⋆v)⋆w - u⋆(v⋆w)`.
    pub fn associator(&self, u: &Vector, v: &Vector, w: &Vector) -> Vector {
        &self.product(&self.product(u, v), w) - &self.product(u, &self.product(v, w))
    }

    /// The associator is symmetric in its first two arguments.
    pub fn check_pre_lie(&self) -> CheckReport {
        let m = self.dim;
        let e = |a| Vector::basis(m, a);
        let mut c = Collector::new();
        for i in 0..m {
            for j in i + 1..m {
                for k in 0..m {
                    let d = &self.associator(&e(i), &e(j), &e(k))
                        - &self.associator(&e(j), &e(i), &e(k));
                    c.vector("pre_lie", &[i, j, k], d);
                }
            }
        }
        c.finish()
    }

    /// `u⋆v - v⋆u`.
    pub fn commutator(&self) -> Bracket {
        Bracket::from_fn(self.dim, |i, j| self.basis(i, j) - self.basis(j, i))
            .expect("table dimensions are consistent")
    }

    /// `S(u)⋆S(v) = S(S(u)⋆v + u⋆S(v) - S(u⋆v))` on all ordered basis pairs.
    pub fn check_nijenhuis(&self, s: &Matrix) -> Result<CheckReport> {
        let m = self.dim;
        s.require_shape(m, m, "S")?;
        let mut c = Collector::new();
        for i in 0..m {
            for j in 0..m {
                let (u, v) = (Vector::basis(m, i), Vector::basis(m, j));
                let (su, sv) = (s * &u, s * &v);
                let inner = &(&self.product(&su, &v) + &self.product(&u, &sv))
                    - &(s * &self.product(&u, &v));
                c.vector(
                    "pre_lie_nijenhuis",
                    &[i, j],
                    &self.product(&su, &sv) - &(s * &inner),
                );
            }
        }
        Ok(c.finish())
    }
}

/// `u ⋆ v = ρ(Tu)v`.
pub fn pre_lie_product(rho: &Representation, t: &Matrix) -> Result<PreLieProduct> {
    module_map_for(rho, t)?;
    let actions: Vec<Matrix> = (0..rho.module_dim())
        .map(|a| rho.act(&t.column(a)))
        .collect();
    Ok(PreLieProduct::from_fn(rho.module_dim(), |i, j| {
        actions[i].column(j)
    }))
}

pub fn check_pre_lie(p: &PreLieProduct) -> CheckReport {
    p.check_pre_lie()
}

/// `{u, v} = ϱ(Tu)v - ϱ(Tv)u` for any action `ϱ`, validated or not.
pub fn bracket_from_rep(rep: &Representation, t: &Matrix) -> Result<Bracket> {
    Ok(pre_lie_product(rep, t)?.commutator())
}

/// `[u, v]^T = ρ(Tu)v - ρ(Tv)u`, a Lie bracket when `T` is Kupershmidt.
pub fn sub_adjacent_bracket(rho: &Representation, t: &Matrix) -> Result<Bracket> {
    bracket_from_rep(rho, t)
}

/// `[u, v]_S = [Su, v] + [u, Sv] - S[u, v]`.
pub fn deform_bracket_by_s(b: &Bracket, s: &Matrix) -> Result<Bracket> {
    b.deform_by(s)
}
