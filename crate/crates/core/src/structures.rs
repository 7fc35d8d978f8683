//! Composite structures built from a Kupershmidt operator `T: V -> g`,
//! `S ∈ gl(V)` and `N ∈ gl(g)`, compatibility of Kupershmidt operators and
//! the hierarchies they generate, r-matrices, invariant bilinear forms and
//! the passage between Rota-Baxter-Nijenhuis and r-matrix-Nijenhuis pairs.
//!
//! Dual-space objects live in the dual basis: `N*` is `N^T`, `ad*_x` is
//! `-ad_x^T` and the pairing is the dot product.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::linalg::{Matrix, Rational, Vector};
use crate::operators::{
    is_dual_nijenhuis_pair, is_kupershmidt, is_nijenhuis, is_nijenhuis_pair, is_rota_baxter,
    kupershmidt_report, sub_adjacent_bracket,
};
use crate::par::{map_slice, Execution};
use crate::rep::Representation;
use crate::report::{CheckReport, Collector, Defect};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StructureKind {
    #[serde(rename = "KN")]
    Kn,
    #[serde(rename = "KdN")]
    Kdn,
    #[serde(rename = "compatible_pair")]
    CompatiblePair,
    #[serde(rename = "hierarchy")]
    Hierarchy,
    #[serde(rename = "r_matrix")]
    RMatrix,
    #[serde(rename = "RMN")]
    Rmn,
    #[serde(rename = "RBN")]
    Rbn,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureKind::Kn => "KN",
            StructureKind::Kdn => "KdN",
            StructureKind::CompatiblePair => "compatible_pair",
            StructureKind::Hierarchy => "hierarchy",
            StructureKind::RMatrix => "r_matrix",
            StructureKind::Rmn => "RMN",
            StructureKind::Rbn => "RBN",
        })
    }
}

/// A derived object that was compared while checking a structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Matrix(Matrix),
    Bracket(Bracket),
}

struct BracketEntries<'a>(&'a Bracket);

impl Serialize for BracketEntries<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            i: usize,
            j: usize,
            value: &'a Vector,
        }
        let entries: Vec<Entry> = self
            .0
            .upper_entries()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(i, j, value)| Entry { i, j, value })
            .collect();
        let mut seq = serializer.serialize_seq(Some(entries.len()))?;
        for e in &entries {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            Certificate::Matrix(m) => map.serialize_entry("matrix", m)?,
            Certificate::Bracket(b) => map.serialize_entry("bracket", &BracketEntries(b))?,
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureVerdict {
    pub kind: StructureKind,
    pub report: CheckReport,
    pub certificates: BTreeMap<String, Certificate>,
}

impl StructureVerdict {
    fn certify(mut self, name: &str, c: Certificate) -> Self {
        self.certificates.insert(name.to_string(), c);
        self
    }

    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn require(hypothesis: &str, report: CheckReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(hypothesis, report))
    }
}

fn require_kupershmidt(g: &Bracket, rho: &Representation, t: &Matrix, name: &str) -> Result<()> {
    require(
        &format!("{name} is a Kupershmidt operator"),
        is_kupershmidt(g, rho, t)?,
    )
}

/// `NT = TS` column by column, then `[u,v]^{NT} = [u,v]^T_S` on module pairs.
fn intertwined_brackets(
    rho: &Representation,
    t: &Matrix,
    s: &Matrix,
    n: &Matrix,
) -> Result<(CheckReport, BTreeMap<String, Certificate>)> {
    s.require_shape(rho.module_dim(), rho.module_dim(), "S")?;
    n.require_shape(rho.algebra_dim(), rho.algebra_dim(), "N")?;
    let nt = n.mat_mul(t)?;
    let ts = t.mat_mul(s)?;
    let mut c = Collector::new();
    for a in 0..rho.module_dim() {
        c.vector("intertwining", &[a], &nt.column(a) - &ts.column(a));
    }
    let sub = sub_adjacent_bracket(rho, t)?;
    let deformed = sub.deform_by(s)?;
    let induced = sub_adjacent_bracket(rho, &nt)?;
    for (a, b, v) in induced.upper_entries() {
        c.vector("bracket_coincidence", &[a, b], v - deformed.basis(a, b));
    }
    let mut certs = BTreeMap::new();
    certs.insert("sub_adjacent".into(), Certificate::Bracket(sub));
    certs.insert("deformed_by_s".into(), Certificate::Bracket(deformed));
    certs.insert("induced_by_nt".into(), Certificate::Bracket(induced));
    Ok((c.finish(), certs))
}

fn triple(
    kind: StructureKind,
    g: &Bracket,
    rho: &Representation,
    t: &Matrix,
    s: &Matrix,
    n: &Matrix,
) -> Result<StructureVerdict> {
    require_kupershmidt(g, rho, t, "T")?;
    let pair = match kind {
        StructureKind::Kn => is_nijenhuis_pair(g, rho, n, s)?,
        _ => is_dual_nijenhuis_pair(g, rho, n, s)?,
    };
    let (report, certificates) = intertwined_brackets(rho, t, s, n)?;
    Ok(StructureVerdict {
        kind,
        report: report.merge(pair),
        certificates,
    })
}

/// `(T, S, N)` with `T` Kupershmidt, `NT = TS`, `[u,v]^{NT} = [u,v]^T_S` and
/// `(N, S)` a Nijenhuis pair. A non-Kupershmidt `T` is a precondition error.
pub fn is_kn_structure(
    g: &Bracket,
    rho: &Representation,
    t: &Matrix,
    s: &Matrix,
    n: &Matrix,
) -> Result<StructureVerdict> {
    triple(StructureKind::Kn, g, rho, t, s, n)
}

/// As [`is_kn_structure`] with `(N, S)` a dual-Nijenhuis pair.
pub fn is_kdn_structure(
    g: &Bracket,
    rho: &Representation,
    t: &Matrix,
    s: &Matrix,
    n: &Matrix,
) -> Result<StructureVerdict> {
    triple(StructureKind::Kdn, g, rho, t, s, n)
}

pub(crate) fn compatibility_report(
    g: &Bracket,
    rho: &Representation,
    t1: &Matrix,
    t2: &Matrix,
) -> CheckReport {
    let m = rho.module_dim();
    let im1: Vec<Vector> = (0..m).map(|a| t1.column(a)).collect();
    let im2: Vec<Vector> = (0..m).map(|a| t2.column(a)).collect();
    let act1: Vec<Matrix> = im1.iter().map(|x| rho.act(x)).collect();
    let act2: Vec<Matrix> = im2.iter().map(|x| rho.act(x)).collect();
    let mut c = Collector::new();
    for a in 0..m {
        for b in a + 1..m {
            let lhs = &g.apply(&im1[a], &im2[b]) + &g.apply(&im2[a], &im1[b]);
            let via2 = &act2[a].column(b) - &act2[b].column(a);
            let via1 = &act1[a].column(b) - &act1[b].column(a);
            let rhs = &(t1 * &via2) + &(t2 * &via1);
            c.vector("compatibility", &[a, b], &lhs - &rhs);
        }
    }
    c.finish()
}

/// Mixed identity `[T1u,T2v] + [T2u,T1v] = T1(ρ(T2u)v - ρ(T2v)u) + T2(ρ(T1u)v - ρ(T1v)u)`
/// for two Kupershmidt operators.
pub fn are_compatible_kupershmidt(
    g: &Bracket,
    rho: &Representation,
    t1: &Matrix,
    t2: &Matrix,
) -> Result<CheckReport> {
    require_kupershmidt(g, rho, t1, "T1")?;
    require_kupershmidt(g, rho, t2, "T2")?;
    Ok(compatibility_report(g, rho, t1, t2))
}

/// Coefficient pairs used by [`compatible_by_combinations`].
pub const COMBINATION_SAMPLES: [(i64, i64); 3] = [(1, 1), (1, -1), (2, 3)];

/// Tests `k1 T1 + k2 T2` for the Kupershmidt identity directly on each
/// sample coefficient pair.
pub fn compatible_by_combinations(
    g: &Bracket,
    rho: &Representation,
    t1: &Matrix,
    t2: &Matrix,
) -> Result<bool> {
    for (k1, k2) in COMBINATION_SAMPLES {
        let mut t = t1.scale(&Rational::from(k1));
        t.axpy(&Rational::from(k2), t2);
        if !is_kupershmidt(g, rho, &t)?.passed() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_compatible(g: &Bracket, rho: &Representation, t1: &Matrix, t2: &Matrix) -> Result<()> {
    require(
        "the Kupershmidt operators are compatible",
        are_compatible_kupershmidt(g, rho, t1, t2)?,
    )
}

/// `N = T1 T2^{-1}` for compatible Kupershmidt operators with `T2` invertible.
pub fn nijenhuis_from_kupershmidt_pair(
    g: &Bracket,
    rho: &Representation,
    t1: &Matrix,
    t2: &Matrix,
) -> Result<Matrix> {
    require_compatible(g, rho, t1, t2)?;
    let inv = t2.invert()?;
    t1.mat_mul(&inv)
}

/// `N([NTu,Tv] + [Tu,NTv]) = N(T(ρ(NTu)v - ρ(NTv)u) + NT(ρ(Tu)v - ρ(Tv)u))`,
/// under `T` Kupershmidt and `N` Nijenhuis.
pub fn check_nt_kupershmidt_condition(
    g: &Bracket,
    rho: &Representation,
    t: &Matrix,
    n: &Matrix,
) -> Result<CheckReport> {
    require_kupershmidt(g, rho, t, "T")?;
    require("N is a Nijenhuis operator", is_nijenhuis(g, n)?)?;
    let nt = n.mat_mul(t)?;
    let m = rho.module_dim();
    let im: Vec<Vector> = (0..m).map(|a| t.column(a)).collect();
    let nim: Vec<Vector> = (0..m).map(|a| nt.column(a)).collect();
    let mut c = Collector::new();
    for a in 0..m {
        for b in a + 1..m {
            let lhs = n * &(&g.apply(&nim[a], &im[b]) + &g.apply(&im[a], &nim[b]));
            let by_nt = &(&rho.act(&nim[a]) * &Vector::basis(m, b))
                - &(&rho.act(&nim[b]) * &Vector::basis(m, a));
            let by_t = &(&rho.act(&im[a]) * &Vector::basis(m, b))
                - &(&rho.act(&im[b]) * &Vector::basis(m, a));
            let rhs = n * &(&(t * &by_nt) + &(&nt * &by_t));
            c.vector("nt_condition", &[a, b], &lhs - &rhs);
        }
    }
    Ok(c.finish())
}

/// The operators `T_k = N^k T` for `k = 0..=k_max` with every internal check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hierarchy {
    pub operators: Vec<Matrix>,
    /// Kupershmidt verdict of each `T_k`.
    pub kupershmidt: Vec<bool>,
    /// `compatible[k][l]` for `T_k`, `T_l`.
    pub compatible: Vec<Vec<bool>>,
    /// All witnesses; indices are prefixed by the hierarchy levels involved.
    pub report: CheckReport,
}

impl Hierarchy {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn prefixed(report: CheckReport, condition: &str, prefix: &[usize]) -> CheckReport {
    CheckReport::from_witnesses(
        report
            .witnesses
            .into_iter()
            .map(|mut w| {
                w.condition = condition.to_string();
                w.indices.splice(0..0, prefix.iter().copied());
                w
            })
            .collect(),
    )
}

/// Builds and checks `T_k = N^k T` for `0 <= k <= k_max`.
///
/// Conditions: `intertwining_power` (`N^k T = T S^k`), `kupershmidt_power`,
/// `pairwise_compatibility`, `power_homomorphism`
/// (`T_k [u,v]^T_{S^{k+i}} = [T_k u, T_k v]_{N^i}` for `k + i <= k_max`) and
/// `power_bracket` (`[u,v]^{T_k} = [u,v]^T_{S^k}`).
/// The triple must pass [`is_kn_structure`] or [`is_kdn_structure`].
pub fn hierarchy(
    g: &Bracket,
    rho: &Representation,
    t: &Matrix,
    s: &Matrix,
    n: &Matrix,
    k_max: usize,
    exec: Execution,
) -> Result<Hierarchy> {
    let kn = is_kn_structure(g, rho, t, s, n)?;
    if !kn.passed() {
        let kdn = is_kdn_structure(g, rho, t, s, n)?;
        require(
            "(T, S, N) is a Kupershmidt-(dual-)Nijenhuis structure",
            kdn.report,
        )?;
    }
    let m = rho.module_dim();
    let dim = g.dim();
    let mut n_pow = vec![Matrix::identity(dim)];
    let mut s_pow = vec![Matrix::identity(m)];
    for k in 1..=k_max {
        n_pow.push(n_pow[k - 1].mat_mul(n)?);
        s_pow.push(s_pow[k - 1].mat_mul(s)?);
    }
    let operators: Vec<Matrix> = n_pow.iter().map(|p| p * t).collect();

    let mut report = CheckReport::pass();
    let mut c = Collector::new();
    for (k, tk) in operators.iter().enumerate() {
        let ts = t * &s_pow[k];
        for a in 0..m {
            c.vector("intertwining_power", &[k, a], &tk.column(a) - &ts.column(a));
        }
    }
    report = report.merge(c.finish());

    let per_k = map_slice(exec, &operators, |tk| kupershmidt_report(g, rho, tk));
    let kupershmidt = per_k.iter().map(CheckReport::passed).collect();
    for (k, r) in per_k.into_iter().enumerate() {
        report = report.merge(prefixed(r, "kupershmidt_power", &[k]));
    }

    let pairs: Vec<(usize, usize)> = (0..=k_max)
        .flat_map(|k| (k..=k_max).map(move |l| (k, l)))
        .collect();
    let pair_reports = map_slice(exec, &pairs, |&(k, l)| {
        compatibility_report(g, rho, &operators[k], &operators[l])
    });
    let mut compatible = vec![vec![false; k_max + 1]; k_max + 1];
    for (&(k, l), r) in pairs.iter().zip(pair_reports) {
        compatible[k][l] = r.passed();
        compatible[l][k] = r.passed();
        report = report.merge(prefixed(r, "pairwise_compatibility", &[k, l]));
    }

    let sub = sub_adjacent_bracket(rho, t)?;
    let sub_deformed: Vec<Bracket> = s_pow
        .iter()
        .map(|p| sub.deform_by(p))
        .collect::<Result<_>>()?;
    let g_deformed: Vec<Bracket> = n_pow
        .iter()
        .map(|p| g.deform_by(p))
        .collect::<Result<_>>()?;
    let mut c = Collector::new();
    for k in 0..=k_max {
        let tk = &operators[k];
        for i in 0..=k_max - k {
            for a in 0..m {
                for b in a + 1..m {
                    let lhs = tk * sub_deformed[k + i].basis(a, b);
                    let rhs = g_deformed[i].apply(&tk.column(a), &tk.column(b));
                    c.vector("power_homomorphism", &[k, i, a, b], &lhs - &rhs);
                }
            }
        }
        let induced = sub_adjacent_bracket(rho, tk)?;
        for (a, b, v) in induced.upper_entries() {
            c.vector("power_bracket", &[k, a, b], v - sub_deformed[k].basis(a, b));
        }
    }
    report = report.merge(c.finish());

    Ok(Hierarchy {
        operators,
        kupershmidt,
        compatible,
        report,
    })
}

/// The two structures `(T, S, N)` and `(T1, S, N)` with `S = T^{-1} T1` and
/// `N = T1 T^{-1}`, for `T` invertible and compatible with `T1`.
pub fn kdn_from_compatible(
    g: &Bracket,
    rho: &Representation,
    t: &Matrix,
    t1: &Matrix,
) -> Result<(StructureVerdict, StructureVerdict)> {
    require_compatible(g, rho, t, t1)?;
    let inv = t.invert()?;
    let s = inv.mat_mul(t1)?;
    let n = t1.mat_mul(&inv)?;
    let first = is_kdn_structure(g, rho, t, &s, &n)?
        .certify("S", Certificate::Matrix(s.clone()))
        .certify("N", Certificate::Matrix(n.clone()));
    let second = is_kdn_structure(g, rho, t1, &s, &n)?
        .certify("S", Certificate::Matrix(s))
        .certify("N", Certificate::Matrix(n));
    Ok((first, second))
}

/// An antisymmetric `π^♯: g* -> g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Bivector(Matrix);

impl Bivector {
    pub fn new(sharp: Matrix) -> Result<Self> {
        sharp.require_square()?;
        if !sharp.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        Ok(Self(sharp))
    }

    pub fn zero(dim: usize) -> Self {
        Self(Matrix::zeros(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn sharp(&self) -> &Matrix {
        &self.0
    }

    pub fn into_sharp(self) -> Matrix {
        self.0
    }
}

/// `ad*_x β` computed from the structure constants: `(ad*_x β)_k = -β([x, e_k])`.
fn coadjoint_apply(g: &Bracket, x: &Vector, beta: &Vector) -> Vector {
    let n = g.dim();
    Vector::new(
        (0..n)
            .map(|k| {
                -beta
                    .dot(&g.apply(x, &Vector::basis(n, k)))
                    .expect("same dimension")
            })
            .collect(),
    )
}

/// `[π^♯α, π^♯β] = π^♯(ad*_{π^♯α} β - ad*_{π^♯β} α)` on dual basis pairs.
pub fn is_r_matrix(g: &Bracket, pi: &Bivector) -> Result<CheckReport> {
    let n = g.dim();
    pi.sharp().require_shape(n, n, "pi_sharp")?;
    let p = pi.sharp();
    let mut c = Collector::new();
    for a in 0..n {
        for b in a + 1..n {
            let (alpha, beta) = (Vector::basis(n, a), Vector::basis(n, b));
            let (pa, pb) = (p.column(a), p.column(b));
            let inner = &coadjoint_apply(g, &pa, &beta) - &coadjoint_apply(g, &pb, &alpha);
            c.vector("r_matrix", &[a, b], &g.apply(&pa, &pb) - &(p * &inner));
        }
    }
    Ok(c.finish())
}

/// `Nπ^♯ = π^♯N*` and `[α,β]^{Nπ^♯} = [α,β]^{π^♯}_{N*}` for an r-matrix `π`
/// and a Nijenhuis `N`.
pub fn is_r_matrix_nijenhuis(
    g: &LieAlgebra,
    pi: &Bivector,
    n: &Matrix,
) -> Result<StructureVerdict> {
    require("pi is an r-matrix", is_r_matrix(g, pi)?)?;
    require("N is a Nijenhuis operator", is_nijenhuis(g, n)?)?;
    let (report, certificates) =
        intertwined_brackets(&g.coadjoint(), pi.sharp(), &n.transpose(), n)?;
    Ok(StructureVerdict {
        kind: StructureKind::Rmn,
        report,
        certificates,
    })
}

/// `NR = RN` and `[x,y]^{NR} = [x,y]^R_N` for a Rota-Baxter `R` and a
/// Nijenhuis `N`.
pub fn is_rbn_structure(g: &LieAlgebra, r: &Matrix, n: &Matrix) -> Result<StructureVerdict> {
    require("R is a Rota-Baxter operator", is_rota_baxter(g, r)?)?;
    require("N is a Nijenhuis operator", is_nijenhuis(g, n)?)?;
    let (report, certificates) = intertwined_brackets(&g.adjoint(), r, n, n)?;
    Ok(StructureVerdict {
        kind: StructureKind::Rbn,
        report,
        certificates,
    })
}

/// A symmetric bilinear form on `g`, stored as its Gram matrix
/// `G_ij = B(e_i, e_j)`. The induced `B^♯: g* -> g` is `G^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn from_gram(gram: Matrix) -> Result<Self> {
        gram.require_square()?;
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { gram })
    }

    /// From the matrix of `B^♯`, which must be symmetric and invertible.
    pub fn from_b_sharp(b_sharp: Matrix) -> Result<Self> {
        b_sharp.require_square()?;
        if !b_sharp.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self {
            gram: b_sharp.invert()?,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            gram: Matrix::identity(dim),
        }
    }

    /// `B(x, y) = tr(ad x ad y)`.
    pub fn killing(g: &Bracket) -> Self {
        let n = g.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| g.ad_basis(i)).collect();
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let prod = &ads[i] * &ads[j];
                let tr: Rational = (0..n).map(|k| prod.get(k, k).clone()).sum();
                gram.set(i, j, tr);
            }
        }
        Self { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn b_sharp(&self) -> Result<Matrix> {
        self.gram.invert()
    }
}

/// Nondegeneracy (`nondegenerate`, witnessed by the zero determinant) and
/// `ad_invariant`: `B([x,y],z) + B(y,[x,z]) = 0`, which for a nondegenerate
/// form is `B^♯ ad*_x = ad_x B^♯`.
pub fn check_bilinear_form(g: &Bracket, b: &BilinearForm) -> Result<CheckReport> {
    let n = g.dim();
    b.gram.require_shape(n, n, "bilinear form")?;
    let mut c = Collector::new();
    let det = b.gram.determinant()?;
    if det.is_zero() {
        c.push("nondegenerate", &[], Defect::Scalar(det));
    }
    for i in 0..n {
        let ad = g.ad_basis(i);
        c.matrix(
            "ad_invariant",
            &[i],
            &(&ad.transpose() * &b.gram) + &(&b.gram * &ad),
        );
    }
    Ok(c.finish())
}

fn require_form(g: &Bracket, b: &BilinearForm) -> Result<Matrix> {
    require(
        "B is nondegenerate and ad-invariant",
        check_bilinear_form(g, b)?,
    )?;
    b.b_sharp()
}

/// `R B^♯` is antisymmetric.
pub fn is_skew_endomorphism(g: &Bracket, r: &Matrix, b: &BilinearForm) -> Result<CheckReport> {
    let sharp = require_form(g, b)?;
    r.require_shape(g.dim(), g.dim(), "R")?;
    let rb = r * &sharp;
    let mut c = Collector::new();
    c.matrix("skew", &[], &rb + &rb.transpose());
    Ok(c.finish())
}

/// `B^♯ N* = N B^♯`.
pub fn check_form_compatibility(g: &Bracket, b: &BilinearForm, n: &Matrix) -> Result<CheckReport> {
    let sharp = require_form(g, b)?;
    n.require_shape(g.dim(), g.dim(), "N")?;
    let mut c = Collector::new();
    c.matrix(
        "form_compatibility",
        &[],
        &(&sharp * &n.transpose()) - &(n * &sharp),
    );
    Ok(c.finish())
}

/// Output of a conversion together with the re-verification of its target.
#[derive(Clone, Debug, PartialEq)]
pub struct Converted<T> {
    pub value: T,
    pub n: Matrix,
    pub verdict: StructureVerdict,
}

/// `(R, N) ↦ (π^♯ = R B^♯, N)`. Every hypothesis is checked and reported
/// separately; the resulting pair is re-verified as r-matrix-Nijenhuis.
pub fn rbn_to_rmn(
    g: &LieAlgebra,
    r: &Matrix,
    n: &Matrix,
    b: &BilinearForm,
) -> Result<Converted<Bivector>> {
    let sharp = require_form(g, b)?;
    require(
        "R is a skew-symmetric endomorphism of (g, B)",
        is_skew_endomorphism(g, r, b)?,
    )?;
    require("B and N are compatible", check_form_compatibility(g, b, n)?)?;
    require(
        "(R, N) is a Rota-Baxter-Nijenhuis structure",
        is_rbn_structure(g, r, n)?.report,
    )?;
    let pi = Bivector::new(r * &sharp)?;
    let verdict = is_r_matrix_nijenhuis(g, &pi, n)?;
    Ok(Converted {
        value: pi,
        n: n.clone(),
        verdict,
    })
}

/// `(π, N) ↦ (R = π^♯ (B^♯)^{-1}, N)`, with compatibility of `B` and `N`
/// required as in the forward direction. The output is re-verified as a
/// Rota-Baxter-Nijenhuis structure with `R` skew.
pub fn rmn_to_rbn(
    g: &LieAlgebra,
    pi: &Bivector,
    n: &Matrix,
    b: &BilinearForm,
) -> Result<Converted<Matrix>> {
    require_form(g, b)?;
    require("B and N are compatible", check_form_compatibility(g, b, n)?)?;
    require(
        "(pi, N) is an r-matrix-Nijenhuis structure",
        is_r_matrix_nijenhuis(g, pi, n)?.report,
    )?;
    pi.sharp().require_shape(g.dim(), g.dim(), "pi_sharp")?;
    let r = pi.sharp() * b.gram();
    let mut verdict = is_rbn_structure(g, &r, n)?;
    verdict.report = verdict.report.merge(is_skew_endomorphism(g, &r, b)?);
    Ok(Converted {
        value: r,
        n: n.clone(),
        verdict,
    })
}
