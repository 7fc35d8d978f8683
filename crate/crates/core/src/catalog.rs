//! Compiled-in exemplar algebras with operators found by exhaustive grid
//! search. Every asserted property is re-verified when an entry is loaded.

use std::fmt;

use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::operators::{
    is_dual_nijenhuis_pair, is_kupershmidt, is_nijenhuis, is_nijenhuis_pair, is_rota_baxter,
};
use crate::rep::Representation;
use crate::report::CheckReport;
use crate::search::OperatorSet;
use crate::structures::{
    are_compatible_kupershmidt, check_bilinear_form, check_form_compatibility, is_kdn_structure,
    is_kn_structure, is_r_matrix, is_r_matrix_nijenhuis, is_rbn_structure, is_skew_endomorphism,
    BilinearForm, Bivector,
};

pub const NAMES: [&str; 6] = [
    "abelian_1",
    "abelian_2",
    "abelian_3",
    "aff1",
    "heis3",
    "sl2",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepChoice {
    Adjoint,
    Coadjoint,
}

impl RepChoice {
    pub fn name(self) -> &'static str {
        match self {
            RepChoice::Adjoint => "adjoint",
            RepChoice::Coadjoint => "coadjoint",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Asserted {
    Nijenhuis,
    RotaBaxter,
    Kupershmidt,
    NijenhuisPair,
    DualNijenhuisPair,
    Kn,
    Kdn,
    Compatible,
    RMatrix,
    Rmn,
    Rbn,
    Skew,
    FormCompatible,
}

impl fmt::Display for Asserted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Asserted::Nijenhuis => "nijenhuis",
            Asserted::RotaBaxter => "rota_baxter",
            Asserted::Kupershmidt => "kupershmidt",
            Asserted::NijenhuisPair => "nijenhuis_pair",
            Asserted::DualNijenhuisPair => "dual_nijenhuis_pair",
            Asserted::Kn => "kn",
            Asserted::Kdn => "kdn",
            Asserted::Compatible => "compatible",
            Asserted::RMatrix => "r_matrix",
            Asserted::Rmn => "rmn",
            Asserted::Rbn => "rbn",
            Asserted::Skew => "skew",
            Asserted::FormCompatible => "form_compatible",
        })
    }
}

/// Named operators over one representation with the properties they carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorBundle {
    pub name: &'static str,
    pub representation: RepChoice,
    pub operators: OperatorSet,
    pub asserts: Vec<Asserted>,
}

impl OperatorBundle {
    pub fn asserts(&self, kind: Asserted) -> bool {
        self.asserts.contains(&kind)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub adjoint: Representation,
    pub coadjoint: Representation,
    pub bilinear_form: Option<BilinearForm>,
    pub bundles: Vec<OperatorBundle>,
    pub provenance: &'static str,
}

impl CatalogEntry {
    pub fn representation(&self, choice: RepChoice) -> &Representation {
        match choice {
            RepChoice::Adjoint => &self.adjoint,
            RepChoice::Coadjoint => &self.coadjoint,
        }
    }

    pub fn bundle(&self, name: &str) -> Result<&OperatorBundle> {
        self.bundles
            .iter()
            .find(|b| b.name == name)
            .ok_or_else(|| Error::UnknownBundle {
                entry: self.name.to_string(),
                bundle: name.to_string(),
            })
    }

    /// Bundles asserted to be Kupershmidt-(dual-)Nijenhuis structures.
    pub fn structures(&self) -> impl Iterator<Item = &OperatorBundle> {
        self.bundles
            .iter()
            .filter(|b| b.asserts(Asserted::Kn) || b.asserts(Asserted::Kdn))
    }

    fn verify(&self) -> Result<()> {
        for bundle in &self.bundles {
            for &kind in &bundle.asserts {
                let report = self.check(bundle, kind)?;
                if !report.passed() {
                    return Err(Error::CatalogAssertion {
                        entry: self.name.to_string(),
                        bundle: bundle.name.to_string(),
                        kind: kind.to_string(),
                        report,
                    });
                }
            }
        }
        Ok(())
    }

    /// Runs the predicate behind an asserted property.
    pub fn check(&self, bundle: &OperatorBundle, kind: Asserted) -> Result<CheckReport> {
        let g = &self.algebra;
        let rho = self.representation(bundle.representation);
        let ops = &bundle.operators;
        let get = |m: &Option<Matrix>, what: &str| -> Matrix {
            m.clone()
                .unwrap_or_else(|| panic!("catalog bundle {} lacks {what}", bundle.name))
        };
        let form = || {
            self.bilinear_form
                .clone()
                .unwrap_or_else(|| panic!("catalog entry {} has no bilinear form", self.name))
        };
        let pi = || Bivector::new(get(&ops.pi_sharp, "pi_sharp"));
        Ok(match kind {
            Asserted::Nijenhuis => is_nijenhuis(g, &get(&ops.n, "N"))?,
            Asserted::RotaBaxter => is_rota_baxter(g, &get(&ops.r, "R"))?,
            Asserted::Kupershmidt => is_kupershmidt(g, rho, &get(&ops.t, "T"))?,
            Asserted::NijenhuisPair => {
                is_nijenhuis_pair(g, rho, &get(&ops.n, "N"), &get(&ops.s, "S"))?
            }
            Asserted::DualNijenhuisPair => {
                is_dual_nijenhuis_pair(g, rho, &get(&ops.n, "N"), &get(&ops.s, "S"))?
            }
            Asserted::Kn => {
                let (t, s, n) = (get(&ops.t, "T"), get(&ops.s, "S"), get(&ops.n, "N"));
                is_kn_structure(g, rho, &t, &s, &n)?.report
            }
            Asserted::Kdn => {
                let (t, s, n) = (get(&ops.t, "T"), get(&ops.s, "S"), get(&ops.n, "N"));
                is_kdn_structure(g, rho, &t, &s, &n)?.report
            }
            Asserted::Compatible => {
                are_compatible_kupershmidt(g, rho, &get(&ops.t1, "T1"), &get(&ops.t2, "T2"))?
            }
            Asserted::RMatrix => is_r_matrix(g, &pi()?)?,
            Asserted::Rmn => is_r_matrix_nijenhuis(g, &pi()?, &get(&ops.n, "N"))?.report,
            Asserted::Rbn => is_rbn_structure(g, &get(&ops.r, "R"), &get(&ops.n, "N"))?.report,
            Asserted::Skew => is_skew_endomorphism(g, &get(&ops.r, "R"), &form())?,
            Asserted::FormCompatible => check_bilinear_form(g, &form())?
                .merge(check_form_compatibility(g, &form(), &get(&ops.n, "N"))?),
        })
    }
}

pub fn list_catalog() -> Vec<&'static str> {
    NAMES.to_vec()
}

/// Builds and re-verifies a catalog entry.
pub fn get_entry(name: &str) -> Result<CatalogEntry> {
    let entry = match name {
        "abelian_1" => abelian(1),
        "abelian_2" => abelian(2),
        "abelian_3" => abelian(3),
        "aff1" => aff1(),
        "heis3" => heis3(),
        "sl2" => sl2(),
        _ => return Err(Error::UnknownEntry(name.to_string())),
    };
    entry.verify()?;
    Ok(entry)
}

fn m<R: AsRef<[i64]>>(rows: &[R]) -> Option<Matrix> {
    Some(Matrix::from_ints(rows))
}

fn bundle(
    name: &'static str,
    representation: RepChoice,
    operators: OperatorSet,
    asserts: &[Asserted],
) -> OperatorBundle {
    OperatorBundle {
        name,
        representation,
        operators,
        asserts: asserts.to_vec(),
    }
}

fn algebra(names: &[&str], brackets: &[((usize, usize), &[i64])]) -> LieAlgebra {
    let dim = names.len();
    let bracket = Bracket::from_upper(
        dim,
        brackets.iter().map(|&(ij, v)| (ij, Vector::from_ints(v))),
    )
    .expect("catalog table is well formed");
    LieAlgebra::new(names.iter().map(|s| s.to_string()).collect(), bracket)
        .expect("catalog bracket satisfies Jacobi")
}

fn entry(
    name: &'static str,
    algebra: LieAlgebra,
    bilinear_form: Option<BilinearForm>,
    bundles: Vec<OperatorBundle>,
    provenance: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        adjoint: algebra.adjoint(),
        coadjoint: algebra.coadjoint(),
        algebra,
        bilinear_form,
        bundles,
        provenance,
    }
}

fn abelian(n: usize) -> CatalogEntry {
    use Asserted::*;
    let name = ["abelian_1", "abelian_2", "abelian_3"][n - 1];
    let g = LieAlgebra::abelian(n);
    let id = Matrix::identity(n);
    let mut bundles = vec![bundle(
        "identity",
        RepChoice::Adjoint,
        OperatorSet {
            n: Some(id.clone()),
            s: Some(id.clone()),
            t: Some(id.clone()),
            r: Some(id.clone()),
            ..Default::default()
        },
        &[
            Nijenhuis,
            RotaBaxter,
            Kupershmidt,
            NijenhuisPair,
            Kn,
            Kdn,
            Rbn,
            FormCompatible,
        ],
    )];
    if n >= 2 {
        let mut shear = Matrix::identity(n);
        shear.set(0, 1, 1.into());
        bundles.push(bundle(
            "shear",
            RepChoice::Adjoint,
            OperatorSet {
                n: Some(shear.clone()),
                r: Some(shear),
                ..Default::default()
            },
            &[Nijenhuis, RotaBaxter],
        ));
    }
    if n == 3 {
        let skew = m(&[[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]);
        bundles.push(bundle(
            "skew_rbn",
            RepChoice::Adjoint,
            OperatorSet {
                r: skew.clone(),
                n: Some(id.clone()),
                ..Default::default()
            },
            &[Rbn, Skew, FormCompatible],
        ));
        bundles.push(bundle(
            "skew_rmn",
            RepChoice::Coadjoint,
            OperatorSet {
                pi_sharp: skew,
                n: Some(id.clone()),
                ..Default::default()
            },
            &[RMatrix, Rmn, FormCompatible],
        ));
    }
    entry(
        name,
        g,
        Some(BilinearForm::identity(n)),
        bundles,
        "every operator on an abelian algebra is Nijenhuis, Rota-Baxter and Kupershmidt for the zero action",
    )
}

fn aff1() -> CatalogEntry {
    use Asserted::*;
    let g = algebra(&["e1", "e2"], &[((0, 1), &[0, 1])]);
    let proj = m(&[[1, 0], [0, 0]]);
    let sympl = m(&[[0, 1], [-1, 0]]);
    let bundles = vec![
        bundle(
            "rota_baxter",
            RepChoice::Adjoint,
            OperatorSet {
                r: proj.clone(),
                ..Default::default()
            },
            &[RotaBaxter],
        ),
        bundle(
            "idempotent_pair",
            RepChoice::Adjoint,
            OperatorSet {
                n: proj.clone(),
                s: proj.clone(),
                ..Default::default()
            },
            &[Nijenhuis, NijenhuisPair],
        ),
        bundle(
            "kn_projection",
            RepChoice::Adjoint,
            OperatorSet {
                t: proj.clone(),
                s: m(&[[1, 0], [0, 0]]),
                n: m(&[[1, 1], [0, 0]]),
                ..Default::default()
            },
            &[Kupershmidt, NijenhuisPair, Kn],
        ),
        bundle(
            "kdn_shear",
            RepChoice::Adjoint,
            OperatorSet {
                t: proj.clone(),
                s: m(&[[1, 0], [1, 0]]),
                n: m(&[[1, -1], [0, 0]]),
                ..Default::default()
            },
            &[Kupershmidt, DualNijenhuisPair, Kdn],
        ),
        bundle(
            "kn_two_sided",
            RepChoice::Adjoint,
            OperatorSet {
                t: proj,
                s: m(&[[1, 0], [1, 1]]),
                n: m(&[[1, 0], [0, 0]]),
                ..Default::default()
            },
            &[Kn, Kdn],
        ),
        bundle(
            "kn_invertible",
            RepChoice::Coadjoint,
            OperatorSet {
                t: sympl.clone(),
                s: m(&[[0, 1], [0, 0]]),
                n: m(&[[0, 0], [-1, 0]]),
                pi_sharp: sympl.clone(),
                ..Default::default()
            },
            &[Kupershmidt, RMatrix, Kn, Kdn],
        ),
        bundle(
            "kn_unipotent",
            RepChoice::Coadjoint,
            OperatorSet {
                t: sympl.clone(),
                s: m(&[[1, 1], [0, 1]]),
                n: m(&[[1, 0], [-1, 1]]),
                ..Default::default()
            },
            &[Kn, Kdn],
        ),
        bundle(
            "compatible_invertible",
            RepChoice::Coadjoint,
            OperatorSet {
                t1: sympl,
                t2: m(&[[0, 1], [-1, -1]]),
                ..Default::default()
            },
            &[Compatible],
        ),
    ];
    entry(
        "aff1",
        g,
        None,
        bundles,
        "operators from exhaustive search over entries in {-1, 0, 1}",
    )
}

fn heis3() -> CatalogEntry {
    use Asserted::*;
    let g = algebra(&["e1", "e2", "e3"], &[((0, 1), &[0, 0, 1])]);
    let bundles = vec![
        bundle(
            "kn_rank2",
            RepChoice::Adjoint,
            OperatorSet {
                t: m(&[[0, 0, 0], [0, 1, 0], [1, 0, 0]]),
                s: m(&[[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
                n: m(&[[0, 0, 0], [0, 0, 0], [0, 1, 0]]),
                ..Default::default()
            },
            &[Kupershmidt, Kn, Kdn],
        ),
        bundle(
            "kn_coadjoint",
            RepChoice::Coadjoint,
            OperatorSet {
                t: m(&[[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
                s: m(&[[0, 0, 0], [0, 0, 1], [0, 0, 0]]),
                n: m(&[[0, 0, 0], [0, 0, 0], [0, 1, 0]]),
                ..Default::default()
            },
            &[Kupershmidt, Kn, Kdn],
        ),
    ];
    entry(
        "heis3",
        g,
        None,
        bundles,
        "operators from exhaustive search over entries in {0, 1}",
    )
}

fn sl2() -> CatalogEntry {
    use Asserted::*;
    let g = algebra(
        &["h", "e", "f"],
        &[
            ((0, 1), &[0, 2, 0]),
            ((0, 2), &[0, 0, -2]),
            ((1, 2), &[1, 0, 0]),
        ],
    );
    let killing = BilinearForm::killing(&g);
    let n = m(&[[1, 0, 0], [0, 1, 1], [0, 0, 1]]);
    let bundles = vec![
        bundle(
            "rbn_skew",
            RepChoice::Adjoint,
            OperatorSet {
                r: m(&[[0, 0, 4], [-8, 0, 0], [0, 0, 0]]),
                n: n.clone(),
                ..Default::default()
            },
            &[RotaBaxter, Nijenhuis, Rbn, Skew, FormCompatible],
        ),
        bundle(
            "rmn_triangular",
            RepChoice::Coadjoint,
            OperatorSet {
                pi_sharp: m(&[[0, 1, 0], [-1, 0, 0], [0, 0, 0]]),
                n,
                ..Default::default()
            },
            &[RMatrix, Rmn, FormCompatible],
        ),
    ];
    entry(
        "sl2",
        g,
        Some(killing),
        bundles,
        "triangular r-matrix found by grid search; R is pi_sharp composed with the Killing form",
    )
}
