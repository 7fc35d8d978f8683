//! The JSON document shared by every command: an algebra stanza plus
//! optional representation, operators, deformation, bivector and
//! bilinear form stanzas. Rationals are `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::{CatalogEntry, RepChoice};
use crate::deformation::DeformationPair;
use crate::error::{Error, Result};
use crate::lie::{Bracket, LieAlgebra};
use crate::linalg::{Matrix, Rational, Vector};
use crate::rep::Representation;
use crate::search::OperatorSet;
use crate::structures::{BilinearForm, Bivector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: BTreeMap<usize, Rational>,
}

/// Sparse structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketStanza {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

impl BracketStanza {
    pub fn from_bracket(b: &Bracket, basis: Option<Vec<String>>) -> Self {
        let brackets = b
            .upper_entries()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(i, j, v)| BracketEntry {
                i,
                j,
                value: v
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect(),
            })
            .collect();
        Self {
            dim: b.dim(),
            basis,
            brackets,
        }
    }

    pub fn to_bracket(&self) -> Result<Bracket> {
        let n = self.dim;
        let mut entries = Vec::with_capacity(self.brackets.len());
        for e in &self.brackets {
            let mut v = Vector::zeros(n);
            for (&k, c) in &e.value {
                if k >= n {
                    return Err(Error::InvalidTable(format!(
                        "coefficient index {k} in [e{}, e{}] exceeds dimension {n}",
                        e.i, e.j
                    )));
                }
                v = &v + &Vector::basis(n, k).scale(c);
            }
            entries.push(((e.i, e.j), v));
        }
        Bracket::from_upper(n, entries)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedRepresentation {
    Adjoint,
    Coadjoint,
}

impl From<RepChoice> for NamedRepresentation {
    fn from(c: RepChoice) -> Self {
        match c {
            RepChoice::Adjoint => NamedRepresentation::Adjoint,
            RepChoice::Coadjoint => NamedRepresentation::Coadjoint,
        }
    }
}

/// Either `"adjoint"`, `"coadjoint"` or explicit action matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepresentationStanza {
    Named(NamedRepresentation),
    Explicit {
        module_dim: usize,
        matrices: Vec<Matrix>,
    },
}

impl RepresentationStanza {
    pub fn from_representation(rho: &Representation) -> Self {
        RepresentationStanza::Explicit {
            module_dim: rho.module_dim(),
            matrices: rho.matrices().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationStanza {
    pub omega: BracketStanza,
    pub varpi: RepresentationStanza,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BivectorStanza {
    pub pi_sharp: Matrix,
}

/// `gram` is the matrix of `B` on `g`; `b_sharp` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum FormStanza {
    Gram(Matrix),
    BSharp(Matrix),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub algebra: BracketStanza,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationStanza>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operators: Option<OperatorSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationStanza>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bivector: Option<BivectorStanza>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bilinear_form: Option<FormStanza>,
}

impl Document {
    pub fn new(g: &LieAlgebra) -> Self {
        Self {
            algebra: BracketStanza::from_bracket(g.bracket(), Some(g.basis_names().to_vec())),
            representation: None,
            operators: None,
            deformation: None,
            bivector: None,
            bilinear_form: None,
        }
    }

    /// Errors carry the line and column reported by the JSON parser.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical form, newline terminated.
    pub fn to_json(&self) -> String {
        let mut s = render_json(&serde_json::to_value(self).expect("document serializes"));
        s.push('\n');
        s
    }

    /// The structure constants, without the Jacobi check.
    pub fn bracket(&self) -> Result<Bracket> {
        let b = self.algebra.to_bracket()?;
        if let Some(names) = &self.algebra.basis {
            if names.len() != b.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "{} basis names for dimension {}",
                    names.len(),
                    b.dim()
                )));
            }
        }
        Ok(b)
    }

    pub fn algebra(&self) -> Result<LieAlgebra> {
        let b = self.bracket()?;
        match &self.algebra.basis {
            Some(names) => LieAlgebra::new(names.clone(), b),
            None => LieAlgebra::from_bracket(b),
        }
    }

    /// The representation stanza, defaulting to the adjoint action. Only
    /// shapes are checked here.
    pub fn representation(&self, g: &Bracket) -> Result<Representation> {
        resolve_representation(self.representation.as_ref(), g)
    }

    pub fn operators(&self) -> Result<&OperatorSet> {
        self.operators
            .as_ref()
            .ok_or_else(|| Error::MissingStanza("operators".into()))
    }

    /// Operator by stanza key: `N`, `S`, `T`, `R`, `T1` or `T2`.
    pub fn operator(&self, key: &str) -> Result<&Matrix> {
        let ops = self.operators()?;
        let slot = match key {
            "N" => &ops.n,
            "S" => &ops.s,
            "T" => &ops.t,
            "R" => &ops.r,
            "T1" => &ops.t1,
            "T2" => &ops.t2,
            _ => &None,
        };
        slot.as_ref()
            .ok_or_else(|| Error::MissingStanza(format!("operators.{key}")))
    }

    /// `bivector.pi_sharp`, falling back to `operators.pi_sharp`.
    pub fn bivector(&self) -> Result<Bivector> {
        let sharp = match (&self.bivector, &self.operators) {
            (Some(b), _) => b.pi_sharp.clone(),
            (
                None,
                Some(OperatorSet {
                    pi_sharp: Some(p), ..
                }),
            ) => p.clone(),
            _ => return Err(Error::MissingStanza("bivector".into())),
        };
        Bivector::new(sharp)
    }

    pub fn bilinear_form(&self) -> Result<BilinearForm> {
        match &self.bilinear_form {
            Some(FormStanza::Gram(g)) => BilinearForm::from_gram(g.clone()),
            Some(FormStanza::BSharp(b)) => BilinearForm::from_b_sharp(b.clone()),
            None => Err(Error::MissingStanza("bilinear_form".into())),
        }
    }

    pub fn deformation(&self, g: &Bracket) -> Result<DeformationPair> {
        let d = self
            .deformation
            .as_ref()
            .ok_or_else(|| Error::MissingStanza("deformation".into()))?;
        let omega = d.omega.to_bracket()?;
        if omega.dim() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "omega of dimension {} for an algebra of dimension {}",
                omega.dim(),
                g.dim()
            )));
        }
        let varpi = resolve_representation(Some(&d.varpi), g)?;
        DeformationPair::new(omega, varpi)
    }

    /// The document for a catalog entry, optionally carrying one bundle.
    pub fn from_catalog(entry: &CatalogEntry, bundle: Option<&str>) -> Result<Self> {
        let mut doc = Document::new(&entry.algebra);
        doc.bilinear_form = entry
            .bilinear_form
            .as_ref()
            .map(|b| FormStanza::Gram(b.gram().clone()));
        if let Some(name) = bundle {
            let b = entry.bundle(name)?;
            doc.representation = Some(RepresentationStanza::Named(b.representation.into()));
            let mut ops = b.operators.clone();
            doc.bivector = ops
                .pi_sharp
                .take()
                .map(|pi_sharp| BivectorStanza { pi_sharp });
            if ops != OperatorSet::default() {
                doc.operators = Some(ops);
            }
        }
        Ok(doc)
    }
}

/// Indented JSON that keeps arrays and objects of scalars on one line, so
/// matrices print row by row.
pub fn render_json(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(map) => map.values().all(|x| !x.is_array() && !x.is_object()),
        _ => true,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let scalar = |x: &Value| serde_json::to_string(x).expect("scalar serializes");
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Array(items) if is_flat(v) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        Value::Object(map) if is_flat(v) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, x)| format!("{}: {}", scalar(&Value::String(k.clone())), scalar(x)))
                .collect();
            out.push_str(&format!("{{{}}}", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                render(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&scalar(&Value::String(k.clone())));
                out.push_str(": ");
                render(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&scalar(v)),
    }
}

fn resolve_representation(
    stanza: Option<&RepresentationStanza>,
    g: &Bracket,
) -> Result<Representation> {
    match stanza {
        None | Some(RepresentationStanza::Named(NamedRepresentation::Adjoint)) => Ok(g.adjoint()),
        Some(RepresentationStanza::Named(NamedRepresentation::Coadjoint)) => Ok(g.coadjoint()),
        Some(RepresentationStanza::Explicit {
            module_dim,
            matrices,
        }) => {
            if matrices.len() != g.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "{} action matrices for an algebra of dimension {}",
                    matrices.len(),
                    g.dim()
                )));
            }
            Representation::from_matrices(*module_dim, matrices.clone())
        }
    }
}
