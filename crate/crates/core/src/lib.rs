//! Exact-arithmetic toolkit for Nijenhuis, Rota-Baxter and Kupershmidt
//! operators on finite-dimensional Lie algebras with representations.

pub mod catalog;
pub mod deformation;
pub mod document;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod operators;
pub mod par;
pub mod rep;
pub mod report;
pub mod search;
pub mod structures;

pub use catalog::{get_entry, list_catalog, CatalogEntry};
pub use deformation::DeformationPair;
pub use document::Document;
pub use error::{Error, Result};
pub use lie::{Bracket, LieAlgebra};
pub use linalg::{Matrix, Rational, Vector};
pub use par::Execution;
pub use rep::Representation;
pub use report::{CheckReport, Defect, Witness};
pub use search::{grid_search, OperatorSet, SearchConfig, SearchKind};
pub use structures::{BilinearForm, Bivector, StructureVerdict};
