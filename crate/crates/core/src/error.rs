use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("linear system has no solution")]
    NoSolution,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid structure table: {0}")]
    InvalidTable(String),

    #[error("bracket fails the Jacobi identity\n{0}")]
    NotLie(CheckReport),

    #[error("action is not a representation\n{0}")]
    NotRepresentation(CheckReport),

    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// A hypothesis of a composite check or construction does not hold.
    #[error("precondition failed: {hypothesis}\n{report}")]
    Precondition {
        hypothesis: String,
        report: CheckReport,
    },

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("unknown operator bundle {bundle:?} in catalog entry {entry:?}")]
    UnknownBundle { entry: String, bundle: String },

    #[error("catalog entry {entry:?}: bundle {bundle:?} fails asserted {kind}\n{report}")]
    CatalogAssertion {
        entry: String,
        bundle: String,
        kind: String,
        report: CheckReport,
    },

    #[error("search space of {count} candidates exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: u128 },

    #[error("unknown search kind {0:?}")]
    UnknownKind(String),

    #[error("empty search grid")]
    EmptyGrid,

    #[error("malformed document: {0}")]
    Parse(String),

    #[error("document lacks the {0} stanza")]
    MissingStanza(String),
}

impl Error {
    pub(crate) fn precondition(hypothesis: impl Into<String>, report: CheckReport) -> Self {
        Error::Precondition {
            hypothesis: hypothesis.into(),
            report,
        }
    }
}
