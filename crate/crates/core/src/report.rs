//! Verdicts with exhaustive witness lists.

use std::fmt;

use serde::Serialize;

use crate::linalg::{Matrix, Rational, Vector};

/// The nonzero residual of an identity at a particular basis tuple.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Defect {
    Scalar(Rational),
    Vector(Vector),
    Matrix(Matrix),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Scalar(q) => write!(f, "{q}"),
            Defect::Vector(v) => write!(f, "{v}"),
            Defect::Matrix(m) => write!(f, "{m}"),
        }
    }
}

/// A basis tuple where a named identity fails, with its defect.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub indices: Vec<usize>,
    pub defect: Defect,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {:?}: defect {}",
            self.condition, self.indices, self.defect
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn pass() -> Self {
        Self {
            verdict: true,
            witnesses: Vec::new(),
        }
    }

    pub fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        Self {
            verdict: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict
    }

    pub fn merge(mut self, other: CheckReport) -> Self {
        self.verdict &= other.verdict;
        self.witnesses.extend(other.witnesses);
        self
    }

    /// Whether the named condition produced no witness.
    pub fn holds(&self, condition: &str) -> bool {
        !self.witnesses.iter().any(|w| w.condition == condition)
    }

    pub fn failing_conditions(&self) -> Vec<&str> {
        let mut names: Vec<&str> = Vec::new();
        for w in &self.witnesses {
            if !names.contains(&w.condition.as_str()) {
                names.push(&w.condition);
            }
        }
        names
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.verdict {
            return write!(f, "PASS");
        }
        write!(f, "FAIL ({} witnesses)", self.witnesses.len())?;
        for w in &self.witnesses {
            write!(f, "\n  {w}")?;
        }
        Ok(())
    }
}

/// Accumulates witnesses, discarding zero defects.
#[derive(Default)]
pub(crate) struct Collector {
    witnesses: Vec<Witness>,
}

impl Collector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vector(&mut self, condition: &str, indices: &[usize], defect: Vector) {
        if !defect.is_zero() {
            self.push(condition, indices, Defect::Vector(defect));
        }
    }

    pub fn matrix(&mut self, condition: &str, indices: &[usize], defect: Matrix) {
        if !defect.is_zero() {
            self.push(condition, indices, Defect::Matrix(defect));
        }
    }

    pub fn push(&mut self, condition: &str, indices: &[usize], defect: Defect) {
        self.witnesses.push(Witness {
            condition: condition.to_string(),
            indices: indices.to_vec(),
            defect,
        });
    }

    pub fn finish(self) -> CheckReport {
        CheckReport::from_witnesses(self.witnesses)
    }
}
