//! Exhaustive enumeration of operators with entries drawn from a finite grid.
//!
//! Candidates are ordered lexicographically by their entries, slot layout
//! being the operators in the order they are named by the kind (row-major
//! within each matrix). Compound kinds are enumerated in stages, filtering
//! each operator by its own predicate first; the result is the same set a
//! flat enumeration would produce.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational};
use crate::operators::{
    is_kupershmidt, is_nijenhuis_pair, kupershmidt_report, nijenhuis_report, rota_baxter_report,
};
use crate::par::{filter_map_range, Execution};
use crate::rep::Representation;
use crate::structures::{compatibility_report, is_kn_structure, is_r_matrix, Bivector};

pub const DEFAULT_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchKind {
    Nijenhuis,
    RotaBaxter,
    Kupershmidt,
    NijenhuisPair,
    KnStructure,
    RMatrix,
    CompatiblePair,
}

impl SearchKind {
    pub const ALL: [SearchKind; 7] = [
        SearchKind::Nijenhuis,
        SearchKind::RotaBaxter,
        SearchKind::Kupershmidt,
        SearchKind::NijenhuisPair,
        SearchKind::KnStructure,
        SearchKind::RMatrix,
        SearchKind::CompatiblePair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Nijenhuis => "nijenhuis",
            SearchKind::RotaBaxter => "rota_baxter",
            SearchKind::Kupershmidt => "kupershmidt",
            SearchKind::NijenhuisPair => "nijenhuis_pair",
            SearchKind::KnStructure => "kn_structure",
            SearchKind::RMatrix => "r_matrix",
            SearchKind::CompatiblePair => "compatible_pair",
        }
    }

    /// Number of free entries for an algebra of dimension `n` acting on a
    /// module of dimension `m`.
    pub fn slots(self, n: usize, m: usize) -> usize {
        match self {
            SearchKind::Nijenhuis | SearchKind::RotaBaxter => n * n,
            SearchKind::Kupershmidt => n * m,
            SearchKind::NijenhuisPair => n * n + m * m,
            SearchKind::KnStructure => n * m + m * m + n * n,
            SearchKind::RMatrix => n * (n.saturating_sub(1)) / 2,
            SearchKind::CompatiblePair => 2 * n * m,
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SearchKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub cap: u128,
    pub execution: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            execution: Execution::default(),
        }
    }
}

/// One search hit; only the operators the kind is about are set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSet {
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Matrix>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Matrix>,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Matrix>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Matrix>,
    #[serde(rename = "T1", default, skip_serializing_if = "Option::is_none")]
    pub t1: Option<Matrix>,
    #[serde(rename = "T2", default, skip_serializing_if = "Option::is_none")]
    pub t2: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi_sharp: Option<Matrix>,
}

/// Sorted, deduplicated entry set.
fn normalize_grid(grid: &[Rational]) -> Result<Vec<Rational>> {
    let mut g = grid.to_vec();
    g.sort();
    g.dedup();
    if g.is_empty() {
        return Err(Error::EmptyGrid);
    }
    Ok(g)
}

/// `base^slots`, saturating.
pub fn candidate_count(base: usize, slots: usize) -> u128 {
    let mut count: u128 = 1;
    for _ in 0..slots {
        count = count.saturating_mul(base as u128);
    }
    count
}

/// Mixed-radix decoding, most significant digit first.
struct Enumerator<'a> {
    grid: &'a [Rational],
    rows: usize,
    cols: usize,
}

impl<'a> Enumerator<'a> {
    fn count(&self) -> u64 {
        candidate_count(self.grid.len(), self.rows * self.cols).min(u64::MAX as u128) as u64
    }

    fn matrix(&self, mut index: u64) -> Matrix {
        let len = self.rows * self.cols;
        let base = self.grid.len() as u64;
        let mut entries = vec![Rational::zero(); len];
        for slot in (0..len).rev() {
            entries[slot] = self.grid[(index % base) as usize].clone();
            index /= base;
        }
        Matrix::from_entries(self.rows, self.cols, entries).expect("entry count matches shape")
    }

    fn filter(&self, exec: Execution, keep: impl Fn(&Matrix) -> bool + Sync + Send) -> Vec<Matrix> {
        filter_map_range(exec, self.count(), |i| {
            let m = self.matrix(i);
            keep(&m).then_some(m)
        })
    }
}

fn antisymmetric_candidates(grid: &[Rational], n: usize, exec: Execution) -> Vec<Matrix> {
    let slots = n * n.saturating_sub(1) / 2;
    let upper = Enumerator {
        grid,
        rows: 1,
        cols: slots,
    };
    filter_map_range(exec, upper.count(), |idx| {
        let flat = upper.matrix(idx);
        let mut m = Matrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                let v = flat.get(0, k).clone();
                m.set(j, i, -&v);
                m.set(i, j, v);
                k += 1;
            }
        }
        Some(m)
    })
}

/// All `(N, S)` Nijenhuis pairs, ordered by `(N, S)`.
fn nijenhuis_pairs(
    g: &LieAlgebra,
    rho: &Representation,
    grid: &[Rational],
    exec: Execution,
) -> Vec<(Matrix, Matrix)> {
    let (n, m) = (g.dim(), rho.module_dim());
    let ns = Enumerator {
        grid,
        rows: n,
        cols: n,
    }
    .filter(exec, |c| nijenhuis_report(g, c).passed());
    let ss = Enumerator {
        grid,
        rows: m,
        cols: m,
    };
    ns.iter()
        .flat_map(|nn| {
            ss.filter(exec, |s| {
                is_nijenhuis_pair(g, rho, nn, s).is_ok_and(|r| r.passed())
            })
            .into_iter()
            .map(move |s| (nn.clone(), s))
        })
        .collect()
}

/// Every candidate over `grid` satisfying the predicate of `kind`.
///
/// Fails with [`Error::CapExceeded`] when `|grid|^slots` exceeds the cap
/// and with [`Error::NotRepresentation`] when `rho` is invalid.
pub fn grid_search(
    g: &LieAlgebra,
    rho: &Representation,
    kind: SearchKind,
    grid: &[Rational],
    config: SearchConfig,
) -> Result<Vec<OperatorSet>> {
    let grid = normalize_grid(grid)?;
    let (n, m) = (g.dim(), rho.module_dim());
    rho.require_shape(n, m)?;
    let count = candidate_count(grid.len(), kind.slots(n, m));
    if count > config.cap {
        return Err(Error::CapExceeded {
            count,
            cap: config.cap,
        });
    }
    // Validates rho once; the per-candidate checks below skip it.
    is_kupershmidt(g, rho, &Matrix::zeros(n, m))?;
    let exec = config.execution;
    let square = Enumerator {
        grid: &grid,
        rows: n,
        cols: n,
    };
    let module_maps = Enumerator {
        grid: &grid,
        rows: n,
        cols: m,
    };
    let kupershmidt = || module_maps.filter(exec, |t| kupershmidt_report(g, rho, t).passed());

    let hits = match kind {
        SearchKind::Nijenhuis => square
            .filter(exec, |c| nijenhuis_report(g, c).passed())
            .into_iter()
            .map(|c| OperatorSet {
                n: Some(c),
                ..Default::default()
            })
            .collect(),
        SearchKind::RotaBaxter => square
            .filter(exec, |c| rota_baxter_report(g, c).passed())
            .into_iter()
            .map(|c| OperatorSet {
                r: Some(c),
                ..Default::default()
            })
            .collect(),
        SearchKind::Kupershmidt => kupershmidt()
            .into_iter()
            .map(|c| OperatorSet {
                t: Some(c),
                ..Default::default()
            })
            .collect(),
        SearchKind::NijenhuisPair => nijenhuis_pairs(g, rho, &grid, exec)
            .into_iter()
            .map(|(nn, s)| OperatorSet {
                n: Some(nn),
                s: Some(s),
                ..Default::default()
            })
            .collect(),
        SearchKind::KnStructure => {
            let ts = kupershmidt();
            let mut pairs = nijenhuis_pairs(g, rho, &grid, exec);
            pairs.sort_by(|a, b| {
                (a.1.entries(), a.0.entries()).cmp(&(b.1.entries(), b.0.entries()))
            });
            let combos: Vec<(usize, usize)> = (0..ts.len())
                .flat_map(|i| (0..pairs.len()).map(move |j| (i, j)))
                .collect();
            filter_map_range(exec, combos.len() as u64, |idx| {
                let (i, j) = combos[idx as usize];
                let (t, (nn, s)) = (&ts[i], &pairs[j]);
                let ok = is_kn_structure(g, rho, t, s, nn).is_ok_and(|v| v.passed());
                ok.then(|| OperatorSet {
                    t: Some(t.clone()),
                    s: Some(s.clone()),
                    n: Some(nn.clone()),
                    ..Default::default()
                })
            })
        }
        SearchKind::RMatrix => antisymmetric_candidates(&grid, n, exec)
            .into_iter()
            .filter(|c| {
                is_r_matrix(
                    g,
                    &Bivector::new(c.clone()).expect("antisymmetric by construction"),
                )
                .is_ok_and(|r| r.passed())
            })
            .map(|c| OperatorSet {
                pi_sharp: Some(c),
                ..Default::default()
            })
            .collect(),
        SearchKind::CompatiblePair => {
            let ts = kupershmidt();
            let k = ts.len() as u64;
            filter_map_range(exec, k * k, |idx| {
                let (a, b) = (&ts[(idx / k) as usize], &ts[(idx % k) as usize]);
                compatibility_report(g, rho, a, b)
                    .passed()
                    .then(|| OperatorSet {
                        t1: Some(a.clone()),
                        t2: Some(b.clone()),
                        ..Default::default()
                    })
            })
        }
    };
    Ok(hits)
}
