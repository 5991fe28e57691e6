//! Exact Rado numbers for vector systems.
//!
//! A [`SearchProblem`] fixes a system, a number of colors and the mask of
//! points that must share a color. For a box side `n` the problem becomes a
//! hypergraph on `[1,n]^d` ([`ConstraintSet`]): one hyperedge per masked
//! point set of a solution tuple. A coloring avoids the system exactly when
//! no hyperedge is monochromatic; [`find_avoiding_coloring`] searches for such
//! a coloring and [`rado_number`] scans `n` upward for the first box where
//! none exists.

mod cnf;
mod engine;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use cnf::{cnf_from_constraints, decode_model, export_dimacs, parse_dimacs, solve_cnf, Cnf};
pub use engine::{find_avoiding_coloring, rado_number, RadoNumber, SearchOutcome, SearchStatus};

use crate::error::{RadoError, Result};
use crate::lattice::{self, index_of_point, point_of_index, Coloring, Mask, DEFAULT_BUDGET};
use crate::systems::VectorSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegeneracyFilter {
    #[default]
    All,
    NondegenerateOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistinctFilter {
    #[default]
    AllowRepeats,
    MaskedPointsDistinct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchProblem {
    pub system: VectorSystem,
    pub r: usize,
    pub mask: Mask,
    pub degeneracy: DegeneracyFilter,
    pub distinct: DistinctFilter,
}

impl SearchProblem {
    pub fn new(system: VectorSystem, r: usize, mask: Mask) -> Result<Self> {
        if !(1..=32).contains(&r) {
            return Err(RadoError::InvalidArgument(format!("color count {r} outside 1..=32")));
        }
        if let Some(&j) = mask.indices().iter().find(|&&j| j >= system.k()) {
            return Err(RadoError::InvalidArgument(format!(
                "mask index {j} out of range 0..{}",
                system.k()
            )));
        }
        Ok(SearchProblem {
            system,
            r,
            mask,
            degeneracy: DegeneracyFilter::All,
            distinct: DistinctFilter::AllowRepeats,
        })
    }

    pub fn with_degeneracy(mut self, f: DegeneracyFilter) -> Self {
        self.degeneracy = f;
        self
    }

    pub fn with_distinct(mut self, f: DistinctFilter) -> Self {
        self.distinct = f;
        self
    }

    pub fn d(&self) -> usize {
        self.system.d()
    }
}

/// Knobs that change cost, never answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub threads: usize,
    pub budget: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: 1,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Hyperedges over `[1,n]^d`, as sorted lexicographic point indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSet {
    pub n: usize,
    pub d: usize,
    /// Masked point tuples that survived the filters, before merging.
    pub raw_count: usize,
    /// Distinct point sets before dominated sets were removed.
    pub distinct_count: usize,
    /// Inclusion-minimal point sets, sorted.
    pub constraints: Vec<Vec<u32>>,
}

impl ConstraintSet {
    pub fn num_points(&self) -> usize {
        self.n.pow(self.d as u32)
    }

    pub fn point(&self, idx: u32) -> Vec<i64> {
        point_of_index(idx as usize, self.n, self.d)
    }

    pub fn points_of(&self, c: &[u32]) -> Vec<Vec<i64>> {
        c.iter().map(|&i| self.point(i)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }
}

/// Builds the hyperedges of `p` in `[1,n]^d`.
///
/// A point set is a hyperedge when some full solution tuple (any values of
/// the unmasked variables) projects onto it and passes the filters. Both
/// filters depend only on the masked points, so each coordinate's solutions
/// are projected onto the mask before the product is taken. Sets containing
/// another hyperedge are dropped.
pub fn build_constraints(p: &SearchProblem, n: usize, budget: u128) -> Result<ConstraintSet> {
    let d = p.d();
    if n.checked_pow(d as u32).is_none_or(|x| x > u32::MAX as usize) {
        return Err(RadoError::Overflow("n^d exceeds the point index range".into()));
    }
    let lists = lattice::masked_lists(&p.system, n as i64, &p.mask, budget)?;
    let mut raw_count = 0usize;
    let mut sets: HashSet<Vec<u32>> = HashSet::new();
    lattice::visit_masked_tuples(&lists, p.mask.len(), |pts, _| {
        let mut idx: Vec<u32> = pts
            .iter()
            .map(|q| index_of_point(q, n).expect("solutions lie in the box") as u32)
            .collect();
        idx.sort_unstable();
        let before = idx.len();
        idx.dedup();
        if p.distinct == DistinctFilter::MaskedPointsDistinct && idx.len() != before {
            return true;
        }
        if p.degeneracy == DegeneracyFilter::NondegenerateOnly && lattice::points_degenerate(pts) {
            return true;
        }
        raw_count += 1;
        sets.insert(idx);
        true
    });
    let distinct_count = sets.len();
    let mut constraints: Vec<Vec<u32>> = sets
        .iter()
        .filter(|c| !has_proper_subset_in(c, &sets))
        .cloned()
        .collect();
    constraints.sort_unstable();
    Ok(ConstraintSet {
        n,
        d,
        raw_count,
        distinct_count,
        constraints,
    })
}

fn has_proper_subset_in(c: &[u32], sets: &HashSet<Vec<u32>>) -> bool {
    let s = c.len();
    if s <= 1 {
        return false;
    }
    if s > 20 {
        return sets
            .iter()
            .any(|o| o.len() < s && o.iter().all(|x| c.binary_search(x).is_ok()));
    }
    let full = (1u32 << s) - 1;
    (1..full).any(|m| {
        let sub: Vec<u32> = (0..s).filter(|&j| m >> j & 1 == 1).map(|j| c[j]).collect();
        sets.contains(&sub)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub points: Vec<Vec<i64>>,
    pub color: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub passes: bool,
    pub n: usize,
    pub constraints_checked: usize,
    pub violation: Option<Violation>,
}

/// Checks that no hyperedge of `p` in `[1,w.n]^d` is monochromatic under `w`.
pub fn verify_witness(p: &SearchProblem, w: &Coloring, budget: u128) -> Result<WitnessReport> {
    if w.d != p.d() {
        return Err(RadoError::DimensionMismatch {
            expected: p.d(),
            found: w.d,
        });
    }
    w.validate()?;
    let cs = build_constraints(p, w.n, budget)?;
    Ok(check_coloring(&cs, w))
}

/// Same check against prebuilt constraints.
pub fn check_coloring(cs: &ConstraintSet, w: &Coloring) -> WitnessReport {
    let violation = cs.constraints.iter().find_map(|c| {
        let first = w.colors[c[0] as usize];
        c.iter().all(|&i| w.colors[i as usize] == first).then(|| Violation {
            points: cs.points_of(c),
            color: first,
        })
    });
    WitnessReport {
        passes: violation.is_none(),
        n: cs.n,
        constraints_checked: cs.constraints.len(),
        violation,
    }
}
