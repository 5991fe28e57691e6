//! Scalar and vector linear systems, the columns condition, and the system
//! file format.
//!
//! A [`VectorSystem`] holds one integer matrix per coordinate. The `i`-th
//! coordinate of every point in a solution must satisfy the `i`-th matrix.
//! Every matrix has the same number `k` of columns; a variable that a
//! coordinate does not constrain gets an all-zero column there (a dummy).

use std::collections::HashSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{RadoError, Result};
use crate::exactmath::{in_span, rational, rref, RMatrix, RVector};

/// Default bound on `k` for [`check_columns_condition`].
pub const DEFAULT_COLUMN_LIMIT: usize = 12;

/// Homogeneous integer system `A x = 0`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScalarSystem {
    rows: Vec<Vec<i64>>,
}

impl ScalarSystem {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(RadoError::InvalidArgument("system needs at least one row".into()));
        }
        let k = rows[0].len();
        if k == 0 {
            return Err(RadoError::InvalidArgument("system needs at least one column".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != k) {
            return Err(RadoError::DimensionMismatch {
                expected: k,
                found: bad.len(),
            });
        }
        Ok(ScalarSystem { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    pub fn num_variables(&self) -> usize {
        self.rows[0].len()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn matrix(&self) -> RMatrix {
        RMatrix::from_integer_rows(&self.rows).expect("rows have equal length")
    }

    pub fn rank(&self) -> usize {
        crate::exactmath::rank(&self.matrix())
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.num_equations()
    }

    /// Whether `x` satisfies every equation exactly.
    pub fn is_solution(&self, x: &[i64]) -> bool {
        x.len() == self.num_variables()
            && self
                .rows
                .iter()
                .all(|r| r.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum::<i128>() == 0)
    }
}

/// One [`ScalarSystem`] per coordinate, all with `k` columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorSystem {
    k: usize,
    systems: Vec<ScalarSystem>,
}

impl VectorSystem {
    pub fn new(systems: Vec<ScalarSystem>) -> Result<Self> {
        let Some(first) = systems.first() else {
            return Err(RadoError::InvalidArgument("vector system needs d >= 1".into()));
        };
        let k = first.num_variables();
        for (i, s) in systems.iter().enumerate() {
            if s.num_variables() != k {
                return Err(RadoError::Parse(format!(
                    "coordinate system {i} has {} columns, expected k = {k}",
                    s.num_variables()
                )));
            }
        }
        Ok(VectorSystem { k, systems })
    }

    /// The same system in every one of `d` coordinates.
    pub fn diagonal(system: ScalarSystem, d: usize) -> Result<Self> {
        Self::new(vec![system; d])
    }

    pub fn d(&self) -> usize {
        self.systems.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coordinate(&self, i: usize) -> &ScalarSystem {
        &self.systems[i]
    }

    pub fn coordinate_systems(&self) -> &[ScalarSystem] {
        &self.systems
    }

    pub fn is_diagonal(&self) -> bool {
        self.systems.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Serialize, Deserialize)]
struct SystemFile {
    d: usize,
    k: usize,
    systems: Vec<SystemRows>,
}

#[derive(Serialize, Deserialize)]
struct SystemRows {
    rows: Vec<Vec<i64>>,
}

/// Parses the JSON system format: `{"d": .., "k": .., "systems": [{"rows": [[..]]}, ..]}`.
pub fn parse_system(text: &str) -> Result<VectorSystem> {
    let file: SystemFile = serde_json::from_str(text).map_err(|e| RadoError::Parse(e.to_string()))?;
    if file.d == 0 {
        return Err(RadoError::Parse("d must be at least 1".into()));
    }
    if file.systems.len() != file.d {
        return Err(RadoError::Parse(format!(
            "d = {} but {} coordinate systems given",
            file.d,
            file.systems.len()
        )));
    }
    let mut systems = Vec::with_capacity(file.d);
    for (i, s) in file.systems.into_iter().enumerate() {
        if s.rows.is_empty() {
            return Err(RadoError::Parse(format!("coordinate system {i} has no rows")));
        }
        if let Some(r) = s.rows.iter().find(|r| r.len() != file.k) {
            return Err(RadoError::Parse(format!(
                "coordinate system {i} has a row with {} columns, expected k = {}",
                r.len(),
                file.k
            )));
        }
        systems.push(ScalarSystem::new(s.rows).map_err(|e| RadoError::Parse(format!("coordinate system {i}: {e}")))?);
    }
    VectorSystem::new(systems)
}

/// Canonical JSON form of a system (fixed key order, pretty-printed).
pub fn serialize_system(v: &VectorSystem) -> String {
    let file = SystemFile {
        d: v.d(),
        k: v.k(),
        systems: v.systems.iter().map(|s| SystemRows { rows: s.rows.clone() }).collect(),
    };
    serde_json::to_string_pretty(&file).expect("system serializes")
}

/// An ordered partition of column indices into blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnsPartition {
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnsReport {
    pub satisfies: bool,
    pub witness: Option<ColumnsPartition>,
    pub rank: usize,
    pub full_rank: bool,
}

fn int_vec(xs: &[i64]) -> RVector {
    xs.iter().map(|&x| rational(x)).collect()
}

/// Decides the columns condition with the default column limit.
pub fn check_columns_condition(s: &ScalarSystem) -> Result<ColumnsReport> {
    check_columns_condition_with_limit(s, DEFAULT_COLUMN_LIMIT)
}

/// Decides the columns condition by search over sets of used columns.
///
/// From a state `U` (columns already placed), every remaining column lying
/// in `span(U)` can be appended as a singleton block without loss of
/// generality; after that closure, some block of remaining columns must sum
/// into `span(U)`. Failing states are memoized, so the search visits at most
/// `2^k` states.
pub fn check_columns_condition_with_limit(s: &ScalarSystem, limit: usize) -> Result<ColumnsReport> {
    let k = s.num_variables();
    if k > limit || k > 31 {
        return Err(RadoError::TooManyColumns {
            k,
            limit: limit.min(31),
        });
    }
    let columns: Vec<Vec<i64>> = (0..k).map(|j| s.column(j)).collect();
    let ell = s.num_equations();

    let full = (1u32 << k) - 1;
    let mut sums = vec![vec![0i64; ell]; 1 << k];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let prev = mask & (mask - 1);
        sums[mask as usize] = sums[prev as usize]
            .iter()
            .zip(&columns[low])
            .map(|(a, b)| a + b)
            .collect();
    }

    let search = ColumnsSearch {
        columns: &columns,
        sums: &sums,
        full,
    };
    let mut failed = HashSet::new();
    let mut blocks = Vec::new();
    let satisfies = search.solve(0, &mut blocks, &mut failed)?;
    let rank = s.rank();
    Ok(ColumnsReport {
        satisfies,
        witness: satisfies.then_some(ColumnsPartition { blocks }),
        rank,
        full_rank: rank == ell,
    })
}

struct ColumnsSearch<'a> {
    columns: &'a [Vec<i64>],
    sums: &'a [Vec<i64>],
    full: u32,
}

impl ColumnsSearch<'_> {
    fn basis(&self, used: u32) -> Vec<RVector> {
        (0..self.columns.len())
            .filter(|&j| used >> j & 1 == 1)
            .map(|j| int_vec(&self.columns[j]))
            .collect()
    }

    fn solve(&self, used: u32, blocks: &mut Vec<Vec<usize>>, failed: &mut HashSet<u32>) -> Result<bool> {
        if used == self.full {
            return Ok(true);
        }
        if failed.contains(&used) {
            return Ok(false);
        }
        let depth = blocks.len();
        let basis = self.basis(used);

        // Closure: remaining columns already in the span become singletons.
        let mut closed = used;
        for j in 0..self.columns.len() {
            if closed >> j & 1 == 0 && in_span(&int_vec(&self.columns[j]), &basis)? {
                blocks.push(vec![j]);
                closed |= 1 << j;
            }
        }
        if closed != used {
            if self.solve(closed, blocks, failed)? {
                return Ok(true);
            }
        } else {
            let rest = self.full & !used;
            let mut sub = 0u32;
            loop {
                sub = sub.wrapping_sub(rest) & rest;
                if sub == 0 {
                    break;
                }
                // Singletons were ruled out by the closure step.
                if sub.count_ones() >= 2 {
                    let sum = &self.sums[sub as usize];
                    let ok = if used == 0 {
                        sum.iter().all(Zero::is_zero)
                    } else {
                        in_span(&int_vec(sum), &basis)?
                    };
                    if ok {
                        blocks.push(bits(sub));
                        if self.solve(used | sub, blocks, failed)? {
                            return Ok(true);
                        }
                        blocks.truncate(depth);
                    }
                }
            }
        }
        blocks.truncate(depth);
        failed.insert(used);
        Ok(false)
    }
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|&j| mask >> j & 1 == 1).collect()
}

/// Checks an explicit ordered partition against the columns condition.
pub fn verify_partition(s: &ScalarSystem, p: &ColumnsPartition) -> Result<bool> {
    let k = s.num_variables();
    let mut seen = vec![false; k];
    for block in &p.blocks {
        if block.is_empty() {
            return Err(RadoError::MalformedPartition("empty block".into()));
        }
        for &j in block {
            if j >= k {
                return Err(RadoError::MalformedPartition(format!("column {j} out of range 0..{k}")));
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(RadoError::MalformedPartition(format!("column {j} appears twice")));
            }
        }
    }
    if let Some(j) = seen.iter().position(|&x| !x) {
        return Err(RadoError::MalformedPartition(format!("column {j} not covered")));
    }

    let mut earlier: Vec<RVector> = Vec::new();
    for (b, block) in p.blocks.iter().enumerate() {
        let mut sum = vec![0i64; s.num_equations()];
        for &j in block {
            for (acc, x) in sum.iter_mut().zip(s.column(j)) {
                *acc += x;
            }
        }
        let ok = if b == 0 {
            sum.iter().all(|&x| x == 0)
        } else {
            in_span(&int_vec(&sum), &earlier)?
        };
        if !ok {
            return Ok(false);
        }
        earlier.extend(block.iter().map(|&j| int_vec(&s.column(j))));
    }
    Ok(true)
}

/// Rank and free (non-pivot) columns of one coordinate matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    pub rank: usize,
    pub free_columns: Vec<usize>,
}

pub fn rank_profile(v: &VectorSystem) -> Vec<RankProfile> {
    v.systems
        .iter()
        .map(|s| {
            let r = rref(&s.matrix());
            RankProfile {
                rank: r.rank,
                free_columns: r.free_columns(),
            }
        })
        .collect()
}

/// Exponent `sum_i (k - rank(A_i))` governing solution counts in `[1,n]^d`.
pub fn growth_exponent(v: &VectorSystem) -> usize {
    rank_profile(v).iter().map(|p| p.free_columns.len()).sum()
}
