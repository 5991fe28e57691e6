//! Solutions of vector systems inside the box `[1,n]^d`.
//!
//! Scalar solutions are enumerated by iterating the free variables of the
//! reduced echelon form over `[1,n]` and solving for the pivot variables, so
//! a coordinate of rank `l` costs `n^(k-l)` candidates. Vector solutions are
//! the Cartesian product of the per-coordinate solution sets.
//!
//! A point set is degenerate when all its points are positive multiples of a
//! single integer vector. Positive integer points with that property are
//! exactly the pairwise parallel ones: they share a primitive direction `u`
//! (the point divided by the gcd of its coordinates), and each point is then
//! an integer multiple of `u`. The classifier tests every point against the
//! primitive direction of the first.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{RadoError, Result};
use crate::exactmath::rref;
use crate::systems::{ScalarSystem, VectorSystem};

/// Default cap on enumerated candidates.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// A point of `(Z+)^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point(pub Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(RadoError::InvalidArgument("point needs at least one coordinate".into()));
        }
        if let Some(&c) = coords.iter().find(|&&c| c < 1) {
            return Err(RadoError::InvalidArgument(format!(
                "point coordinate {c} is not positive"
            )));
        }
        Ok(Point(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

/// A `d x k` matrix whose columns are the solution points and whose `i`-th
/// row solves the `i`-th coordinate system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionTuple {
    rows: Vec<Vec<i64>>,
}

impl SolutionTuple {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        SolutionTuple { rows }
    }

    /// Coordinates vectors (one per dimension).
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn point(&self, j: usize) -> Point {
        Point(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn points(&self) -> Vec<Point> {
        (0..self.k()).map(|j| self.point(j)).collect()
    }

    pub fn satisfies(&self, v: &VectorSystem) -> bool {
        self.rows.len() == v.d()
            && self
                .rows
                .iter()
                .zip(v.coordinate_systems())
                .all(|(row, s)| s.is_solution(row))
    }
}

/// Indices of the solution points that must share a color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mask(Vec<usize>);

impl Mask {
    pub fn new(indices: impl IntoIterator<Item = usize>, k: usize) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(RadoError::InvalidArgument("mask must be nonempty".into()));
        }
        if let Some(&j) = v.iter().find(|&&j| j >= k) {
            return Err(RadoError::InvalidArgument(format!(
                "mask index {j} out of range 0..{k}"
            )));
        }
        Ok(Mask(v))
    }

    pub fn all(k: usize) -> Self {
        Mask((0..k).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One pivot row of an integer-scaled rref: `scale * x[pivot] + sum coeff_f * x[f] = 0`.
#[derive(Debug, Clone)]
struct PivotRelation {
    pivot: usize,
    scale: i128,
    terms: Vec<(usize, i128)>,
}

/// Precomputed free-variable parametrization of a scalar system.
#[derive(Debug, Clone)]
pub struct ScalarSolver {
    k: usize,
    free: Vec<usize>,
    relations: Vec<PivotRelation>,
}

impl ScalarSolver {
    pub fn new(s: &ScalarSystem) -> Self {
        let r = rref(&s.matrix());
        let free = r.free_columns();
        let relations = r
            .pivot_columns
            .iter()
            .enumerate()
            .map(|(row, &pivot)| {
                let entries = r.rref.row(row);
                let lcm = free
                    .iter()
                    .fold(num_bigint::BigInt::from(1), |acc, &f| acc.lcm(entries[f].denom()));
                let terms = free
                    .iter()
                    .filter(|&&f| !entries[f].is_zero())
                    .map(|&f| {
                        let c = entries[f].numer() * (&lcm / entries[f].denom());
                        (f, c.to_i128().expect("coefficient fits in i128"))
                    })
                    .collect();
                PivotRelation {
                    pivot,
                    scale: lcm.abs().to_i128().expect("scale fits in i128"),
                    terms,
                }
            })
            .collect();
        ScalarSolver {
            k: s.num_variables(),
            free,
            relations,
        }
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Number of candidates the enumeration visits for box side `n`.
    pub fn grid_size(&self, n: i64) -> u128 {
        if n <= 0 {
            return 0;
        }
        (n as u128).saturating_pow(self.free.len() as u32)
    }

    /// All solutions in `[1,n]^k`, sorted lexicographically.
    pub fn enumerate(&self, n: i64, budget: u128) -> Result<Vec<Vec<i64>>> {
        if n < 1 {
            return Ok(Vec::new());
        }
        let grid = self.grid_size(n);
        if grid > budget {
            return Err(RadoError::BudgetExceeded {
                projected: grid,
                budget,
            });
        }
        let mut out = Vec::new();
        let mut x = vec![0i64; self.k];
        let mut odo = vec![1i64; self.free.len()];
        'outer: loop {
            for (&f, &val) in self.free.iter().zip(&odo) {
                x[f] = val;
            }
            if self.solve_pivots(&mut x, n) {
                out.push(x.clone());
            }
            for i in (0..odo.len()).rev() {
                if odo[i] < n {
                    odo[i] += 1;
                    continue 'outer;
                }
                odo[i] = 1;
            }
            break;
        }
        out.sort_unstable();
        Ok(out)
    }

    fn solve_pivots(&self, x: &mut [i64], n: i64) -> bool {
        for rel in &self.relations {
            let rhs: i128 = -rel.terms.iter().map(|&(f, c)| c * x[f] as i128).sum::<i128>();
            if rhs % rel.scale != 0 {
                return false;
            }
            let val = rhs / rel.scale;
            if val < 1 || val > n as i128 {
                return false;
            }
            x[rel.pivot] = val as i64;
        }
        true
    }
}

/// All solutions of `s` in `[1,n]^k` (sorted), with the default budget.
pub fn enumerate_scalar_solutions(s: &ScalarSystem, n: i64) -> Result<Vec<Vec<i64>>> {
    ScalarSolver::new(s).enumerate(n, DEFAULT_BUDGET)
}

/// Per-coordinate solution lists for box side `n`.
pub fn coordinate_solutions(v: &VectorSystem, n: i64, budget: u128) -> Result<Vec<Vec<Vec<i64>>>> {
    v.coordinate_systems()
        .iter()
        .map(|s| ScalarSolver::new(s).enumerate(n, budget))
        .collect()
}

/// Lazy product of per-coordinate solutions, first coordinate most significant.
pub struct VectorSolutions {
    lists: Vec<Vec<Vec<i64>>>,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for VectorSolutions {
    type Item = SolutionTuple;

    fn next(&mut self) -> Option<SolutionTuple> {
        if self.done {
            return None;
        }
        let rows = self.idx.iter().zip(&self.lists).map(|(&i, l)| l[i].clone()).collect();
        self.done = true;
        for c in (0..self.idx.len()).rev() {
            if self.idx[c] + 1 < self.lists[c].len() {
                self.idx[c] += 1;
                self.done = false;
                break;
            }
            self.idx[c] = 0;
        }
        Some(SolutionTuple { rows })
    }
}

pub fn enumerate_vector_solutions(v: &VectorSystem, n: i64) -> Result<VectorSolutions> {
    enumerate_vector_solutions_with_budget(v, n, DEFAULT_BUDGET)
}

pub fn enumerate_vector_solutions_with_budget(v: &VectorSystem, n: i64, budget: u128) -> Result<VectorSolutions> {
    let lists = coordinate_solutions(v, n, budget)?;
    let done = lists.iter().any(Vec::is_empty);
    Ok(VectorSolutions {
        idx: vec![0; lists.len()],
        lists,
        done,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyReport {
    pub degenerate: bool,
    pub direction: Option<Point>,
    pub multipliers: Option<Vec<i64>>,
}

/// Primitive direction and multiplier of a positive vector.
fn primitive(p: &[i64]) -> (Vec<i64>, i64) {
    let g = p.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    (p.iter().map(|&x| x / g).collect(), g)
}

/// Whether all points lie on one ray `{i * v : i >= 1}`.
pub fn is_degenerate(points: &[Point]) -> Result<DegeneracyReport> {
    let Some(first) = points.first() else {
        return Err(RadoError::InvalidArgument(
            "degeneracy needs a nonempty point set".into(),
        ));
    };
    let d = first.dim();
    for p in points {
        if p.dim() != d {
            return Err(RadoError::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
        if p.0.iter().any(|&c| c < 1) {
            return Err(RadoError::InvalidArgument(
                "points must have positive coordinates".into(),
            ));
        }
    }
    let (dir, _) = primitive(&first.0);
    let mut multipliers = Vec::with_capacity(points.len());
    for p in points {
        let (u, g) = primitive(&p.0);
        if u != dir {
            return Ok(DegeneracyReport {
                degenerate: false,
                direction: None,
                multipliers: None,
            });
        }
        multipliers.push(g);
    }
    Ok(DegeneracyReport {
        degenerate: true,
        direction: Some(Point(dir)),
        multipliers: Some(multipliers),
    })
}

/// Allocation-free degeneracy test on point slices.
pub(crate) fn points_degenerate(points: &[&[i64]]) -> bool {
    let (dir, _) = primitive(points[0]);
    points[1..].iter().all(|p| {
        let g = p.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        p.iter().zip(&dir).all(|(&x, &u)| x == u * g)
    })
}

/// Number of solution tuples in `[1,n]^d`.
pub fn count_solutions(v: &VectorSystem, n: i64, budget: u128) -> Result<u128> {
    let lists = coordinate_solutions(v, n, budget)?;
    Ok(lists.iter().map(|l| l.len() as u128).product())
}

/// Per-coordinate solutions projected onto the masked columns, with the
/// number of full solutions behind each projection.
pub(crate) fn project(list: &[Vec<i64>], mask: &Mask) -> Vec<(Vec<i64>, u64)> {
    let mut m: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for row in list {
        *m.entry(mask.indices().iter().map(|&j| row[j]).collect()).or_default() += 1;
    }
    m.into_iter().collect()
}

/// Masked projections of one coordinate's solutions, with multiplicities.
pub(crate) type MaskedList = Vec<(Vec<i64>, u64)>;

/// Projected per-coordinate lists, refusing products above `budget`.
pub(crate) fn masked_lists(v: &VectorSystem, n: i64, mask: &Mask, budget: u128) -> Result<Vec<MaskedList>> {
    if let Some(&j) = mask.indices().iter().find(|&&j| j >= v.k()) {
        return Err(RadoError::InvalidArgument(format!(
            "mask index {j} out of range 0..{}",
            v.k()
        )));
    }
    let lists: Vec<_> = coordinate_solutions(v, n, budget)?
        .iter()
        .map(|l| project(l, mask))
        .collect();
    let product = lists.iter().fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128));
    if product > budget {
        return Err(RadoError::BudgetExceeded {
            projected: product,
            budget,
        });
    }
    Ok(lists)
}

/// Calls `f(points, multiplicity)` for every distinct masked point tuple.
/// `points[j][i]` is coordinate `i` of masked point `j`. Parallel over the
/// first coordinate; `f` returns a value summed over all tuples.
pub(crate) fn sum_over_masked_tuples<F>(lists: &[MaskedList], mask_len: usize, f: F) -> u128
where
    F: Fn(&[&[i64]], u64) -> u128 + Sync,
{
    if lists.iter().any(Vec::is_empty) {
        return 0;
    }
    let d = lists.len();
    lists[0]
        .par_iter()
        .map(|first| {
            let mut idx = vec![0usize; d];
            let mut coords = vec![vec![0i64; d]; mask_len];
            let mut total = 0u128;
            loop {
                let mut mult = first.1;
                for (c, l) in lists.iter().enumerate() {
                    let (row, m) = if c == 0 { first } else { &l[idx[c]] };
                    if c > 0 {
                        mult *= m;
                    }
                    for (j, &x) in row.iter().enumerate() {
                        coords[j][c] = x;
                    }
                }
                let pts: Vec<&[i64]> = coords.iter().map(Vec::as_slice).collect();
                total += f(&pts, mult);
                let mut advanced = false;
                for c in (1..d).rev() {
                    if idx[c] + 1 < lists[c].len() {
                        idx[c] += 1;
                        advanced = true;
                        break;
                    }
                    idx[c] = 0;
                }
                if !advanced {
                    break;
                }
            }
            total
        })
        .sum()
}

/// Sequential visit of every distinct masked point tuple, first coordinate
/// most significant. Stops early when `f` returns `false`.
pub(crate) fn visit_masked_tuples<F>(lists: &[MaskedList], mask_len: usize, mut f: F)
where
    F: FnMut(&[&[i64]], u64) -> bool,
{
    if lists.iter().any(Vec::is_empty) {
        return;
    }
    let d = lists.len();
    let mut idx = vec![0usize; d];
    let mut coords = vec![vec![0i64; d]; mask_len];
    loop {
        let mut mult = 1u64;
        for (c, l) in lists.iter().enumerate() {
            let (row, m) = &l[idx[c]];
            mult *= m;
            for (j, &x) in row.iter().enumerate() {
                coords[j][c] = x;
            }
        }
        let pts: Vec<&[i64]> = coords.iter().map(Vec::as_slice).collect();
        if !f(&pts, mult) {
            return;
        }
        let mut c = d;
        loop {
            if c == 0 {
                return;
            }
            c -= 1;
            if idx[c] + 1 < lists[c].len() {
                idx[c] += 1;
                break;
            }
            idx[c] = 0;
        }
    }
}

/// Number of solution tuples whose masked point set is degenerate.
pub fn count_degenerate(v: &VectorSystem, n: i64, mask: &Mask, budget: u128) -> Result<u128> {
    let lists = masked_lists(v, n, mask, budget)?;
    Ok(sum_over_masked_tuples(&lists, mask.len(), |pts, mult| {
        if points_degenerate(pts) {
            mult as u128
        } else {
            0
        }
    }))
}

/// An `r`-coloring of `[1,n]^d`, points in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn new(n: usize, d: usize, r: usize, colors: Vec<u8>) -> Result<Self> {
        let c = Coloring { n, d, r, colors };
        c.validate()?;
        Ok(c)
    }

    pub fn constant(n: usize, d: usize, r: usize, color: u8) -> Self {
        Coloring {
            n,
            d,
            r,
            colors: vec![color; n.pow(d as u32)],
        }
    }

    pub fn from_fn(n: usize, d: usize, r: usize, f: impl Fn(&[i64]) -> u8) -> Self {
        let colors = (0..n.pow(d as u32)).map(|i| f(&point_of_index(i, n, d))).collect();
        Coloring { n, d, r, colors }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 || self.r == 0 || self.r > 255 {
            return Err(RadoError::InvalidArgument(
                "coloring needs d >= 1 and 1 <= r <= 255".into(),
            ));
        }
        let expected = self
            .n
            .checked_pow(self.d as u32)
            .ok_or_else(|| RadoError::Overflow("n^d".into()))?;
        if self.colors.len() != expected {
            return Err(RadoError::DimensionMismatch {
                expected,
                found: self.colors.len(),
            });
        }
        if let Some(&c) = self.colors.iter().find(|&&c| c as usize >= self.r) {
            return Err(RadoError::InvalidArgument(format!(
                "color {c} out of range for r = {}",
                self.r
            )));
        }
        Ok(())
    }

    pub fn num_points(&self) -> usize {
        self.colors.len()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        index_of_point(coords, self.n)
    }

    pub fn color(&self, coords: &[i64]) -> Option<u8> {
        self.index_of(coords).map(|i| self.colors[i])
    }

    /// Restriction to `[1,m]^d` for `m <= n`.
    pub fn restrict(&self, m: usize) -> Coloring {
        Coloring::from_fn(m.min(self.n), self.d, self.r, |p| self.color(p).expect("in box"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: Coloring = serde_json::from_str(text).map_err(|e| RadoError::Parse(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }
}

/// Lexicographic index of a point in `[1,n]^d` (last coordinate fastest).
pub fn index_of_point(coords: &[i64], n: usize) -> Option<usize> {
    let mut idx = 0usize;
    for &x in coords {
        if x < 1 || x as usize > n {
            return None;
        }
        idx = idx * n + (x as usize - 1);
    }
    Some(idx)
}

pub fn point_of_index(mut idx: usize, n: usize, d: usize) -> Vec<i64> {
    let mut p = vec![0i64; d];
    for c in (0..d).rev() {
        p[c] = (idx % n) as i64 + 1;
        idx /= n;
    }
    p
}

/// For each color, the number of solution tuples whose masked points all
/// carry that color.
pub fn count_monochromatic(v: &VectorSystem, coloring: &Coloring, mask: &Mask, budget: u128) -> Result<Vec<u128>> {
    if coloring.d != v.d() {
        return Err(RadoError::DimensionMismatch {
            expected: v.d(),
            found: coloring.d,
        });
    }
    let lists = masked_lists(v, coloring.n as i64, mask, budget)?;
    let r = coloring.r;
    let counts = (0..r)
        .map(|gamma| {
            sum_over_masked_tuples(&lists, mask.len(), |pts, mult| {
                // Checked point by point; bails at the first other color.
                let mono = pts.iter().all(|p| coloring.color(p) == Some(gamma as u8));
                if mono {
                    mult as u128
                } else {
                    0
                }
            })
        })
        .collect();
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(rows: &[&[i64]]) -> ScalarSystem {
        ScalarSystem::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn schur() -> ScalarSystem {
        sys(&[&[1, 1, -1]])
    }

    fn ap() -> ScalarSystem {
        sys(&[&[-1, 1, 0, -1], &[0, -1, 1, -1]])
    }

    fn motivating() -> VectorSystem {
        VectorSystem::new(vec![sys(&[&[1, 1, -1, 0]]), ap()]).unwrap()
    }

    #[test]
    fn schur_solutions_small_box() {
        assert_eq!(
            enumerate_scalar_solutions(&schur(), 3).unwrap(),
            vec![vec![1, 1, 2], vec![1, 2, 3], vec![2, 1, 3]]
        );
        assert!(enumerate_scalar_solutions(&schur(), 1).unwrap().is_empty());
        assert!(enumerate_scalar_solutions(&schur(), 0).unwrap().is_empty());
    }

    #[test]
    fn ap_solutions_small_box() {
        assert_eq!(enumerate_scalar_solutions(&ap(), 3).unwrap(), vec![vec![1, 2, 3, 1]]);
    }

    #[test]
    fn fractional_pivots_filtered() {
        // 2x = y + z
        let s = sys(&[&[2, -1, -1]]);
        let sols = enumerate_scalar_solutions(&s, 4).unwrap();
        let brute: Vec<Vec<i64>> = (1..=4)
            .flat_map(|a| (1..=4).flat_map(move |b| (1..=4).map(move |c| vec![a, b, c])))
            .filter(|x| 2 * x[0] == x[1] + x[2])
            .collect();
        assert_eq!(sols, brute);
    }

    #[test]
    fn budget_refusal() {
        let err = ScalarSolver::new(&schur()).enumerate(100, 1000).unwrap_err();
        assert_eq!(
            err,
            RadoError::BudgetExceeded {
                projected: 10_000,
                budget: 1000
            }
        );
    }

    #[test]
    fn vector_enumeration() {
        let tuples: Vec<_> = enumerate_vector_solutions(&motivating(), 3).unwrap().collect();
        assert_eq!(tuples.len(), 3 * 3);
        // the Schur row carries a free dummy in column 3
        assert!(tuples.iter().all(|t| t.satisfies(&motivating())));
        let diag = VectorSystem::diagonal(schur(), 2).unwrap();
        let tuples: Vec<_> = enumerate_vector_solutions(&diag, 3).unwrap().collect();
        assert_eq!(tuples.len(), 9);
        assert_eq!(tuples[0].rows(), &[vec![1, 1, 2], vec![1, 1, 2]]);
        assert_eq!(tuples[1].rows(), &[vec![1, 1, 2], vec![1, 2, 3]]);
        let one = VectorSystem::new(vec![schur()]).unwrap();
        let rows: Vec<_> = enumerate_vector_solutions(&one, 3)
            .unwrap()
            .map(|t| t.rows()[0].clone())
            .collect();
        assert_eq!(rows, enumerate_scalar_solutions(&schur(), 3).unwrap());
        assert_eq!(enumerate_vector_solutions(&diag, 1).unwrap().count(), 0);
    }

    #[test]
    fn degeneracy_examples() {
        let pts = |v: &[&[i64]]| v.iter().map(|p| Point(p.to_vec())).collect::<Vec<_>>();
        let r = is_degenerate(&pts(&[&[1, 2], &[2, 4], &[3, 6]])).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.direction, Some(Point(vec![1, 2])));
        assert_eq!(r.multipliers, Some(vec![1, 2, 3]));
        assert!(!is_degenerate(&pts(&[&[1, 1], &[2, 2], &[3, 5]])).unwrap().degenerate);
        let r = is_degenerate(&pts(&[&[2, 4]])).unwrap();
        assert_eq!(r.direction, Some(Point(vec![1, 2])));
        assert_eq!(r.multipliers, Some(vec![2]));
        // parallel but neither divides the other
        let r = is_degenerate(&pts(&[&[2, 4], &[3, 6]])).unwrap();
        assert_eq!(r.multipliers, Some(vec![2, 3]));
        assert!(is_degenerate(&[]).is_err());
        assert!(is_degenerate(&pts(&[&[1, 2], &[1]])).is_err());
    }

    #[test]
    fn counts() {
        let one = VectorSystem::new(vec![schur()]).unwrap();
        assert_eq!(count_solutions(&one, 3, DEFAULT_BUDGET).unwrap(), 3);
        let diag = VectorSystem::diagonal(schur(), 2).unwrap();
        assert_eq!(count_solutions(&diag, 3, DEFAULT_BUDGET).unwrap(), 9);
        let brute = enumerate_vector_solutions(&diag, 3)
            .unwrap()
            .filter(|t| is_degenerate(&t.points()).unwrap().degenerate)
            .count() as u128;
        assert_eq!(
            count_degenerate(&diag, 3, &Mask::all(3), DEFAULT_BUDGET).unwrap(),
            brute
        );
        assert_eq!(count_solutions(&diag, 1, DEFAULT_BUDGET).unwrap(), 0);
        assert_eq!(count_degenerate(&diag, 1, &Mask::all(3), DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn monochromatic_counts() {
        let one = VectorSystem::new(vec![schur()]).unwrap();
        let parity = Coloring::from_fn(3, 1, 2, |p| (p[0] % 2 == 0) as u8);
        assert_eq!(
            count_monochromatic(&one, &parity, &Mask::all(3), DEFAULT_BUDGET).unwrap(),
            vec![0, 0]
        );
        let constant = Coloring::constant(3, 2, 1, 0);
        let mask = Mask::new([0, 1, 2], 4).unwrap();
        // 3 masked configurations, each completed by 3 values of the dummy a_4.
        assert_eq!(
            count_monochromatic(&motivating(), &constant, &mask, DEFAULT_BUDGET).unwrap(),
            vec![9]
        );
        let c2 = Coloring::constant(3, 2, 2, 1);
        assert_eq!(
            count_monochromatic(&motivating(), &c2, &mask, DEFAULT_BUDGET).unwrap(),
            vec![0, 9]
        );
        assert!(count_monochromatic(&one, &constant, &Mask::all(3), DEFAULT_BUDGET).is_err());
        assert!(Mask::new(Vec::<usize>::new(), 3).is_err());
        assert!(Mask::new([3], 3).is_err());
    }

    #[test]
    fn coloring_indexing_and_json() {
        assert_eq!(index_of_point(&[1, 1], 8), Some(0));
        assert_eq!(index_of_point(&[1, 2], 8), Some(1));
        assert_eq!(index_of_point(&[2, 1], 8), Some(8));
        assert_eq!(index_of_point(&[9, 1], 8), None);
        assert_eq!(point_of_index(8, 8, 2), vec![2, 1]);
        let c = Coloring::from_fn(4, 2, 2, |p| ((p[0] + p[1]) % 2) as u8);
        assert_eq!(Coloring::from_json(&c.to_json()).unwrap(), c);
        assert_eq!(c.restrict(2).colors, vec![0, 1, 1, 0]);
        assert!(Coloring::from_json(r#"{"n":2,"d":1,"r":2,"colors":[0,2]}"#).is_err());
        assert!(Coloring::from_json(r#"{"n":2,"d":1,"r":2,"colors":[0]}"#).is_err());
    }
}
