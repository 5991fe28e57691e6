//! `(m,p,c)`-sets: generation, products, embeddings and small searches.
//!
//! For generators `g_1..g_m` the set is the union over `i` of
//! `c*g_i + sum_{j>i} lambda_j g_j` with every `lambda_j` in `[-p,p]`.
//! Every element must be a positive integer; generators that would produce
//! a non-positive element are rejected rather than filtered.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{RadoError, Result};
use crate::lattice::{Coloring, Point, DEFAULT_BUDGET};
use crate::systems::ScalarSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MpcSpec {
    pub m: usize,
    pub p: i64,
    pub c: i64,
}

impl MpcSpec {
    pub fn new(m: usize, p: i64, c: i64) -> Result<Self> {
        if m < 1 || p < 1 || c < 1 {
            return Err(RadoError::InvalidArgument(format!(
                "(m,p,c) = ({m},{p},{c}) must be positive"
            )));
        }
        Ok(MpcSpec { m, p, c })
    }
}

/// Per-coordinate specs of a vector `(m,p,c)`-set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorMpcSpec {
    pub coordinates: Vec<MpcSpec>,
}

impl VectorMpcSpec {
    pub fn new(coordinates: Vec<MpcSpec>) -> Result<Self> {
        if coordinates.is_empty() {
            return Err(RadoError::InvalidArgument("vector (m,p,c) spec needs d >= 1".into()));
        }
        Ok(VectorMpcSpec { coordinates })
    }

    pub fn uniform(spec: MpcSpec, d: usize) -> Result<Self> {
        Self::new(vec![spec; d])
    }

    /// `prod_i (2 p_i + 1)^(m_i)`, which strictly bounds the product size.
    pub fn cardinality_bound(&self) -> u128 {
        self.coordinates
            .iter()
            .map(|s| (2 * s.p as u128 + 1).saturating_pow(s.m as u32))
            .fold(1u128, u128::saturating_mul)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct McGenerators(pub Vec<i64>);

fn overflow() -> RadoError {
    RadoError::Overflow("(m,p,c)-set element exceeds i64".into())
}

/// Checks that every element generated by `gens` is positive.
pub fn validate_generators(spec: &MpcSpec, gens: &McGenerators) -> Result<()> {
    let g = &gens.0;
    if g.len() != spec.m {
        return Err(RadoError::DimensionMismatch {
            expected: spec.m,
            found: g.len(),
        });
    }
    if g.iter().any(|&x| x < 1) {
        return Err(RadoError::InvalidArgument("generators must be positive".into()));
    }
    for i in 0..spec.m {
        // Smallest element of block i: every later coefficient at -p.
        let mut value = spec.c.checked_mul(g[i]).ok_or_else(overflow)?;
        for &gj in &g[i + 1..] {
            value = value
                .checked_sub(spec.p.checked_mul(gj).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        if value <= 0 {
            return Err(RadoError::InvalidGenerators {
                coordinate: None,
                i: i + 1,
                lambda: vec![-spec.p; spec.m - i - 1],
                value,
            });
        }
    }
    Ok(())
}

fn expand(spec: &MpcSpec, g: &[i64]) -> Result<BTreeSet<i64>> {
    let mut out = BTreeSet::new();
    for i in 0..spec.m {
        let base = spec.c.checked_mul(g[i]).ok_or_else(overflow)?;
        let mut partial = vec![base];
        for &gj in &g[i + 1..] {
            let mut next = Vec::with_capacity(partial.len() * (2 * spec.p as usize + 1));
            for &s in &partial {
                for lambda in -spec.p..=spec.p {
                    let t = lambda
                        .checked_mul(gj)
                        .and_then(|t| s.checked_add(t))
                        .ok_or_else(overflow)?;
                    next.push(t);
                }
            }
            next.sort_unstable();
            next.dedup();
            partial = next;
        }
        out.extend(partial);
    }
    Ok(out)
}

/// The `(m,p,c)`-set of `gens`, sorted ascending.
pub fn generate_mpc(spec: &MpcSpec, gens: &McGenerators) -> Result<Vec<i64>> {
    validate_generators(spec, gens)?;
    Ok(expand(spec, &gens.0)?.into_iter().collect())
}

/// Cartesian product of per-coordinate `(m,p,c)`-sets, lexicographic.
pub fn generate_mpc_vector(spec: &VectorMpcSpec, gens: &[McGenerators]) -> Result<Vec<Point>> {
    if gens.len() != spec.coordinates.len() {
        return Err(RadoError::DimensionMismatch {
            expected: spec.coordinates.len(),
            found: gens.len(),
        });
    }
    let mut sets = Vec::with_capacity(gens.len());
    for (i, (s, g)) in spec.coordinates.iter().zip(gens).enumerate() {
        sets.push(generate_mpc(s, g).map_err(|e| match e {
            RadoError::InvalidGenerators {
                i: gi, lambda, value, ..
            } => RadoError::InvalidGenerators {
                coordinate: Some(i),
                i: gi,
                lambda,
                value,
            },
            other => other,
        })?);
    }
    let mut points = vec![Vec::new()];
    for set in &sets {
        points = points
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                set.iter().map(move |&x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    Ok(points.into_iter().map(Point).collect())
}

/// Embeds an `(M,P,c^mu)`-set into a given `(M, c^(t-mu) P, c^t)`-set.
///
/// Returns `h_i = c^(t-mu) g_i` after checking, by generating both sets,
/// that the set on `h` lies inside the set on `g`.
#[allow(clippy::too_many_arguments)]
pub fn lemma_mpc_embed(m: usize, p: i64, c: i64, mu: u32, t: u32, gens: &McGenerators) -> Result<McGenerators> {
    if mu < 1 || t <= mu {
        return Err(RadoError::InvalidArgument(format!(
            "need t > mu >= 1, got t = {t}, mu = {mu}"
        )));
    }
    let lift = c.checked_pow(t - mu).ok_or_else(overflow)?;
    let outer = MpcSpec::new(
        m,
        lift.checked_mul(p).ok_or_else(overflow)?,
        c.checked_pow(t).ok_or_else(overflow)?,
    )?;
    let inner = MpcSpec::new(m, p, c.checked_pow(mu).ok_or_else(overflow)?)?;
    let outer_set: BTreeSet<i64> = generate_mpc(&outer, gens)?.into_iter().collect();
    let h = McGenerators(
        gens.0
            .iter()
            .map(|&g| g.checked_mul(lift).ok_or_else(overflow))
            .collect::<Result<_>>()?,
    );
    let inner_set = generate_mpc(&inner, &h)?;
    if let Some(x) = inner_set.iter().find(|x| !outer_set.contains(x)) {
        return Err(RadoError::Internal(format!(
            "embedded element {x} missing from the (M, c^(t-mu)P, c^t)-set"
        )));
    }
    Ok(h)
}

/// First generator tuple (lexicographic) whose `(m,p,c)`-set lies in
/// `[1,n]` and is monochromatic under a 1-dimensional coloring.
pub fn find_mono_mpc(coloring: &Coloring, spec: &MpcSpec) -> Result<Option<McGenerators>> {
    if coloring.d != 1 {
        return Err(RadoError::DimensionMismatch {
            expected: 1,
            found: coloring.d,
        });
    }
    let n = coloring.n as i64;
    // c*g_i itself is an element, so g_i <= n / c.
    let top = n / spec.c;
    if top < 1 {
        return Ok(None);
    }
    let mut g = vec![1i64; spec.m];
    loop {
        if let Some(hit) = mono_hit(coloring, spec, &g, n) {
            return Ok(Some(hit));
        }
        let mut i = spec.m;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if g[i] < top {
                g[i] += 1;
                break;
            }
            g[i] = 1;
        }
    }
}

fn mono_hit(coloring: &Coloring, spec: &MpcSpec, g: &[i64], n: i64) -> Option<McGenerators> {
    let gens = McGenerators(g.to_vec());
    validate_generators(spec, &gens).ok()?;
    let set = expand(spec, g).ok()?;
    if *set.iter().next_back()? > n {
        return None;
    }
    let mut colors = set.iter().map(|&x| coloring.colors[x as usize - 1]);
    let first = colors.next()?;
    colors.all(|c| c == first).then_some(gens)
}

/// A solution of `s` with every entry drawn from the `(m,p,c)`-set, if any.
pub fn mpc_contains_solution(spec: &MpcSpec, gens: &McGenerators, s: &ScalarSystem) -> Result<Option<Vec<i64>>> {
    mpc_contains_solution_with_budget(spec, gens, s, DEFAULT_BUDGET)
}

pub fn mpc_contains_solution_with_budget(
    spec: &MpcSpec,
    gens: &McGenerators,
    s: &ScalarSystem,
    budget: u128,
) -> Result<Option<Vec<i64>>> {
    let set = generate_mpc(spec, gens)?;
    let k = s.num_variables();
    let projected = (set.len() as u128).saturating_pow(k as u32);
    if projected > budget {
        return Err(RadoError::BudgetExceeded { projected, budget });
    }
    let mut idx = vec![0usize; k];
    loop {
        let x: Vec<i64> = idx.iter().map(|&i| set[i]).collect();
        if s.is_solution(&x) {
            return Ok(Some(x));
        }
        let mut c = k;
        loop {
            if c == 0 {
                return Ok(None);
            }
            c -= 1;
            if idx[c] + 1 < set.len() {
                idx[c] += 1;
                break;
            }
            idx[c] = 0;
        }
    }
}
