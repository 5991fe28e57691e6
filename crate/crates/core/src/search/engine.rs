//! Backtracking search for colorings with no monochromatic hyperedge.
//!
//! Each hyperedge keeps a per-color count of its colored points. Once every
//! colored point of an edge has color `g` and a single point is left, that
//! point loses `g` from its domain; a point with one color left is assigned
//! immediately. Decisions pick the uncolored point lying in the most live
//! (not yet bichromatic) edges, ties broken by max-norm then lexicographic
//! order. A decision may use any color already in play plus the lowest
//! unused one: unused colors are interchangeable at every node.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_constraints, check_coloring, ConstraintSet, SearchConfig, SearchProblem};
use crate::error::{RadoError, Result};
use crate::lattice::Coloring;

const UNCOLORED: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Avoidable,
    Unavoidable,
    TriviallyUnavoidable,
}

impl SearchStatus {
    pub fn is_unavoidable(self) -> bool {
        self != SearchStatus::Avoidable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub status: SearchStatus,
    pub witness: Option<Coloring>,
    /// A single point monochromatic under every coloring.
    pub forced_constraint: Option<Vec<Vec<i64>>>,
    pub constraints: usize,
    pub nodes: u64,
}

struct Engine<'a> {
    r: usize,
    cons: &'a [Vec<u32>],
    occ: Vec<Vec<u32>>,
    /// Position of each point in max-norm-then-lexicographic order.
    rank: Vec<u32>,
    nodes: AtomicU64,
}

#[derive(Clone)]
struct State {
    color: Vec<u8>,
    domain: Vec<u32>,
    uncolored: Vec<u16>,
    counts: Vec<u16>,
    distinct: Vec<u8>,
    live: usize,
    used: u32,
}

impl<'a> Engine<'a> {
    fn new(cs: &'a ConstraintSet, r: usize) -> Self {
        let npts = cs.num_points();
        let mut occ = vec![Vec::new(); npts];
        for (ci, c) in cs.constraints.iter().enumerate() {
            for &p in c {
                occ[p as usize].push(ci as u32);
            }
        }
        let mut order: Vec<(i64, Vec<i64>, usize)> = (0..npts)
            .map(|i| {
                let p = cs.point(i as u32);
                (*p.iter().max().unwrap_or(&0), p, i)
            })
            .collect();
        order.sort();
        let mut rank = vec![0u32; npts];
        for (pos, (_, _, i)) in order.into_iter().enumerate() {
            rank[i] = pos as u32;
        }
        Engine {
            r,
            cons: &cs.constraints,
            occ,
            rank,
            nodes: AtomicU64::new(0),
        }
    }

    fn initial(&self) -> State {
        let npts = self.occ.len();
        State {
            color: vec![UNCOLORED; npts],
            domain: vec![(1u32 << self.r) - 1; npts],
            uncolored: self.cons.iter().map(|c| c.len() as u16).collect(),
            counts: vec![0; self.cons.len() * self.r],
            distinct: vec![0; self.cons.len()],
            live: self.cons.len(),
            used: 0,
        }
    }

    /// Assigns and propagates; `false` on contradiction.
    fn assign(&self, st: &mut State, point: usize, gamma: u8) -> bool {
        let mut queue = vec![(point, gamma)];
        while let Some((q, g)) = queue.pop() {
            if st.color[q] != UNCOLORED {
                if st.color[q] == g {
                    continue;
                }
                return false;
            }
            if st.domain[q] >> g & 1 == 0 {
                return false;
            }
            st.color[q] = g;
            st.used |= 1 << g;
            for &c in &self.occ[q] {
                let c = c as usize;
                st.uncolored[c] -= 1;
                let cnt = &mut st.counts[c * self.r + g as usize];
                *cnt += 1;
                if *cnt == 1 {
                    st.distinct[c] += 1;
                    if st.distinct[c] == 2 {
                        st.live -= 1;
                    }
                }
                if st.distinct[c] >= 2 {
                    continue;
                }
                match st.uncolored[c] {
                    0 => return false,
                    1 => {
                        let last = self.cons[c]
                            .iter()
                            .map(|&x| x as usize)
                            .find(|&x| st.color[x] == UNCOLORED)
                            .expect("one uncolored point remains");
                        st.domain[last] &= !(1 << g);
                        match st.domain[last].count_ones() {
                            0 => return false,
                            1 => queue.push((last, st.domain[last].trailing_zeros() as u8)),
                            _ => {}
                        }
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn pick(&self, st: &State) -> Option<usize> {
        let mut best: Option<(usize, u32, usize)> = None;
        for (p, occ) in self.occ.iter().enumerate() {
            if st.color[p] != UNCOLORED || occ.is_empty() {
                continue;
            }
            let live = occ.iter().filter(|&&c| st.distinct[c as usize] < 2).count();
            if live == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bl, br, _)) => live > bl || (live == bl && self.rank[p] < br),
            };
            if better {
                best = Some((live, self.rank[p], p));
            }
        }
        best.map(|(_, _, p)| p)
    }

    fn choices(&self, st: &State, p: usize) -> Vec<u8> {
        let lowest_unused = (!st.used).trailing_zeros() as usize;
        (0..self.r.min(lowest_unused + 1))
            .filter(|&g| st.domain[p] >> g & 1 == 1)
            .map(|g| g as u8)
            .collect()
    }

    fn finish(&self, mut st: State) -> State {
        for p in 0..st.color.len() {
            if st.color[p] == UNCOLORED {
                st.color[p] = st.domain[p].trailing_zeros() as u8;
            }
        }
        st
    }

    fn dfs(&self, st: State) -> Option<State> {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if st.live == 0 {
            return Some(self.finish(st));
        }
        let p = self.pick(&st)?;
        for g in self.choices(&st, p) {
            let mut child = st.clone();
            if self.assign(&mut child, p, g) {
                if let Some(done) = self.dfs(child) {
                    return Some(done);
                }
            }
        }
        None
    }

    /// Subproblems after up to `depth` decisions, in search order. Finished
    /// states are kept as leaves.
    fn frontier(&self, st: State, depth: usize, out: &mut Vec<State>) {
        if depth == 0 || st.live == 0 {
            out.push(st);
            return;
        }
        let Some(p) = self.pick(&st) else {
            return;
        };
        for g in self.choices(&st, p) {
            let mut child = st.clone();
            if self.assign(&mut child, p, g) {
                self.frontier(child, depth - 1, out);
            }
        }
    }

    fn solve(&self, threads: usize) -> Result<Option<State>> {
        let root = self.initial();
        if threads <= 1 {
            return Ok(self.dfs(root));
        }
        let mut subproblems = Vec::new();
        self.frontier(root, 2, &mut subproblems);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| RadoError::Internal(format!("thread pool: {e}")))?;
        // find_map_first keeps the lowest-index hit, as the sequential search would.
        Ok(pool.install(|| subproblems.into_par_iter().find_map_first(|s| self.dfs(s))))
    }
}

/// Searches `[1,n]^d` for an `r`-coloring with no monochromatic hyperedge.
pub fn find_avoiding_coloring(p: &SearchProblem, n: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    let cs = build_constraints(p, n, config.budget)?;
    search_constraints(&cs, p.r, config)
}

pub(crate) fn search_constraints(cs: &ConstraintSet, r: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    let mut outcome = SearchOutcome {
        n: cs.n,
        status: SearchStatus::Unavoidable,
        witness: None,
        forced_constraint: None,
        constraints: cs.len(),
        nodes: 0,
    };
    if let Some(single) = cs.constraints.iter().find(|c| c.len() == 1) {
        outcome.status = SearchStatus::TriviallyUnavoidable;
        outcome.forced_constraint = Some(cs.points_of(single));
        return Ok(outcome);
    }
    if cs.n == 0 {
        outcome.status = SearchStatus::Avoidable;
        outcome.witness = Some(Coloring {
            n: 0,
            d: cs.d,
            r,
            colors: Vec::new(),
        });
        return Ok(outcome);
    }
    let engine = Engine::new(cs, r);
    let found = engine.solve(config.threads)?;
    outcome.nodes = engine.nodes.load(Ordering::Relaxed);
    if let Some(st) = found {
        let w = Coloring::new(cs.n, cs.d, r, st.color)?;
        if !check_coloring(cs, &w).passes {
            return Err(RadoError::Internal(
                "search produced a coloring with a monochromatic edge".into(),
            ));
        }
        outcome.status = SearchStatus::Avoidable;
        outcome.witness = Some(w);
    }
    Ok(outcome)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum RadoNumber {
    /// Smallest unavoidable `n`, with the avoiding coloring of `[1,n-1]^d`.
    Found {
        n: usize,
        status: SearchStatus,
        previous_witness: Option<Coloring>,
    },
    ExceededMax {
        max_n: usize,
        witness: Coloring,
    },
}

impl RadoNumber {
    pub fn value(&self) -> Option<usize> {
        match self {
            RadoNumber::Found { n, .. } => Some(*n),
            RadoNumber::ExceededMax { .. } => None,
        }
    }
}

/// Smallest `n <= max_n` for which every coloring of `[1,n]^d` has a
/// monochromatic hyperedge. Each `n` is searched from scratch.
pub fn rado_number(p: &SearchProblem, max_n: usize, config: &SearchConfig) -> Result<RadoNumber> {
    if max_n < 1 {
        return Err(RadoError::InvalidArgument("max_n must be at least 1".into()));
    }
    let mut previous = None;
    for n in 1..=max_n {
        let outcome = find_avoiding_coloring(p, n, config)?;
        if outcome.status.is_unavoidable() {
            return Ok(RadoNumber::Found {
                n,
                status: outcome.status,
                previous_witness: previous,
            });
        }
        previous = outcome.witness;
    }
    Ok(RadoNumber::ExceededMax {
        max_n,
        witness: previous.expect("max_n >= 1 was searched"),
    })
}
