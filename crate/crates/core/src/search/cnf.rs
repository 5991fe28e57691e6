//! DIMACS CNF export of avoidance problems and a small DPLL checker.
//!
//! Variable numbering: with two colors, point `i` (lexicographic index) is
//! variable `i + 1`, true meaning color 1. With `r != 2` colors, variable
//! `i * r + g + 1` means point `i` has color `g`; each point gets an
//! at-least-one clause and pairwise at-most-one clauses.

use std::fmt::Write as _;

use super::{build_constraints, ConstraintSet, SearchConfig, SearchProblem};
use crate::error::{RadoError, Result};
use crate::lattice::Coloring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    pub comments: Vec<String>,
}

impl Cnf {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "c {c}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

pub fn cnf_from_constraints(cs: &ConstraintSet, r: usize) -> Result<Cnf> {
    let npts = cs.num_points();
    let mut comments = vec![
        "rado avoidance CNF".to_string(),
        format!(
            "n = {} d = {} r = {} points = {} constraints = {}",
            cs.n,
            cs.d,
            r,
            npts,
            cs.len()
        ),
        "points are numbered 0.. in lexicographic order (1,..,1), (1,..,2), ..".to_string(),
    ];
    let var = |i: u32, g: usize| -> i32 { (i as usize * r + g + 1) as i32 };
    let mut clauses = Vec::new();
    let num_vars;
    if r == 2 {
        comments.push("variable i+1 is point i; true means color 1, false color 0".into());
        num_vars = npts;
        for c in &cs.constraints {
            clauses.push(c.iter().map(|&i| i as i32 + 1).collect());
            clauses.push(c.iter().map(|&i| -(i as i32 + 1)).collect());
        }
    } else {
        comments.push(format!("variable i*{r}+g+1 means point i has color g"));
        num_vars = npts
            .checked_mul(r)
            .filter(|&v| v <= i32::MAX as usize)
            .ok_or_else(|| RadoError::Overflow("too many CNF variables".into()))?;
        for i in 0..npts as u32 {
            clauses.push((0..r).map(|g| var(i, g)).collect());
            for a in 0..r {
                for b in a + 1..r {
                    clauses.push(vec![-var(i, a), -var(i, b)]);
                }
            }
        }
        for c in &cs.constraints {
            for g in 0..r {
                clauses.push(c.iter().map(|&i| -var(i, g)).collect());
            }
        }
    }
    Ok(Cnf {
        num_vars,
        clauses,
        comments,
    })
}

/// CNF whose models are exactly the avoiding colorings of `[1,n]^d`.
pub fn export_dimacs(p: &SearchProblem, n: usize, config: &SearchConfig) -> Result<Cnf> {
    let cs = build_constraints(p, n, config.budget)?;
    cnf_from_constraints(&cs, p.r)
}

pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut comments = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('c') {
            comments.push(c.trim().to_string());
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(RadoError::Parse(format!("bad header: {line}")));
            }
            let v = parts[2]
                .parse()
                .map_err(|_| RadoError::Parse(format!("bad header: {line}")))?;
            let c = parts[3]
                .parse()
                .map_err(|_| RadoError::Parse(format!("bad header: {line}")))?;
            header = Some((v, c));
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| RadoError::Parse(format!("bad literal {tok}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| RadoError::Parse("missing p cnf header".into()))?;
    if !current.is_empty() {
        return Err(RadoError::Parse("last clause not terminated by 0".into()));
    }
    if clauses.len() != num_clauses {
        return Err(RadoError::Parse(format!(
            "header says {num_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    if let Some(l) = clauses.iter().flatten().find(|l| l.unsigned_abs() as usize > num_vars) {
        return Err(RadoError::Parse(format!("literal {l} exceeds {num_vars} variables")));
    }
    Ok(Cnf {
        num_vars,
        clauses,
        comments,
    })
}

/// Maps a model of [`cnf_from_constraints`] back to a coloring.
pub fn decode_model(model: &[bool], n: usize, d: usize, r: usize) -> Result<Coloring> {
    let npts = n.pow(d as u32);
    let colors = if r == 2 {
        model.iter().take(npts).map(|&b| b as u8).collect()
    } else {
        (0..npts)
            .map(|i| (0..r).find(|&g| model[i * r + g]).unwrap_or(0) as u8)
            .collect()
    };
    Coloring::new(n, d, r, colors)
}

/// Plain DPLL with counter-based unit propagation. Returns a model
/// (`model[v-1]` is the value of variable `v`) or `None` if unsatisfiable.
pub fn solve_cnf(cnf: &Cnf) -> Option<Vec<bool>> {
    Dpll::new(cnf).run()
}

struct Dpll<'a> {
    clauses: &'a [Vec<i32>],
    /// Clauses containing each literal, indexed by `lit_index`.
    occurs: Vec<Vec<usize>>,
    value: Vec<i8>,
    sat: Vec<u32>,
    falsified: Vec<u32>,
    trail: Vec<i32>,
}

fn lit_index(l: i32) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + (l < 0) as usize
}

impl<'a> Dpll<'a> {
    fn new(cnf: &'a Cnf) -> Self {
        let mut occurs = vec![Vec::new(); 2 * cnf.num_vars];
        for (ci, c) in cnf.clauses.iter().enumerate() {
            for &l in c {
                occurs[lit_index(l)].push(ci);
            }
        }
        Dpll {
            clauses: &cnf.clauses,
            occurs,
            value: vec![0; cnf.num_vars],
            sat: vec![0; cnf.clauses.len()],
            falsified: vec![0; cnf.clauses.len()],
            trail: Vec::new(),
        }
    }

    fn lit_value(&self, l: i32) -> i8 {
        let v = self.value[l.unsigned_abs() as usize - 1];
        if l < 0 {
            -v
        } else {
            v
        }
    }

    /// Sets `l` true and propagates units; `false` on conflict.
    fn enqueue(&mut self, l: i32) -> bool {
        let mut queue = vec![l];
        while let Some(l) = queue.pop() {
            match self.lit_value(l) {
                1 => continue,
                -1 => return false,
                _ => {}
            }
            self.value[l.unsigned_abs() as usize - 1] = if l > 0 { 1 } else { -1 };
            self.trail.push(l);
            for &c in &self.occurs[lit_index(l)] {
                self.sat[c] += 1;
            }
            // Counters first, so that undo stays exact after a conflict.
            for &c in &self.occurs[lit_index(-l)] {
                self.falsified[c] += 1;
            }
            for &c in &self.occurs[lit_index(-l)] {
                if self.sat[c] > 0 {
                    continue;
                }
                let len = self.clauses[c].len() as u32;
                if self.falsified[c] == len {
                    return false;
                }
                if self.falsified[c] + 1 == len {
                    let unit = self.clauses[c]
                        .iter()
                        .copied()
                        .find(|&x| self.lit_value(x) == 0)
                        .expect("one free literal");
                    queue.push(unit);
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let l = self.trail.pop().expect("trail nonempty");
            self.value[l.unsigned_abs() as usize - 1] = 0;
            for &c in &self.occurs[lit_index(l)] {
                self.sat[c] -= 1;
            }
            for &c in &self.occurs[lit_index(-l)] {
                self.falsified[c] -= 1;
            }
        }
    }

    /// A free literal from a shortest unsatisfied clause.
    fn branch_literal(&self) -> Option<i32> {
        let mut best: Option<(u32, usize)> = None;
        for (c, clause) in self.clauses.iter().enumerate() {
            if self.sat[c] > 0 {
                continue;
            }
            let free = clause.len() as u32 - self.falsified[c];
            if best.is_none_or(|(f, _)| free < f) {
                best = Some((free, c));
            }
        }
        let (_, c) = best?;
        self.clauses[c].iter().copied().find(|&l| self.lit_value(l) == 0)
    }

    fn search(&mut self) -> bool {
        let Some(l) = self.branch_literal() else {
            return true;
        };
        for lit in [l, -l] {
            let mark = self.trail.len();
            if self.enqueue(lit) && self.search() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }

    fn run(mut self) -> Option<Vec<bool>> {
        if self.clauses.iter().any(Vec::is_empty) {
            return None;
        }
        for c in self.clauses {
            if c.len() == 1 && !self.enqueue(c[0]) {
                return None;
            }
        }
        if !self.search() {
            return None;
        }
        Some(self.value.iter().map(|&v| v > 0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Mask;
    use crate::search::check_coloring;
    use crate::systems::{ScalarSystem, VectorSystem};

    fn schur(r: usize) -> SearchProblem {
        let s = ScalarSystem::new(vec![vec![1, 1, -1]]).unwrap();
        SearchProblem::new(VectorSystem::new(vec![s]).unwrap(), r, Mask::all(3)).unwrap()
    }

    #[test]
    fn dpll_basics() {
        let sat = Cnf {
            num_vars: 2,
            clauses: vec![vec![1, 2], vec![-1], vec![-2, 1, 2]],
            comments: vec![],
        };
        let m = solve_cnf(&sat).unwrap();
        assert_eq!(m, vec![false, true]);
        let unsat = Cnf {
            num_vars: 1,
            clauses: vec![vec![1], vec![-1]],
            comments: vec![],
        };
        assert!(solve_cnf(&unsat).is_none());
        let empty = Cnf {
            num_vars: 0,
            clauses: vec![],
            comments: vec![],
        };
        assert_eq!(solve_cnf(&empty), Some(vec![]));
    }

    #[test]
    fn export_round_trip() {
        let cfg = SearchConfig::default();
        let cnf = export_dimacs(&schur(2), 4, &cfg).unwrap();
        let text = cnf.to_dimacs();
        assert!(text.lines().any(|l| l == format!("p cnf 4 {}", cnf.clauses.len())));
        let parsed = parse_dimacs(&text).unwrap();
        assert_eq!(parsed.clauses, cnf.clauses);
        assert_eq!(parsed.num_vars, 4);
        let model = solve_cnf(&parsed).unwrap();
        let w = decode_model(&model, 4, 1, 2).unwrap();
        let cs = build_constraints(&schur(2), 4, cfg.budget).unwrap();
        assert!(check_coloring(&cs, &w).passes);
        assert!(solve_cnf(&export_dimacs(&schur(2), 5, &cfg).unwrap()).is_none());
    }

    #[test]
    fn empty_constraints_have_no_clauses() {
        let cnf = export_dimacs(&schur(2), 1, &SearchConfig::default()).unwrap();
        assert!(cnf.clauses.is_empty());
        assert!(cnf.to_dimacs().ends_with("p cnf 1 0\n"));
    }

    #[test]
    fn one_hot_encoding() {
        let cfg = SearchConfig::default();
        let cnf = export_dimacs(&schur(3), 13, &cfg).unwrap();
        let model = solve_cnf(&cnf).unwrap();
        let w = decode_model(&model, 13, 1, 3).unwrap();
        let cs = build_constraints(&schur(3), 13, cfg.budget).unwrap();
        assert!(check_coloring(&cs, &w).passes);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_dimacs("1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 2\n1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2\n").is_err());
    }
}
