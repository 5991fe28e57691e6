//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Rank of an integer matrix by fraction-free elimination.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `v` lies in the rational span of `basis` (zero vector always does).
pub fn int_in_span(v: &[i64], basis: &[Vec<i64>]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    int_rank(basis) == int_rank(&with)
}

fn column(rows: &[Vec<i64>], j: usize) -> Vec<i64> {
    rows.iter().map(|r| r[j]).collect()
}

/// Columns condition by trying every ordered partition of the columns.
pub fn columns_brute(rows: &[Vec<i64>]) -> bool {
    let k = rows[0].len();
    let total = (k as u64).pow(k as u32);
    (0..total).any(|code| {
        let mut labels = vec![0usize; k];
        let mut c = code;
        for l in labels.iter_mut() {
            *l = (c % k as u64) as usize;
            c /= k as u64;
        }
        let used: BTreeSet<usize> = labels.iter().copied().collect();
        let blocks = used.len();
        if used.iter().copied().ne(0..blocks) {
            return false;
        }
        let mut earlier: Vec<Vec<i64>> = Vec::new();
        for b in 0..blocks {
            let members: Vec<usize> = (0..k).filter(|&j| labels[j] == b).collect();
            let sum: Vec<i64> = (0..rows.len())
                .map(|i| members.iter().map(|&j| rows[i][j]).sum())
                .collect();
            let ok = if b == 0 {
                sum.iter().all(|&x| x == 0)
            } else {
                int_in_span(&sum, &earlier)
            };
            if !ok {
                return false;
            }
            earlier.extend(members.iter().map(|&j| column(rows, j)));
        }
        true
    })
}

/// All `x` in `[1,n]^k` with `A x = 0`, lexicographic.
pub fn naive_solutions(rows: &[Vec<i64>], n: i64) -> Vec<Vec<i64>> {
    let k = rows[0].len();
    let mut out = Vec::new();
    let mut x = vec![1i64; k];
    loop {
        if rows
            .iter()
            .all(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() == 0)
        {
            out.push(x.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < n {
                x[i] += 1;
                break;
            }
            x[i] = 1;
        }
    }
}

/// Degeneracy by searching for a common `v` in `[1,max]^d` with every
/// point a positive multiple of it.
pub fn degenerate_brute(points: &[Vec<i64>]) -> bool {
    let d = points[0].len();
    let max = points.iter().flatten().copied().max().unwrap();
    let mut v = vec![1i64; d];
    loop {
        let fits = points
            .iter()
            .all(|p| (1..=max).any(|m| p.iter().zip(&v).all(|(a, b)| *a == m * b)));
        if fits {
            return true;
        }
        let mut i = d;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if v[i] < max {
                v[i] += 1;
                break;
            }
            v[i] = 1;
        }
    }
}

/// Lexicographic index of a point of `[1,n]^d`.
pub fn index(p: &[i64], n: usize) -> usize {
    p.iter().fold(0, |acc, &x| acc * n + (x as usize - 1))
}

/// Sets of point indices that must not be monochromatic: the masked points
/// of every full solution in `[1,n]^d`, by brute force over each coordinate.
pub fn brute_edges(
    coords: &[Vec<Vec<i64>>],
    n: usize,
    mask: &[usize],
    keep: impl Fn(&[Vec<i64>]) -> bool,
) -> Vec<Vec<usize>> {
    let per: Vec<Vec<Vec<i64>>> = coords.iter().map(|rows| naive_solutions(rows, n as i64)).collect();
    let mut edges = BTreeSet::new();
    let mut pick = vec![0usize; per.len()];
    if per.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    loop {
        let pts: Vec<Vec<i64>> = mask
            .iter()
            .map(|&j| pick.iter().enumerate().map(|(i, &s)| per[i][s][j]).collect())
            .collect();
        if keep(&pts) {
            let mut e: Vec<usize> = pts.iter().map(|p| index(p, n)).collect();
            e.sort_unstable();
            e.dedup();
            edges.insert(e);
        }
        let mut i = per.len();
        loop {
            if i == 0 {
                return edges.into_iter().collect();
            }
            i -= 1;
            if pick[i] + 1 < per[i].len() {
                pick[i] += 1;
                break;
            }
            pick[i] = 0;
        }
    }
}

/// Exhaustive check over all `r^points` colorings.
pub fn avoidable_exhaustive(points: usize, r: usize, edges: &[Vec<usize>]) -> bool {
    let total = (r as u64).pow(points as u32);
    (0..total).any(|code| {
        let color = |i: usize| (code / (r as u64).pow(i as u32)) % r as u64;
        edges.iter().all(|e| e.iter().any(|&i| color(i) != color(e[0])))
    })
}

/// Plain backtracking in index order; an edge is checked once its last
/// point is colored. Point 0 is fixed to color 0.
pub fn avoidable_backtrack(points: usize, r: usize, edges: &[Vec<usize>]) -> bool {
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); points];
    for e in edges {
        closing[*e.iter().max().unwrap()].push(e);
    }
    let mut colors = vec![0u8; points];
    fn go(i: usize, r: usize, colors: &mut [u8], closing: &[Vec<&[usize]>]) -> bool {
        if i == colors.len() {
            return true;
        }
        let choices = if i == 0 { 1 } else { r };
        for g in 0..choices as u8 {
            colors[i] = g;
            if closing[i].iter().all(|e| e.iter().any(|&j| colors[j] != g)) && go(i + 1, r, colors, closing) {
                return true;
            }
        }
        false
    }
    points == 0 || go(0, r, &mut colors, &closing)
}
