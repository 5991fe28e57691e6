//! Vandermonde point families for `p_1 + .. + p_k = q_1 + .. + q_l`.
//!
//! For increasing indices `i_1 < .. < i_{k+l}` let
//! `P(s,t) = (i_t - i_s, i_t^2 - i_s^2, .., i_t^d - i_s^d)`. Then
//! `p_j = P(j, j+1)` for `j < k`, `p_k = P(k, k+l)`, `q_j = P(k+j, k+j+1)`
//! for `j < l` and `q_l = P(1, k+1)`; both sides telescope to `P(1, k+l)`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{RadoError, Result};
use crate::exactmath::{rank, RMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationInput {
    pub indices: Vec<u64>,
    pub k: usize,
    pub l: usize,
    pub d: usize,
}

impl ObservationInput {
    pub fn new(indices: Vec<u64>, k: usize, l: usize, d: usize) -> Result<Self> {
        if k < 2 || l < 2 || d < 1 {
            return Err(RadoError::InvalidArgument(format!(
                "need k >= 2, l >= 2, d >= 1 (got k={k}, l={l}, d={d})"
            )));
        }
        if indices.len() != k + l {
            return Err(RadoError::DimensionMismatch {
                expected: k + l,
                found: indices.len(),
            });
        }
        if indices.first() == Some(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(RadoError::InvalidArgument(
                "indices must be strictly increasing positive integers".into(),
            ));
        }
        Ok(ObservationInput { indices, k, l, d })
    }
}

pub type BigPoint = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationSolution {
    #[serde(with = "big_points")]
    pub p_points: Vec<BigPoint>,
    #[serde(with = "big_points")]
    pub q_points: Vec<BigPoint>,
}

mod big_points {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    // Decimal strings keep large coordinates exact in JSON.
    pub fn serialize<S: Serializer>(pts: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<String>> = pts
            .iter()
            .map(|p| p.iter().map(ToString::to_string).collect())
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let v: Vec<Vec<String>> = Vec::deserialize(d)?;
        v.iter()
            .map(|p| p.iter().map(|x| x.parse().map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}

fn difference_point(indices: &[u64], s: usize, t: usize, d: usize) -> BigPoint {
    let a = BigInt::from(indices[s - 1]);
    let b = BigInt::from(indices[t - 1]);
    (1..=d as u32).map(|e| b.pow(e) - a.pow(e)).collect()
}

pub fn build_observation_solution(input: &ObservationInput) -> ObservationSolution {
    let (k, l, d) = (input.k, input.l, input.d);
    let idx = &input.indices;
    let mut p_points: Vec<BigPoint> = (1..k).map(|j| difference_point(idx, j, j + 1, d)).collect();
    p_points.push(difference_point(idx, k, k + l, d));
    let mut q_points: Vec<BigPoint> = (1..l).map(|j| difference_point(idx, k + j, k + j + 1, d)).collect();
    q_points.push(difference_point(idx, 1, k + 1, d));
    ObservationSolution { p_points, q_points }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Pass,
    Fail,
    NotApplicable,
}

impl Check {
    fn from_bool(b: bool) -> Self {
        if b {
            Check::Pass
        } else {
            Check::Fail
        }
    }

    pub fn holds(self) -> bool {
        self != Check::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationReport {
    pub sum_identity: Check,
    pub p_independent: Check,
    pub q_independent: Check,
    pub prefix_disjoint: Check,
    pub all_positive: Check,
}

impl ObservationReport {
    pub fn all_hold(&self) -> bool {
        [
            self.sum_identity,
            self.p_independent,
            self.q_independent,
            self.prefix_disjoint,
            self.all_positive,
        ]
        .iter()
        .all(|c| c.holds())
    }
}

fn rank_of(points: &[BigPoint]) -> usize {
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| p.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    rank(&RMatrix::from_rows(&rows).expect("points share a dimension"))
}

fn column_sum(points: &[BigPoint], d: usize) -> BigPoint {
    let mut acc = vec![BigInt::zero(); d];
    for p in points {
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
    }
    acc
}

/// Sum identity, independence of the first `d` points on each side, and
/// disjointness of `{p_1..p_{k-1}}` from `{q_1..q_{l-1}}`.
///
/// Independence is not applicable when `d` exceeds `k-1` (resp. `l-1`);
/// disjointness is not applicable for `d = 1`.
pub fn check_observation(sol: &ObservationSolution, d: usize, k: usize, l: usize) -> ObservationReport {
    let sum_identity = Check::from_bool(
        sol.p_points.len() == k
            && sol.q_points.len() == l
            && column_sum(&sol.p_points, d) == column_sum(&sol.q_points, d),
    );
    let independence = |points: &[BigPoint], side: usize| {
        if d + 1 > side {
            Check::NotApplicable
        } else {
            Check::from_bool(rank_of(&points[..d]) == d)
        }
    };
    let prefix_disjoint = if d < 2 {
        Check::NotApplicable
    } else {
        let qs = &sol.q_points[..l - 1];
        Check::from_bool(sol.p_points[..k - 1].iter().all(|p| !qs.contains(p)))
    };
    let all_positive = Check::from_bool(
        sol.p_points
            .iter()
            .chain(&sol.q_points)
            .all(|p| p.len() == d && p.iter().all(|x| *x > BigInt::zero())),
    );
    ObservationReport {
        sum_identity,
        p_independent: independence(&sol.p_points, k),
        q_independent: independence(&sol.q_points, l),
        prefix_disjoint,
        all_positive,
    }
}
