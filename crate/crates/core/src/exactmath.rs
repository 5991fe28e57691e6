//! Exact rational linear algebra.
//!
//! Values are [`num_rational::BigRational`], which keeps every result in
//! lowest terms with a positive denominator, so equality is structural.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{RadoError, Result};

pub type Rational = num_rational::BigRational;
pub type RVector = Vec<Rational>;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(RadoError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RMatrix { rows, cols, entries })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[RVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(RadoError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row.iter().cloned());
        }
        Ok(RMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_integer_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<RVector> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| rational(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> RMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RMatrix) -> Result<RMatrix> {
        if self.cols != other.rows {
            return Err(RadoError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(l, j)];
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: RMatrix,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

impl RrefResult {
    /// Columns that carry no pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.rref.cols)
            .filter(|c| !self.pivot_columns.contains(c))
            .collect()
    }
}

/// Gauss-Jordan elimination to reduced row echelon form.
pub fn rref(m: &RMatrix) -> RrefResult {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for j in col..a.cols {
            a[(row, j)] *= &inv;
        }
        for i in 0..a.rows {
            if i == row || a[(i, col)].is_zero() {
                continue;
            }
            let factor = a[(i, col)].clone();
            for j in col..a.cols {
                let t = &factor * &a[(row, j)];
                a[(i, j)] -= t;
            }
        }
        pivots.push(col);
        row += 1;
    }
    let rank = pivots.len();
    RrefResult {
        rref: a,
        pivot_columns: pivots,
        rank,
    }
}

pub fn rank(m: &RMatrix) -> usize {
    rref(m).rank
}

/// Whether `v` is a rational linear combination of `basis`.
///
/// The empty combination gives the zero vector, so `in_span(0, [])` holds.
pub fn in_span(v: &[Rational], basis: &[RVector]) -> Result<bool> {
    for b in basis {
        if b.len() != v.len() {
            return Err(RadoError::DimensionMismatch {
                expected: v.len(),
                found: b.len(),
            });
        }
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if basis.is_empty() {
        return Ok(false);
    }
    // Vectors as columns of an augmented matrix [B | v].
    let dim = v.len();
    let mut aug = RMatrix::zeros(dim, basis.len() + 1);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..dim {
            aug[(i, j)] = b[i].clone();
        }
    }
    for i in 0..dim {
        aug[(i, basis.len())] = v[i].clone();
    }
    let r = rref(&aug);
    Ok(!r.pivot_columns.contains(&basis.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ivec(xs: &[i64]) -> RVector {
        xs.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn identity_rref() {
        let r = rref(&RMatrix::identity(3));
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_columns, vec![0, 1, 2]);
        assert_eq!(r.rref, RMatrix::identity(3));
    }

    #[test]
    fn single_row() {
        let m = RMatrix::from_integer_rows(&[[1, 1, -1]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_columns, vec![0]);
        assert_eq!(r.rref, m);
        assert_eq!(r.free_columns(), vec![1, 2]);
    }

    #[test]
    fn vandermonde_full_rank() {
        let m = RMatrix::from_integer_rows(&[[1, 1, 1], [1, 2, 4], [1, 3, 9]]).unwrap();
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&RMatrix::zeros(2, 3)), 0);
        assert_eq!(rank(&RMatrix::zeros(0, 0)), 0);
        assert_eq!(rank(&RMatrix::from_integer_rows(&[[1, 1, -1, 0]]).unwrap()), 1);
        let a2 = RMatrix::from_integer_rows(&[[-1, 1, 0, -1], [0, -1, 1, -1]]).unwrap();
        assert_eq!(rank(&a2), 2);
    }

    #[test]
    fn rref_with_fractions() {
        let m = RMatrix::from_integer_rows(&[[2, 3], [4, 1]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.rref, RMatrix::identity(2));
        let m = RMatrix::from_integer_rows(&[[2, 3, 1]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.rref[(0, 1)], Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn span_examples() {
        assert!(in_span(&ivec(&[1, 1]), &[ivec(&[1, 0]), ivec(&[0, 1])]).unwrap());
        assert!(in_span(&ivec(&[0, 0, 0]), &[]).unwrap());
        assert!(!in_span(&ivec(&[0, 1]), &[]).unwrap());
        assert!(in_span(&ivec(&[-1, -1]), &[ivec(&[-1, 0]), ivec(&[1, -1]), ivec(&[0, 1])]).unwrap());
        assert!(!in_span(&ivec(&[1, 1]), &[ivec(&[1, 0]), ivec(&[2, 0])]).unwrap());
    }

    #[test]
    fn span_dimension_mismatch() {
        assert!(matches!(
            in_span(&ivec(&[1, 1]), &[ivec(&[1])]),
            Err(RadoError::DimensionMismatch { .. })
        ));
    }
}
