//! Small dense exact linear algebra over Q(√5).
//!
//! Matrices here are at most 8×8 (the rank of the largest supported group),
//! so naive Gaussian elimination with big-rational arithmetic is plenty.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::Mul;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn set_column(&mut self, j: usize, col: &[Scalar]) {
        assert_eq!(col.len(), self.rows);
        for (i, v) in col.iter().enumerate() {
            self[(i, j)] = v.clone();
        }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// `self + c·I`.
    pub fn plus_scaled_identity(&self, c: &Scalar) -> Matrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = &m[(i, i)] + c;
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    acc += &(&self[(i, j)] * &v[j]);
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].inv();
            for k in col..self.cols {
                self[(row, k)] = &self[(row, k)] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for k in col..self.cols {
                        let t = &self[(row, k)] * &f;
                        self[(r, k)] = &self[(r, k)] - &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    /// Rank over Q(√5), by exact elimination.
    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel { v : Mv = 0 }. Empty iff rank = cols.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -&m[(prow, free)];
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            det = &det * &m[(col, col)];
            let inv = m[(col, col)].inv();
            for r in col + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] * &inv;
                for k in col..m.cols {
                    let t = &m[(col, k)] * &f;
                    m[(r, k)] = &m[(r, k)] - &t;
                }
            }
        }
        det
    }

    /// Coefficients of det(xI - M), monic, descending powers.
    ///
    /// Uses the Faddeev–LeVerrier recursion, which only divides by integers.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::one()];
        let mut mk = self.clone();
        for k in 1..=n {
            let ck = -mk.trace().div_int(k as i64);
            coeffs.push(ck.clone());
            if k < n {
                mk = self * &mk.plus_scaled_identity(&ck);
            }
        }
        coeffs
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc += &(&self[(i, k)] * &rhs[(k, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dimension of the intersection of two subspaces given by bases.
pub fn intersection_dim(a: &[Vec<Scalar>], b: &[Vec<Scalar>], ambient: usize) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    // dim(A ∩ B) = dim A + dim B - dim(A + B)
    let mut rows: Vec<Vec<Scalar>> = a.to_vec();
    rows.extend(b.iter().cloned());
    debug_assert!(rows.iter().all(|v| v.len() == ambient));
    let sum_dim = Matrix::from_rows(rows).rank();
    a.len() + b.len() - sum_dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zero(3, 3).rank(), 0);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
        assert_eq!(Matrix::zero(2, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(Matrix::identity(4).determinant(), s(1));
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]]);
        assert_eq!(m.determinant(), s(-2));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn charpoly_matches_known_values() {
        // det(xI - [[2,1],[1,2]]) = x² - 4x + 3
        let m = Matrix::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(2)]]);
        assert_eq!(m.charpoly(), vec![s(1), s(-4), s(3)]);
        // constant coefficient is (-1)^n det
        let d = m.determinant();
        assert_eq!(m.charpoly()[2], d);
    }

    #[test]
    fn intersection_dims() {
        let e1 = vec![s(1), s(0), s(0)];
        let e2 = vec![s(0), s(1), s(0)];
        let e3 = vec![s(0), s(0), s(1)];
        let plane_a = vec![e1.clone(), e2.clone()];
        let plane_b = vec![e2.clone(), e3.clone()];
        assert_eq!(intersection_dim(&plane_a, &plane_b, 3), 1);
        let line = vec![e1.clone()];
        assert_eq!(intersection_dim(&line, &plane_b, 3), 0);
        assert_eq!(intersection_dim(&plane_a, &plane_a, 3), 2);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-6i64..6, n * n).prop_map(move |vals| {
            let mut m = Matrix::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = s(vals[i * n + j]);
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(4)) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), 4);
            for v in m.kernel_basis() {
                prop_assert!(m.apply(&v).iter().all(Scalar::is_zero));
            }
        }
    }
}
