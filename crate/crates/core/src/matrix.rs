//! Exact rational matrices: the linear algebra behind the phase-type
//! moment formulas.
//!
//! Inversion is Gauss-Jordan elimination with exact pivoting: a pivot is
//! zero iff its numerator is zero, so there are no tolerance knobs. The
//! first nonzero entry in the column is taken as the pivot.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>, // row-major
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn row_vector(v: Vec<Rational>) -> Self {
        let n = v.len();
        Matrix::new(1, n, v)
    }

    pub fn column_of_ones(n: usize) -> Self {
        Matrix::new(n, 1, vec![Rational::one(); n])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    /// The single entry of a 1x1 matrix.
    pub fn scalar(&self) -> Rational {
        assert_eq!((self.rows, self.cols), (1, 1), "not a 1x1 matrix");
        self.entries[0].clone()
    }

    pub fn row_sum(&self, r: usize) -> Rational {
        (0..self.cols).map(|c| self.get(r, c).clone()).sum()
    }

    /// A^n by binary exponentiation; A^0 is the identity.
    pub fn pow(&self, mut n: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow requires a square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact inverse by Gauss-Jordan elimination. Reports the row whose
    /// elimination step found no nonzero pivot.
    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse requires a square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix { pivot_row: col })?;
            if pivot_row != col {
                a.swap_rows(col, pivot_row);
                inv.swap_rows(col, pivot_row);
            }
            let pivot = a.get(col, col).clone();
            a.scale_row(col, &pivot);
            inv.scale_row(col, &pivot);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.subtract_scaled_row(r, col, &factor);
                inv.subtract_scaled_row(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for c in 0..self.cols {
            self.entries.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, divisor: &Rational) {
        for c in 0..self.cols {
            let v = self.get(r, c).clone();
            *self.get_mut(r, c) = v / divisor;
        }
    }

    /// row r -= factor * row src
    fn subtract_scaled_row(&mut self, r: usize, src: usize, factor: &Rational) {
        for c in 0..self.cols {
            let delta = self.get(src, c) * factor;
            let v = self.get(r, c).clone();
            *self.get_mut(r, c) = v - delta;
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in add");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Matrix::new(self.rows, self.cols, entries)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sub");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Matrix::new(self.rows, self.cols, entries)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mul");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let delta = a * rhs.get(k, j);
                    *out.get_mut(i, j) += delta;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn scalar_reciprocal() {
        let a = Matrix::new(1, 1, vec![rat(1, 2)]);
        assert_eq!(a.inverse().unwrap(), Matrix::new(1, 1, vec![rat_int(2)]));
    }

    #[test]
    fn zeroth_power_is_identity() {
        let a = m(vec![vec![3, 1], vec![4, 1]]);
        assert_eq!(a.pow(0), Matrix::identity(2));
        assert_eq!(a.pow(1), a);
        assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn rank_deficient_matrix_is_reported() {
        let a = m(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(a.inverse(), Err(Error::SingularMatrix { pivot_row: 1 }));
        let z = m(vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(z.inverse(), Err(Error::SingularMatrix { pivot_row: 0 }));
    }

    #[test]
    fn inverse_with_row_swaps() {
        let a = m(vec![vec![0, 1], vec![1, 0]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn conformability_is_checked() {
        let a = m(vec![vec![1, 2]]);
        let _ = &a + &m(vec![vec![1], vec![2]]);
    }

    // Random invertible matrices as unit-lower times upper with nonzero
    // diagonal, so the property never needs to discard cases.
    fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
        let lower = proptest::collection::vec(-5i64..=5, n * n);
        let upper = proptest::collection::vec((-5i64..=5, 1i64..=4), n * n);
        (lower, upper).prop_map(move |(l, u)| {
            let mut lm = Matrix::identity(n);
            let mut um = Matrix::zero(n, n);
            for r in 0..n {
                for c in 0..n {
                    if c < r {
                        *lm.get_mut(r, c) = rat_int(l[r * n + c]);
                    }
                    if c > r {
                        *um.get_mut(r, c) = rat(u[r * n + c].0, u[r * n + c].1);
                    }
                }
                let (dn, dd) = u[r * n + r];
                *um.get_mut(r, r) = rat(if dn == 0 { 1 } else { dn }, dd);
            }
            &lm * &um
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn inverse_round_trip(a in (1usize..=5).prop_flat_map(invertible)) {
            let n = a.rows();
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, Matrix::identity(n));
            prop_assert_eq!(&inv * &a, Matrix::identity(n));
        }
    }
}
