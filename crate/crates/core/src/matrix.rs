//! Dense row-major matrices over complex scalars.

use std::ops::{Index, IndexMut};

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{re, Real, C};

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<C<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = re(T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Build from complex rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<C<T>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { expected: c, found: bad.len() });
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| re(x)).collect()).collect())
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

    /// Bounds-checked entry access (0-based).
    pub fn get(&self, r: usize, c: usize) -> Option<C<T>> {
        (r < self.rows && c < self.cols).then(|| self.data[r * self.cols + c])
    }

    pub fn row(&self, r: usize) -> &[C<T>] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<C<T>> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(C::zero(), |acc, k| acc + self[(r, k)] * rhs[(k, c)])
        }))
    }

    pub fn matvec(&self, v: &[C<T>]) -> Result<Vec<C<T>>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(C::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        Ok(Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() })
    }

    /// Largest entry modulus together with its (row, col) position.
    /// Ties resolve to the first position in row-major order.
    pub fn max_abs(&self) -> (T, usize, usize) {
        let mut best = (T::zero(), 0, 0);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self[(r, c)].norm();
                if a > best.0 {
                    best = (a, r, c);
                }
            }
        }
        best
    }

    /// `max |a_ij - a_ji|` including imaginary parts, plus the largest
    /// imaginary component; both vanish for real symmetric matrices.
    pub fn symmetry_defect(&self) -> T {
        let mut worst = T::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                worst = worst.max((self[(r, c)] - self[(c, r)]).norm()).max(self[(r, c)].im.abs());
            }
        }
        worst
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == T::zero())
    }

    /// Numerical rank by Gaussian elimination with partial pivoting;
    /// pivots with modulus `<= tol` count as zero.
    pub fn rank(&self, tol: T) -> usize {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let (piv, mag) = (rank..m)
                .map(|r| (r, a[(r, col)].norm()))
                .fold((rank, T::zero()), |best, cur| if cur.1 > best.1 { cur } else { best });
            if mag <= tol {
                continue;
            }
            for c in 0..n {
                a.data.swap(rank * n + c, piv * n + c);
            }
            let p = a[(rank, col)];
            for r in (rank + 1)..m {
                let factor = a[(r, col)] / p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a[(rank, c)];
                    a[(r, c)] -= factor * v;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl<T> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (r, c): (usize, usize)) -> &Self::Output {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds for {}x{}", self.rows, self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Self::Output {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds for {}x{}", self.rows, self.cols);
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn get_is_bounds_checked() {
        let m = DenseMatrix::<f64>::identity(2);
        assert_eq!(m.get(1, 1), Some(re(1.0)));
        assert_eq!(m.get(2, 0), None);
    }

    #[test]
    #[should_panic]
    fn index_out_of_bounds_panics() {
        let m = DenseMatrix::<f64>::identity(2);
        let _ = m[(0, 2)];
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(DenseMatrix::<f64>::from_real_rows(&[vec![1.0, 2.0], vec![3.0]]).is_err());
    }

    #[test]
    fn adjoint_conjugates() {
        let m = DenseMatrix::from_rows(vec![vec![C::new(1.0, 2.0), C::new(0.0, 1.0)], vec![re(3.0), re(4.0)]]).unwrap();
        let a = m.adjoint();
        assert_eq!(a[(0, 0)], C::new(1.0, -2.0));
        assert_eq!(a[(1, 0)], C::new(0.0, -1.0));
        assert_eq!(a[(0, 1)], re(3.0));
    }

    #[test]
    fn rank_of_simple_matrices() {
        let full = DenseMatrix::<f64>::identity(3);
        assert_eq!(full.rank(1e-12), 3);
        let deficient = DenseMatrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(deficient.rank(1e-12), 1);
        assert_eq!(DenseMatrix::<f64>::zeros(2, 2).rank(1e-12), 0);
    }
}
