//! Orthonormal bases of `𝕂^N`, stored as the unitary matrix `U` whose
//! column `k` is the basis vector `u_k` and whose entry at row `n`,
//! column `k` is `u_k(n)`.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{re, Real, C};
use crate::valuespace::ScalarField;

pub const UNITARY_TOL: f64 = 1e-10;
pub const SYMMETRY_TOL: f64 = 1e-12;
pub const JACOBI_TOL: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalBasis<T> {
    u: DenseMatrix<T>,
    eigenvalues: Option<Vec<T>>,
    field: ScalarField,
}

impl<T: Real> OrthonormalBasis<T> {
    fn trusted(u: DenseMatrix<T>, eigenvalues: Option<Vec<T>>) -> Self {
        let field = if u.is_real() { ScalarField::Real } else { ScalarField::Complex };
        Self { u, eigenvalues, field }
    }

    pub fn identity(n: usize) -> Self {
        Self::trusted(DenseMatrix::identity(n), None)
    }

    /// Validates `‖U*U − I‖_max ≤ tol` and `‖UU* − I‖_max ≤ tol`.
    pub fn from_matrix(u: DenseMatrix<T>, tol: T) -> Result<Self> {
        if !u.is_square() {
            return Err(Error::NotSquare { rows: u.rows(), cols: u.cols() });
        }
        let (dev, row, col) = unitarity_defect(&u);
        if dev.is_nan() || dev > tol {
            return Err(Error::NotUnitary { deviation: dev.to_f64().unwrap_or(f64::NAN), row, col });
        }
        Ok(Self::trusted(u, None))
    }

    pub fn n(&self) -> usize {
        self.u.rows()
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.u
    }

    pub fn into_matrix(self) -> DenseMatrix<T> {
        self.u
    }

    /// Ascending eigenvalues when the basis came from [`eigenbasis`].
    pub fn eigenvalues(&self) -> Option<&[T]> {
        self.eigenvalues.as_deref()
    }

    /// `Real` iff every entry has zero imaginary part.
    pub fn field(&self) -> ScalarField {
        self.field
    }

    /// `u_k(n)` with 0-based `k` (column) and `n` (row).
    pub fn coeff(&self, k: usize, n: usize) -> C<T> {
        self.u[(n, k)]
    }

    /// Basis vector `u_k` (0-based).
    pub fn column(&self, k: usize) -> Vec<C<T>> {
        self.u.column(k)
    }

    /// `u(n) = (u_1(n), …, u_N(n))` (0-based).
    pub fn row(&self, n: usize) -> &[C<T>] {
        self.u.row(n)
    }

    /// The basis whose matrix is `U*`.
    pub fn adjoint(&self) -> Self {
        Self { u: self.u.adjoint(), eigenvalues: None, field: self.field }
    }

    /// Largest deviation of `U*U` or `UU*` from the identity, with position.
    pub fn unitarity_defect(&self) -> (T, usize, usize) {
        unitarity_defect(&self.u)
    }
}

fn unitarity_defect<T: Real>(u: &DenseMatrix<T>) -> (T, usize, usize) {
    let n = u.rows();
    let id = DenseMatrix::identity(n);
    let uh = u.adjoint();
    let a = uh.matmul(u).and_then(|m| m.sub(&id)).expect("square").max_abs();
    let b = u.matmul(&uh).and_then(|m| m.sub(&id)).expect("square").max_abs();
    if b.0 > a.0 {
        b
    } else {
        a
    }
}

/// Normalized DFT basis `u_k(n) = N^{-1/2} e^{2πi (n-1)(k-1) / N}`,
/// the eigenbasis of the directed cycle.
///
/// Phases on the coordinate axes (multiples of a quarter turn) are
/// produced exactly, so e.g. `N = 2` and `N = 4` carry no rounding noise.
pub fn dft_basis<T: Real>(n: usize) -> OrthonormalBasis<T> {
    let scale = T::from_usize_lossy(n).sqrt().recip();
    let u = DenseMatrix::from_fn(n, n, |row, col| {
        let j = (row * col) % n;
        let phase = if (4 * j).is_multiple_of(n) {
            match 4 * j / n {
                0 => C::new(T::one(), T::zero()),
                1 => C::new(T::zero(), T::one()),
                2 => C::new(-T::one(), T::zero()),
                _ => C::new(T::zero(), -T::one()),
            }
        } else {
            let th = T::TAU() * T::from_usize_lossy(j) / T::from_usize_lossy(n);
            C::new(th.cos(), th.sin())
        };
        phase * scale
    });
    OrthonormalBasis::trusted(u, None)
}

/// Orthonormal eigenvectors of a real symmetric matrix via cyclic Jacobi
/// rotations, ordered by ascending eigenvalue (stable with respect to the
/// original column order). Each eigenvector is signed so that its first
/// entry with magnitude above `1e-9` is positive.
pub fn eigenbasis<T: Real>(m: &DenseMatrix<T>) -> Result<OrthonormalBasis<T>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let defect = m.symmetry_defect();
    if defect > T::tol(SYMMETRY_TOL) {
        return Err(Error::NotSymmetric { deviation: defect.to_f64().unwrap_or(f64::NAN) });
    }
    let n = m.rows();
    let (values, vectors) = jacobi_eigen(m)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite eigenvalues"));

    let cutoff = T::lit(1e-9);
    let mut u = DenseMatrix::zeros(n, n);
    for (k, &src) in order.iter().enumerate() {
        let lead = (0..n).map(|r| vectors[r * n + src]).find(|x| x.abs() > cutoff).unwrap_or(T::one());
        let sign = if lead < T::zero() { -T::one() } else { T::one() };
        for r in 0..n {
            u[(r, k)] = re(sign * vectors[r * n + src]);
        }
    }
    let evals = order.iter().map(|&i| values[i]).collect();
    Ok(OrthonormalBasis::trusted(u, Some(evals)))
}

/// Returns (unsorted eigenvalues, row-major eigenvector matrix with
/// eigenvectors in columns).
fn jacobi_eigen<T: Real>(m: &DenseMatrix<T>) -> Result<(Vec<T>, Vec<T>)> {
    let n = m.rows();
    let mut a: Vec<T> = m.entries().iter().map(|z| z.re).collect();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let scale = a.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    let threshold = T::tol(JACOBI_TOL) * scale;

    let off = |a: &[T]| {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off(&a) <= threshold {
            return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.is_zero() {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (T::lit(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if off(&a) <= threshold {
        return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
    }
    Err(Error::NoConvergence { sweeps: JACOBI_MAX_SWEEPS })
}
