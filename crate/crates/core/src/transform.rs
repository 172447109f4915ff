//! Vector-valued graph signals and the graph Fourier transform
//! `f̂(k) = Σ_n conj(u_k(n)) f(n)` with inverse `f̌(n) = Σ_k u_k(n) f(k)`.
//!
//! Sums run in ascending index order so results are reproducible bit for
//! bit. A real-field signal transformed by a complex basis is promoted to
//! complex coordinates.

use num_traits::Zero;

use crate::basis::OrthonormalBasis;
use crate::error::{Error, Result};
use crate::exponent::{lp_norm, Exponent};
use crate::scalar::{Real, C};
use crate::valuespace::{ScalarField, ValueElement, ValueSpace};

/// A map from the `N` vertices to a [`ValueSpace`]; stored as an
/// `N × coord_len` row-major coordinate array.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal<T> {
    space: ValueSpace<T>,
    n: usize,
    data: Vec<C<T>>,
}

impl<T: Real> Signal<T> {
    pub fn zeros(space: ValueSpace<T>, n: usize) -> Self {
        Self { space, n, data: vec![C::zero(); n * space.coord_len()] }
    }

    pub fn from_elements(values: Vec<ValueElement<T>>) -> Result<Self> {
        let space = *values.first().ok_or_else(|| Error::Parse("signal needs at least one vertex".into()))?.space();
        if values.iter().any(|v| *v.space() != space) {
            return Err(Error::SpaceMismatch);
        }
        let n = values.len();
        Ok(Self { space, n, data: values.into_iter().flat_map(ValueElement::into_coords).collect() })
    }

    /// One coordinate row per vertex.
    pub fn from_rows(space: ValueSpace<T>, rows: Vec<Vec<C<T>>>) -> Result<Self> {
        let values = rows.into_iter().map(|r| space.element(r)).collect::<Result<Vec<_>>>()?;
        if values.is_empty() {
            return Err(Error::Parse("signal needs at least one vertex".into()));
        }
        Self::from_elements(values)
    }

    pub fn from_real_rows(space: ValueSpace<T>, rows: &[Vec<T>]) -> Result<Self> {
        Self::from_rows(space, rows.iter().map(|r| r.iter().map(|&x| C::new(x, T::zero())).collect()).collect())
    }

    /// `f(n) = α(n)·x` for a scalar profile `α`. The space is promoted to
    /// complex when `α` is.
    pub fn from_profile(profile: &[C<T>], x: &ValueElement<T>) -> Self {
        let complex = profile.iter().any(|z| !z.im.is_zero());
        let space = if complex { x.space().promoted(ScalarField::Complex) } else { *x.space() };
        let data = profile.iter().flat_map(|&a| x.coords().iter().map(move |&c| a * c)).collect();
        Self { space, n: profile.len(), data }
    }

    /// `x` at 0-based vertex `at`, zero elsewhere.
    pub fn spike(n: usize, at: usize, x: &ValueElement<T>) -> Self {
        let mut profile = vec![C::zero(); n];
        profile[at] = C::new(T::one(), T::zero());
        Self::from_profile(&profile, x)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn space(&self) -> &ValueSpace<T> {
        &self.space
    }

    /// Coordinates of the value at 0-based vertex `n`.
    pub fn value(&self, n: usize) -> &[C<T>] {
        let d = self.space.coord_len();
        &self.data[n * d..(n + 1) * d]
    }

    pub fn element(&self, n: usize) -> ValueElement<T> {
        ValueElement::clone(&self.space.element(self.value(n).to_vec()).expect("stored values belong to the space"))
    }

    pub fn coords(&self) -> &[C<T>] {
        &self.data
    }

    /// Norm of each value `‖f(n)‖`.
    pub fn pointwise_norms(&self) -> Vec<T> {
        (0..self.n).map(|n| self.space.norm_of(self.value(n))).collect()
    }

    /// `‖f‖_p = (Σ_n ‖f(n)‖^p)^{1/p}`, `max_n ‖f(n)‖` for `p = ∞`.
    pub fn norm(&self, p: Exponent) -> T {
        lp_norm(self.pointwise_norms(), p)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.space.kind() != other.space.kind() {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C<T>, C<T>) -> C<T>) -> Result<Self> {
        self.check_compatible(other)?;
        let space = self.space.promoted(other.space.field());
        Ok(Self { space, n: self.n, data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect() })
    }

    /// Pointwise sum; spaces must agree up to the scalar field.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// `λ·f`; a complex `λ` promotes a real signal.
    pub fn scale(&self, lambda: C<T>) -> Self {
        let space = if lambda.im.is_zero() { self.space } else { self.space.promoted(ScalarField::Complex) };
        Self { space, n: self.n, data: self.data.iter().map(|&a| a * lambda).collect() }
    }

    /// `g(n) = α(n)·f(n)` for a scalar profile `α`.
    pub fn mul_profile(&self, profile: &[C<T>]) -> Result<Self> {
        if profile.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: profile.len() });
        }
        let d = self.space.coord_len();
        let complex = profile.iter().any(|z| !z.im.is_zero());
        let space = if complex { self.space.promoted(ScalarField::Complex) } else { self.space };
        let data = self.data.iter().enumerate().map(|(i, &x)| profile[i / d] * x).collect();
        Ok(Self { space, n: self.n, data })
    }

    /// `⟨f, g⟩ = Σ_n ⟨f(n), g(n)⟩`.
    pub fn inner(&self, other: &Self) -> Result<C<T>> {
        self.check_compatible(other)?;
        let d = self.space.coord_len();
        let mut acc = C::zero();
        for n in 0..self.n {
            acc += self.space.inner_of(&self.data[n * d..(n + 1) * d], &other.data[n * d..(n + 1) * d])?;
        }
        Ok(acc)
    }

    /// Largest coordinate-wise modulus of `self − other`, ignoring the
    /// scalar field tag.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.data.len(), other.data.len(), "signals of different shape");
        self.data.iter().zip(&other.data).fold(T::zero(), |m, (a, b)| m.max((a - b).norm()))
    }

    /// Largest coordinate modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, a| m.max(a.norm()))
    }
}

fn check_dim<T: Real>(f: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<()> {
    if f.len() != b.n() {
        return Err(Error::DimensionMismatch { expected: b.n(), found: f.len() });
    }
    Ok(())
}

/// `out(i) = Σ_j w(i, j) · f(j)` with `j` ascending.
fn weighted_sum<T: Real>(f: &Signal<T>, field: ScalarField, w: impl Fn(usize, usize) -> C<T>) -> Signal<T> {
    let n = f.len();
    let d = f.space().coord_len();
    let mut data = vec![C::zero(); n * d];
    for i in 0..n {
        let out = &mut data[i * d..(i + 1) * d];
        for j in 0..n {
            let c = w(i, j);
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(f.value(j)) {
                *o += c * x;
            }
        }
    }
    Signal { space: f.space().promoted(field), n, data }
}

/// Graph Fourier transform.
pub fn gft<T: Real>(f: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<Signal<T>> {
    check_dim(f, b)?;
    Ok(weighted_sum(f, b.field(), |k, n| b.coeff(k, n).conj()))
}

/// Inverse graph Fourier transform.
pub fn igft<T: Real>(f: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<Signal<T>> {
    check_dim(f, b)?;
    Ok(weighted_sum(f, b.field(), |n, k| b.coeff(k, n)))
}

/// Whether transforming `f` under `b` changes its scalar field.
pub fn promotes<T: Real>(f: &Signal<T>, b: &OrthonormalBasis<T>) -> bool {
    f.space().field() == ScalarField::Real && b.field() == ScalarField::Complex
}

/// `(⟨f̂, ĝ⟩, ⟨f, g⟩)`; equal for every Hilbert value space.
pub fn parseval_check<T: Real>(f: &Signal<T>, g: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<(C<T>, C<T>)> {
    if !f.space().is_hilbert() {
        return Err(Error::NotHilbert);
    }
    let (fh, gh) = (gft(f, b)?, gft(g, b)?);
    Ok((fh.inner(&gh)?, f.inner(g)?))
}

/// `‖f̂‖₂ / ‖f‖₂`, defined for every value space.
pub fn plancherel_ratio<T: Real>(f: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<T> {
    if f.is_zero() {
        return Err(Error::ZeroSignal);
    }
    Ok(gft(f, b)?.norm(Exponent::TWO) / f.norm(Exponent::TWO))
}
