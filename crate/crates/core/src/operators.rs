//! Graph convolution `α ∗ f = igft(α̂ · f̂)` of a scalar signal with a
//! vector-valued one, the translation `T_m f = δ_m ∗ f` with its kernel,
//! range, inverse and adjoint, and Young-type norm bounds.
//!
//! Vertex arguments `m` are 1-based, as are the reported indices in `K0`.

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::basis::OrthonormalBasis;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::matrix::DenseMatrix;
use crate::norms::mixed_norm;
use crate::scalar::{re, Real, C};
use crate::transform::{gft, igft, Signal};
use crate::valuespace::{ScalarField, ValueSpace};

/// Default modulus below which `u_k(m)` counts as zero.
pub const ZERO_TOL: f64 = 1e-12;

/// Tolerance on `‖u(m)‖_∞ = (N − d)^{-1/2}` for the isometry test.
pub const ISOMETRY_TOL: f64 = 1e-10;

/// A `𝕂`-valued signal.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarSignal<T> {
    values: Vec<C<T>>,
}

impl<T: Real> ScalarSignal<T> {
    pub fn new(values: Vec<C<T>>) -> Self {
        Self { values }
    }

    pub fn from_real(values: &[T]) -> Self {
        Self { values: values.iter().map(|&x| re(x)).collect() }
    }

    pub fn values(&self) -> &[C<T>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn field(&self) -> ScalarField {
        if self.values.iter().all(|z| z.im.is_zero()) {
            ScalarField::Real
        } else {
            ScalarField::Complex
        }
    }

    /// The same values as a signal in the one-dimensional Euclidean space.
    pub fn to_signal(&self) -> Signal<T> {
        let space = ValueSpace::euclidean(1, self.field()).expect("dimension one");
        Signal::from_rows(space, self.values.iter().map(|&z| vec![z]).collect()).expect("values match the field")
    }

    /// First coordinate at every vertex.
    pub fn from_signal(f: &Signal<T>) -> Self {
        Self { values: (0..f.len()).map(|n| f.value(n)[0]).collect() }
    }

    /// `(Σ_n |α(n)|^p)^{1/p}`.
    pub fn norm(&self, p: Exponent) -> T {
        crate::exponent::lp_norm(self.values.iter().map(|z| z.norm()), p)
    }
}

/// `α̂(k) = Σ_n conj(u_k(n)) α(n)`.
pub fn scalar_gft<T: Real>(alpha: &ScalarSignal<T>, b: &OrthonormalBasis<T>) -> Result<Vec<C<T>>> {
    Ok(ScalarSignal::from_signal(&gft(&alpha.to_signal(), b)?).values)
}

/// `igft(μ · f̂)` for a spectral multiplier `μ`.
pub fn spectral_multiply<T: Real>(f: &Signal<T>, b: &OrthonormalBasis<T>, mult: &[C<T>]) -> Result<Signal<T>> {
    igft(&gft(f, b)?.mul_profile(mult)?, b)
}

/// Spectral-domain convolution `α ∗ f`.
pub fn convolve<T: Real>(alpha: &ScalarSignal<T>, f: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<Signal<T>> {
    if alpha.len() != b.n() {
        return Err(Error::DimensionMismatch { expected: b.n(), found: alpha.len() });
    }
    spectral_multiply(f, b, &scalar_gft(alpha, b)?)
}

/// `ε = u_1 + ⋯ + u_N`, whose transform is identically one.
pub fn convolution_identity<T: Real>(b: &OrthonormalBasis<T>) -> ScalarSignal<T> {
    ScalarSignal::new((0..b.n()).map(|n| b.row(n).iter().fold(C::zero(), |acc, &z| acc + z)).collect())
}

fn vertex_index(m: usize, n: usize) -> Result<usize> {
    if m == 0 || m > n {
        return Err(Error::VertexOutOfRange { vertex: m, n });
    }
    Ok(m - 1)
}

/// The spike `δ_m` (1-based `m`).
pub fn delta<T: Real>(m: usize, n: usize) -> Result<ScalarSignal<T>> {
    let i = vertex_index(m, n)?;
    let mut v = vec![C::zero(); n];
    v[i] = re(T::one());
    Ok(ScalarSignal::new(v))
}

/// `T_m f`, the spectral multiplier `conj(u_k(m))` applied to `f̂`.
pub fn translate<T: Real>(m: usize, f: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<Signal<T>> {
    let i = vertex_index(m, b.n())?;
    let mult: Vec<C<T>> = b.row(i).iter().map(|z| z.conj()).collect();
    spectral_multiply(f, b, &mult)
}

/// Spectral indices (0-based) with `|u_k(m)| ≤ tol`.
fn vanishing<T: Real>(i: usize, b: &OrthonormalBasis<T>, tol: T) -> Vec<usize> {
    b.row(i).iter().enumerate().filter(|(_, z)| z.norm() <= tol).map(|(k, _)| k).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct TranslationAnalysis<T> {
    /// 1-based vertex.
    pub m: usize,
    /// 1-based spectral indices with `u_k(m) = 0`.
    pub k0: Vec<usize>,
    pub d: usize,
    pub invertible: bool,
    /// `‖u(m)‖_∞`.
    pub row_sup: T,
    /// `max{|u_k(m)| : k ∉ K0}`; present for Hilbert value spaces.
    pub induced_norm: Option<T>,
    /// `1 / min{|u_k(m)| : k ∉ K0}`; present for Hilbert value spaces.
    pub induced_inverse_norm: Option<T>,
    pub isometry_condition: bool,
}

pub fn analyze_translation<T: Real>(m: usize, b: &OrthonormalBasis<T>, hilbert: bool) -> Result<TranslationAnalysis<T>> {
    analyze_translation_with_tol(m, b, hilbert, T::lit(ZERO_TOL))
}

pub fn analyze_translation_with_tol<T: Real>(
    m: usize,
    b: &OrthonormalBasis<T>,
    hilbert: bool,
    tol: T,
) -> Result<TranslationAnalysis<T>> {
    let n = b.n();
    let i = vertex_index(m, n)?;
    let k0 = vanishing(i, b, tol);
    let d = k0.len();
    let live: Vec<T> = b.row(i).iter().map(|z| z.norm()).filter(|&a| a > tol).collect();
    let row_sup = b.row(i).iter().fold(T::zero(), |acc, z| acc.max(z.norm()));
    let max = live.iter().copied().fold(T::zero(), T::max);
    let min = live.iter().copied().fold(T::infinity(), T::min);
    let target = T::from_usize_lossy(n - d).sqrt().recip();
    Ok(TranslationAnalysis {
        m,
        k0: k0.iter().map(|k| k + 1).collect(),
        d,
        invertible: d == 0,
        row_sup,
        induced_norm: hilbert.then_some(max),
        induced_inverse_norm: hilbert.then(|| min.recip()),
        isometry_condition: (row_sup - target).abs() <= T::tol(ISOMETRY_TOL),
    })
}

#[derive(Clone, Debug)]
pub struct TranslationInverse<T> {
    pub signal: Signal<T>,
    /// `max_k |u_k(m)| / min_k |u_k(m)|`.
    pub condition: T,
}

/// `T_m^{-1} g`, the spectral multiplier `1 / conj(u_k(m))`.
pub fn translation_inverse<T: Real>(m: usize, g: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<TranslationInverse<T>> {
    let i = vertex_index(m, b.n())?;
    let k0 = vanishing(i, b, T::lit(ZERO_TOL));
    if !k0.is_empty() {
        return Err(Error::NotInvertible { m, kernel: k0.iter().map(|k| k + 1).collect() });
    }
    let row = b.row(i);
    let mult: Vec<C<T>> = row.iter().map(|z| z.conj().inv()).collect();
    let mags = row.iter().map(|z| z.norm());
    let (lo, hi) = mags.fold((T::infinity(), T::zero()), |(lo, hi), a| (lo.min(a), hi.max(a)));
    Ok(TranslationInverse { signal: spectral_multiply(g, b, &mult)?, condition: hi / lo })
}

/// `(f_ker, f_im)` with `f̂_ker` supported on `K0` and `f̂_im` vanishing there.
pub fn kernel_range_projectors<T: Real>(m: usize, f: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<(Signal<T>, Signal<T>)> {
    let i = vertex_index(m, b.n())?;
    let k0: BTreeSet<usize> = vanishing(i, b, T::lit(ZERO_TOL)).into_iter().collect();
    let mask = |inside: bool| -> Vec<C<T>> {
        (0..b.n()).map(|k| if k0.contains(&k) == inside { re(T::one()) } else { C::zero() }).collect()
    };
    Ok((spectral_multiply(f, b, &mask(true))?, spectral_multiply(f, b, &mask(false))?))
}

/// `T_m* g`, the spectral multiplier `u_k(m)`; requires a Hilbert value space.
pub fn translation_adjoint<T: Real>(m: usize, g: &Signal<T>, b: &OrthonormalBasis<T>) -> Result<Signal<T>> {
    if !g.space().is_hilbert() {
        return Err(Error::NotHilbert);
    }
    let i = vertex_index(m, b.n())?;
    spectral_multiply(g, b, b.row(i))
}

/// Whether every `u_k(m)` is real, i.e. `T_m* = T_m`.
pub fn is_self_adjoint<T: Real>(m: usize, b: &OrthonormalBasis<T>, tol: T) -> Result<bool> {
    let i = vertex_index(m, b.n())?;
    Ok(b.row(i).iter().all(|z| z.im.abs() <= tol))
}

/// `‖T_m‖_{2→2} = ‖u(m)‖_∞` on Hilbert-valued signals.
pub fn translation_opnorm_hilbert<T: Real>(m: usize, b: &OrthonormalBasis<T>) -> Result<T> {
    let i = vertex_index(m, b.n())?;
    Ok(b.row(i).iter().fold(T::zero(), |acc, z| acc.max(z.norm())))
}

/// The signal `u_{k*} ⊗ x₀` whose transform is `x₀` at the first `k*`
/// maximizing `|u_k(m)|`; it attains `‖T_m‖_{2→2}`.
pub fn translation_witness<T: Real>(m: usize, b: &OrthonormalBasis<T>, space: &ValueSpace<T>) -> Result<Signal<T>> {
    let i = vertex_index(m, b.n())?;
    let mut kstar = 0;
    for (k, z) in b.row(i).iter().enumerate() {
        if z.norm() > b.row(i)[kstar].norm() {
            kstar = k;
        }
    }
    Ok(Signal::from_profile(&b.column(kstar), &space.unit()))
}

/// Matrix of `T_m` acting on `𝕂^N`: entry `(n, j) = Σ_k u_k(n) conj(u_k(m)) conj(u_k(j))`.
pub fn translation_matrix<T: Real>(m: usize, b: &OrthonormalBasis<T>) -> Result<DenseMatrix<T>> {
    let i = vertex_index(m, b.n())?;
    let n = b.n();
    Ok(DenseMatrix::from_fn(n, n, |r, c| {
        (0..n).fold(C::zero(), |acc, k| acc + b.coeff(k, r) * b.coeff(k, i).conj() * b.coeff(k, c).conj())
    }))
}

type Q = Ratio<i64>;

/// Admissible `(s, t, w)` with `1/s + 1/t + 1/w = 1`: `1/s` and `1/t` range
/// over `{1, 3/4, 2/3, 1/2, 1/3, 1/4, 0}` together with `i / grid_size`.
pub fn young_grid(grid_size: usize) -> Result<Vec<(Exponent, Exponent, Exponent)>> {
    if grid_size == 0 {
        return Err(Error::InvalidArgument("grid size must be at least 1".into()));
    }
    let g = i64::try_from(grid_size).map_err(|_| Error::InvalidArgument("grid size too large".into()))?;
    let mut recips: BTreeSet<Q> = [(1, 1), (3, 4), (2, 3), (1, 2), (1, 3), (1, 4), (0, 1)].iter().map(|&(a, b)| Q::new(a, b)).collect();
    recips.extend((0..=g).map(|i| Q::new(i, g)));
    let mut out = Vec::new();
    for &s in &recips {
        for &t in &recips {
            let w = Q::one() - s - t;
            if w >= Q::zero() && w <= Q::one() {
                let e = |x| Exponent::from_reciprocal(x).expect("reciprocal in [0, 1]");
                out.push((e(s), e(t), e(w)));
            }
        }
    }
    Ok(out)
}

/// `min ‖U*‖_{s,r} ‖U‖_{p',t} ‖U‖_{q',w}` over [`young_grid`], an upper bound
/// on the norm of `∗ : L^p × L^q → L^r`.
pub fn young_bound<T: Real>(b: &OrthonormalBasis<T>, p: Exponent, q: Exponent, r: Exponent, grid_size: usize) -> Result<T> {
    let u = b.matrix();
    let uh = u.adjoint();
    let (pc, qc) = (p.conjugate(), q.conjugate());
    Ok(young_grid(grid_size)?
        .into_iter()
        .map(|(s, t, w)| mixed_norm(&uh, s, r) * mixed_norm(u, pc, t) * mixed_norm(u, qc, w))
        .fold(T::infinity(), T::min))
}

/// Upper bound on `‖T_m‖_{p→q}`, from the Young bound with `‖δ_m‖_1 = 1`.
pub fn translation_bound<T: Real>(b: &OrthonormalBasis<T>, p: Exponent, q: Exponent, grid_size: usize) -> Result<T> {
    young_bound(b, Exponent::ONE, p, q, grid_size)
}
