//! Signal `L^p` norms, mixed `ℓ^{p,q}` matrix norms and coherences,
//! operator norms of the Fourier transform with extremal signals, and
//! uncertainty lower bounds.

use std::fmt;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::basis::OrthonormalBasis;
use crate::error::{Error, Result};
use crate::exponent::{lp_norm, Exponent};
use crate::matrix::DenseMatrix;
use crate::scalar::{sgn, Real, C};
use crate::transform::{gft, Signal};
use crate::valuespace::ValueSpace;

pub fn signal_norm<T: Real>(f: &Signal<T>, p: Exponent) -> T {
    f.norm(p)
}

/// `(‖f‖_q, ‖f‖_p, N^{1/p−1/q}·‖f‖_q)` for `p < q`.
pub fn holder_embedding_check<T: Real>(f: &Signal<T>, p: Exponent, q: Exponent) -> Result<(T, T, T)> {
    if p >= q {
        return Err(Error::ExponentOrder { p: p.to_string(), q: q.to_string() });
    }
    let fq = f.norm(q);
    Ok((fq, f.norm(p), Exponent::embedding_constant::<T>(f.len(), p, q) * fq))
}

/// `‖U‖_{p,q}`: `p`-norm down each column, then `q`-norm across columns.
pub fn mixed_norm<T: Real>(u: &DenseMatrix<T>, p: Exponent, q: Exponent) -> T {
    lp_norm(column_norms(u, p), q)
}

fn column_norms<T: Real>(u: &DenseMatrix<T>, p: Exponent) -> Vec<T> {
    (0..u.cols()).map(|k| lp_norm((0..u.rows()).map(|n| u[(n, k)].norm()), p)).collect()
}

/// `κ_p(U) = max_k ‖u_k‖_p`.
pub fn coherence<T: Real>(b: &OrthonormalBasis<T>, p: Exponent) -> T {
    mixed_norm(b.matrix(), p, Exponent::INF)
}

/// `(lower, κ_p, upper)` with the bounds `1` and `N^{1/p−1/2}` ordered
/// according to `p < 2` or `p > 2`.
pub fn coherence_bounds_check<T: Real>(b: &OrthonormalBasis<T>, p: Exponent) -> (T, T, T) {
    let k = coherence(b, p);
    let e = Exponent::embedding_constant::<T>(b.n(), p, Exponent::TWO);
    if p <= Exponent::TWO {
        (T::one(), k, e)
    } else {
        (e, k, T::one())
    }
}

/// Which estimate produced a [`NormReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpnormFormula {
    /// `‖ℱ‖_{p→∞} = κ_{p'}(U)`.
    SupCoherence,
    /// `‖ℱ‖_{1→q} = κ_q(U*)`.
    AdjointCoherence,
    /// `‖ℱ‖_{2→2} = 1` on a Hilbert space.
    Plancherel,
    /// `‖ℱ‖_{p→q} ≤ ‖U‖_{p',q}`.
    MixedBound,
}

impl OpnormFormula {
    pub fn as_str(self) -> &'static str {
        match self {
            OpnormFormula::SupCoherence => "kappa_{p'}(U)",
            OpnormFormula::AdjointCoherence => "kappa_q(U*)",
            OpnormFormula::Plancherel => "plancherel",
            OpnormFormula::MixedBound => "||U||_{p',q}",
        }
    }
}

impl fmt::Display for OpnormFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct NormReport<T> {
    pub bound: T,
    pub exact: bool,
    pub witness: Option<Signal<T>>,
    pub formula: OpnormFormula,
}

/// Whether `‖ℱ‖_{p→q}` is known in closed form for every value space.
pub fn is_exact_regime(p: Exponent, q: Exponent) -> bool {
    q.is_infinite() || p.is_one()
}

/// Operator norm of `ℱ : L^p(V, X) → L^q(V, X)`, exact where known and an
/// upper bound otherwise.
pub fn fourier_opnorm<T: Real>(b: &OrthonormalBasis<T>, space: &ValueSpace<T>, p: Exponent, q: Exponent) -> NormReport<T> {
    if is_exact_regime(p, q) {
        let (bound, formula) = if q.is_infinite() {
            (coherence(b, p.conjugate()), OpnormFormula::SupCoherence)
        } else {
            (mixed_norm(&b.matrix().adjoint(), q, Exponent::INF), OpnormFormula::AdjointCoherence)
        };
        let witness = sharpness_witness(b, space, p, q).expect("exact regime");
        return NormReport { bound, exact: true, witness: Some(witness), formula };
    }
    if p.is_two() && q.is_two() && space.is_hilbert() {
        let witness = Signal::spike(b.n(), 0, &space.unit());
        return NormReport { bound: T::one(), exact: true, witness: Some(witness), formula: OpnormFormula::Plancherel };
    }
    NormReport { bound: mixed_norm(b.matrix(), p.conjugate(), q), exact: false, witness: None, formula: OpnormFormula::MixedBound }
}

/// A nonzero signal with `‖f̂‖_q / ‖f‖_p` equal to the operator norm, for
/// `q = ∞` or `p = 1`. Ties among maximizers go to the smallest index.
pub fn sharpness_witness<T: Real>(b: &OrthonormalBasis<T>, space: &ValueSpace<T>, p: Exponent, q: Exponent) -> Result<Signal<T>> {
    let x0 = space.unit();
    let n = b.n();
    if q.is_infinite() {
        let u = b.matrix();
        if p.is_one() {
            // u.max_abs scans row-major over (n, k); we need (k, n) order
            let (_, _, nstar) = u.transpose().max_abs();
            return Ok(Signal::spike(n, nstar, &x0));
        }
        let kstar = argmax(&column_norms(u, p.conjugate()));
        let profile = extremal_profile(&b.column(kstar), p);
        return Ok(Signal::from_profile(&profile, &x0));
    }
    if p.is_one() {
        let nstar = argmax(&column_norms(&b.matrix().transpose(), q));
        return Ok(Signal::spike(n, nstar, &x0));
    }
    Err(Error::NotExactRegime { p: p.to_string(), q: q.to_string() })
}

/// `sgn(u(n))·|u(n)|^{p'/p}`, which is `sgn(u(n))` for `p = ∞`; `|u| = 0`
/// maps to `0` without evaluating `log 0`.
fn extremal_profile<T: Real>(col: &[C<T>], p: Exponent) -> Vec<C<T>> {
    match p {
        Exponent::Infinite => col.iter().map(|&z| sgn(z)).collect(),
        Exponent::Finite(_) => {
            let e = p.conjugate().to_real::<T>() / p.to_real::<T>();
            col.iter()
                .map(|&z| {
                    let a = z.norm();
                    if a.is_zero() {
                        C::zero()
                    } else {
                        sgn(z) * (e * a.ln()).exp()
                    }
                })
                .collect()
        }
    }
}

/// Index of the first maximum.
fn argmax<T: Real>(v: &[T]) -> usize {
    let mut best = 0;
    for (i, &x) in v.iter().enumerate() {
        if x > v[best] {
            best = i;
        }
    }
    best
}

/// Deterministic candidate signals used to anchor empirical operator norms:
/// vertex spikes, spectral spikes, sign and `|u|^{p'/p}` profiles of every
/// basis vector, and for vector values of dimension at least two the signals
/// `f(1) = e₁ + e₂, f(2) = e₁ − e₂` and `f(n) = Σ_j u_j(n) e_j`.
pub fn witness_pool<T: Real>(b: &OrthonormalBasis<T>, space: &ValueSpace<T>, p: Exponent) -> Vec<Signal<T>> {
    let n = b.n();
    let x0 = space.unit();
    let mut pool = Vec::new();
    for v in 0..n {
        pool.push(Signal::spike(n, v, &x0));
    }
    for k in 0..n {
        let col = b.column(k);
        pool.push(Signal::from_profile(&col, &x0));
        pool.push(Signal::from_profile(&extremal_profile(&col, Exponent::INF), &x0));
        if !p.is_one() && !p.is_infinite() {
            pool.push(Signal::from_profile(&extremal_profile(&col, p), &x0));
        }
    }
    let d = space.coord_len();
    if d >= 2 && n >= 2 {
        let (e1, e2) = (space.basis_vector(0), space.basis_vector(1));
        let mut rows = vec![vec![C::zero(); d]; n];
        rows[0] = e1.add(&e2).expect("same space").into_coords();
        rows[1] = e1.sub(&e2).expect("same space").into_coords();
        pool.push(Signal::from_rows(*space, rows).expect("valid coordinates"));
        let m = n.min(d);
        let mut data = vec![vec![C::zero(); d]; n];
        for (v, row) in data.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate().take(m) {
                *x = b.coeff(j, v);
            }
        }
        let promoted = space.promoted(b.field());
        pool.push(Signal::from_rows(promoted, data).expect("valid coordinates"));
    }
    pool
}

/// A random signal with every coordinate drawn uniformly from `[−1, 1]` or
/// the complex unit disk.
pub fn random_signal<T: Real, R: rand::Rng + ?Sized>(space: &ValueSpace<T>, n: usize, rng: &mut R) -> Signal<T> {
    Signal::from_rows(*space, (0..n).map(|_| space.random_coords(rng)).collect()).expect("sampled coordinates")
}

/// Largest `‖f̂‖_q / ‖f‖_p` over the witness pool and `samples` random
/// signals drawn from a ChaCha8 stream seeded with `seed`.
pub fn empirical_opnorm<T: Real>(
    b: &OrthonormalBasis<T>,
    space: &ValueSpace<T>,
    p: Exponent,
    q: Exponent,
    samples: usize,
    seed: u64,
) -> T {
    let ratio = |f: &Signal<T>| {
        let den = f.norm(p);
        if den.is_zero() {
            T::zero()
        } else {
            gft(f, b).expect("matching dimension").norm(q) / den
        }
    };
    let mut best = witness_pool(b, space, p).iter().map(ratio).fold(T::zero(), T::max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        best = best.max(ratio(&random_signal(space, b.n(), &mut rng)));
    }
    best
}

/// The three families of uncertainty inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UncertaintyVariant {
    /// `‖f‖_p‖f̂‖_p / (‖f‖_∞‖f̂‖_∞) ≥ 1 / (κ_{p'}(U) κ_{p'}(U*))`.
    Sup(Exponent),
    /// `‖f‖_1‖f̂‖_1 / (‖f‖_q‖f̂‖_q) ≥ 1 / (κ_q(U) κ_q(U*))`.
    L1(Exponent),
    /// `‖f‖_p‖f̂‖_p / (‖f‖_q‖f̂‖_q) ≥ 1 / (‖U‖_{p',q} ‖U*‖_{p',q})`.
    Mixed(Exponent, Exponent),
}

impl UncertaintyVariant {
    /// `(numerator, denominator)` exponents of the ratio it bounds.
    pub fn exponents(self) -> (Exponent, Exponent) {
        match self {
            UncertaintyVariant::Sup(p) => (p, Exponent::INF),
            UncertaintyVariant::L1(q) => (Exponent::ONE, q),
            UncertaintyVariant::Mixed(p, q) => (p, q),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UncertaintyVariant::Sup(_) => "sup",
            UncertaintyVariant::L1(_) => "l1",
            UncertaintyVariant::Mixed(..) => "mixed",
        }
    }
}

pub fn uncertainty_bound<T: Real>(b: &OrthonormalBasis<T>, variant: UncertaintyVariant) -> T {
    let u = b.matrix();
    let uh = u.adjoint();
    let (a, c) = match variant {
        UncertaintyVariant::Sup(p) => {
            let pc = p.conjugate();
            (mixed_norm(u, pc, Exponent::INF), mixed_norm(&uh, pc, Exponent::INF))
        }
        UncertaintyVariant::L1(q) => (mixed_norm(u, q, Exponent::INF), mixed_norm(&uh, q, Exponent::INF)),
        UncertaintyVariant::Mixed(p, q) => (mixed_norm(u, p.conjugate(), q), mixed_norm(&uh, p.conjugate(), q)),
    };
    (a * c).recip()
}

/// `‖f‖_p‖f̂‖_p / (‖f‖_q‖f̂‖_q)`.
pub fn uncertainty_ratio<T: Real>(f: &Signal<T>, b: &OrthonormalBasis<T>, p: Exponent, q: Exponent) -> Result<T> {
    if f.is_zero() {
        return Err(Error::ZeroSignal);
    }
    let fh = gft(f, b)?;
    Ok(f.norm(p) * fh.norm(p) / (f.norm(q) * fh.norm(q)))
}
