//! Normed value spaces `X` in which graph signals take their values.
//!
//! Two families are supported: `𝕂^d` with an `ℓ^p` norm, and continuous
//! functions on `[a, b]` (optionally `c`-tuples of them) represented by `G`
//! uniform samples under the sup norm. Whether a space carries a compatible
//! inner product is decided by its descriptor alone.

use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exponent::{lp_norm, Exponent};
use crate::scalar::{Real, C};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarField {
    Real,
    Complex,
}

impl ScalarField {
    /// The smallest field containing both.
    pub fn join(self, other: ScalarField) -> ScalarField {
        if self == ScalarField::Complex || other == ScalarField::Complex {
            ScalarField::Complex
        } else {
            ScalarField::Real
        }
    }

    pub fn contains(self, z: C<impl Real>) -> bool {
        self == ScalarField::Complex || z.im.is_zero()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ScalarField::Real => "real",
            ScalarField::Complex => "complex",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpaceKind<T> {
    /// `𝕂^dim` with the `ℓ^p` norm.
    FiniteDim { dim: usize, p: Exponent },
    /// `C([start, end])^components`, sampled on `grid` points, sup norm
    /// over every sample of every component.
    SampledFunction { grid: usize, components: usize, start: T, end: T },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValueSpace<T> {
    kind: SpaceKind<T>,
    field: ScalarField,
}

pub const DEFAULT_GRID: usize = 256;

impl<T: Real> ValueSpace<T> {
    pub fn finite_dim(dim: usize, p: Exponent, field: ScalarField) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Parse("finite-dimensional space needs dim >= 1".into()));
        }
        Ok(Self::checked(Self { kind: SpaceKind::FiniteDim { dim, p }, field }))
    }

    /// Euclidean `ℝ^d` or `ℂ^d`.
    pub fn euclidean(dim: usize, field: ScalarField) -> Result<Self> {
        Self::finite_dim(dim, Exponent::TWO, field)
    }

    pub fn sampled_function(grid: usize, start: T, end: T) -> Result<Self> {
        Self::sampled_functions(grid, 1, start, end, ScalarField::Real)
    }

    pub fn sampled_functions(grid: usize, components: usize, start: T, end: T, field: ScalarField) -> Result<Self> {
        if grid == 0 || components == 0 {
            return Err(Error::Parse("sampled function space needs grid >= 1 and components >= 1".into()));
        }
        if !(start.is_finite() && end.is_finite()) || end < start {
            return Err(Error::Parse(format!("invalid interval [{start}, {end}]")));
        }
        Ok(Self::checked(Self { kind: SpaceKind::SampledFunction { grid, components, start, end }, field }))
    }

    fn checked(space: Self) -> Self {
        #[cfg(debug_assertions)]
        space.debug_self_check();
        space
    }

    #[cfg(debug_assertions)]
    fn debug_self_check(&self) {
        use rand::SeedableRng;
        if !self.is_hilbert() || self.coord_len() > 4096 {
            return;
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..100 {
            let x = self.random_coords(&mut rng);
            let y = self.random_coords(&mut rng);
            let (lhs, rhs) = self.parallelogram_sides(&x, &y);
            debug_assert!(
                (lhs - rhs).abs() <= T::tol(1e-12) * (T::one() + rhs),
                "declared Hilbert space violates the parallelogram law"
            );
        }
    }

    pub fn kind(&self) -> SpaceKind<T> {
        self.kind
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    /// Number of stored scalar coordinates per element.
    pub fn coord_len(&self) -> usize {
        match self.kind {
            SpaceKind::FiniteDim { dim, .. } => dim,
            SpaceKind::SampledFunction { grid, components, .. } => grid * components,
        }
    }

    /// True iff the norm comes from an inner product. Every norm on a
    /// one-dimensional space is a multiple of `|·|`, hence Hilbertian.
    pub fn is_hilbert(&self) -> bool {
        match self.kind {
            SpaceKind::FiniteDim { dim, p } => p.is_two() || dim == 1,
            SpaceKind::SampledFunction { .. } => self.coord_len() == 1,
        }
    }

    /// Same space with coordinates extended to `field`.
    pub fn promoted(&self, field: ScalarField) -> Self {
        Self { kind: self.kind, field: self.field.join(field) }
    }

    /// Exponent of the coordinate norm (`∞` for sampled functions).
    pub fn coordinate_exponent(&self) -> Exponent {
        match self.kind {
            SpaceKind::FiniteDim { p, .. } => p,
            SpaceKind::SampledFunction { .. } => Exponent::INF,
        }
    }

    /// Sample abscissae `t_0 < … < t_{G-1}` (empty for finite-dimensional spaces).
    pub fn sample_points(&self) -> Vec<T> {
        match self.kind {
            SpaceKind::FiniteDim { .. } => Vec::new(),
            SpaceKind::SampledFunction { grid, start, end, .. } => {
                if grid == 1 {
                    return vec![start];
                }
                let step = (end - start) / T::from_usize_lossy(grid - 1);
                (0..grid).map(|i| start + step * T::from_usize_lossy(i)).collect()
            }
        }
    }

    pub fn norm_of(&self, coords: &[C<T>]) -> T {
        lp_norm(coords.iter().map(|z| z.norm()), self.coordinate_exponent())
    }

    /// `Σ xᵢ·conj(yᵢ)`; linear in the first slot, conjugate-linear in the second.
    pub fn inner_of(&self, x: &[C<T>], y: &[C<T>]) -> Result<C<T>> {
        if !self.is_hilbert() {
            return Err(Error::NotHilbert);
        }
        Ok(x.iter().zip(y).fold(C::zero(), |acc, (a, b)| acc + a * b.conj()))
    }

    pub fn zero(&self) -> ValueElement<T> {
        ValueElement { space: *self, coords: vec![C::zero(); self.coord_len()] }
    }

    /// The unit vector `x₀ = e₁`, of norm one in every supported space.
    pub fn unit(&self) -> ValueElement<T> {
        self.basis_vector(0)
    }

    pub fn basis_vector(&self, i: usize) -> ValueElement<T> {
        let mut x = self.zero();
        x.coords[i] = C::new(T::one(), T::zero());
        x
    }

    pub fn element(&self, coords: Vec<C<T>>) -> Result<ValueElement<T>> {
        if coords.len() != self.coord_len() {
            return Err(Error::DimensionMismatch { expected: self.coord_len(), found: coords.len() });
        }
        if !coords.iter().all(|&z| self.field.contains(z)) {
            return Err(Error::FieldMismatch);
        }
        Ok(ValueElement { space: *self, coords })
    }

    pub fn real_element(&self, coords: &[T]) -> Result<ValueElement<T>> {
        self.element(coords.iter().map(|&x| C::new(x, T::zero())).collect())
    }

    /// Coordinates drawn uniformly from `[-1, 1]` (real field) or the
    /// closed complex unit disk (complex field).
    pub fn random_coords<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<C<T>> {
        (0..self.coord_len())
            .map(|_| match self.field {
                ScalarField::Real => C::new(T::lit(rng.random_range(-1.0..=1.0)), T::zero()),
                ScalarField::Complex => {
                    let r = rng.random::<f64>().sqrt();
                    let th = rng.random_range(0.0..std::f64::consts::TAU);
                    C::new(T::lit(r * th.cos()), T::lit(r * th.sin()))
                }
            })
            .collect()
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> ValueElement<T> {
        ValueElement { space: *self, coords: self.random_coords(rng) }
    }

    /// `(‖x+y‖² + ‖x−y‖², 2‖x‖² + 2‖y‖²)`.
    pub fn parallelogram_sides(&self, x: &[C<T>], y: &[C<T>]) -> (T, T) {
        let plus: Vec<_> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        let minus: Vec<_> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        let two = T::lit(2.0);
        (
            self.norm_of(&plus).powi(2) + self.norm_of(&minus).powi(2),
            two * self.norm_of(x).powi(2) + two * self.norm_of(y).powi(2),
        )
    }

    /// Searches axis-aligned pairs `(eᵢ, eⱼ)` for a violation of the
    /// parallelogram law. `None` means no violation among those pairs.
    pub fn parallelogram_witness(&self) -> Option<(ValueElement<T>, ValueElement<T>)> {
        let n = self.coord_len();
        for i in 0..n {
            for j in (i + 1)..n {
                let (x, y) = (self.basis_vector(i), self.basis_vector(j));
                let (lhs, rhs) = self.parallelogram_sides(&x.coords, &y.coords);
                if (lhs - rhs).abs() > T::tol(1e-9) * rhs {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// One element of a [`ValueSpace`].
#[derive(Clone, Debug, PartialEq)]
pub struct ValueElement<T> {
    space: ValueSpace<T>,
    coords: Vec<C<T>>,
}

impl<T: Real> ValueElement<T> {
    pub fn space(&self) -> &ValueSpace<T> {
        &self.space
    }

    pub fn coords(&self) -> &[C<T>] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<C<T>> {
        self.coords
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(Self { space: self.space, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(Self { space: self.space, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, lambda: C<T>) -> Result<Self> {
        if !self.space.field.contains(lambda) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self { space: self.space, coords: self.coords.iter().map(|a| a * lambda).collect() })
    }

    pub fn norm(&self) -> T {
        self.space.norm_of(&self.coords)
    }

    pub fn inner(&self, other: &Self) -> Result<C<T>> {
        self.same_space(other)?;
        self.space.inner_of(&self.coords, &other.coords)
    }
}
