//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! All matrices and signals store [`Complex<T>`] coordinates; a real-field
//! quantity is simply one whose imaginary parts are zero. `T` is the
//! underlying real type (`f32` or `f64`).

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point type usable as the scalar of every routine.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossless-enough conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    /// `max(abs, 8 eps)`: tolerances requested below the type's resolution
    /// are clamped so that f32 instantiations stay usable.
    fn tol(abs: f64) -> Self {
        Self::lit(abs).max(Self::epsilon() * Self::lit(8.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for a complex scalar over `T`.
pub type C<T> = Complex<T>;

pub(crate) fn re<T: Real>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

/// Complex sign: `z / |z|`, and `0` at the origin.
pub fn sgn<T: Real>(z: C<T>) -> C<T> {
    let r = z.norm();
    if r == T::zero() {
        C::new(T::zero(), T::zero())
    } else {
        z / r
    }
}
