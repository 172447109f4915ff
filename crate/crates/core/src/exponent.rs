//! Lebesgue exponents `p ∈ [1, ∞]` held as exact rationals.
//!
//! Conjugates and differences of reciprocals are computed on the rational
//! representation so that `p = 3/2` or `p = ∞` never pass through a float
//! comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exponent {
    Finite(Q),
    Infinite,
}

impl Exponent {
    pub const ONE: Exponent = Exponent::Finite(Ratio::new_raw(1, 1));
    pub const TWO: Exponent = Exponent::Finite(Ratio::new_raw(2, 1));
    pub const INF: Exponent = Exponent::Infinite;

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidExponent(format!("{numer}/{denom}")));
        }
        Self::from_ratio(Ratio::new(numer, denom))
    }

    pub fn integer(p: i64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn from_ratio(r: Q) -> Result<Self> {
        if r < Q::one() {
            return Err(Error::InvalidExponent(format!("{r} < 1")));
        }
        Ok(Exponent::Finite(r))
    }

    /// Build from a reciprocal `1/p ∈ [0, 1]`; `0` maps to `∞`.
    pub fn from_reciprocal(inv: Q) -> Result<Self> {
        if inv.is_negative() || inv > Q::one() {
            return Err(Error::InvalidExponent(format!("reciprocal {inv} outside [0, 1]")));
        }
        if inv.is_zero() {
            Ok(Exponent::Infinite)
        } else {
            Ok(Exponent::Finite(inv.recip()))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Exponent::Infinite)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn is_two(&self) -> bool {
        *self == Self::TWO
    }

    /// `1/p`, with `1/∞ = 0`.
    pub fn reciprocal(&self) -> Q {
        match self {
            Exponent::Finite(p) => p.recip(),
            Exponent::Infinite => Q::zero(),
        }
    }

    /// Hölder conjugate `p'` with `1/p + 1/p' = 1`.
    pub fn conjugate(&self) -> Exponent {
        Exponent::from_reciprocal(Q::one() - self.reciprocal()).expect("1 - 1/p lies in [0, 1]")
    }

    /// `p` as a float; `∞` maps to `T::infinity()`.
    pub fn to_real<T: Real>(&self) -> T {
        match self {
            Exponent::Finite(p) => T::lit(p.to_f64().expect("finite rational")),
            Exponent::Infinite => T::infinity(),
        }
    }

    /// `N^{1/p - 1/q}` evaluated with the exponent difference kept exact.
    pub fn embedding_constant<T: Real>(n: usize, p: Exponent, q: Exponent) -> T {
        let e = p.reciprocal() - q.reciprocal();
        T::from_usize_lossy(n).powf(T::lit(e.to_f64().expect("finite rational")))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        // larger p means smaller reciprocal
        other.reciprocal().cmp(&self.reciprocal())
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Infinite => write!(f, "inf"),
            Exponent::Finite(p) => {
                if p.is_integer() {
                    return write!(f, "{}", p.numer());
                }
                // terminating decimals print as decimals, the rest as fractions
                let mut d = *p.denom();
                while d % 2 == 0 {
                    d /= 2;
                }
                while d % 5 == 0 {
                    d /= 5;
                }
                if d == 1 {
                    write!(f, "{}", p.to_f64().unwrap_or(f64::NAN))
                } else {
                    write!(f, "{}/{}", p.numer(), p.denom())
                }
            }
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    /// Accepts `inf`/`infinity`/`∞`, integers, fractions `a/b` and finite
    /// decimals such as `1.5`, all parsed exactly.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidExponent(s.to_string());
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => return Ok(Exponent::Infinite),
            _ => {}
        }
        if let Some((a, b)) = s.split_once('/') {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            return Exponent::new(a, b);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.len() > 12 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let scale = 10i64.pow(frac.len() as u32);
            let frac: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
            if int < 0 {
                return Err(bad());
            }
            return Exponent::new(int * scale + frac, scale);
        }
        Exponent::integer(s.parse().map_err(|_| bad())?)
    }
}

/// `(Σ aᵢ^p)^{1/p}` over nonnegative magnitudes, `max` for `p = ∞`.
///
/// Finite `p ∉ {1, 2}` is evaluated relative to the largest magnitude so
/// large exponents do not underflow.
pub fn lp_norm<T: Real, I>(mags: I, p: Exponent) -> T
where
    I: IntoIterator<Item = T>,
{
    match p {
        Exponent::Infinite => mags.into_iter().fold(T::zero(), T::max),
        _ if p.is_one() => mags.into_iter().fold(T::zero(), |acc, a| acc + a),
        _ if p.is_two() => mags.into_iter().fold(T::zero(), |acc, a| acc + a * a).sqrt(),
        Exponent::Finite(_) => {
            let v: Vec<T> = mags.into_iter().collect();
            let top = v.iter().copied().fold(T::zero(), T::max);
            if top == T::zero() || !top.is_finite() {
                return top;
            }
            let pf = p.to_real::<T>();
            let s = v.iter().fold(T::zero(), |acc, &a| acc + (a / top).powf(pf));
            top * s.powf(pf.recip())
        }
    }
}
