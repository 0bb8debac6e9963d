//! Field elements the kernel computes with.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// An ordered field the kernel can run over.
///
/// Exact rationals are the reference instance; `f64`/`f32` exist for
/// rendering and quick previews. Combinatorial constants are always
/// computed exactly and converted with [`Scalar::from_ratio`].
pub trait Scalar: Clone + fmt::Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    /// Whether arithmetic is exact, so equalities can be asserted.
    const EXACT: bool;

    fn from_ratio(r: &BigRational) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact rendering (`p/q`) for rationals, shortest decimal for floats.
    fn render(&self) -> String;

    fn from_i64(v: i64) -> Self {
        Self::from_ratio(&BigRational::from_integer(BigInt::from(v)))
    }

    fn from_bigint(v: &BigInt) -> Self {
        Self::from_ratio(&BigRational::from_integer(v.clone()))
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_ratio(r: &BigRational) -> Self {
                ToPrimitive::to_f64(r).unwrap_or(f64::NAN) as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn render(&self) -> String {
                format!("{}", self)
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

/// `x^e` for a signed exponent. Panics on `0^e` with `e < 0`.
pub fn powi<S: Scalar>(x: &S, e: i64) -> S {
    if e < 0 {
        assert!(!x.is_zero(), "zero raised to a negative power");
        S::one() / num_traits::pow(x.clone(), (-e) as usize)
    } else {
        num_traits::pow(x.clone(), e as usize)
    }
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
