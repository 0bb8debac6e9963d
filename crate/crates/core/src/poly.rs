//! Sparse univariate polynomials with non-negative exponents.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::scalar::{binomial, Scalar};

/// Map from exponent to non-zero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePolynomial<S> {
    terms: BTreeMap<u32, S>,
}

impl<S: Scalar> Default for SparsePolynomial<S> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<S: Scalar> SparsePolynomial<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: S, e: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `(c_1 t + c_0)^k`.
    pub fn linear_power(c1: &S, c0: &S, k: u32) -> Self {
        let mut p = Self::zero();
        for j in 0..=k {
            let coef = S::from_bigint(&binomial(k as u64, j as u64))
                * num_traits::pow(c1.clone(), j as usize)
                * num_traits::pow(c0.clone(), (k - j) as usize);
            p.add_term(j, coef);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, S)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: u32, c: S) {
        let v = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<u32, S> {
        &self.terms
    }

    pub fn coefficient(&self, e: u32) -> S {
        self.terms.get(&e).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with a non-zero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn eval(&self, t: &S) -> S {
        let mut acc = S::zero();
        let mut last = 0u32;
        let mut pw = S::one();
        for (&e, c) in &self.terms {
            pw = pw * num_traits::pow(t.clone(), (e - last) as usize);
            last = e;
            acc = acc + c.clone() * pw.clone();
        }
        acc
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c.clone() * k.clone())))
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, c.clone() * S::from_i64(e as i64))),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Substitutes `t -> t^m`.
    pub fn compose_power(&self, m: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e * m, c.clone())))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparsePolynomial<T> {
        SparsePolynomial::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }
}

impl<S: Scalar> Add for &SparsePolynomial<S> {
    type Output = SparsePolynomial<S>;

    fn add(self, rhs: Self) -> SparsePolynomial<S> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<S: Scalar> Neg for &SparsePolynomial<S> {
    type Output = SparsePolynomial<S>;

    fn neg(self) -> SparsePolynomial<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Sub for &SparsePolynomial<S> {
    type Output = SparsePolynomial<S>;

    fn sub(self, rhs: Self) -> SparsePolynomial<S> {
        self + &-rhs
    }
}

impl<S: Scalar> Mul for &SparsePolynomial<S> {
    type Output = SparsePolynomial<S>;

    fn mul(self, rhs: Self) -> SparsePolynomial<S> {
        let mut out = SparsePolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Serialize for SparsePolynomial<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.render())?;
        }
        map.end()
    }
}
