//! Bernstein bases of Müntz spaces.

mod derivative;
mod elevation;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::partition::{descent_chain, order_ratio, Partition};
use crate::poly::SparsePolynomial;
use crate::scalar::{binomial, factorial, powi, Scalar};
use crate::space::MuntzSpace;
use crate::symfunc::{schur, skew_schur, ArgMultiset};

pub use derivative::{derivative_basis_equal, derivative_basis_general, first_row_split, r_factor};
pub use elevation::{elevation_factors, elevation_weights, ElevationFactors};
pub(crate) use elevation::gamma_delta;

/// `(a^{na}, b^{nb})`.
pub(crate) fn ends<S: Scalar>(a: &S, na: usize, b: &S, nb: usize) -> ArgMultiset<S> {
    ArgMultiset::repeated(a.clone(), na).with(b.clone(), nb)
}

pub(crate) fn check_interval<S: Scalar>(space: &MuntzSpace, a: &S, b: &S) -> Result<()> {
    if a >= b {
        return Err(Error::DegenerateInterval);
    }
    if space.needs_positive() && !a.is_positive() {
        return Err(Error::NonPositiveEndpoint);
    }
    Ok(())
}

/// The basis `B_{0,λ}^n, ..., B_{n,λ}^n` of `E_λ(n)` over `[a, b]`, as exact
/// polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct BernsteinBasis<S> {
    pub space: MuntzSpace,
    pub a: S,
    pub b: S,
    pub elements: Vec<SparsePolynomial<S>>,
}

impl<S: Scalar> BernsteinBasis<S> {
    pub fn eval(&self, t: &S) -> Vec<S> {
        self.elements.iter().map(|p| p.eval(t)).collect()
    }
}

impl<S: Scalar> Serialize for BernsteinBasis<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = s.serialize_struct("BernsteinBasis", 5)?;
        st.serialize_field("partition", self.space.lambda())?;
        st.serialize_field("n", &self.space.n())?;
        st.serialize_field("exponents", self.space.exponents())?;
        st.serialize_field("interval", &[self.a.render(), self.b.render()])?;
        st.serialize_field("elements", &self.elements)?;
        st.end()
    }
}

/// Classical `C(n,k) (t-a)^k (b-t)^{n-k} / (b-a)^n`.
pub fn classical_bernstein<S: Scalar>(n: usize, k: usize, a: &S, b: &S) -> SparsePolynomial<S> {
    let rise = SparsePolynomial::linear_power(&S::one(), &-a.clone(), k as u32);
    let fall = SparsePolynomial::linear_power(&-S::one(), b, (n - k) as u32);
    let c = S::from_bigint(&binomial(n as u64, k as u64)) / powi(&(b.clone() - a.clone()), n as i64);
    (&rise * &fall).scale(&c)
}

fn element<S: Scalar>(space: &MuntzSpace, a: &S, b: &S, k: usize) -> SparsePolynomial<S> {
    let n = space.n();
    let lam = space.lambda();
    let l1 = lam.first();
    let x = ends(a, n - k, b, k);
    let coef = S::from_ratio(&order_ratio(lam, n)) * schur(space.bottom(), &x)
        / (schur(lam, &ends(a, n + 1 - k, b, k)) * schur(lam, &ends(a, n - k, b, k + 1)));
    let ab = a.clone() * b.clone();
    let mut sum = SparsePolynomial::zero();
    for j in 0..=l1 {
        let skew = skew_schur(lam, &Partition::row(j), &x).expect("a row fits in the first row");
        sum.add_term(l1 - j, num_traits::pow(ab.clone(), j as usize) * skew);
    }
    &classical_bernstein(n, k, a, b).scale(&coef) * &sum
}

/// Closed-form basis through the skew-Schur expansion in powers of `t`.
pub fn bernstein_basis<S: Scalar>(space: &MuntzSpace, a: &S, b: &S) -> Result<BernsteinBasis<S>> {
    check_interval(space, a, b)?;
    let elements = (0..=space.n()).map(|k| element(space, a, b, k)).collect();
    Ok(BernsteinBasis { space: space.clone(), a: a.clone(), b: b.clone(), elements })
}

/// `B_k^{(k)}(a)` and `B_k^{(n-k)}(b)`, the first non-vanishing derivatives
/// at the two ends.
pub fn endpoint_derivatives<S: Scalar>(space: &MuntzSpace, a: &S, b: &S, k: usize) -> Result<(S, S)> {
    check_interval(space, a, b)?;
    let n = space.n();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let lam = space.lambda();
    let l1 = lam.first() as i64;
    let f = S::from_ratio(&order_ratio(lam, n));
    let s0 = schur(space.bottom(), &ends(a, n - k, b, k));
    let w = b.clone() - a.clone();
    let nf = factorial(n as u64);
    let da = S::from_bigint(&(&nf / factorial((n - k) as u64))) * powi(a, l1) / powi(&w, k as i64)
        * f.clone()
        * s0.clone()
        / schur(lam, &ends(a, n + 1 - k, b, k));
    let mut db = S::from_bigint(&(&nf / factorial(k as u64))) * powi(b, l1) / powi(&w, (n - k) as i64) * f * s0
        / schur(lam, &ends(a, n - k, b, k + 1));
    if (n - k) % 2 == 1 {
        db = -db;
    }
    Ok((da, db))
}

/// The same basis built from the classical one of order `n + λ_1` by
/// repeatedly peeling border strips.
pub fn bernstein_via_descent<S: Scalar>(space: &MuntzSpace, a: &S, b: &S) -> Result<BernsteinBasis<S>> {
    check_interval(space, a, b)?;
    let chain = descent_chain(space.lambda(), space.n())?;
    let top = chain.last().unwrap().1;
    let mut cur: Vec<SparsePolynomial<S>> = (0..=top).map(|k| classical_bernstein(top, k, a, b)).collect();
    for step in chain.windows(2).rev() {
        let ((lam, m), (eta, _)) = (&step[0], &step[1]);
        let m = *m;
        let h11 = S::from_i64(lam.hook(1, 1)? as i64);
        cur = (0..=m)
            .map(|k| {
                let (g, d) = gamma_delta(lam, eta, m, a, b, k);
                let left = S::from_i64((m + 1 - k) as i64) * a.clone() * g / h11.clone();
                let right = S::from_i64((k + 1) as i64) * b.clone() * d / h11.clone();
                &cur[k].scale(&left) + &cur[k + 1].scale(&right)
            })
            .collect();
    }
    Ok(BernsteinBasis { space: space.clone(), a: a.clone(), b: b.clone(), elements: cur })
}
