use num_rational::BigRational;

use super::{check_interval, ends};
use crate::error::{Error, Result};
use crate::partition::{count_ratio, lattice_is_elevation, Partition};
use crate::scalar::{powi, Scalar};
use crate::space::MuntzSpace;
use crate::symfunc::schur;

/// `Γ_λ^μ(n,k)`, `Δ_λ^μ(n,k)` and the binomial-type constant `(μ/λ)_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ElevationFactors<S> {
    pub gamma: S,
    pub delta: S,
    pub binom: BigRational,
}

pub(crate) fn gamma_delta<S: Scalar>(lam: &Partition, mu: &Partition, n: usize, a: &S, b: &S, k: usize) -> (S, S) {
    let lam0 = lam.bottom();
    let mu0 = mu.bottom();
    let s0 = schur(&lam0, &ends(a, n - k, b, k));
    let gamma = s0.clone() * schur(mu, &ends(a, n + 2 - k, b, k))
        / (schur(lam, &ends(a, n + 1 - k, b, k)) * schur(&mu0, &ends(a, n + 1 - k, b, k)));
    let delta = s0 * schur(mu, &ends(a, n - k, b, k + 2))
        / (schur(lam, &ends(a, n - k, b, k + 1)) * schur(&mu0, &ends(a, n - k, b, k + 1)));
    (gamma, delta)
}

/// `f_λ(n+1) f_{μ^(0)}(n+1) / (f_{λ^(0)}(n) f_μ(n+2))`.
pub(crate) fn elevation_binom(lam: &Partition, mu: &Partition, n: usize) -> BigRational {
    count_ratio(&[(lam, n + 1), (&mu.bottom(), n + 1)], &[(&lam.bottom(), n), (mu, n + 2)])
}

pub fn elevation_factors<S: Scalar>(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    a: &S,
    b: &S,
    k: usize,
) -> Result<ElevationFactors<S>> {
    if !lattice_is_elevation(lambda, n, mu) {
        return Err(Error::NotAnElevation);
    }
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    check_interval(&MuntzSpace::new(lambda.clone(), n)?, a, b)?;
    let (gamma, delta) = gamma_delta(lambda, mu, n, a, b, k);
    Ok(ElevationFactors { gamma, delta, binom: elevation_binom(lambda, mu, n) })
}

/// `(ξ(n,k), ρ(n,k))` for `k = 0..=n`, so that
/// `B_{k,λ}^n = ξ(n,k) B_{k,μ}^{n+1} + ρ(n,k) B_{k+1,μ}^{n+1}`.
pub fn elevation_weights<S: Scalar>(space: &MuntzSpace, mu: &Partition, a: &S, b: &S) -> Result<Vec<(S, S)>> {
    let lam = space.lambda();
    let n = space.n();
    if !lattice_is_elevation(lam, n, mu) {
        return Err(Error::NotAnElevation);
    }
    check_interval(space, a, b)?;
    let shift = lam.first() as i64 - mu.first() as i64;
    let binom = S::from_ratio(&elevation_binom(lam, mu, n));
    let np1 = S::from_i64(n as i64 + 1);
    let (ea, eb) = (powi(a, shift), powi(b, shift));
    Ok((0..=n)
        .map(|k| {
            let (g, d) = gamma_delta(lam, mu, n, a, b, k);
            let xi = S::from_i64((n + 1 - k) as i64) * ea.clone() * binom.clone() * g / np1.clone();
            let rho = S::from_i64((k + 1) as i64) * eb.clone() * binom.clone() * d / np1.clone();
            (xi, rho)
        })
        .collect())
}
