use super::elevation::{elevation_binom, gamma_delta};
use super::{check_interval, ends};
use crate::error::{Error, Result};
use crate::partition::{count_ratio, Partition};
use crate::scalar::Scalar;
use crate::space::MuntzSpace;
use crate::symfunc::schur;

/// `R_λ(k, n)` for `0 <= k < n`.
pub fn r_factor<S: Scalar>(lam: &Partition, n: usize, a: &S, b: &S, k: usize) -> S {
    debug_assert!(k < n);
    let l0 = lam.bottom();
    let l00 = l0.bottom();
    schur(&l0, &ends(a, n - k - 1, b, k + 1)) * schur(&l0, &ends(a, n - k, b, k))
        / (schur(lam, &ends(a, n - k, b, k + 1)) * schur(&l00, &ends(a, n - k - 1, b, k)))
}

/// For `λ_1 = λ_2`: `d/dt B_{k,λ}^n = c_0 B_{k-1,λ^(0)}^{n-1} + c_1 B_{k,λ^(0)}^{n-1}`,
/// returned as `(c_0, c_1)` (zero where the index is out of range).
pub fn derivative_basis_equal<S: Scalar>(space: &MuntzSpace, a: &S, b: &S, k: usize) -> Result<(S, S)> {
    let lam = space.lambda();
    let n = space.n();
    if lam.part(1) != lam.part(2) {
        return Err(Error::FirstTwoPartsUnequal);
    }
    if n == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    check_interval(space, a, b)?;
    let l0 = lam.bottom();
    let inv = count_ratio(&[(lam, n + 1), (&l0.bottom(), n - 1)], &[(&l0, n), (&l0, n)]);
    let c = S::from_i64(n as i64) * S::from_ratio(&inv) / (b.clone() - a.clone());
    let left = if k >= 1 { c.clone() * r_factor(lam, n, a, b, k - 1) } else { S::zero() };
    let right = if k < n { -(c * r_factor(lam, n, a, b, k)) } else { S::zero() };
    Ok((left, right))
}

/// `(η, μ) = ((λ_1-1, λ_1-1, λ_2, ...), (λ_1-1, λ_2, ...))`.
pub fn first_row_split(lam: &Partition) -> (Partition, Partition) {
    let l1 = lam.first().saturating_sub(1);
    let mut eta = vec![l1, l1];
    eta.extend(lam.parts().iter().skip(1));
    let mut mu = vec![l1];
    mu.extend(lam.parts().iter().skip(1));
    (Partition::new(eta).unwrap(), Partition::new(mu).unwrap())
}

/// For `λ_1 > λ_2`: `d/dt B_{k,λ}^n` as coefficients of `B_{k-1,μ}^n`,
/// `B_{k,μ}^n`, `B_{k+1,μ}^n` with `μ = (λ_1-1, λ_2, ...)`.
pub fn derivative_basis_general<S: Scalar>(space: &MuntzSpace, a: &S, b: &S, k: usize) -> Result<[S; 3]> {
    let lam = space.lambda();
    let n = space.n();
    if lam.part(1) == lam.part(2) {
        return Err(Error::FirstTwoPartsEqual);
    }
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    check_interval(space, a, b)?;
    let (eta, mu) = first_row_split(lam);
    let pref = S::from_ratio(&(elevation_binom(lam, &eta, n) / elevation_binom(&mu, &eta, n)))
        / (b.clone() - a.clone());
    let (g, d) = gamma_delta(lam, &eta, n, a, b, k);
    let left_w = S::from_i64((n + 1 - k) as i64) * a.clone() * g;
    let right_w = S::from_i64((k + 1) as i64) * b.clone() * d;
    let r = |j: usize| r_factor(&eta, n + 1, a, b, j);
    let g1 = if k >= 1 { left_w.clone() * r(k - 1) } else { S::zero() };
    let g2 = r(k) * (right_w.clone() - left_w);
    let g3 = if k < n { -(right_w * r(k + 1)) } else { S::zero() };
    Ok([pref.clone() * g1, pref.clone() * g2, pref * g3])
}
