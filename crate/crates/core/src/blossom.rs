//! Blossoms and pseudo-affinities of Müntz spaces.

use crate::error::{Error, Result};
use crate::linalg::{determinant, solve};
use crate::scalar::Scalar;
use crate::space::MuntzSpace;
use crate::symfunc::{schur, ArgMultiset};

fn check_args<S: Scalar>(space: &MuntzSpace, args: &[S], expected: usize) -> Result<()> {
    if args.len() != expected {
        return Err(Error::ArityMismatch { expected, got: args.len() });
    }
    args.iter().try_for_each(|u| space.check_arg(u))
}

/// Blossom through Schur ratios: `φ_i = c_i S_{λ^(i)}(u) / S_{λ^(0)}(u)`.
pub fn blossom<S: Scalar>(space: &MuntzSpace, args: &[S]) -> Result<Vec<S>> {
    check_args(space, args, space.n())?;
    Ok(blossom_at(space, &ArgMultiset::from_values(args)))
}

pub(crate) fn blossom_at<S: Scalar>(space: &MuntzSpace, args: &ArgMultiset<S>) -> Vec<S> {
    let den = schur(space.bottom(), args);
    (1..=space.n())
        .map(|i| S::from_ratio(space.normalizer(i)) * schur(space.tableau().get(i), args) / den.clone())
        .collect()
}

fn falling(s: u32, k: usize) -> i64 {
    (0..k as i64).fold(1, |acc, j| acc * (s as i64 - j))
}

/// Blossom from the osculating-flat characterization: for each `u_i` the
/// point `X` lies on the osculating flat of `ϕ(t) = (t^{s_1}, ..., t^{s_n})`
/// at `u_i`. Each condition is linear in `X`; the system is solved exactly.
pub fn blossom_oracle<S: Scalar>(space: &MuntzSpace, args: &[S]) -> Result<Vec<S>> {
    let n = space.n();
    check_args(space, args, n)?;
    for i in 0..n {
        if args[i + 1..].contains(&args[i]) {
            return Err(Error::RepeatedArguments);
        }
    }
    let s = space.exponents();
    let deriv = |u: &S, k: usize| -> Vec<S> {
        s.iter()
            .map(|&e| {
                let c = falling(e, k);
                if c == 0 {
                    S::zero()
                } else {
                    S::from_i64(c) * num_traits::pow(u.clone(), e as usize - k)
                }
            })
            .collect()
    };
    let mut rows = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for u in args {
        let cols: Vec<Vec<S>> = (1..n).map(|k| deriv(u, k)).collect();
        let point = deriv(u, 0);
        // cofactors of the first column of [X - ϕ(u) | ϕ'(u) | ... ]
        let cof: Vec<S> = (0..n)
            .map(|j| {
                let minor = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                    .collect();
                let d = determinant(minor);
                if j % 2 == 0 { d } else { -d }
            })
            .collect();
        let b = cof.iter().zip(&point).fold(S::zero(), |acc, (c, p)| acc + c.clone() * p.clone());
        rows.push(cof);
        rhs.push(b);
    }
    solve(rows, rhs)
}

/// Pseudo-affine weights `(α, β)` of `t` against `a`, `b` with fixed
/// arguments `U` (`n - 1` of them).
pub fn pseudo_affinity<S: Scalar>(space: &MuntzSpace, u: &[S], a: &S, b: &S, t: &S) -> Result<(S, S)> {
    if space.n() == 0 {
        return Err(Error::DimensionMismatch("order 0 has no pseudo-affinity".into()));
    }
    check_args(space, u, space.n() - 1)?;
    if a >= b {
        return Err(Error::DegenerateInterval);
    }
    for x in [a, b, t] {
        space.check_arg(x)?;
    }
    Ok(pseudo_affinity_at(space, &ArgMultiset::from_values(u), a, b, t))
}

pub(crate) fn pseudo_affinity_at<S: Scalar>(
    space: &MuntzSpace,
    u: &ArgMultiset<S>,
    a: &S,
    b: &S,
    t: &S,
) -> (S, S) {
    let lam = space.lambda();
    let bot = space.bottom();
    let with = |xs: &[&S]| {
        let mut m = u.clone();
        for x in xs {
            m.push((*x).clone(), 1);
        }
        m
    };
    let s_ab = schur(lam, &with(&[a, b]));
    let s0_t = schur(bot, &with(&[t]));
    let den = (b.clone() - a.clone()) * s_ab * s0_t;
    let alpha = (t.clone() - a.clone()) * schur(lam, &with(&[a, t])) * schur(bot, &with(&[b])) / den.clone();
    let beta = (b.clone() - t.clone()) * schur(lam, &with(&[b, t])) * schur(bot, &with(&[a])) / den;
    (alpha, beta)
}
