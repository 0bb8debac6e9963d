//! De Casteljau paths, their pseudo-affine weights, and the pyramid algorithm.

use serde::ser::{Serialize, Serializer};

use crate::blossom::pseudo_affinity_at;
use crate::error::{Error, Result};
use crate::scalar::{binomial, Scalar};
use crate::space::MuntzSpace;
use crate::symfunc::{schur, ArgMultiset};

pub const DEFAULT_PATH_LIMIT: u64 = 100_000;

/// A chain of integer intervals `{k} ⊂ A_1 ⊂ ... ⊂ {0, ..., n}`, each
/// step adding one index at either end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeCasteljauPath {
    bounds: Vec<(usize, usize)>,
}

impl DeCasteljauPath {
    pub fn from_sets(sets: &[Vec<usize>]) -> Result<Self> {
        let bad = |m: &str| Error::DimensionMismatch(format!("not a de Casteljau path: {m}"));
        let mut bounds = Vec::with_capacity(sets.len());
        for (l, s) in sets.iter().enumerate() {
            if s.len() != l + 1 || s.windows(2).any(|w| w[1] != w[0] + 1) {
                return Err(bad("sets must be consecutive runs growing by one"));
            }
            bounds.push((s[0], s[l]));
        }
        for w in bounds.windows(2) {
            let ((lo, hi), (nlo, nhi)) = (w[0], w[1]);
            if !((nlo == lo && nhi == hi + 1) || (nlo + 1 == lo && nhi == hi)) {
                return Err(bad("consecutive sets must be nested"));
            }
        }
        Ok(Self { bounds })
    }

    pub fn start(&self) -> usize {
        self.bounds[0].0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.bounds.iter().map(|&(lo, hi)| (lo..=hi).collect()).collect()
    }

    /// Edges as `(|A_l|, min A_{l+1}, grows_upward)`.
    fn edges(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        self.bounds.windows(2).map(|w| (w[0].1 - w[0].0 + 1, w[1].0, w[1].1 > w[0].1))
    }
}

impl Serialize for DeCasteljauPath {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        self.sets().serialize(s)
    }
}

/// All `C(n, k)` paths from `{k}` to `{0, ..., n}`.
pub fn enumerate_paths(n: usize, k: usize) -> Result<Vec<DeCasteljauPath>> {
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    fn go(lo: usize, hi: usize, n: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<DeCasteljauPath>) {
        if lo == 0 && hi == n {
            out.push(DeCasteljauPath { bounds: cur.clone() });
            return;
        }
        if hi < n {
            cur.push((lo, hi + 1));
            go(lo, hi + 1, n, cur, out);
            cur.pop();
        }
        if lo > 0 {
            cur.push((lo - 1, hi));
            go(lo - 1, hi, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, n, &mut vec![(k, k)], &mut out);
    Ok(out)
}

/// Which factor of the edge weights to multiply along a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeWeight {
    /// `ψ_1^±`: ratios of `S_{λ^(0)}`.
    Psi1,
    /// `ψ_2^±`: ratios of `S_λ`.
    Psi2,
    /// The pseudo-affine weights themselves.
    Full,
}

/// Fixed arguments `(t^{|A_l|-1}, b^{min A_{l+1}}, a^{n-|A_l|-min A_{l+1}})` of an edge.
fn edge_args<S: Scalar>(n: usize, size: usize, lo: usize, a: &S, b: &S, t: &S) -> ArgMultiset<S> {
    ArgMultiset::repeated(t.clone(), size - 1)
        .with(b.clone(), lo)
        .with(a.clone(), n - size - lo)
}

fn plus<S: Scalar>(u: &ArgMultiset<S>, x: &S) -> ArgMultiset<S> {
    u.clone().with(x.clone(), 1)
}

fn edge_weight<S: Scalar>(space: &MuntzSpace, u: &ArgMultiset<S>, a: &S, b: &S, t: &S, up: bool, kind: EdgeWeight) -> S {
    let lam = space.lambda();
    let bot = space.bottom();
    match kind {
        EdgeWeight::Psi1 => {
            let num = if up { schur(bot, &plus(u, a)) } else { schur(bot, &plus(u, b)) };
            num / schur(bot, &plus(u, t))
        }
        EdgeWeight::Psi2 => {
            let far = if up { b } else { a };
            schur(lam, &plus(&plus(u, far), t)) / schur(lam, &plus(&plus(u, a), b))
        }
        EdgeWeight::Full => {
            let (alpha, beta) = pseudo_affinity_at(space, u, a, b, t);
            if up { beta } else { alpha }
        }
    }
}

fn check_point<S: Scalar>(space: &MuntzSpace, a: &S, b: &S, t: &S) -> Result<()> {
    if space.n() == 0 {
        return Err(Error::DimensionMismatch("order 0 has no de Casteljau edges".into()));
    }
    if a >= b {
        return Err(Error::DegenerateInterval);
    }
    for x in [a, b, t] {
        space.check_arg(x)?;
    }
    Ok(())
}

/// Product of edge weights along `path`.
pub fn path_weight<S: Scalar>(
    space: &MuntzSpace,
    a: &S,
    b: &S,
    t: &S,
    path: &DeCasteljauPath,
    kind: EdgeWeight,
) -> Result<S> {
    check_point(space, a, b, t)?;
    let n = space.n();
    if path.len() != n {
        return Err(Error::DimensionMismatch(format!("path has {} edges, order is {n}", path.len())));
    }
    let mut w = S::one();
    for (size, lo, up) in path.edges() {
        w = w * edge_weight(space, &edge_args(n, size, lo, a, b, t), a, b, t, up, kind);
    }
    if S::EXACT && kind == EdgeWeight::Psi1 {
        // adjacent ψ_1 factors telescope to a path-independent ratio
        let k = path.start();
        let closed = schur(space.bottom(), &ArgMultiset::repeated(a.clone(), n - k).with(b.clone(), k))
            / schur(space.bottom(), &ArgMultiset::repeated(t.clone(), n));
        assert!(w == closed, "ψ_1 telescoping failed");
    }
    Ok(w)
}

/// `B_{k,λ}^n(t)` as the sum of weights over all paths from `{k}`.
pub fn path_sum_basis<S: Scalar>(space: &MuntzSpace, a: &S, b: &S, t: &S, k: usize) -> Result<S> {
    path_sum_basis_limited(space, a, b, t, k, DEFAULT_PATH_LIMIT)
}

pub fn path_sum_basis_limited<S: Scalar>(
    space: &MuntzSpace,
    a: &S,
    b: &S,
    t: &S,
    k: usize,
    limit: u64,
) -> Result<S> {
    let n = space.n();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let count = binomial(n as u64, k as u64);
    if count > limit.into() {
        return Err(Error::PathCountTooLarge { count: count.to_string(), limit });
    }
    let mut acc = S::zero();
    for path in enumerate_paths(n, k)? {
        acc = acc + path_weight(space, a, b, t, &path, EdgeWeight::Full)?;
    }
    Ok(acc)
}

/// Pyramid evaluation of `Σ B_{k,λ}^n(t) P_k`.
pub fn de_casteljau_eval<S: Scalar>(space: &MuntzSpace, a: &S, b: &S, points: &[Vec<S>], t: &S) -> Result<Vec<S>> {
    let n = space.n();
    if points.len() != n + 1 {
        return Err(Error::DimensionMismatch(format!("{} control points for order {n}", points.len())));
    }
    let dim = points[0].len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch("control points differ in dimension".into()));
    }
    check_point(space, a, b, t)?;
    let mut level: Vec<Vec<S>> = points.to_vec();
    for r in 1..=n {
        level = (0..=n - r)
            .map(|i| {
                let (alpha, beta) = pseudo_affinity_at(space, &edge_args(n, r, i, a, b, t), a, b, t);
                level[i]
                    .iter()
                    .zip(&level[i + 1])
                    .map(|(p, q)| beta.clone() * p.clone() + alpha.clone() * q.clone())
                    .collect()
            })
            .collect();
    }
    Ok(level.pop().unwrap())
}
