use super::{end_speed, scaled, start_speed, sub, MuntzCurve};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::space::MuntzSpace;

/// How the right-hand segment of a C¹ join is pinned down.
#[derive(Clone, Debug, PartialEq)]
pub enum JoinMode<S> {
    /// Given `ρ` with `P_n - P_{n-1} = ρ (Q_1 - Q_0)`, find the right end `c`.
    /// Only for a polynomial right segment (`μ = ∅`).
    SolveForC { rho: S },
    /// Given the right end `c`, find `Q_1`.
    SolveForQ1 { c: S },
}

/// Right interval end and the first two right control points.
#[derive(Clone, Debug, PartialEq)]
pub struct Join<S> {
    pub c: S,
    pub q0: Vec<S>,
    pub q1: Vec<S>,
}

/// Continues `left` over `[b, c]` in `E_μ(n)` with matching first derivative at `b`.
pub fn join_c1<S: Scalar>(left: &MuntzCurve<S>, mu: &Partition, mode: JoinMode<S>) -> Result<Join<S>> {
    let n = left.space.n();
    if n == 0 {
        return Err(Error::DimensionMismatch("order 0 curve has no end leg".into()));
    }
    let right_space = MuntzSpace::new(mu.clone(), n)?;
    let (a, b) = (&left.a, &left.b);
    let leg = sub(&left.points[n], &left.points[n - 1]);
    if leg.iter().all(|x| x.is_zero()) {
        return Err(Error::DegenerateDirection);
    }
    let q0 = left.points[n].clone();
    let k_left = end_speed(&left.space, a, b);
    match mode {
        JoinMode::SolveForC { rho } => {
            if !mu.is_empty() {
                return Err(Error::UnsupportedJoin("solving for c needs a polynomial right segment".into()));
            }
            if !rho.is_positive() {
                return Err(Error::DegenerateInterval);
            }
            let c = b.clone() + S::from_i64(n as i64) / (rho.clone() * k_left);
            let q1 = q0.iter().zip(&leg).map(|(x, d)| x.clone() + d.clone() / rho.clone()).collect();
            Ok(Join { c, q0, q1 })
        }
        JoinMode::SolveForQ1 { c } => {
            if &c <= b {
                return Err(Error::DegenerateInterval);
            }
            let k_right = start_speed(&right_space, b, &c);
            let step = scaled(&leg, &(k_left / k_right));
            let q1 = q0.iter().zip(&step).map(|(x, d)| x.clone() + d.clone()).collect();
            Ok(Join { c, q0, q1 })
        }
    }
}
