//! Müntz curves and tensor-product surfaces.

mod join;
mod surface;

use serde::Serialize;

use crate::bernstein::{
    bernstein_basis, check_interval, derivative_basis_equal, derivative_basis_general, elevation_weights,
    ends, first_row_split, BernsteinBasis,
};
use crate::error::{Error, Result};
use crate::partition::{order_ratio, Partition};
use crate::poly::SparsePolynomial;
use crate::scalar::{powi, Scalar};
use crate::space::MuntzSpace;
use crate::symfunc::schur;

pub use join::{join_c1, Join, JoinMode};
pub use surface::{sample_surface, surface_eval, TensorSurface};

/// `Σ B_{k,λ}^n(t) P_k` for `t` in `[a, b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MuntzCurve<S> {
    pub space: MuntzSpace,
    pub a: S,
    pub b: S,
    pub points: Vec<Vec<S>>,
}

pub(crate) fn check_points<S>(points: &[Vec<S>], count: usize) -> Result<usize> {
    if points.len() != count {
        return Err(Error::DimensionMismatch(format!("expected {count} control points, got {}", points.len())));
    }
    let dim = points.first().map_or(0, Vec::len);
    if dim == 0 || points.iter().any(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch("control points must share a positive dimension".into()));
    }
    Ok(dim)
}

fn combine<S: Scalar>(weights: &[S], points: &[Vec<S>]) -> Vec<S> {
    let dim = points[0].len();
    (0..dim)
        .map(|d| weights.iter().zip(points).fold(S::zero(), |acc, (w, p)| acc + w.clone() * p[d].clone()))
        .collect()
}

fn sub<S: Scalar>(p: &[S], q: &[S]) -> Vec<S> {
    p.iter().zip(q).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn scaled<S: Scalar>(p: &[S], k: &S) -> Vec<S> {
    p.iter().map(|x| x.clone() * k.clone()).collect()
}

impl<S: Scalar> MuntzCurve<S> {
    pub fn new(space: MuntzSpace, a: S, b: S, points: Vec<Vec<S>>) -> Result<Self> {
        check_interval(&space, &a, &b)?;
        check_points(&points, space.dimension())?;
        Ok(Self { space, a, b, points })
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn basis(&self) -> BernsteinBasis<S> {
        bernstein_basis(&self.space, &self.a, &self.b).expect("validated on construction")
    }

    /// One polynomial per coordinate.
    pub fn coordinates(&self) -> Vec<SparsePolynomial<S>> {
        let basis = self.basis();
        (0..self.dim())
            .map(|d| {
                basis
                    .elements
                    .iter()
                    .zip(&self.points)
                    .fold(SparsePolynomial::zero(), |acc, (bk, p)| &acc + &bk.scale(&p[d]))
            })
            .collect()
    }

    /// Same geometry with another scalar type.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MuntzCurve<T> {
        MuntzCurve {
            space: self.space.clone(),
            a: f(&self.a),
            b: f(&self.b),
            points: self.points.iter().map(|p| p.iter().map(&f).collect()).collect(),
        }
    }
}

pub fn curve_eval<S: Scalar>(curve: &MuntzCurve<S>, t: &S) -> Result<Vec<S>> {
    curve.space.check_arg(t)?;
    Ok(combine(&curve.basis().eval(t), &curve.points))
}

/// Control points of the same curve in `E_μ(n+1)`.
pub fn elevate<S: Scalar>(curve: &MuntzCurve<S>, mu: &Partition) -> Result<MuntzCurve<S>> {
    let n = curve.space.n();
    let w = elevation_weights(&curve.space, mu, &curve.a, &curve.b)?;
    let points = (0..=n + 1)
        .map(|k| {
            let mut acc = vec![S::zero(); curve.dim()];
            if k >= 1 {
                acc = combine(&[S::one(), w[k - 1].1.clone()], &[acc, curve.points[k - 1].clone()]);
            }
            if k <= n {
                acc = combine(&[S::one(), w[k].0.clone()], &[acc, curve.points[k].clone()]);
            }
            acc
        })
        .collect();
    MuntzCurve::new(MuntzSpace::new(mu.clone(), n + 1)?, curve.a.clone(), curve.b.clone(), points)
}

/// Derivative as a curve in a smaller Müntz space.
#[derive(Clone, Debug, PartialEq)]
pub struct Hodograph<S> {
    pub curve: MuntzCurve<S>,
}

pub fn hodograph<S: Scalar>(curve: &MuntzCurve<S>) -> Result<Hodograph<S>> {
    let lam = curve.space.lambda();
    let n = curve.space.n();
    let (a, b) = (&curve.a, &curve.b);
    let p = &curve.points;
    let dim = curve.dim();
    if n == 0 {
        let space = MuntzSpace::new(Partition::empty(), 0)?;
        return MuntzCurve::new(space, a.clone(), b.clone(), vec![vec![S::zero(); dim]]).map(|curve| Hodograph { curve });
    }
    let (target, points) = if lam.part(1) == lam.part(2) {
        // D_j = c R(j) (P_{j+1} - P_j); the coefficient pairs carry c R(j)
        let points = (0..n)
            .map(|j| {
                let (c, _) = derivative_basis_equal(&curve.space, a, b, j + 1)?;
                Ok(scaled(&sub(&p[j + 1], &p[j]), &c))
            })
            .collect::<Result<Vec<_>>>()?;
        (MuntzSpace::new(lam.bottom(), n - 1)?, points)
    } else {
        let g = (0..=n)
            .map(|k| derivative_basis_general(&curve.space, a, b, k))
            .collect::<Result<Vec<_>>>()?;
        let points = (0..=n)
            .map(|j| {
                let mut acc = vec![S::zero(); dim];
                if j >= 1 {
                    acc = combine(&[S::one(), g[j - 1][2].clone()], &[acc, p[j - 1].clone()]);
                }
                acc = combine(&[S::one(), g[j][1].clone()], &[acc, p[j].clone()]);
                if j < n {
                    acc = combine(&[S::one(), g[j + 1][0].clone()], &[acc, p[j + 1].clone()]);
                }
                acc
            })
            .collect();
        (MuntzSpace::new(first_row_split(lam).1, n)?, points)
    };
    Ok(Hodograph { curve: MuntzCurve::new(target, a.clone(), b.clone(), points)? })
}

pub fn curve_derivative<S: Scalar>(curve: &MuntzCurve<S>, t: &S) -> Result<Vec<S>> {
    curve.space.check_arg(t)?;
    curve_eval(&hodograph(curve)?.curve, t)
}

/// `P'(a)` and `P'(b)` from the end legs of the control polygon.
pub fn endpoint_tangents<S: Scalar>(curve: &MuntzCurve<S>) -> Result<(Vec<S>, Vec<S>)> {
    let n = curve.space.n();
    if n == 0 {
        return Err(Error::DimensionMismatch("order 0 curve is a point".into()));
    }
    let (a, b) = (&curve.a, &curve.b);
    let p = &curve.points;
    Ok((
        scaled(&sub(&p[1], &p[0]), &start_speed(&curve.space, a, b)),
        scaled(&sub(&p[n], &p[n - 1]), &end_speed(&curve.space, a, b)),
    ))
}

/// `P'(a) = start_speed · (P_1 - P_0)`.
pub(crate) fn start_speed<S: Scalar>(space: &MuntzSpace, a: &S, b: &S) -> S {
    let (lam, n) = (space.lambda(), space.n());
    S::from_i64(n as i64) * powi(a, lam.first() as i64) / (b.clone() - a.clone())
        * S::from_ratio(&order_ratio(lam, n))
        * schur(space.bottom(), &ends(a, n - 1, b, 1))
        / schur(lam, &ends(a, n, b, 1))
}

/// `P'(b) = end_speed · (P_n - P_{n-1})`.
pub(crate) fn end_speed<S: Scalar>(space: &MuntzSpace, a: &S, b: &S) -> S {
    let (lam, n) = (space.lambda(), space.n());
    S::from_i64(n as i64) * powi(b, lam.first() as i64) / (b.clone() - a.clone())
        * S::from_ratio(&order_ratio(lam, n))
        * schur(space.bottom(), &ends(a, 1, b, n - 1))
        / schur(lam, &ends(a, 1, b, n))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveSample<S> {
    pub t: S,
    pub point: Vec<S>,
}

impl<S: Scalar> Serialize for CurveSample<S> {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CurveSample", 2)?;
        st.serialize_field("t", &self.t.render())?;
        st.serialize_field("point", &self.point.iter().map(Scalar::render).collect::<Vec<_>>())?;
        st.end()
    }
}

/// `m` uniformly spaced parameters in `[lo, hi]`, endpoints included.
pub fn uniform_grid<S: Scalar>(lo: &S, hi: &S, m: usize) -> Result<Vec<S>> {
    if m < 2 {
        return Err(Error::TooFewSamples);
    }
    let step = (hi.clone() - lo.clone()) / S::from_i64(m as i64 - 1);
    Ok((0..m).map(|i| lo.clone() + step.clone() * S::from_i64(i as i64)).collect())
}

pub fn sample_curve<S: Scalar>(curve: &MuntzCurve<S>, m: usize) -> Result<Vec<CurveSample<S>>> {
    let basis = curve.basis();
    Ok(uniform_grid(&curve.a, &curve.b, m)?
        .into_iter()
        .map(|t| {
            let point = combine(&basis.eval(&t), &curve.points);
            CurveSample { t, point }
        })
        .collect())
}
