use super::{check_points, combine, uniform_grid};
use crate::bernstein::{bernstein_basis, check_interval};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::MuntzSpace;

/// `Σ_{i,j} B_{i,λ}^n(u) B_{j,μ}^n(v) P_{ij}` with `u ∈ [a, b]`, `v ∈ [c, d]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorSurface<S> {
    pub u_space: MuntzSpace,
    pub v_space: MuntzSpace,
    pub u_interval: (S, S),
    pub v_interval: (S, S),
    /// `grid[i][j]` pairs with `B_{i,λ}` and `B_{j,μ}`.
    pub grid: Vec<Vec<Vec<S>>>,
}

impl<S: Scalar> TensorSurface<S> {
    pub fn new(
        u_space: MuntzSpace,
        v_space: MuntzSpace,
        u_interval: (S, S),
        v_interval: (S, S),
        grid: Vec<Vec<Vec<S>>>,
    ) -> Result<Self> {
        if u_space.n() != v_space.n() {
            return Err(Error::DimensionMismatch("both directions need the same order".into()));
        }
        check_interval(&u_space, &u_interval.0, &u_interval.1)?;
        check_interval(&v_space, &v_interval.0, &v_interval.1)?;
        let n1 = u_space.dimension();
        if grid.len() != n1 {
            return Err(Error::DimensionMismatch(format!("expected {n1} rows of control points")));
        }
        let dim = check_points(&grid[0], n1)?;
        for row in &grid {
            if check_points(row, n1)? != dim {
                return Err(Error::DimensionMismatch("control points differ in dimension".into()));
            }
        }
        Ok(Self { u_space, v_space, u_interval, v_interval, grid })
    }

    fn eval_with(&self, bu: &[S], bv: &[S]) -> Vec<S> {
        let rows: Vec<Vec<S>> = self.grid.iter().map(|row| combine(bv, row)).collect();
        combine(bu, &rows)
    }
}

pub fn surface_eval<S: Scalar>(surface: &TensorSurface<S>, u: &S, v: &S) -> Result<Vec<S>> {
    surface.u_space.check_arg(u)?;
    surface.v_space.check_arg(v)?;
    let bu = bernstein_basis(&surface.u_space, &surface.u_interval.0, &surface.u_interval.1)?.eval(u);
    let bv = bernstein_basis(&surface.v_space, &surface.v_interval.0, &surface.v_interval.1)?.eval(v);
    Ok(surface.eval_with(&bu, &bv))
}

/// Points on an `m × m` uniform parameter grid, indexed `[i][j]` by `(u_i, v_j)`.
pub fn sample_surface<S: Scalar>(surface: &TensorSurface<S>, m: usize) -> Result<Vec<Vec<Vec<S>>>> {
    let us = uniform_grid(&surface.u_interval.0, &surface.u_interval.1, m)?;
    let vs = uniform_grid(&surface.v_interval.0, &surface.v_interval.1, m)?;
    let basis_u = bernstein_basis(&surface.u_space, &surface.u_interval.0, &surface.u_interval.1)?;
    let basis_v = bernstein_basis(&surface.v_space, &surface.v_interval.0, &surface.v_interval.1)?;
    let bv: Vec<Vec<S>> = vs.iter().map(|v| basis_v.eval(v)).collect();
    Ok(us
        .iter()
        .map(|u| {
            let bu = basis_u.eval(u);
            bv.iter().map(|b| surface.eval_with(&bu, b)).collect()
        })
        .collect())
}
