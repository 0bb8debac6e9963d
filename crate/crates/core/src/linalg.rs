//! Dense determinants and linear solves over a [`Scalar`] field.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn pivot_row<S: Scalar>(m: &[Vec<S>], col: usize, from: usize) -> Option<usize> {
    let mut best: Option<usize> = None;
    for r in from..m.len() {
        if m[r][col].is_zero() {
            continue;
        }
        match best {
            Some(b) if m[b][col].abs() >= m[r][col].abs() => {}
            _ => best = Some(r),
        }
    }
    best
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    if n == 0 {
        return S::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = S::one();
    let mut prev = S::one();
    for k in 0..n - 1 {
        let Some(p) = pivot_row(&m, k, k) else {
            return S::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone())
                    / prev.clone();
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Solves `A x = b` by Gaussian elimination with pivoting.
pub fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> Result<Vec<S>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("linear system is not square".into()));
    }
    for k in 0..n {
        let p = pivot_row(&a, k, k).ok_or(Error::SingularSystem)?;
        a.swap(p, k);
        b.swap(p, k);
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone() / a[k][k].clone();
            for j in k..n {
                let v = a[i][j].clone() - f.clone() * a[k][j].clone();
                a[i][j] = v;
            }
            let v = b[i].clone() - f * b[k].clone();
            b[i] = v;
        }
    }
    let mut x = vec![S::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            acc = acc - a[i][j].clone() * x[j].clone();
        }
        x[i] = acc / a[i][i].clone();
    }
    Ok(x)
}
