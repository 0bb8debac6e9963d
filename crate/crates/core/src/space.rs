use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{muntz_tableau, partition_to_exponents, ssyt_count, MuntzTableau, Partition};
use crate::scalar::Scalar;

/// `E_λ(n) = span(1, t^{s_1}, ..., t^{s_n})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuntzSpace {
    lambda: Partition,
    n: usize,
    exponents: Vec<u32>,
    #[serde(skip)]
    tableau: MuntzTableau,
    #[serde(skip)]
    normalizers: Vec<BigRational>,
}

impl MuntzSpace {
    pub fn new(lambda: Partition, n: usize) -> Result<Self> {
        let exponents = partition_to_exponents(&lambda, n)?;
        let tableau = muntz_tableau(&lambda, n)?;
        let f0 = ssyt_count(tableau.get(0), n);
        let normalizers = tableau
            .entries
            .iter()
            .map(|p| BigRational::new(f0.clone(), ssyt_count(p, n)))
            .collect();
        Ok(Self { lambda, n, exponents, tableau, normalizers })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn tableau(&self) -> &MuntzTableau {
        &self.tableau
    }

    /// `λ^(0)`.
    pub fn bottom(&self) -> &Partition {
        self.tableau.get(0)
    }

    /// `f_{λ^(0)}(n) / f_{λ^(i)}(n)`.
    pub fn normalizer(&self, i: usize) -> &BigRational {
        &self.normalizers[i]
    }

    pub fn dimension(&self) -> usize {
        self.n + 1
    }

    /// Polynomial spaces live on the whole line; the rest need `t > 0`.
    pub fn needs_positive(&self) -> bool {
        !self.lambda.is_empty()
    }

    pub fn check_arg<S: Scalar>(&self, t: &S) -> Result<()> {
        if self.needs_positive() && !t.is_positive() {
            return Err(Error::NonPositiveArgument);
        }
        Ok(())
    }

    /// `(t^{s_1}, ..., t^{s_n})`.
    pub fn phi<S: Scalar>(&self, t: &S) -> Vec<S> {
        self.exponents.iter().map(|&s| num_traits::pow(t.clone(), s as usize)).collect()
    }
}
