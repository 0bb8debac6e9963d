//! Integer partitions, Young diagrams and the combinatorics of Müntz exponents.

mod lattice;
mod tableau;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lattice::{
    descent_chain, dimension_elevation_partitions, exponents_to_partition, muntz_tableau,
    partition_to_exponents, MuntzTableau,
};
pub use tableau::{enumerate_ssyt, Tableau, DEFAULT_SSYT_LIMIT};
pub(crate) use tableau::for_each_ssyt;
pub(crate) use lattice::is_elevation as lattice_is_elevation;

/// A weakly decreasing sequence of positive integers. Trailing zeros are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Frobenius coordinates `(α|β)`: arms and legs of the diagonal boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

pub fn make_partition(parts: &[u32]) -> Result<Partition> {
    Partition::new(parts.to_vec())
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(r)`; `r = 0` gives the empty partition.
    pub fn row(r: u32) -> Self {
        Partition::new(vec![r]).unwrap()
    }

    /// `(1^r)`.
    pub fn column(r: usize) -> Self {
        Partition(vec![1; r])
    }

    /// The hook `(l|r) = (l+1, 1^r)`.
    pub fn hook_shape(l: u32, r: usize) -> Self {
        let mut p = vec![l + 1];
        p.extend(std::iter::repeat(1).take(r));
        Partition(p)
    }

    /// `(nl, (n-1)l, ..., l)`.
    pub fn staircase(n: usize, l: u32) -> Self {
        Partition::new((1..=n as u32).rev().map(|i| i * l).collect()).unwrap()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32).collect())
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn hook(&self, i: usize, j: usize) -> Result<u32> {
        if !self.contains_box(i, j) {
            return Err(Error::BoxOutsideDiagram(i, j));
        }
        let col = self.0.iter().filter(|&&p| p as usize >= j).count();
        Ok((self.part(i) as usize + col + 1 - i - j) as u32)
    }

    pub fn hook_and_content(&self, i: usize, j: usize) -> Result<(u32, i64)> {
        Ok((self.hook(i, j)?, j as i64 - i as i64))
    }

    /// Boxes `(i, j)`, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Drops the first part.
    pub fn bottom(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Removes the outer border strip: every positive part loses one box.
    pub fn border_complement(&self) -> Partition {
        Partition::new(self.0.iter().map(|p| p - 1).collect()).unwrap()
    }

    pub fn frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let rank = (1..=self.len()).take_while(|&i| self.part(i) as usize >= i).count();
        FrobeniusForm {
            arms: (1..=rank).map(|i| self.part(i) - i as u32).collect(),
            legs: (1..=rank).map(|i| conj.part(i) - i as u32).collect(),
        }
    }

    pub fn from_frobenius(f: &FrobeniusForm) -> Result<Partition> {
        let r = f.arms.len();
        let bad = || Error::NotAPartition(format!("({:?}|{:?})", f.arms, f.legs));
        if f.legs.len() != r
            || f.arms.windows(2).any(|w| w[0] <= w[1])
            || f.legs.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(bad());
        }
        let cols: Vec<u32> = (0..r).map(|j| f.legs[j] + j as u32 + 1).collect();
        let mut parts: Vec<u32> = (0..r).map(|i| f.arms[i] + i as u32 + 1).collect();
        let depth = cols.first().copied().unwrap_or(0);
        for i in r as u32 + 1..=depth {
            parts.push(cols.iter().filter(|&&c| c >= i).count() as u32);
        }
        Partition::new(parts).map_err(|_| bad())
    }

    /// Exponential notation, e.g. `(4^3,3^2,1)`.
    pub fn exponential_notation(&self) -> String {
        if self.is_empty() {
            return "()".into();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let run = self.0[i..].iter().take_while(|&&p| p == v).count();
            out.push(if run == 1 { v.to_string() } else { format!("{v}^{run}") });
            i += run;
        }
        format!("({})", out.join(","))
    }

    /// All partitions of `w`, in reverse lexicographic order.
    pub fn all_of_weight(w: u32) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(w, w, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with weight at most `w` and at most `max_len` parts.
    pub fn all_up_to(w: u32, max_len: usize) -> Vec<Partition> {
        (0..=w)
            .flat_map(Partition::all_of_weight)
            .filter(|p| p.len() <= max_len)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `(2,1)`, `2,1`, `2 1`, `()`, `∅` and `0`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::NotAPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=n`:
/// the product of `(n + c)/h` over boxes.
pub fn ssyt_count(lambda: &Partition, n: usize) -> BigInt {
    if lambda.len() > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.boxes() {
        let (h, c) = lambda.hook_and_content(i, j).unwrap();
        num *= BigInt::from(n as i64 + c);
        den *= BigInt::from(h);
    }
    num / den
}

/// `f_λ(n+1) / f_{λ^(0)}(n)` via the first-row hooks.
pub fn hook_ratio_first_row(lambda: &Partition, n: usize) -> Result<BigRational> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut r = BigRational::one();
    for j in 1..=lambda.first() as usize {
        let h = lambda.hook(1, j)?;
        r *= BigRational::new(BigInt::from(n + j), BigInt::from(h));
    }
    Ok(r)
}

/// `f_λ(n+1) / f_{λ^(0)}(n)`, with value 1 for the empty partition.
pub(crate) fn order_ratio(lambda: &Partition, n: usize) -> BigRational {
    if lambda.is_empty() {
        BigRational::one()
    } else {
        hook_ratio_first_row(lambda, n).unwrap()
    }
}

pub(crate) fn count_ratio(num: &[(&Partition, usize)], den: &[(&Partition, usize)]) -> BigRational {
    let p = num.iter().fold(BigInt::one(), |acc, (l, n)| acc * ssyt_count(l, *n));
    let q = den.iter().fold(BigInt::one(), |acc, (l, n)| acc * ssyt_count(l, *n));
    BigRational::new(p, q)
}
