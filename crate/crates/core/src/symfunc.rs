//! Elementary, complete and Schur symmetric functions at explicit arguments.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::partition::{for_each_ssyt, ssyt_count, Partition, DEFAULT_SSYT_LIMIT};
use crate::scalar::Scalar;

/// A multiset of arguments stored as `(value, multiplicity)` pairs,
/// so `(a^{n-k}, b^k)` costs two entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ArgMultiset<S> {
    entries: Vec<(S, usize)>,
}

impl<S: Scalar> Default for ArgMultiset<S> {
    fn default() -> Self {
        Self { entries: Vec::new() }
    }
}

impl<S: Scalar> ArgMultiset<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_values(values: &[S]) -> Self {
        let mut m = Self::new();
        for v in values {
            m.push(v.clone(), 1);
        }
        m
    }

    pub fn repeated(value: S, mult: usize) -> Self {
        Self::new().with(value, mult)
    }

    pub fn with(mut self, value: S, mult: usize) -> Self {
        self.push(value, mult);
        self
    }

    pub fn push(&mut self, value: S, mult: usize) {
        if mult == 0 {
            return;
        }
        match self.entries.iter_mut().find(|(v, _)| *v == value) {
            Some(e) => e.1 += mult,
            None => self.entries.push((value, mult)),
        }
    }

    pub fn extend(&mut self, other: &Self) {
        for (v, m) in &other.entries {
            self.push(v.clone(), *m);
        }
    }

    pub fn entries(&self) -> &[(S, usize)] {
        &self.entries
    }

    /// Total number of arguments counted with multiplicity.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn values(&self) -> Vec<S> {
        self.entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat(v.clone()).take(*m))
            .collect()
    }

    pub fn has_repeats(&self) -> bool {
        self.entries.iter().any(|(_, m)| *m > 1)
    }
}

impl<S: Scalar> Serialize for ArgMultiset<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (v, m) in &self.entries {
            seq.serialize_element(&(v.render(), m))?;
        }
        seq.end()
    }
}

/// `e_0, ..., e_max` (zero past the number of arguments).
pub fn elementary_all<S: Scalar>(max: usize, args: &ArgMultiset<S>) -> Vec<S> {
    let mut c = vec![S::zero(); max + 1];
    c[0] = S::one();
    let mut deg = 0;
    for (u, m) in args.entries() {
        for _ in 0..*m {
            deg = (deg + 1).min(max);
            for r in (1..=deg).rev() {
                let v = c[r].clone() + u.clone() * c[r - 1].clone();
                c[r] = v;
            }
        }
    }
    c
}

/// `h_0, ..., h_max` from `Σ (-1)^i e_i h_{r-i} = 0`.
pub fn complete_all<S: Scalar>(max: usize, args: &ArgMultiset<S>) -> Vec<S> {
    let e = elementary_all(max.min(args.size()), args);
    let mut h = vec![S::zero(); max + 1];
    h[0] = S::one();
    for r in 1..=max {
        let mut acc = S::zero();
        for i in 1..=r.min(e.len() - 1) {
            let term = e[i].clone() * h[r - i].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        h[r] = acc;
    }
    h
}

pub fn elementary<S: Scalar>(r: i64, args: &ArgMultiset<S>) -> S {
    if r < 0 || r as usize > args.size() {
        return S::zero();
    }
    elementary_all(r as usize, args).pop().unwrap()
}

pub fn complete<S: Scalar>(r: i64, args: &ArgMultiset<S>) -> S {
    if r < 0 {
        return S::zero();
    }
    complete_all(r as usize, args).pop().unwrap()
}

fn lookup<S: Scalar>(table: &[S], idx: i64) -> S {
    if idx < 0 {
        S::zero()
    } else {
        table[idx as usize].clone()
    }
}

/// Schur function by the Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur<S: Scalar>(lambda: &Partition, args: &ArgMultiset<S>) -> S {
    let l = lambda.len();
    if l > args.size() {
        return S::zero();
    }
    if l == 0 {
        return S::one();
    }
    let h = complete_all(lambda.first() as usize + l, args);
    let m = (1..=l)
        .map(|i| (1..=l).map(|j| lookup(&h, lambda.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    determinant(m)
}

/// Nägelsbach–Kostka form `det(e_{λ'_i - i + j})`.
pub fn schur_nk<S: Scalar>(lambda: &Partition, args: &ArgMultiset<S>) -> S {
    let conj = lambda.conjugate();
    let l = conj.len();
    if l == 0 {
        return S::one();
    }
    let e = elementary_all(conj.first() as usize + l, args);
    let m = (1..=l)
        .map(|i| (1..=l).map(|j| lookup(&e, conj.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    determinant(m)
}

/// Schur function of the hook `(p|q)`.
pub fn hook_schur<S: Scalar>(p: u32, q: u32, args: &ArgMultiset<S>) -> S {
    let h = complete_all((p + q + 1) as usize, args);
    let e = elementary_all(q as usize, args);
    hook_from_tables(p, q, &h, &e)
}

fn hook_from_tables<S: Scalar>(p: u32, q: u32, h: &[S], e: &[S]) -> S {
    let mut acc = S::zero();
    for m in 0..=q {
        let term = h[(p + 1 + m) as usize].clone() * e[(q - m) as usize].clone();
        acc = if m % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Giambelli form `det(S_{(α_i|β_j)})` in Frobenius coordinates.
pub fn schur_giambelli<S: Scalar>(lambda: &Partition, args: &ArgMultiset<S>) -> S {
    let f = lambda.frobenius();
    let r = f.arms.len();
    if r == 0 {
        return S::one();
    }
    let h = complete_all((f.arms[0] + f.legs[0] + 1) as usize, args);
    let e = elementary_all(f.legs[0] as usize, args);
    let m = (0..r)
        .map(|i| (0..r).map(|j| hook_from_tables(f.arms[i], f.legs[j], &h, &e)).collect())
        .collect();
    determinant(m)
}

/// Bialternant `det(u_i^{λ_j + n - j}) / det(u_i^{n - j})`; needs distinct arguments.
pub fn schur_bialternant<S: Scalar>(lambda: &Partition, args: &ArgMultiset<S>) -> Result<S> {
    if args.has_repeats() {
        return Err(Error::RepeatedArguments);
    }
    let u = args.values();
    let n = u.len();
    if lambda.len() > n {
        return Ok(S::zero());
    }
    let alt = |shift: &dyn Fn(usize) -> u32| -> S {
        let m = u
            .iter()
            .map(|x| (1..=n).map(|j| num_traits::pow(x.clone(), shift(j) as usize)).collect())
            .collect();
        determinant(m)
    };
    let num = alt(&|j| lambda.part(j) + (n - j) as u32);
    let den = alt(&|j| (n - j) as u32);
    Ok(num / den)
}

/// Sum of monomials over semistandard tableaux.
pub fn schur_ssyt_oracle<S: Scalar>(lambda: &Partition, args: &ArgMultiset<S>, limit: u64) -> Result<S> {
    let u = args.values();
    let count = ssyt_count(lambda, u.len());
    if count > BigInt::from(limit) {
        return Err(Error::EnumerationTooLarge { count: count.to_string(), limit });
    }
    let mut monomials: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for_each_ssyt(lambda, u.len(), |t| {
        let mut content = vec![0u32; u.len()];
        for v in t.iter().flatten() {
            content[*v as usize - 1] += 1;
        }
        *monomials.entry(content).or_default() += 1;
    });
    let mut acc = S::zero();
    for (content, mult) in monomials {
        let mono = content
            .iter()
            .zip(&u)
            .fold(S::one(), |p, (&c, x)| p * num_traits::pow(x.clone(), c as usize));
        acc = acc + S::from_i64(mult as i64) * mono;
    }
    Ok(acc)
}

/// Skew Schur function `det(h_{λ_i - μ_j - i + j})`.
pub fn skew_schur<S: Scalar>(lambda: &Partition, mu: &Partition, args: &ArgMultiset<S>) -> Result<S> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained);
    }
    let l = lambda.len();
    if l == 0 {
        return Ok(S::one());
    }
    let h = complete_all(lambda.first() as usize + l, args);
    let m = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| lookup(&h, lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    Ok(determinant(m))
}

/// Which Schur formula to evaluate with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurBackend {
    JacobiTrudi,
    NagelsbachKostka,
    Giambelli,
    Bialternant,
    Tableaux,
}

impl SchurBackend {
    pub const ALL: [SchurBackend; 5] = [
        SchurBackend::JacobiTrudi,
        SchurBackend::NagelsbachKostka,
        SchurBackend::Giambelli,
        SchurBackend::Bialternant,
        SchurBackend::Tableaux,
    ];

    pub fn eval<S: Scalar>(self, lambda: &Partition, args: &ArgMultiset<S>) -> Result<S> {
        match self {
            SchurBackend::JacobiTrudi => Ok(schur(lambda, args)),
            SchurBackend::NagelsbachKostka => Ok(schur_nk(lambda, args)),
            SchurBackend::Giambelli => Ok(schur_giambelli(lambda, args)),
            SchurBackend::Bialternant => schur_bialternant(lambda, args),
            SchurBackend::Tableaux => schur_ssyt_oracle(lambda, args, DEFAULT_SSYT_LIMIT),
        }
    }
}
