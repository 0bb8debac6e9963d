#![allow(dead_code)]

use muntz::{ArgMultiset, Partition, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

pub fn r(v: i64) -> Rational {
    q(v, 1)
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Positive rational with small numerator and denominator.
pub fn pos(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.gen_range(1..=12), rng.gen_range(1..=5))
}

pub fn positives(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| pos(rng)).collect()
}

pub fn distinct_positives(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < n {
        let x = pos(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// `a < b`, both positive.
pub fn interval(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    let a = pos(rng);
    let b = a.clone() + pos(rng);
    (a, b)
}

pub fn args(v: &[Rational]) -> ArgMultiset<Rational> {
    ArgMultiset::from_values(v)
}

pub fn args_with(v: &[Rational], extra: &[&Rational]) -> ArgMultiset<Rational> {
    let mut m = ArgMultiset::from_values(v);
    for x in extra {
        m.push((*x).clone(), 1);
    }
    m
}

pub fn ends(a: &Rational, na: usize, b: &Rational, nb: usize) -> ArgMultiset<Rational> {
    ArgMultiset::repeated(a.clone(), na).with(b.clone(), nb)
}

/// All partitions of weight at most `w` that fit in `n` rows.
pub fn partitions(w: u32, n: usize) -> Vec<Partition> {
    Partition::all_up_to(w, n)
}
