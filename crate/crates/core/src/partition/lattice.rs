use std::collections::BTreeSet;

use serde::Serialize;

use super::Partition;
use crate::error::{Error, Result};

/// The `n + 1` partitions `λ^(0), ..., λ^(n)` attached to `λ` at order `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuntzTableau {
    pub entries: Vec<Partition>,
}

impl MuntzTableau {
    pub fn get(&self, i: usize) -> &Partition {
        &self.entries[i]
    }
}

fn check_order(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsOrder { len: lambda.len(), n });
    }
    Ok(())
}

pub fn muntz_tableau(lambda: &Partition, n: usize) -> Result<MuntzTableau> {
    check_order(lambda, n)?;
    let mut entries = vec![lambda.bottom()];
    for i in 1..=n {
        let mut parts: Vec<u32> = (1..=i).map(|j| lambda.part(j) + 1).collect();
        parts.extend((i + 2..=n).map(|j| lambda.part(j)));
        entries.push(Partition::new(parts).expect("tableau rows stay decreasing"));
    }
    Ok(MuntzTableau { entries })
}

/// Exponents `s_1 < ... < s_n` with `E_λ(n) = span(1, t^{s_1}, ..., t^{s_n})`.
pub fn partition_to_exponents(lambda: &Partition, n: usize) -> Result<Vec<u32>> {
    check_order(lambda, n)?;
    let l1 = lambda.first();
    let mut s: Vec<u32> = (1..n).map(|i| l1 - lambda.part(i + 1) + i as u32).collect();
    s.push(l1 + n as u32);
    Ok(s)
}

pub fn exponents_to_partition(exponents: &[u32]) -> Result<Partition> {
    let n = exponents.len();
    let bad = || Error::NotRealizable(format!("{exponents:?}"));
    if n == 0 {
        return Ok(Partition::empty());
    }
    if exponents[0] < 1 || exponents.windows(2).any(|w| w[0] >= w[1]) || exponents[n - 1] < n as u32 {
        return Err(bad());
    }
    let l1 = exponents[n - 1] as i64 - n as i64;
    let mut parts = vec![l1];
    for i in 1..n {
        parts.push(l1 + i as i64 - exponents[i - 1] as i64);
    }
    if parts.iter().any(|&p| p < 0) {
        return Err(bad());
    }
    Partition::new(parts.into_iter().map(|p| p as u32).collect()).map_err(|_| bad())
}

/// `(λ, n), (λ*, n+1), ...` down to the empty partition, `λ_1 + 1` entries.
pub fn descent_chain(lambda: &Partition, n: usize) -> Result<Vec<(Partition, usize)>> {
    check_order(lambda, n)?;
    let mut out = vec![(lambda.clone(), n)];
    while !out.last().unwrap().0.is_empty() {
        let (l, m) = out.last().unwrap();
        out.push((l.border_complement(), m + 1));
    }
    Ok(out)
}

pub(crate) fn is_elevation(lambda: &Partition, n: usize, mu: &Partition) -> bool {
    let (Ok(small), Ok(big)) = (partition_to_exponents(lambda, n), partition_to_exponents(mu, n + 1)) else {
        return false;
    };
    let big: BTreeSet<u32> = big.into_iter().collect();
    small.iter().all(|s| big.contains(s))
}

/// Partitions `μ` with `E_λ(n) ⊂ E_μ(n+1)`: the shifted family
/// `(r+λ_1, ..., r+λ_n, r)` for `r <= r_max` and every insertion family.
pub fn dimension_elevation_partitions(lambda: &Partition, n: usize, r_max: u32) -> Result<Vec<Partition>> {
    check_order(lambda, n)?;
    let mut found = BTreeSet::new();
    for r in 0..=r_max {
        let mut parts: Vec<u32> = (1..=n).map(|i| lambda.part(i) + r).collect();
        parts.push(r);
        found.insert(Partition::new(parts).unwrap());
    }
    for s in 1..=n {
        let (hi, lo) = (lambda.part(s), lambda.part(s + 1));
        if hi == 0 {
            continue;
        }
        for rho in lo..hi {
            let mut parts: Vec<u32> = (1..=s).map(|i| lambda.part(i) - 1).collect();
            parts.push(rho);
            parts.extend((s + 1..=n).map(|i| lambda.part(i)));
            if let Ok(mu) = Partition::new(parts) {
                found.insert(mu);
            }
        }
    }
    Ok(found.into_iter().filter(|mu| is_elevation(lambda, n, mu)).collect())
}
