use num_bigint::BigInt;

use super::{ssyt_count, Partition};
use crate::error::{Error, Result};

/// Rows of a filled Young diagram.
pub type Tableau = Vec<Vec<u32>>;

pub const DEFAULT_SSYT_LIMIT: u64 = 1_000_000;

/// All semistandard tableaux of shape `λ` with entries in `1..=n`.
pub fn enumerate_ssyt(lambda: &Partition, n: usize, limit: u64) -> Result<Vec<Tableau>> {
    let count = ssyt_count(lambda, n);
    if count > BigInt::from(limit) {
        return Err(Error::EnumerationTooLarge { count: count.to_string(), limit });
    }
    let mut out = Vec::new();
    for_each_ssyt(lambda, n, |t| out.push(t.clone()));
    Ok(out)
}

/// Visits every tableau without collecting them.
pub(crate) fn for_each_ssyt(lambda: &Partition, n: usize, mut visit: impl FnMut(&Tableau)) {
    if lambda.len() > n {
        return;
    }
    let mut t: Tableau = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let cells: Vec<(usize, usize)> = lambda.boxes().map(|(i, j)| (i - 1, j - 1)).collect();
    fill(&mut t, &cells, 0, n as u32, &mut visit);
}

fn fill(t: &mut Tableau, cells: &[(usize, usize)], at: usize, n: u32, visit: &mut impl FnMut(&Tableau)) {
    if at == cells.len() {
        visit(t);
        return;
    }
    let (i, j) = cells[at];
    let lo_row = if j > 0 { t[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 1 };
    // leave room for the strictly increasing cells further down the column
    let below = t[i + 1..].iter().take_while(|row| row.len() > j).count() as u32;
    let hi = n - below;
    for v in lo_row.max(lo_col)..=hi {
        t[i][j] = v;
        fill(t, cells, at + 1, n, visit);
    }
}
