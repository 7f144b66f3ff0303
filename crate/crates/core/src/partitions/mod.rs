//! Integer partitions and the statistics of their Young diagrams.
//!
//! Rows are indexed from 1 with row 1 the longest; a cell `(i, j)` sits in
//! row `i` and column `j`.

mod frobenius;
pub mod thoma;

pub use frobenius::FrobeniusCoords;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

/// Parses `"4,2,2,1"`. Unsorted input is sorted unless `strict` is set.
pub fn parse_partition(text: &str, strict: bool) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut rows = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        let v: i64 = tok
            .parse()
            .map_err(|_| Error::InvalidRow(format!("{tok:?} is not an integer")))?;
        if v <= 0 {
            return Err(Error::InvalidRow(format!("{v} is not positive")));
        }
        rows.push(v as usize);
    }
    if !strict {
        rows.sort_unstable_by(|a, b| b.cmp(a));
    }
    Partition::new(rows)
}

impl Partition {
    /// Rows must be positive and weakly decreasing.
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if let Some(&0) = rows.iter().find(|&&r| r == 0) {
            return Err(Error::InvalidRow("row of length 0".into()));
        }
        if let Some(w) = rows.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidRow(format!(
                "rows must be nonincreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Partition { rows })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn single_row(n: usize) -> Self {
        Partition {
            rows: if n == 0 { vec![] } else { vec![n] },
        }
    }

    pub fn single_column(n: usize) -> Self {
        Partition { rows: vec![1; n] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row `i` (1-based), 0 past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of nonzero rows, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| Cell { i: i + 1, j }))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.rows.first().copied().unwrap_or(0);
        let rows = (1..=width)
            .map(|j| self.rows.iter().take_while(|&&r| r >= j).count())
            .collect();
        Partition { rows }
    }

    pub fn hook_lengths(&self) -> Vec<Vec<u64>> {
        let conj = self.conjugate();
        self.rows
            .iter()
            .enumerate()
            .map(|(i0, &r)| {
                (1..=r)
                    .map(|j| (r - j + conj.rows[j - 1] - (i0 + 1) + 1) as u64)
                    .collect()
            })
            .collect()
    }

    /// All hook lengths in row order.
    pub fn hooks_flat(&self) -> Vec<u64> {
        self.hook_lengths().into_iter().flatten().collect()
    }

    pub fn contents(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i0, &r)| (1..=r).map(|j| j as i64 - (i0 as i64 + 1)).collect())
            .collect()
    }

    /// `n! / ∏ h(□)`.
    pub fn count_standard_tableaux(&self) -> BigUint {
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= k;
        }
        let mut den = BigUint::one();
        for h in self.hooks_flat() {
            den *= h;
        }
        let (q, r) = (&num / &den, &num % &den);
        assert!(r.is_zero(), "hook length formula left a remainder for {self}");
        q
    }

    /// Number of semistandard tableaux with entries in `1..=m`.
    pub fn count_semistandard(&self, m: u64) -> BigUint {
        if (m as usize) < self.len() {
            return BigUint::zero();
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let contents = self.contents().into_iter().flatten();
        for (c, h) in contents.zip(self.hooks_flat()) {
            num *= m as i64 + c;
            den *= h;
        }
        let (q, r) = (&num / &den, &num % &den);
        assert!(r.is_zero(), "hook-content formula left a remainder for {self}");
        q.to_biguint().expect("count is nonnegative")
    }

    /// `b(λ) = Σ (i−1) λ_i`, the minimum of maj over standard tableaux.
    pub fn b_stat(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &r)| (i * r) as u64)
            .sum()
    }

    /// Largest value of maj: `n(n−1)/2 − Σ λ_i(λ_i−1)/2`.
    pub fn maj_max(&self) -> u64 {
        let n = self.size() as u64;
        let s: u64 = self.rows.iter().map(|&r| (r * r.saturating_sub(1) / 2) as u64).sum();
        n * n.saturating_sub(1) / 2 - s
    }

    /// `max(λ_1, λ′_1)`.
    pub fn max_arm(&self) -> usize {
        self.row(1).max(self.len())
    }

    /// The multisets of the hook/content identity, each returned sorted:
    /// `{h(□)} ⊎ {λ_i − λ_j + j − i : i < j ≤ n}` and
    /// `{n + c(□)} ⊎ {1^(n−1), 2^(n−2), …, (n−1)^1}`.
    pub fn hook_multiset_identity(&self, n: usize) -> Result<(Vec<i64>, Vec<i64>)> {
        if n < self.len() {
            return Err(Error::TooShort { n, len: self.len() });
        }
        let mut left: Vec<i64> = self.hooks_flat().into_iter().map(|h| h as i64).collect();
        for i in 1..=n {
            for j in i + 1..=n {
                left.push(self.row(i) as i64 - self.row(j) as i64 + j as i64 - i as i64);
            }
        }
        let mut right: Vec<i64> = self
            .contents()
            .into_iter()
            .flatten()
            .map(|c| n as i64 + c)
            .collect();
        for k in 1..n {
            right.extend(std::iter::repeat(k as i64).take(n - k));
        }
        left.sort_unstable();
        right.sort_unstable();
        Ok((left, right))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order, starting with `(n)`.
pub fn partitions_of(n: usize) -> PartitionsOf {
    PartitionsOf {
        next: Some(if n == 0 { vec![] } else { vec![n] }),
    }
}

pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        // strip trailing ones, decrement the last part > 1, refill greedily
        let mut ones = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            ones += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let k = *last;
            let mut rem = ones + 1;
            while rem > 0 {
                let part = rem.min(k);
                succ.push(part);
                rem -= part;
            }
            self.next = Some(succ);
        }
        Some(Partition { rows: cur })
    }
}

/// All partitions of every size in `lo..=hi`.
pub fn partitions_up_to(lo: usize, hi: usize) -> impl Iterator<Item = Partition> {
    (lo..=hi).flat_map(partitions_of)
}
