//! Standard Young tableaux, descents and the major index.

mod enumerate;
mod rsk;
mod sampler;

pub use enumerate::{enumerate_standard, StandardTableaux, DEFAULT_ENUMERATION_CAP};
pub use rsk::rsk;
pub use sampler::{maj_histogram_mc, sample_uniform, HookWalk, RNG_NAME};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A filling of a Young diagram by `1..=n`, increasing along rows and columns.
/// `rows[0]` is the longest row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("entries must be a permutation of 1..={n}")));
            }
            seen[x] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if j > 0 && row[j - 1] >= x {
                    return Err(Error::Parse(format!("row {} is not increasing", i + 1)));
                }
                if i > 0 && rows[i - 1][j] >= x {
                    return Err(Error::Parse(format!("column {} is not increasing", j + 1)));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .expect("rows of a tableau have nonincreasing lengths");
        StandardTableau { shape, rows }
    }

    /// Parses one row per line, entries separated by spaces, longest row first.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::EmptyPartition);
        }
        StandardTableau::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `row_of()[k]` is the 1-based row holding `k` (index 0 unused).
    pub fn row_of(&self) -> Vec<usize> {
        let mut r = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                r[x] = i + 1;
            }
        }
        r
    }

    /// `{i : i+1 lies in a row strictly above the row of i}`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let r = self.row_of();
        (1..self.size()).filter(|&i| r[i + 1] > r[i]).collect()
    }

    pub fn maj(&self) -> u64 {
        self.descent_set().into_iter().map(|i| i as u64).sum()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let strs: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", strs.join(" "))?;
        }
        Ok(())
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("not a permutation of 1..={n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Accepts `"5,9,2,1"` or, for `n ≤ 9`, a run of digits `"5921"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let images = if text.contains(',') {
            text.split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<usize>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<Vec<usize>>>()?
        };
        Permutation::new(images)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.len())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    pub fn maj(&self) -> u64 {
        self.descent_set().into_iter().map(|i| i as u64).sum()
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut cur: Option<Vec<usize>> = Some((1..=n).collect());
        std::iter::from_fn(move || {
            let out = cur.take()?;
            let mut next = out.clone();
            if let Some(i) = (1..next.len()).rev().find(|&i| next[i - 1] < next[i]) {
                let j = (i..next.len()).rev().find(|&j| next[j] > next[i - 1]).unwrap();
                next.swap(i - 1, j);
                next[i..].reverse();
                cur = Some(next);
            }
            Some(Permutation { images: out })
        })
    }
}
