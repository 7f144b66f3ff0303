//! Uniform sampling of standard tableaux by the Greene–Nijenhuis–Wilf hook walk.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::StandardTableau;
use crate::partitions::Partition;

/// Recorded in output metadata so that runs can be reproduced.
pub const RNG_NAME: &str = "ChaCha8Rng (rand_chacha 0.9, seed_from_u64)";

/// Reusable sampler for one shape driven by a seeded ChaCha8 stream.
pub struct HookWalk {
    shape: Vec<usize>,
    rng: ChaCha8Rng,
    rows: Vec<usize>,
    cols: Vec<usize>,
    row_of: Vec<usize>,
}

impl HookWalk {
    pub fn new(shape: &Partition, seed: u64) -> Self {
        let n = shape.size();
        HookWalk {
            shape: shape.rows().to_vec(),
            rng: ChaCha8Rng::seed_from_u64(seed),
            rows: Vec::with_capacity(shape.len()),
            cols: Vec::with_capacity(shape.row(1)),
            row_of: vec![0; n + 1],
        }
    }

    /// Fills `row_of[k]` (0-based rows) for `k = 1..=n`.
    fn walk(&mut self) {
        self.rows.clear();
        self.rows.extend_from_slice(&self.shape);
        self.cols.clear();
        let conj = Partition::new(self.shape.clone()).expect("valid shape").conjugate();
        self.cols.extend_from_slice(conj.rows());
        let n: usize = self.shape.iter().sum();
        for k in (1..=n).rev() {
            // uniform cell of the current diagram
            let mut idx = self.rng.random_range(0..k);
            let mut i = 0;
            while idx >= self.rows[i] {
                idx -= self.rows[i];
                i += 1;
            }
            let mut j = idx;
            loop {
                let arm = self.rows[i] - j - 1;
                let leg = self.cols[j] - i - 1;
                if arm + leg == 0 {
                    break;
                }
                let s = self.rng.random_range(0..arm + leg);
                if s < arm {
                    j += s + 1;
                } else {
                    i += s - arm + 1;
                }
            }
            self.row_of[k] = i;
            self.rows[i] -= 1;
            self.cols[j] -= 1;
            if self.rows[i] == 0 {
                self.rows.pop();
            }
            if self.cols[j] == 0 {
                self.cols.pop();
            }
        }
    }

    pub fn sample(&mut self) -> StandardTableau {
        self.walk();
        let mut rows: Vec<Vec<usize>> = self.shape.iter().map(|&l| Vec::with_capacity(l)).collect();
        for k in 1..self.row_of.len() {
            rows[self.row_of[k]].push(k);
        }
        StandardTableau::from_rows_unchecked(rows)
    }

    /// maj of a fresh sample without materialising the tableau.
    pub fn sample_maj(&mut self) -> u64 {
        self.walk();
        (1..self.row_of.len().saturating_sub(1))
            .filter(|&i| self.row_of[i + 1] > self.row_of[i])
            .map(|i| i as u64)
            .sum()
    }
}

pub fn sample_uniform(shape: &Partition, seed: u64) -> StandardTableau {
    HookWalk::new(shape, seed).sample()
}

/// Empirical histogram of maj over `trials` hook-walk samples.
pub fn maj_histogram_mc(shape: &Partition, trials: u64, seed: u64) -> BTreeMap<u64, u64> {
    let mut walk = HookWalk::new(shape, seed);
    let mut hist = BTreeMap::new();
    for _ in 0..trials {
        *hist.entry(walk.sample_maj()).or_insert(0) += 1;
    }
    hist
}
