use super::StandardTableau;
use crate::error::{Error, Result};
use crate::partitions::Partition;

pub const DEFAULT_ENUMERATION_CAP: usize = 14;

/// Every standard tableau of shape `λ` exactly once, by placing `1, 2, …, n`
/// with backtracking. Fails when `|λ| > cap`.
pub fn enumerate_standard(shape: &Partition, cap: usize) -> Result<StandardTableaux> {
    if shape.size() > cap {
        return Err(Error::CapExceeded { size: shape.size(), cap });
    }
    Ok(StandardTableaux {
        shape: shape.rows().to_vec(),
        fill: vec![0; shape.len()],
        choice: Vec::with_capacity(shape.size()),
        started: false,
        done: false,
    })
}

pub struct StandardTableaux {
    shape: Vec<usize>,
    fill: Vec<usize>,
    /// 0-based row chosen for each placed entry.
    choice: Vec<usize>,
    started: bool,
    done: bool,
}

impl StandardTableaux {
    fn n(&self) -> usize {
        self.shape.iter().sum()
    }

    fn admissible(&self, r: usize) -> bool {
        self.fill[r] < self.shape[r] && (r == 0 || self.fill[r - 1] > self.fill[r])
    }

    fn first_admissible_from(&self, r0: usize) -> Option<usize> {
        (r0..self.shape.len()).find(|&r| self.admissible(r))
    }

    fn place(&mut self, r: usize) {
        self.fill[r] += 1;
        self.choice.push(r);
    }

    fn complete(&mut self) {
        while self.choice.len() < self.n() {
            let r = self.first_admissible_from(0).expect("a corner always exists");
            self.place(r);
        }
    }

    fn current(&self) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = self.shape.iter().map(|&l| Vec::with_capacity(l)).collect();
        for (k, &r) in self.choice.iter().enumerate() {
            rows[r].push(k + 1);
        }
        StandardTableau::from_rows_unchecked(rows)
    }
}

impl Iterator for StandardTableaux {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.complete();
            return Some(self.current());
        }
        while let Some(r) = self.choice.pop() {
            self.fill[r] -= 1;
            if let Some(r2) = self.first_admissible_from(r + 1) {
                self.place(r2);
                self.complete();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}
