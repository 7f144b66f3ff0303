use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Partition;
use crate::error::{Error, Result};

/// Modified Frobenius coordinates `(a_1,…,a_d | b_1,…,b_d)` with
/// `a_i = λ_i − i + ½` and `b_i = λ′_i − i + ½`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub a: Vec<BigRational>,
    pub b: Vec<BigRational>,
    pub d: usize,
}

fn half(twice: i64) -> BigRational {
    BigRational::new(BigInt::from(twice), BigInt::from(2))
}

impl FrobeniusCoords {
    /// Doubled coordinates `2a_i`, `2b_i` (odd positive integers).
    pub fn doubled(&self) -> (Vec<i64>, Vec<i64>) {
        let two = BigRational::from_integer(BigInt::from(2));
        let conv = |v: &Vec<BigRational>| {
            v.iter()
                .map(|x| {
                    let t = x * &two;
                    i64::try_from(t.to_integer()).expect("coordinate fits in i64")
                })
                .collect()
        };
        (conv(&self.a), conv(&self.b))
    }
}

impl Partition {
    /// Size of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.rows().iter().enumerate().take_while(|(i, &r)| r > *i).count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let d = self.durfee();
        let conj = self.conjugate();
        let a = (1..=d).map(|i| half(2 * (self.row(i) as i64 - i as i64) + 1)).collect();
        let b = (1..=d).map(|i| half(2 * (conj.row(i) as i64 - i as i64) + 1)).collect();
        FrobeniusCoords { a, b, d }
    }

    /// `λ*_i = λ_i − i + ½` for `i = 1..=n`.
    pub fn descent_coordinates(&self, n: usize) -> Result<Vec<BigRational>> {
        Ok(self.descent_coordinates_doubled(n)?.into_iter().map(half).collect())
    }

    /// `2λ*_i = 2λ_i − 2i + 1` for `i = 1..=n`.
    pub fn descent_coordinates_doubled(&self, n: usize) -> Result<Vec<i64>> {
        if n < self.len() {
            return Err(Error::TooShort { n, len: self.len() });
        }
        Ok((1..=n)
            .map(|i| 2 * (self.row(i) as i64 - i as i64) + 1)
            .collect())
    }

    /// `p_k = Σ a_i^k + (−1)^{k−1} Σ b_i^k`.
    pub fn frobenius_moment(&self, k: u32) -> BigRational {
        assert!(k >= 1, "Frobenius moments start at k = 1");
        let (a, b) = self.frobenius().doubled();
        let mut s = BigInt::zero();
        for x in a {
            s += BigInt::from(x).pow(k);
        }
        let mut t = BigInt::zero();
        for x in b {
            t += BigInt::from(x).pow(k);
        }
        if k % 2 == 1 {
            s += t;
        } else {
            s -= t;
        }
        BigRational::new(s, BigInt::one() << k)
    }

    /// The same moment through `Σ_{i≤n} [(λ_i − i + ½)^k − (−i + ½)^k]`.
    pub fn frobenius_moment_descent(&self, k: u32, n: usize) -> Result<BigRational> {
        let lam = self.descent_coordinates_doubled(n)?;
        let mut s = BigInt::zero();
        for (i0, x) in lam.into_iter().enumerate() {
            let empty = -2 * (i0 as i64 + 1) + 1;
            s += BigInt::from(x).pow(k) - BigInt::from(empty).pow(k);
        }
        Ok(BigRational::new(s, BigInt::one() << k))
    }

    pub fn frobenius_moment_f64(&self, k: u32) -> f64 {
        crate::exact::rational_to_f64(&self.frobenius_moment(k))
    }
}
