use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::{Mutex, OnceLock};

use super::rational_to_f64;

fn table() -> &'static Mutex<Vec<BigRational>> {
    static T: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// Bernoulli number `B_r` with `B_1 = +½`, i.e. the coefficients of
/// `t/(1 − e^{−t}) = Σ B_r t^r / r!`.
pub fn bernoulli(r: usize) -> BigRational {
    let mut t = table().lock().unwrap();
    while t.len() <= r {
        // Σ_{k=0}^{m} C(m+1, k) B_k = m + 1
        let m = t.len();
        let mut binom = BigInt::one();
        let mut s = BigRational::zero();
        for (k, b) in t.iter().enumerate() {
            s += b * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        let next = (BigRational::from_integer(BigInt::from(m + 1)) - s)
            / BigRational::from_integer(binom);
        t.push(next);
    }
    t[r].clone()
}

pub fn bernoulli_f64(r: usize) -> f64 {
    rational_to_f64(&bernoulli(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(20), rat(-174611, 330));
        for r in (3..40).step_by(2) {
            assert!(bernoulli(r).is_zero());
        }
    }
}
