use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::qpoly::QPolynomial;
use super::{ratio_f64, rational_to_f64};
use crate::error::{Error, Result};
use crate::normal::normal_cdf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// `P[X ≥ t]` (upper) or `P[X ≤ t]` (lower) for the law `c_m / P(1)`.
pub fn tail_probability(p: &QPolynomial, threshold: i64, side: Side) -> BigRational {
    let mut s = BigInt::zero();
    for (m, c) in p.terms() {
        let m = m as i64;
        let keep = match side {
            Side::Upper => m >= threshold,
            Side::Lower => m <= threshold,
        };
        if keep {
            s += c;
        }
    }
    BigRational::new(s, p.total())
}

/// `sup_s |F(s) − Φ(s)|` where `F` is the CDF of the standardised law.
pub fn kolmogorov_distance_to_normal(p: &QPolynomial) -> Result<f64> {
    let mom = p.moments(2);
    let var = &mom[2] - &mom[1] * &mom[1];
    if var.is_zero() {
        return Err(Error::DegenerateDistribution);
    }
    let mean = &mom[1];
    let sd = rational_to_f64(&var).sqrt();
    let total = p.total();
    let mut below = BigInt::zero();
    let mut dist: f64 = 0.0;
    for (m, c) in p.terms() {
        if c.is_zero() {
            continue;
        }
        let s = rational_to_f64(&(BigRational::from_integer(m.into()) - mean)) / sd;
        let phi = normal_cdf(s);
        let left = ratio_f64(&below, &total);
        below += c;
        let right = ratio_f64(&below, &total);
        dist = dist.max((left - phi).abs()).max((right - phi).abs());
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{maj_polynomial, rat};
    use crate::partitions::Partition;

    #[test]
    fn tails() {
        let q = QPolynomial::from_i64(1, &[1, 1]);
        assert_eq!(tail_probability(&q, 2, Side::Upper), rat(1, 2));
        assert_eq!(tail_probability(&q, 0, Side::Upper), rat(1, 1));
        assert_eq!(tail_probability(&q, 1, Side::Lower), rat(1, 2));
        assert_eq!(tail_probability(&q, 0, Side::Lower), rat(0, 1));
        let l = Partition::new(vec![4, 2, 2, 1]).unwrap();
        let q = maj_polynomial(&l, 300).unwrap();
        // 108 of the 216 tableaux have maj ≥ 19
        assert_eq!(tail_probability(&q, 19, Side::Upper), rat(108, 216));
    }

    #[test]
    fn kolmogorov() {
        let q = QPolynomial::from_i64(1, &[1, 1]);
        let d = kolmogorov_distance_to_normal(&q).unwrap();
        assert!((d - (0.5 - normal_cdf(-1.0))).abs() < 1e-15);
        assert!((d - 0.341_344_746_068_542_9).abs() < 1e-15);
        let l = Partition::new(vec![4, 2, 2, 1]).unwrap();
        let q = maj_polynomial(&l, 300).unwrap();
        let d0 = kolmogorov_distance_to_normal(&q).unwrap();
        let d5 = kolmogorov_distance_to_normal(&q.shifted(5)).unwrap();
        assert_eq!(d0, d5);
        assert!(matches!(
            kolmogorov_distance_to_normal(&QPolynomial::one()),
            Err(Error::DegenerateDistribution)
        ));
    }
}
