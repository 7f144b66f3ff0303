//! Exact finite-n layer: the maj generating polynomial and everything that can
//! be read off it with rational arithmetic.

pub mod bernoulli;
pub mod cumulants;
pub mod float_poly;
pub mod laplace;
pub mod qpoly;
pub mod tails;

pub use bernoulli::{bernoulli, bernoulli_f64};
pub use cumulants::{
    cumulant_decomposition, cumulant_from_polynomial, exact_cumulant, mean_maj,
    predicted_cumulant, predicted_cumulant_exact, range_maj, var_maj, CumulantValue,
    DecompositionTriple,
};
pub use float_poly::{maj_polynomial_float, FloatQPolynomial};
pub use laplace::{log_laplace_direct, log_laplace_exact, log_laplace_exact_centered};
pub use qpoly::{maj_polynomial, maj_polynomial_sn, QPolynomial, DEFAULT_EXACT_CAP};
pub use tails::{kolmogorov_distance_to_normal, tail_probability, Side};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn rational_to_f64(x: &BigRational) -> f64 {
    ratio_f64(x.numer(), x.denom())
}

/// `num / den` as a float, robust to operands beyond the f64 range.
pub fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let bits = num.bits().max(den.bits());
    if bits < 1000 {
        return num.to_f64().unwrap() / den.to_f64().unwrap();
    }
    let s = bits - 1000;
    let (a, b) = (num >> s, den >> s);
    let b = b.to_f64().unwrap();
    if b == 0.0 {
        return if num.is_negative() == den.is_negative() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        };
    }
    a.to_f64().unwrap() / b
}

/// Natural log of a positive big integer.
pub fn ln_bigint(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "logarithm of a nonpositive integer");
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap().ln();
    }
    let s = bits - 64;
    (x >> s).to_f64().unwrap().ln() + s as f64 * std::f64::consts::LN_2
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Formats a rational as `"p/q"` (always with a denominator).
pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.trim().parse().ok()?;
    let q: BigInt = q.trim().parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(BigRational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions() {
        assert_eq!(rational_to_f64(&rat(3, 4)), 0.75);
        let big = BigInt::from(3) << 5000u32;
        let r = BigRational::new(big.clone(), big.clone() * 4);
        assert_eq!(rational_to_f64(&r), 0.25);
        assert_eq!(ratio_f64(&(big.clone() * 3), &big), 3.0);
        let l = ln_bigint(&(BigInt::from(1) << 3000u32));
        assert!((l - 3000.0 * std::f64::consts::LN_2).abs() < 1e-9);
        assert_eq!(rational_string(&rat(-6, 4)), "-3/2");
        assert_eq!(rational_string(&int(5)), "5/1");
        assert_eq!(parse_rational("-3/2"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
