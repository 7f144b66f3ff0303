//! Floating-point variant of the q-hook product for shapes beyond the exact
//! cap. Coefficients are stored as `coeffs[k] · e^{log_scale}` with the
//! largest entry kept at magnitude 1, using the same multiply/divide schedule
//! as the exact route.
//!
//! Each multiplication or division by `1 − q^k` perturbs every coefficient by
//! about one ulp of the current largest coefficient, so errors are relative to
//! the maximum coefficient rather than to each coefficient; far tails lose
//! relative accuracy first.

use super::qpoly::{q_ratio_schedule, Step};
use super::tails::Side;
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq)]
pub struct FloatQPolynomial {
    pub offset: usize,
    pub log_scale: f64,
    pub coeffs: Vec<f64>,
    /// Largest discarded remainder over the divisions, relative to the maximum coefficient.
    pub max_residual: f64,
}

fn rescale(a: &mut [f64], log_scale: &mut f64) {
    let m = a.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if m > 0.0 && m.is_finite() {
        for x in a.iter_mut() {
            *x /= m;
        }
        *log_scale += m.ln();
    }
}

pub fn maj_polynomial_float(shape: &Partition) -> Result<FloatQPolynomial> {
    let n = shape.size();
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    let num: Vec<usize> = (1..=n).collect();
    let den: Vec<usize> = shape.hooks_flat().into_iter().map(|h| h as usize).collect();
    let mut a = vec![1.0f64];
    let mut log_scale = 0.0;
    let mut max_residual: f64 = 0.0;
    for step in q_ratio_schedule(&num, &den) {
        match step {
            Step::Mul(k) => {
                let len = a.len();
                a.resize(len + k, 0.0);
                for m in (k..len + k).rev() {
                    a[m] -= a[m - k];
                }
            }
            Step::Div(h) => {
                let len = a.len();
                for m in h..len {
                    a[m] += a[m - h];
                }
                let top = a.iter().fold(0.0f64, |m, x| m.max(x.abs()));
                let rem = a[len - h..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
                max_residual = max_residual.max(rem / top);
                a.truncate(len - h);
            }
        }
        rescale(&mut a, &mut log_scale);
    }
    Ok(FloatQPolynomial { offset: shape.b_stat() as usize, log_scale, coeffs: a, max_residual })
}

impl FloatQPolynomial {
    pub fn degree(&self) -> usize {
        self.offset + self.coeffs.len().saturating_sub(1)
    }

    /// `log P(1)`.
    pub fn log_total(&self) -> f64 {
        self.coeffs.iter().sum::<f64>().ln() + self.log_scale
    }

    /// `c_m / P(1)` for each stored exponent.
    pub fn probabilities(&self) -> Vec<f64> {
        let s: f64 = self.coeffs.iter().sum();
        self.coeffs.iter().map(|c| c / s).collect()
    }

    pub fn tail_probability(&self, threshold: i64, side: Side) -> f64 {
        let p = self.probabilities();
        p.iter()
            .enumerate()
            .filter(|(k, _)| {
                let m = (*k + self.offset) as i64;
                match side {
                    Side::Upper => m >= threshold,
                    Side::Lower => m <= threshold,
                }
            })
            .map(|(_, x)| x)
            .sum::<f64>()
            .clamp(0.0, 1.0)
    }

    pub fn mean(&self) -> f64 {
        self.probabilities()
            .iter()
            .enumerate()
            .map(|(k, p)| p * (k + self.offset) as f64)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{maj_polynomial, ratio_f64};

    #[test]
    fn agrees_with_exact_route() {
        for rows in [vec![4, 2, 2, 1], vec![20, 20], vec![15, 10, 5], vec![12, 8, 8, 4, 2, 1]] {
            let l = Partition::new(rows).unwrap();
            let exact = maj_polynomial(&l, 300).unwrap();
            let fl = maj_polynomial_float(&l).unwrap();
            assert_eq!((fl.offset, fl.degree()), (exact.offset(), exact.degree()));
            let total = exact.total();
            let cmax = exact.coeffs().iter().max().unwrap();
            let pmax = ratio_f64(cmax, &total);
            for (p, c) in fl.probabilities().iter().zip(exact.coeffs()) {
                let want = ratio_f64(c, &total);
                assert!((p - want).abs() <= 1e-12 * pmax, "{l}: {p} vs {want}");
            }
            let lt = crate::exact::ln_bigint(&total);
            assert!((fl.log_total() - lt).abs() < 1e-10 * lt.max(1.0));
        }
    }
}
