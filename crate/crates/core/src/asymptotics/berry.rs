//! Berry–Esseen bound and the first Edgeworth correction for tilted maj.

use std::f64::consts::PI;

use super::lambda::lambda_deriv;
use super::quadrature::QuadratureConfig;
use crate::error::{Error, Result};
use crate::normal::{normal_cdf, normal_pdf};
use crate::partitions::thoma::DiscreteMeasure;
use crate::partitions::Partition;

pub const BERRY_CONSTANT: f64 = 30.0;

/// `(30/√n, hypothesis)` where the hypothesis is `max(λ_1, λ′_1)/n ≤ ½` and `n ≥ 4`.
pub fn berry_esseen_bound(shape: &Partition) -> (f64, bool) {
    let n = shape.size();
    let bound = BERRY_CONSTANT / (n as f64).sqrt();
    let ok = n >= 4 && 2 * shape.max_arm() <= n;
    (bound, ok)
}

fn edgeworth_coefficient(mu: &DiscreteMeasure, h: f64, n: u64, cfg: &QuadratureConfig) -> Result<f64> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let l2 = lambda_deriv(mu, h, 2, cfg)?;
    if !(l2 > 0.0) {
        return Err(Error::DegenerateParameter(format!("Λ″({h}) = {l2} is not positive")));
    }
    let l3 = lambda_deriv(mu, h, 3, cfg)?;
    Ok(l3 / (6.0 * (n as f64 * l2 * l2 * l2).sqrt()))
}

/// `G(t) = ∫_{−∞}^t (1 + c H_3(s)) φ(s) ds = Φ(t) − c (t² − 1) φ(t)` with
/// `c = Λ‴(h) / (6 √(n Λ″(h)³))`.
pub fn edgeworth_cdf(mu: &DiscreteMeasure, h: f64, n: u64, t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let c = edgeworth_coefficient(mu, h, n, cfg)?;
    if t.is_infinite() {
        return Ok(if t > 0.0 { 1.0 } else { 0.0 });
    }
    Ok(normal_cdf(t) - c * (t * t - 1.0) * normal_pdf(t))
}

/// `sup_t |G(t) − Φ(t)| = |c| / √(2π)`, attained at `t = 0`.
pub fn edgeworth_gap_bound(mu: &DiscreteMeasure, h: f64, n: u64, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(edgeworth_coefficient(mu, h, n, cfg)?.abs() / (2.0 * PI).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::thoma::{measure_of, ThomaParam};

    #[test]
    fn hypothesis() {
        let (b, ok) = berry_esseen_bound(&Partition::new(vec![2, 2, 2, 2]).unwrap());
        assert!(ok);
        assert_eq!(b, 30.0 / 8f64.sqrt());
        assert!(!berry_esseen_bound(&Partition::new(vec![7, 1]).unwrap()).1);
        assert!(!berry_esseen_bound(&Partition::new(vec![1, 1, 1]).unwrap()).1);
        assert!(!berry_esseen_bound(&Partition::new(vec![2, 1]).unwrap()).1);
    }

    #[test]
    fn edgeworth() {
        let cfg = QuadratureConfig::default();
        let sym = measure_of(&ThomaParam::new(vec![0.3], vec![0.3]).unwrap()).unwrap();
        for t in [-2.0, 0.0, 0.7] {
            let g = edgeworth_cdf(&sym, 0.0, 50, t, &cfg).unwrap();
            assert!((g - normal_cdf(t)).abs() < 1e-15);
        }
        let mu = measure_of(&ThomaParam::new(vec![0.5, 0.5], vec![]).unwrap()).unwrap();
        assert_eq!(edgeworth_cdf(&mu, 1.0, 50, f64::INFINITY, &cfg).unwrap(), 1.0);
        assert!((edgeworth_cdf(&mu, 1.0, 50, 40.0, &cfg).unwrap() - 1.0).abs() < 1e-15);
        assert!(edgeworth_cdf(&mu, 1.0, 50, -40.0, &cfg).unwrap().abs() < 1e-15);
        let mut prev = f64::INFINITY;
        for n in [10, 100, 1000, 10000] {
            let gap = edgeworth_gap_bound(&mu, 1.0, n, &cfg).unwrap();
            let actual = (edgeworth_cdf(&mu, 1.0, n, 0.0, &cfg).unwrap() - 0.5).abs();
            assert!((gap - actual).abs() < 1e-15);
            assert!(gap < prev);
            prev = gap;
        }
        assert!(edgeworth_cdf(&DiscreteMeasure::dirac(1.0), 1.0, 5, 0.0, &cfg).is_err());
    }
}
