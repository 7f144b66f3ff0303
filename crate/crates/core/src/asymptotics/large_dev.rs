//! Legendre–Fenchel transform of `Λ_ω` and the strong large-deviation
//! estimate for the upper and lower tails of maj.

use num_complex::Complex64;
use serde::Serialize;

use super::lambda::{lambda_deriv, lambda_omega, lambda_prime_limit};
use super::psi::psi_omega;
use super::quadrature::QuadratureConfig;
use crate::error::{Error, Result};
use crate::exact::Side;
use crate::partitions::thoma::DiscreteMeasure;

const ROOT_TOL: f64 = 1e-12;
const H_CAP: f64 = 700.0;

/// The unique `h` with `Λ′(h) = y` and the rate `Λ*(y) = hy − Λ(h)`.
/// Positive `y` gives `h > 0`, negative `y` gives `h < 0`.
pub fn legendre_star(mu: &DiscreteMeasure, y: f64, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    if mu.is_degenerate() {
        return Err(Error::DegenerateParameter("ω₁ and ω₋₁ have no large deviations".into()));
    }
    let lim = lambda_prime_limit(mu);
    if y == 0.0 || y.abs() >= lim || !y.is_finite() {
        return Err(Error::OutOfRange(format!("|y| = {} must lie in (0, {lim})", y.abs())));
    }
    let sign = y.signum();
    let target = y.abs();
    // Λ′ is odd, so solve on the positive half-line and mirror
    let f = |h: f64| lambda_deriv(mu, h, 1, cfg).map(|d| d - target);
    let mut hi = 1.0;
    while f(hi)? < 0.0 {
        if hi >= H_CAP {
            return Err(Error::OutOfRange(format!(
                "y = {target} too close to the slope limit {lim}: no root below h = {H_CAP}"
            )));
        }
        hi = (2.0 * hi).min(H_CAP);
    }
    let mut lo = 0.0;
    let mut h = 0.5 * hi;
    for _ in 0..200 {
        let v = f(h)?;
        if v.abs() <= ROOT_TOL {
            break;
        }
        if v < 0.0 {
            lo = h;
        } else {
            hi = h;
        }
        let d2 = lambda_deriv(mu, h, 2, cfg)?;
        let newton = h - v / d2;
        h = if newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if hi - lo < 1e-15 * hi {
            break;
        }
    }
    let h = sign * h;
    let rate = h * y - lambda_omega(mu, Complex64::new(h, 0.0), cfg)?.re;
    Ok((h, rate))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LdOptions {
    pub quad: QuadratureConfig,
    /// Evaluate the prefactor at the finite-n measure instead of the limit.
    pub all_at_n: bool,
}

/// `P[maj − E maj ≥ n² y]` (upper) or `P[maj − E maj ≤ −n² y]` (lower)
/// compared with `e^{−nΛ*(y)} e^{Ψ_ω(h)} / (|h| √(2πn Λ″_ω(h)))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LDReport {
    pub y: f64,
    pub side: Side,
    pub n: u64,
    /// Tilt at the limit measure (the prefactor parameter).
    pub h: f64,
    /// Tilt at the finite-n measure (the rate parameter).
    pub h_n: f64,
    pub rate: f64,
    pub psi_at_h: f64,
    pub lambda2_at_h: f64,
    pub estimate: f64,
}

pub fn ld_estimate(
    mu_n: &DiscreteMeasure,
    mu_limit: &DiscreteMeasure,
    y: f64,
    n: u64,
    side: Side,
    opts: &LdOptions,
) -> Result<LDReport> {
    if !(y > 0.0) {
        return Err(Error::OutOfRange(format!("deviation y = {y} must be positive")));
    }
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let signed = match side {
        Side::Upper => y,
        Side::Lower => -y,
    };
    let (h_n, rate) = legendre_star(mu_n, signed, &opts.quad)?;
    let pre = if opts.all_at_n { mu_n } else { mu_limit };
    let h = if opts.all_at_n { h_n } else { legendre_star(pre, signed, &opts.quad)?.0 };
    let psi = psi_omega(pre, Complex64::new(h, 0.0))?.re;
    let l2 = lambda_deriv(pre, h, 2, &opts.quad)?;
    let nf = n as f64;
    let estimate = (-nf * rate + psi).exp() / (h.abs() * (2.0 * std::f64::consts::PI * nf * l2).sqrt());
    Ok(LDReport { y, side, n, h, h_n, rate, psi_at_h: psi, lambda2_at_h: l2, estimate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::thoma::{measure_of, ThomaParam};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn root_and_rate() {
        let mu = measure_of(&ThomaParam::new(vec![0.5, 0.5], vec![]).unwrap()).unwrap();
        let (h, rate) = legendre_star(&mu, 0.02, &cfg()).unwrap();
        // frozen from an independent multiprecision computation
        assert!((h - 0.971_264).abs() < 1e-5, "h = {h}");
        let d = lambda_deriv(&mu, h, 1, &cfg()).unwrap();
        assert!((d - 0.02).abs() <= 1e-12);
        assert!(rate > 0.0);
        // grid maximisation of hy − Λ(h)
        let mut best = f64::NEG_INFINITY;
        let mut g = h - 0.01;
        while g <= h + 0.01 {
            let v = g * 0.02 - lambda_omega(&mu, Complex64::new(g, 0.0), &cfg()).unwrap().re;
            best = best.max(v);
            g += 1e-5;
        }
        assert!((best - rate).abs() < 1e-8);
        let (hl, rl) = legendre_star(&mu, -0.02, &cfg()).unwrap();
        assert!((hl + h).abs() < 1e-12 && (rl - rate).abs() < 1e-14);
    }

    #[test]
    fn small_deviation() {
        let mu = DiscreteMeasure::dirac(0.0);
        let (h, rate) = legendre_star(&mu, 1e-6, &cfg()).unwrap();
        assert!(h > 0.0 && h < 1e-3 && rate < 1e-9 && rate >= 0.0);
    }

    #[test]
    fn range_errors() {
        let mu = DiscreteMeasure::dirac(0.0);
        assert!(matches!(legendre_star(&mu, 0.25, &cfg()), Err(Error::OutOfRange(_))));
        assert!(matches!(legendre_star(&mu, 0.0, &cfg()), Err(Error::OutOfRange(_))));
        assert!(matches!(
            legendre_star(&DiscreteMeasure::dirac(1.0), 0.01, &cfg()),
            Err(Error::DegenerateParameter(_))
        ));
        // the root for y this close to the slope limit lies beyond h = 700
        assert!(matches!(legendre_star(&mu, 0.2499999, &cfg()), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn estimates() {
        let mu = measure_of(&ThomaParam::new(vec![0.5, 0.5], vec![]).unwrap()).unwrap();
        let opts = LdOptions::default();
        let r20 = ld_estimate(&mu, &mu, 0.02, 20, Side::Upper, &opts).unwrap();
        let r80 = ld_estimate(&mu, &mu, 0.02, 80, Side::Upper, &opts).unwrap();
        assert!(r80.estimate < r20.estimate && r80.estimate > 0.0 && r20.estimate < 1.0);
        assert!((r20.psi_at_h + 0.019_728_5).abs() < 1e-6);
        assert!((r20.lambda2_at_h - 0.020_116_5).abs() < 1e-6);
        let lo = ld_estimate(&mu, &mu, 0.02, 80, Side::Lower, &opts).unwrap();
        assert!(lo.h < 0.0 && lo.estimate > 0.0);
    }
}
