//! `Λ_ω(z) = ∫_0^1 ∫ (ϕ(tz) − ϕ(txz)) μ_ω(dx) dt` and its relatives.
//!
//! Two independent routes are provided: Gauss–Legendre quadrature in `t`
//! ([`lambda_omega`]) and a closed form through the dilogarithm
//! ([`lambda_omega_closed`]), based on
//! `J(w) = ∫_0^1 ϕ(tw) dt = w/4 − (π²/6 − Li₂(e^{−w}))/w + 1 − Log w` for `Re w ≥ 0`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::dilog::li2;
use super::phi::{check_d0, phi_derivs_unchecked, phi_unchecked, series_coeffs};
use super::quadrature::{integrate_unit, integrate_unit_real, QuadratureConfig};
use crate::error::{Error, Result};
use crate::partitions::thoma::DiscreteMeasure;

fn panels_for(z: Complex64) -> usize {
    (z.norm() / PI).ceil().max(1.0) as usize
}

/// `Λ_ω(z)` by quadrature. Accepts every `z ∈ 𝒟₀`, since `tz` and `txz`
/// stay in `𝒟₀` for `t, |x| ≤ 1`.
pub fn lambda_omega(mu: &DiscreteMeasure, z: Complex64, cfg: &QuadratureConfig) -> Result<Complex64> {
    check_d0(z)?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(z);
    }
    let atoms: Vec<(f64, f64)> = mu.support().collect();
    integrate_unit(
        |t| {
            let a = phi_unchecked(t * z);
            atoms.iter().map(|&(x, w)| w * (a - phi_unchecked(t * x * z))).sum()
        },
        cfg,
        panels_for(z),
    )
}

/// `J(w) = ∫_0^1 ϕ(tw) dt`. On the cut `Re w = 0`, `|Im w| ≥ 2π` this returns
/// the boundary value from `Re w > 0`.
pub(crate) fn j_integral(w: Complex64) -> Complex64 {
    if w.norm() <= 1.0 {
        let c = series_coeffs();
        let w2 = w * w;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (1..c.len()).rev() {
            acc = acc * w2 + c[k] / (2 * k + 1) as f64;
        }
        return acc * w2;
    }
    let w = if w.re < 0.0 { -w } else { w };
    let zeta2 = PI * PI / 6.0;
    w / 4.0 - (zeta2 - li2((-w).exp())) / w + 1.0 - w.ln()
}

/// `Λ_ω(z)` through the dilogarithm closed form.
pub fn lambda_omega_closed(mu: &DiscreteMeasure, z: Complex64) -> Result<Complex64> {
    check_d0(z)?;
    Ok(lambda_closed_unchecked(mu, z))
}

pub(crate) fn lambda_closed_unchecked(mu: &DiscreteMeasure, z: Complex64) -> Complex64 {
    let jz = j_integral(z);
    mu.support()
        .map(|(x, w)| w * (jz - if x == 0.0 { Complex64::new(0.0, 0.0) } else { j_integral(x.abs() * z) }))
        .sum()
}

fn check_nondegenerate(mu: &DiscreteMeasure) -> Result<()> {
    if mu.is_degenerate() {
        return Err(Error::DegenerateParameter(
            "μ is concentrated on {−1} or {1} (ω = ω₁ or ω₋₁)".into(),
        ));
    }
    Ok(())
}

/// `Λ^{(k)}(h) = ∫_0^1 ∫ t^k (ϕ^{(k)}(th) − x^k ϕ^{(k)}(txh)) μ(dx) dt`, `k ∈ {1, 2, 3}`.
pub(crate) fn lambda_deriv(mu: &DiscreteMeasure, h: f64, k: u32, cfg: &QuadratureConfig) -> Result<f64> {
    check_nondegenerate(mu)?;
    let atoms: Vec<(f64, f64)> = mu.support().collect();
    let pick = |s: f64| {
        let v = phi_derivs_unchecked(Complex64::new(s, 0.0));
        match k {
            1 => v.0.re,
            2 => v.1.re,
            _ => v.2.re,
        }
    };
    integrate_unit_real(
        |t| {
            let b = pick(t * h);
            let s: f64 = atoms
                .iter()
                .map(|&(x, w)| w * (b - x.powi(k as i32) * pick(t * x * h)))
                .sum();
            t.powi(k as i32) * s
        },
        cfg,
        panels_for(Complex64::new(h, 0.0)),
    )
}

/// `(Λ′(h), Λ″(h), Λ‴(h))` for real `h`.
pub fn lambda_derivs(mu: &DiscreteMeasure, h: f64, cfg: &QuadratureConfig) -> Result<(f64, f64, f64)> {
    Ok((
        lambda_deriv(mu, h, 1, cfg)?,
        lambda_deriv(mu, h, 2, cfg)?,
        lambda_deriv(mu, h, 3, cfg)?,
    ))
}

/// `lim_{h→∞} Λ′(h) = ¼ ∫ (1 − x) μ(dx) = ¼ (1 − p_2(ω))`.
pub fn lambda_prime_limit(mu: &DiscreteMeasure) -> f64 {
    0.25 * (1.0 - mu.p2())
}

/// `Re(Λ_ω(h + iξ) − Λ_ω(h))`, evaluated in closed form so that large `ξ`
/// stays cheap and accurate.
pub fn mock_fourier(mu: &DiscreteMeasure, h: f64, xi: f64) -> Result<f64> {
    check_nondegenerate(mu)?;
    if h == 0.0 {
        return Err(Error::DegenerateParameter("mock Fourier transform needs h ≠ 0".into()));
    }
    let a = lambda_closed_unchecked(mu, Complex64::new(h, xi));
    let b = lambda_closed_unchecked(mu, Complex64::new(h, 0.0));
    Ok((a - b).re)
}

fn check_limit_args(mu: &DiscreteMeasure, h: f64) -> Result<()> {
    if h == 0.0 {
        return Err(Error::DegenerateParameter("mock Fourier limit needs h ≠ 0".into()));
    }
    if mu.zero_mass() > 0.0 {
        return Err(Error::ZeroAtomUnsupported);
    }
    Ok(())
}

/// `lim_{ξ→∞} Re(Λ_ω(h + iξ) − Λ_ω(h)) = ∫_0^1 ∫ log((1 − e^{−t|x|h})/(1 − e^{−th})) μ(dx) dt`,
/// by quadrature.
pub fn mock_fourier_limit(mu: &DiscreteMeasure, h: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_limit_args(mu, h)?;
    let h = h.abs();
    let atoms: Vec<(f64, f64)> = mu.support().collect();
    integrate_unit_real(
        |t| {
            atoms
                .iter()
                .map(|&(x, w)| {
                    let a = x.abs();
                    if t == 0.0 {
                        w * a.ln()
                    } else {
                        w * ((-(-t * a * h).exp_m1()) / (-(-t * h).exp_m1())).ln()
                    }
                })
                .sum()
        },
        cfg,
        panels_for(Complex64::new(h, 0.0)),
    )
}

/// `∫_0^1 log(1 − e^{−ta}) dt = −(π²/6 − Li₂(e^{−a}))/a` for `a > 0`.
fn log_one_minus_exp_integral(a: f64) -> f64 {
    -(PI * PI / 6.0 - li2(Complex64::new((-a).exp(), 0.0)).re) / a
}

/// Closed form of [`mock_fourier_limit`].
pub fn mock_fourier_limit_closed(mu: &DiscreteMeasure, h: f64) -> Result<f64> {
    check_limit_args(mu, h)?;
    let h = h.abs();
    let base = log_one_minus_exp_integral(h);
    Ok(mu
        .support()
        .map(|(x, w)| w * (log_one_minus_exp_integral(x.abs() * h) - base))
        .sum())
}
