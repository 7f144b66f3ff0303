//! `ϕ(z) = log(sinh(z/2)/(z/2))` and `φ(z) = ϕ(z) + z/2 = log((e^z − 1)/z)`
//! on `𝒟₀ = ℂ ∖ (i[2π, ∞) ∪ i(−∞, −2π])`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::bernoulli_f64;

const SERIES_RADIUS: f64 = 1.0;
const SERIES_TERMS: usize = 24;

pub fn in_d0(z: Complex64) -> bool {
    z.is_finite() && !(z.re == 0.0 && z.im.abs() >= 2.0 * PI)
}

/// `z ∈ ½𝒟₀`.
pub fn in_half_d0(z: Complex64) -> bool {
    in_d0(2.0 * z)
}

pub(crate) fn check_d0(z: Complex64) -> Result<()> {
    if in_d0(z) {
        Ok(())
    } else {
        Err(Error::DomainError(format!("{z} lies on the cut ±i[2π, ∞)")))
    }
}

/// `c_r = B_r / (r · r!)` for even `r`, index `k = r/2`.
pub(crate) fn series_coeffs() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        let mut fact = 1.0;
        let mut out = vec![0.0];
        for r in 1..=2 * SERIES_TERMS {
            fact *= r as f64;
            if r % 2 == 0 {
                out.push(bernoulli_f64(r) / (r as f64 * fact));
            }
        }
        out
    })
}

/// `d`-th derivative of `Σ_k c_{2k} z^{2k}`.
fn series_deriv(z: Complex64, d: u32) -> Complex64 {
    let c = series_coeffs();
    let k0 = (d as usize).div_ceil(2).max(1);
    let z2 = z * z;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (k0..c.len()).rev() {
        let r = 2 * k as u32;
        let falling: f64 = (0..d).map(|i| (r - i) as f64).product();
        acc = acc * z2 + c[k] * falling;
    }
    acc * z.powi(2 * k0 as i32 - d as i32)
}

/// `1 − e^{−z}` without cancellation for small `z`.
pub(crate) fn one_minus_exp_neg(z: Complex64) -> Complex64 {
    -expm1(-z)
}

/// `e^z − 1`, accurate near 0.
pub fn expm1(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    let em1 = x.exp_m1();
    let s = (0.5 * y).sin();
    Complex64::new(em1 * y.cos() - 2.0 * s * s, x.exp() * y.sin())
}

fn reflect(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        -z
    } else {
        z
    }
}

pub fn phi(z: Complex64) -> Result<Complex64> {
    check_d0(z)?;
    Ok(phi_unchecked(z))
}

pub(crate) fn phi_unchecked(z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_RADIUS {
        return series_deriv(z, 0);
    }
    phi_closed(z)
}

fn phi_closed(z: Complex64) -> Complex64 {
    let z = reflect(z);
    // Re z ≥ 0: arg(1 − e^{−z}) and arg z both lie in [−π/2, π/2]
    0.5 * z + one_minus_exp_neg(z).ln() - z.ln()
}

pub fn varphi(z: Complex64) -> Result<Complex64> {
    Ok(phi(z)? + 0.5 * z)
}

pub(crate) fn varphi_unchecked(z: Complex64) -> Complex64 {
    phi_unchecked(z) + 0.5 * z
}

/// `(ϕ′, ϕ″, ϕ‴)`.
pub fn phi_derivs(z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
    check_d0(z)?;
    Ok(phi_derivs_unchecked(z))
}

pub(crate) fn phi_derivs_unchecked(z: Complex64) -> (Complex64, Complex64, Complex64) {
    if z.norm() <= SERIES_RADIUS {
        return (series_deriv(z, 1), series_deriv(z, 2), series_deriv(z, 3));
    }
    derivs_closed(z)
}

fn derivs_closed(z: Complex64) -> (Complex64, Complex64, Complex64) {
    let flip = z.re < 0.0;
    let w = reflect(z);
    let u = (-w).exp();
    let om = one_minus_exp_neg(w);
    let coth = (1.0 + u) / om;
    let d1 = 0.5 * coth - 1.0 / w;
    let d2 = 1.0 / (w * w) - u / (om * om);
    let d3 = -2.0 / (w * w * w) + u * (1.0 + u) / (om * om * om);
    if flip {
        (-d1, d2, -d3)
    } else {
        (d1, d2, d3)
    }
}
