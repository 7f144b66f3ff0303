//! `Ψ_ω(z) = ½ ∫∫ (ϕ(z) + G(x, y, z)) μ(dx) μ(dy)` with
//! `G(x, y, z) = [ϕ((y − x)z) − ϕ(yz) − ϕ(−xz)]/(xy)` extended by continuity.

use num_complex::Complex64;

use super::phi::{phi_derivs_unchecked, phi_unchecked, series_coeffs};
use crate::error::{Error, Result};
use crate::partitions::thoma::DiscreteMeasure;

const SMALL: f64 = 1e-3;

fn binomials(r: usize) -> Vec<f64> {
    let mut row = vec![1.0; r + 1];
    for s in 1..r {
        row[s] = row[s - 1] * (r - s + 1) as f64 / s as f64;
    }
    row
}

/// Double series `Σ_r c_r z^r Σ_{s=1}^{r−1} C(r,s)(−1)^s x^{s−1} y^{r−s−1}`.
fn g_series(x: f64, y: f64, z: Complex64) -> Complex64 {
    let c = series_coeffs();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut zr = z * z;
    for (k, ck) in c.iter().enumerate().skip(1) {
        let r = 2 * k;
        let b = binomials(r);
        let mut inner = 0.0;
        for s in 1..r {
            let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
            inner += sign * b[s] * x.powi(s as i32 - 1) * y.powi((r - s) as i32 - 1);
        }
        acc += zr * (ck * inner);
        zr *= z * z;
    }
    acc
}

/// `ϕ(zx)/x`, continuous at `x = 0`.
fn phi_over(x: f64, z: Complex64) -> Complex64 {
    if x == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        phi_unchecked(z * x) / x
    }
}

fn g_small_x(x: f64, y: f64, z: Complex64) -> Complex64 {
    let (d1, d2, d3) = phi_derivs_unchecked(z * y);
    (-z * d1 + z * z * x * d2 / 2.0 - z * z * z * x * x * d3 / 6.0) / y - phi_over(x, z) / y
}

pub fn psi_integrand(x: f64, y: f64, z: Complex64) -> Result<Complex64> {
    if !super::phi::in_half_d0(z) {
        return Err(Error::DomainError(format!("{z} is outside ½𝒟₀")));
    }
    Ok(g_unchecked(x, y, z))
}

pub(crate) fn g_unchecked(x: f64, y: f64, z: Complex64) -> Complex64 {
    let (ax, ay) = ((z * x).norm(), (z * y).norm());
    if ax <= 1.0 && ay <= 1.0 {
        g_series(x, y, z)
    } else if ax < SMALL {
        g_small_x(x, y, z)
    } else if ay < SMALL {
        g_small_x(y, x, z)
    } else {
        (phi_unchecked((y - x) * z) - phi_unchecked(y * z) - phi_unchecked(-x * z)) / (x * y)
    }
}

pub fn psi_omega(mu: &DiscreteMeasure, z: Complex64) -> Result<Complex64> {
    if !super::phi::in_half_d0(z) {
        return Err(Error::DomainError(format!("{z} is outside ½𝒟₀")));
    }
    let atoms: Vec<(f64, f64)> = mu.support().collect();
    let pz = phi_unchecked(z);
    let mut acc = Complex64::new(0.0, 0.0);
    for &(x, wx) in &atoms {
        for &(y, wy) in &atoms {
            acc += wx * wy * (pz + g_unchecked(x, y, z));
        }
    }
    Ok(0.5 * acc)
}
