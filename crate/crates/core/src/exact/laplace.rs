//! Exact log-Laplace transform of `maj/n`.

use num_complex::Complex64;

use super::cumulants::mean_maj;
use super::qpoly::QPolynomial;
use super::{ln_bigint, rational_to_f64};
use crate::asymptotics::phi::{in_half_d0, varphi_unchecked};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `log E[e^{z·maj/n}] = b(λ)z/n + Σ_{k≤n} φ(kz/n) − Σ_□ φ(h(□)z/n)`,
/// valid for `2z ∈ 𝒟₀`.
pub fn log_laplace_exact(shape: &Partition, z: Complex64) -> Result<Complex64> {
    if shape.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !in_half_d0(z) {
        return Err(Error::DomainError(format!("2z = {} lies on the cut", 2.0 * z)));
    }
    let n = shape.size() as f64;
    let w = z / n;
    let mut acc = w * shape.b_stat() as f64;
    for k in 1..=shape.size() {
        acc += varphi_unchecked(w * k as f64);
    }
    for h in shape.hooks_flat() {
        acc -= varphi_unchecked(w * h as f64);
    }
    Ok(acc)
}

/// `log E[e^{z(maj − E maj)/n}]`.
pub fn log_laplace_exact_centered(shape: &Partition, z: Complex64) -> Result<Complex64> {
    let mean = rational_to_f64(&mean_maj(shape));
    Ok(log_laplace_exact(shape, z)? - z * mean / shape.size() as f64)
}

/// `log(Σ_m c_m e^{zm/n} / P(1))` evaluated term by term with the principal
/// logarithm, so for complex `z` it may differ from [`log_laplace_exact`] by `2πik`.
pub fn log_laplace_direct(p: &QPolynomial, z: Complex64, n: usize) -> Complex64 {
    let w = z / n as f64;
    let terms: Vec<Complex64> = p
        .terms()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(m, c)| ln_bigint(c) + w * m as f64)
        .collect();
    let top = terms.iter().map(|t| t.re).fold(f64::NEG_INFINITY, f64::max);
    let s: Complex64 = terms.iter().map(|t| (t - top).exp()).sum();
    top + s.ln() - ln_bigint(&p.total())
}
