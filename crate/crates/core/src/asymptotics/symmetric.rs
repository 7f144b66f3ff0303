//! The uniform-permutation analogue: maj on `S(n)`.

use num_complex::Complex64;

use super::phi::{check_d0, varphi_unchecked};
use crate::error::Result;

/// `log E[e^{z(maj(σ) − E maj)/n}]` for uniform `σ ∈ S(n)`:
/// `Σ_{k=1}^n φ(kz/n) − nφ(z/n) − (n − 1)z/4`.
pub fn sn_log_laplace(n: u64, z: Complex64) -> Result<Complex64> {
    check_d0(z)?;
    let nf = n as f64;
    let s: Complex64 = (1..=n).map(|k| varphi_unchecked(z * (k as f64 / nf))).sum();
    Ok(s - nf * varphi_unchecked(z / nf) - (nf - 1.0) * z / 4.0)
}
