//! Positive-definiteness test for `ξ ↦ exp Λ_ω(iξ)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::lambda::{lambda_closed_unchecked, lambda_omega};
use super::quadrature::QuadratureConfig;
use crate::error::{Error, Result};
use crate::partitions::thoma::DiscreteMeasure;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BochnerResult {
    #[serde(serialize_with = "serialize_matrix")]
    pub matrix: Vec<Vec<Complex64>>,
    pub min_eigenvalue: f64,
}

fn serialize_matrix<S: serde::Serializer>(m: &[Vec<Complex64>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use crate::serde_util::ComplexJson;
    let rows: Vec<Vec<ComplexJson>> = m.iter().map(|r| r.iter().map(|&z| z.into()).collect()).collect();
    serde::Serialize::serialize(&rows, s)
}

/// `M_{ij} = exp Λ_ω(i(ξ_i − ξ_j))` and its smallest eigenvalue. For
/// `|ξ_i − ξ_j| ≥ 2π` the boundary value from `Re z > 0` is used.
pub fn bochner_check(mu: &DiscreteMeasure, xis: &[f64], cfg: &QuadratureConfig) -> Result<BochnerResult> {
    if xis.is_empty() {
        return Err(Error::OutOfRange("need at least one ξ".into()));
    }
    let n = xis.len();
    let mut m = vec![vec![Complex64::new(1.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..i {
            let z = Complex64::new(0.0, xis[i] - xis[j]);
            let lam = if z.im.abs() < 2.0 * PI {
                lambda_omega(mu, z, cfg)?
            } else {
                lambda_closed_unchecked(mu, z)
            };
            m[i][j] = lam.exp();
            m[j][i] = m[i][j].conj();
        }
    }
    let min_eigenvalue = min_eigenvalue_hermitian(&m);
    Ok(BochnerResult { matrix: m, min_eigenvalue })
}

/// Smallest eigenvalue of a Hermitian matrix through the real symmetric
/// embedding `[[A, −B], [B, A]]` and cyclic Jacobi rotations.
pub fn min_eigenvalue_hermitian(m: &[Vec<Complex64>]) -> f64 {
    let n = m.len();
    let mut a = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let (re, im) = (m[i][j].re, m[i][j].im);
            a[i][j] = re;
            a[i + n][j + n] = re;
            a[i][j + n] = -im;
            a[i + n][j] = im;
        }
    }
    jacobi_eigenvalues(a).into_iter().fold(f64::INFINITY, f64::min)
}

pub(crate) fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off < 1e-12 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}
