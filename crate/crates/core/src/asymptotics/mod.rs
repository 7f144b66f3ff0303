//! Analytic layer: `ϕ` on the cut plane, the limit functionals `Λ_ω`, `Ψ_ω`,
//! Legendre transforms, large-deviation estimates and normality diagnostics.

pub mod berry;
pub mod bochner;
pub mod dilog;
pub mod lambda;
pub mod large_dev;
pub mod phi;
pub mod psi;
pub mod quadrature;
pub mod symmetric;

pub use berry::{berry_esseen_bound, edgeworth_cdf, edgeworth_gap_bound};
pub use bochner::{bochner_check, min_eigenvalue_hermitian, BochnerResult};
pub use dilog::li2;
pub use lambda::{
    lambda_derivs, lambda_omega, lambda_omega_closed, lambda_prime_limit, mock_fourier,
    mock_fourier_limit, mock_fourier_limit_closed,
};
pub use large_dev::{ld_estimate, legendre_star, LDReport, LdOptions};
pub use phi::{in_d0, in_half_d0, phi, phi_derivs, varphi};
pub use psi::{psi_integrand, psi_omega};
pub use quadrature::QuadratureConfig;
pub use symmetric::sn_log_laplace;
