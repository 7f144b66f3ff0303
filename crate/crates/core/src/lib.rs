//! Exact and asymptotic distribution of the major index of a uniformly random
//! standard Young tableau.
//!
//! The crate is layered:
//!
//! * [`partitions`]: hooks, contents, Frobenius coordinates, Thoma embedding.
//! * [`tableaux`]: enumeration, descents, RSK and a hook-walk sampler.
//! * [`exact`]: the maj generating polynomial, exact cumulants, tails and
//!   the closed-form log-Laplace transform.
//! * [`asymptotics`]: `ϕ`, the limit functionals `Λ_ω` and `Ψ_ω`, Legendre
//!   transforms, large-deviation estimates and normality diagnostics.
//! * [`families`]: growing sequences of partitions with a known Thoma limit.

pub mod asymptotics;
pub mod error;
pub mod exact;
pub mod families;
pub mod normal;
pub mod partitions;
pub mod serde_util;
pub mod tableaux;

pub use error::{Error, Result};
pub use exact::qpoly::QPolynomial;
pub use partitions::thoma::{DiscreteMeasure, ThomaParam};
pub use partitions::{Cell, FrobeniusCoords, Partition};
pub use tableaux::{Permutation, StandardTableau};

pub use num_bigint::{BigInt, BigUint};
pub use num_complex::Complex64;
pub use num_rational::BigRational;
