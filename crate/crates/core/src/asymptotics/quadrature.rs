//! Composite Gauss–Legendre quadrature on `[0, 1]` with node doubling.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub nodes: usize,
    pub max_doublings: u32,
    pub rel_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { nodes: 64, max_doublings: 4, rel_tol: 1e-12 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nodes < 8 {
            return Err(Error::OutOfRange(format!("quadrature needs ≥ 8 nodes, got {}", self.nodes)));
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::OutOfRange(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        Ok(())
    }
}

/// Nodes in `(−1, 1)` and weights of the n-point rule.
pub type Rule = Arc<(Vec<f64>, Vec<f64>)>;

pub fn gauss_legendre(n: usize) -> Rule {
    static CACHE: OnceLock<RwLock<HashMap<usize, Rule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(r) = cache.read().unwrap().get(&n) {
        return r.clone();
    }
    let rule = Arc::new(compute_rule(n));
    cache.write().unwrap().entry(n).or_insert(rule).clone()
}

fn compute_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut t = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // three-term recurrence for P_n(t) and P_{n−1}(t)
            let (mut p0, mut p1) = (1.0, t);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * t * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (t * p1 - p0) / (t * t - 1.0);
            let dt = p1 / dp;
            t -= dt;
            if dt.abs() < 1e-16 {
                break;
            }
        }
        let wi = 2.0 / ((1.0 - t * t) * dp * dp);
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// `(∫_0^1 f, ∫_0^1 |f|)` with `panels` equal panels and one fixed rule per panel.
pub fn composite<F>(f: &F, nodes: usize, panels: usize) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    let rule = gauss_legendre(nodes);
    let (xs, ws) = (&rule.0, &rule.1);
    let width = 1.0 / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut abs = 0.0;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * width;
        let mut part = Complex64::new(0.0, 0.0);
        let mut part_abs = 0.0;
        for (x, w) in xs.iter().zip(ws) {
            let v = f(mid + 0.5 * width * x);
            part += v * *w;
            part_abs += v.norm() * *w;
        }
        acc += part * (0.5 * width);
        abs += part_abs * 0.5 * width;
    }
    (acc, abs)
}

/// Node-doubling driver: returns once two successive values differ by at
/// most `rel_tol · max(|I|, ∫|f|)`.
pub fn integrate_unit<F>(f: F, cfg: &QuadratureConfig, panels: usize) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let panels = panels.max(1);
    let mut nodes = cfg.nodes;
    let (mut prev, _) = composite(&f, nodes, panels);
    for _ in 0..cfg.max_doublings {
        nodes *= 2;
        let (cur, abs) = composite(&f, nodes, panels);
        if !cur.is_finite() {
            return Err(Error::QuadratureError("integrand produced a non-finite value".into()));
        }
        if (cur - prev).norm() <= cfg.rel_tol * cur.norm().max(abs) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureError(format!(
        "no convergence after {} doublings ({} nodes × {} panels)",
        cfg.max_doublings, nodes, panels
    )))
}

/// Real-valued variant of [`integrate_unit`].
pub fn integrate_unit_real<F>(f: F, cfg: &QuadratureConfig, panels: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate_unit(|t| Complex64::new(f(t), 0.0), cfg, panels).map(|z| z.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_for_polynomials() {
        for n in [8, 13, 64, 128] {
            let r = gauss_legendre(n);
            let s: f64 = r.1.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n = {n}");
            // ∫_{-1}^{1} x^{2n−2} = 2/(2n−1)
            let k = 2 * n as i32 - 2;
            let m: f64 = r.0.iter().zip(&r.1).map(|(x, w)| w * x.powi(k)).sum();
            assert!((m - 2.0 / (k as f64 + 1.0)).abs() < 1e-12, "n = {n}");
            assert!(r.0.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn integrates_analytic_functions() {
        let cfg = QuadratureConfig::default();
        let v = integrate_unit(|t| Complex64::new(0.0, 3.0 * t).exp(), &cfg, 1).unwrap();
        let want = (Complex64::new(0.0, 3.0).exp() - 1.0) / Complex64::new(0.0, 3.0);
        assert!((v - want).norm() < 1e-14);
        let v = integrate_unit_real(|t| (40.0 * t).cos(), &cfg, 13).unwrap();
        assert!((v - 40f64.sin() / 40.0).abs() < 1e-14);
    }

    #[test]
    fn reports_failure() {
        let cfg = QuadratureConfig { nodes: 8, max_doublings: 1, rel_tol: 1e-15 };
        let r = integrate_unit_real(|t| (t - 0.5).abs().sqrt(), &cfg, 1);
        assert!(matches!(r, Err(Error::QuadratureError(_))));
        assert!(QuadratureConfig { nodes: 4, ..cfg }.validate().is_err());
    }
}
