//! Complex dilogarithm on the closed unit disk.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::exact::bernoulli_f64;

const TERMS: usize = 40;

/// `B_n / (n+1)!` with `B_1 = −½`.
fn coeffs() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        let mut fact = 1.0;
        (0..TERMS)
            .map(|n| {
                fact *= (n + 1) as f64;
                let b = if n == 1 { -0.5 } else { bernoulli_f64(n) };
                b / fact
            })
            .collect()
    })
}

/// `Li₂(w) = Σ_{n≥0} B_n u^{n+1}/(n+1)!` with `u = −log(1 − w)`,
/// convergent for `|u| < 2π`.
fn li2_series(w: Complex64) -> Complex64 {
    let u = -(1.0 - w).ln();
    let c = coeffs();
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (0..c.len()).rev() {
        acc = acc * u + c[k];
    }
    acc * u
}

/// `Li₂(w)` for `|w| ≤ 1`.
pub fn li2(w: Complex64) -> Complex64 {
    assert!(w.norm() <= 1.0 + 1e-12, "li2 is implemented on the unit disk, got {w}");
    if w == Complex64::new(1.0, 0.0) {
        return Complex64::new(PI * PI / 6.0, 0.0);
    }
    if w.re <= 0.5 {
        return li2_series(w);
    }
    // reflection; |1 − w| < 1 and Re(1 − w) < ½ here
    let v = 1.0 - w;
    if v.norm() == 0.0 {
        return Complex64::new(PI * PI / 6.0, 0.0);
    }
    Complex64::new(PI * PI / 6.0, 0.0) - w.ln() * v.ln() - li2_series(v)
}
