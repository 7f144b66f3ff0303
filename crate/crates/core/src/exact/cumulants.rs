//! Exact cumulants of maj: the Bernoulli/hook formula, the moment route, the
//! closed forms in Frobenius moments and the two-term prediction.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::bernoulli::bernoulli;
use super::qpoly::QPolynomial;
use super::{int, rat, rational_to_f64};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CumulantValue {
    pub order: u32,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionTriple {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub alpha_r: BigRational,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub beta_r: BigRational,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub gamma_r: BigRational,
}

fn power_sum<I: IntoIterator<Item = i64>>(xs: I, r: u32) -> BigInt {
    xs.into_iter().map(|x| BigInt::from(x).pow(r)).sum()
}

/// `κ_r(maj)` from `(B_r/r)(Σ_{i≤n} i^r − Σ_□ h(□)^r)`; for `r = 1` the
/// shift `b(λ)` is added back, giving the mean.
pub fn exact_cumulant(shape: &Partition, r: u32) -> CumulantValue {
    assert!(r >= 1, "cumulant order starts at 1");
    let n = shape.size() as i64;
    let s = power_sum(1..=n, r) - power_sum(shape.hooks_flat().into_iter().map(|h| h as i64), r);
    let mut value = bernoulli(r as usize) * BigRational::from_integer(s) / int(r);
    if r == 1 {
        value += int(shape.b_stat());
    }
    CumulantValue { order: r, value }
}

/// Block-size multisets of the set partitions of `{1..r}` with their counts,
/// enumerated through restricted-growth strings.
fn block_patterns(r: usize) -> Vec<(Vec<usize>, u64)> {
    type Patterns = Vec<(Vec<usize>, u64)>;
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Patterns>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&r) {
        return v.clone();
    }
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut a = vec![0usize; r];
    let mut maxes = vec![0usize; r];
    loop {
        let blocks = maxes.last().map_or(0, |m| m + 1);
        let mut sizes = vec![0usize; blocks];
        for &x in &a {
            sizes[x] += 1;
        }
        sizes.sort_unstable();
        *counts.entry(sizes).or_insert(0) += 1;
        // next restricted-growth string
        let Some(i) = (1..r).rev().find(|&i| a[i] <= maxes[i - 1]) else { break };
        a[i] += 1;
        maxes[i] = maxes[i - 1].max(a[i]);
        for k in i + 1..r {
            a[k] = 0;
            maxes[k] = maxes[i];
        }
    }
    let v: Vec<_> = counts.into_iter().collect();
    cache.lock().unwrap().insert(r, v.clone());
    v
}

/// `κ_r = Σ_π (−1)^{ℓ(π)−1} (ℓ(π)−1)! ∏_j E[X^{|π_j|}]` over set partitions
/// of `{1..r}`, with exact moments of the law `c_m / P(1)`.
pub fn cumulant_from_polynomial(p: &QPolynomial, r: u32) -> BigRational {
    assert!(r >= 1, "cumulant order starts at 1");
    assert!(!p.is_zero(), "empty distribution");
    let mom = p.moments(r);
    let mut k = BigRational::zero();
    for (sizes, count) in block_patterns(r as usize) {
        let l = sizes.len();
        let mut term = BigRational::from_integer(BigInt::from(count))
            * int((1..l as u64).product::<u64>());
        for s in &sizes {
            term *= &mom[*s];
        }
        if l % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    k
}

/// `E[maj] = n(n−1)/4 − p_2/4`.
pub fn mean_maj(shape: &Partition) -> BigRational {
    let n = shape.size() as i64;
    rat(n * (n - 1), 4) - shape.frobenius_moment(2) / int(4)
}

/// `Var(maj) = (p_1³ − p_3 − (3/2)p_1² + (3/4)p_1)/36`.
pub fn var_maj(shape: &Partition) -> BigRational {
    let p1 = shape.frobenius_moment(1);
    let p3 = shape.frobenius_moment(3);
    (&p1 * &p1 * &p1 - p3 - rat(3, 2) * &p1 * &p1 + rat(3, 4) * &p1) / int(36)
}

/// `(b(λ), n(n−1)/2 − Σ λ_i(λ_i−1)/2)`.
pub fn range_maj(shape: &Partition) -> (u64, u64) {
    (shape.b_stat(), shape.maj_max())
}

/// `α_r = ½ Σ_{i,j≤n} (λ*_i − λ*_j)^r`, `β_r = Σ_□ (n + c(□))^r`,
/// `γ_r = Σ_{i≤n} (n − i − 1) i^r`, so that `κ_r = (B_r/r)(α_r − β_r − γ_r)`.
pub fn cumulant_decomposition(shape: &Partition, r: u32) -> Result<DecompositionTriple> {
    if r == 0 || r % 2 == 1 {
        return Err(Error::OddOrder(r));
    }
    let n = shape.size();
    let ni = n as i64;
    let lam = shape.descent_coordinates_doubled(n)?;
    let mut alpha = BigInt::zero();
    for (i, x) in lam.iter().enumerate() {
        for y in &lam[i + 1..] {
            alpha += BigInt::from((x - y) / 2).pow(r);
        }
    }
    let beta = power_sum(shape.contents().into_iter().flatten().map(|c| ni + c), r);
    let gamma: BigInt = (1..=ni).map(|i| BigInt::from(ni - i - 1) * BigInt::from(i).pow(r)).sum();
    Ok(DecompositionTriple {
        alpha_r: BigRational::from_integer(alpha),
        beta_r: BigRational::from_integer(beta),
        gamma_r: BigRational::from_integer(gamma),
    })
}

impl DecompositionTriple {
    pub fn cumulant(&self, r: u32) -> BigRational {
        bernoulli(r as usize) / int(r) * (&self.alpha_r - &self.beta_r - &self.gamma_r)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

/// The two leading terms of `κ_r` in Frobenius moments:
/// `B_r/(r(r+1)) (p_1^{r+1} − p_{r+1}) + B_r/(2r) (p_1^r + Σ_{s=1}^{r−1} C(r,s)(−1)^s p_s p_{r−s})`.
pub fn predicted_cumulant_exact(shape: &Partition, r: u32) -> Result<BigRational> {
    if r < 2 || r % 2 == 1 {
        return Err(Error::OddOrder(r));
    }
    let p: Vec<BigRational> = (0..=r + 1)
        .map(|k| if k == 0 { BigRational::zero() } else { shape.frobenius_moment(k) })
        .collect();
    let br = bernoulli(r as usize);
    let p1 = &p[1];
    let lead = (num_traits::pow(p1.clone(), r as usize + 1) - &p[r as usize + 1])
        * &br
        / int(r * (r + 1));
    let mut mixed = num_traits::pow(p1.clone(), r as usize);
    for s in 1..r {
        let t = BigRational::from_integer(binomial(r, s)) * &p[s as usize] * &p[(r - s) as usize];
        if s % 2 == 1 {
            mixed -= t;
        } else {
            mixed += t;
        }
    }
    Ok(lead + br * mixed / int(2 * r))
}

pub fn predicted_cumulant(shape: &Partition, r: u32) -> Result<f64> {
    predicted_cumulant_exact(shape, r).map(|x| rational_to_f64(&x))
}
