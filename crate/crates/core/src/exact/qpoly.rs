//! Dense polynomials with big-integer coefficients and the q-hook product.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest `n` handled with exact big integers unless overridden.
pub const DEFAULT_EXACT_CAP: usize = 300;

/// `Σ_m coeffs[m − offset] q^m`, normalised so that the first and last
/// stored coefficients are nonzero (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    offset: usize,
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(offset: usize, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { offset, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(offset: usize, coeffs: &[i64]) -> Self {
        QPolynomial::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        QPolynomial { offset: 0, coeffs: vec![BigInt::one()] }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead;
        }
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.offset + self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `q^m`.
    pub fn coeff(&self, m: usize) -> BigInt {
        m.checked_sub(self.offset)
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_default()
    }

    /// Pairs `(m, c_m)` for the stored range.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().map(move |(k, c)| (k + self.offset, c))
    }

    /// `P(1)`.
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn shifted(&self, k: usize) -> Self {
        QPolynomial { offset: self.offset + k, coeffs: self.coeffs.clone() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `E[X^k]` for the law `c_m / P(1)` on the exponents.
    pub fn moment(&self, k: u32) -> BigRational {
        let mut s = BigInt::zero();
        for (m, c) in self.terms() {
            s += c * BigInt::from(m).pow(k);
        }
        BigRational::new(s, self.total())
    }

    /// Raw moments `E[X^0], …, E[X^r]` sharing one pass over the coefficients.
    pub fn moments(&self, r: u32) -> Vec<BigRational> {
        let mut sums = vec![BigInt::zero(); r as usize + 1];
        for (m, c) in self.terms() {
            let mut pw = c.clone();
            let m = BigInt::from(m);
            for s in sums.iter_mut() {
                *s += &pw;
                pw *= &m;
            }
        }
        let tot = self.total();
        sums.into_iter().map(|s| BigRational::new(s, tot.clone())).collect()
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::new(0, vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(self.offset + other.offset, out)
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        let lo = self.offset.min(other.offset);
        let hi = self.degree().max(other.degree());
        let mut out = vec![BigInt::zero(); hi - lo + 1];
        for (m, c) in self.terms().chain(other.terms()) {
            out[m - lo] += c;
        }
        QPolynomial::new(lo, out)
    }

    /// The coefficient vector reversed, as `q^{offset+degree} P(1/q)`.
    pub fn reversed(&self) -> QPolynomial {
        let mut c = self.coeffs.clone();
        c.reverse();
        QPolynomial { offset: self.offset, coeffs: c }
    }
}

/// In-place multiplication of a dense vector by `1 − q^k`.
fn mul_one_minus(a: &mut Vec<BigInt>, k: usize) {
    let len = a.len();
    a.resize(len + k, BigInt::zero());
    for m in (k..len + k).rev() {
        let (lo, hi) = a.split_at_mut(m);
        hi[0] -= &lo[m - k];
    }
}

/// In-place exact division of a dense vector by `1 − q^h`.
fn div_one_minus(a: &mut Vec<BigInt>, h: usize) {
    let len = a.len();
    assert!(len > h, "division by 1 - q^{h} of a polynomial of degree < {h}");
    for m in h..len {
        let (lo, hi) = a.split_at_mut(m);
        hi[0] += &lo[m - h];
    }
    assert!(
        a[len - h..].iter().all(Zero::is_zero),
        "inexact division by 1 - q^{h}"
    );
    a.truncate(len - h);
}

/// Schedule for `∏_{k∈num}(1−q^k) / ∏_{h∈den}(1−q^h)` after cancelling common
/// factors. Each divisor is applied as soon as every cyclotomic factor `Φ_d`,
/// `d | h`, is present in the running numerator, which keeps degrees small.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Mul(usize),
    Div(usize),
}

pub(crate) fn q_ratio_schedule(num: &[usize], den: &[usize]) -> Vec<Step> {
    let top = num.iter().chain(den.iter()).copied().max().unwrap_or(0);
    let mut count = vec![0i64; top + 1];
    for &k in num {
        count[k] += 1;
    }
    let mut pending = Vec::new();
    for &h in den {
        if count[h] > 0 {
            count[h] -= 1;
        } else {
            pending.push(h);
        }
    }
    pending.sort_unstable_by(|a, b| b.cmp(a));
    let mut nums: Vec<usize> = Vec::new();
    for (k, &c) in count.iter().enumerate() {
        nums.extend(std::iter::repeat(k).take(c as usize));
    }
    // e[d] = multiplicity of Φ_d in the running quotient
    let mut e = vec![0i64; top + 1];
    let mut steps = Vec::with_capacity(nums.len() + pending.len());
    let divisors = |h: usize| (1..=h).filter(move |d| h % d == 0);
    for k in nums {
        steps.push(Step::Mul(k));
        for d in divisors(k) {
            e[d] += 1;
        }
        loop {
            let ready = pending.iter().position(|&h| divisors(h).all(|d| e[d] >= 1));
            let Some(pos) = ready else { break };
            let h = pending.remove(pos);
            for d in divisors(h) {
                e[d] -= 1;
            }
            steps.push(Step::Div(h));
        }
    }
    assert!(pending.is_empty(), "q-ratio is not a polynomial: left over {pending:?}");
    steps
}

fn q_ratio(num: &[usize], den: &[usize]) -> Vec<BigInt> {
    let mut a = vec![BigInt::one()];
    for step in q_ratio_schedule(num, den) {
        match step {
            Step::Mul(k) => mul_one_minus(&mut a, k),
            Step::Div(h) => div_one_minus(&mut a, h),
        }
    }
    a
}

/// `q^{b(λ)} ∏_{k=1}^n [k]_q / ∏_□ [h(□)]_q`, the generating polynomial of maj
/// over standard tableaux of shape `λ`.
pub fn maj_polynomial(shape: &Partition, cap: usize) -> Result<QPolynomial> {
    let n = shape.size();
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let num: Vec<usize> = (1..=n).collect();
    let den: Vec<usize> = shape.hooks_flat().into_iter().map(|h| h as usize).collect();
    let p = QPolynomial::new(shape.b_stat() as usize, q_ratio(&num, &den));
    debug_assert!(p.is_nonnegative());
    Ok(p)
}

/// `∏_{k=1}^n [k]_q`, the distribution of maj (or inversions) on `S(n)`.
pub fn maj_polynomial_sn(n: usize) -> QPolynomial {
    let num: Vec<usize> = (1..=n).collect();
    let den = vec![1; n];
    QPolynomial::new(0, q_ratio(&num, &den))
}

#[derive(Serialize, Deserialize)]
struct QPolyJson {
    offset: usize,
    coeffs: Vec<String>,
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolyJson {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = QPolyJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPolynomial::new(j.offset, coeffs))
    }
}
