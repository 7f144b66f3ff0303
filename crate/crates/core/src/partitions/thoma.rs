//! Points of the Thoma simplex and their measures on `[−1, 1]`.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};
use crate::exact::rational_to_f64;

const SIMPLEX_TOL: f64 = 1e-12;

/// A point `ω = (α, β)`; `γ = 1 − Σα − Σβ` is implicit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThomaParam {
    #[serde(default)]
    pub alpha: Vec<f64>,
    #[serde(default)]
    pub beta: Vec<f64>,
    /// Exact coordinates when the point comes from a partition.
    #[serde(skip)]
    pub exact: Option<(Vec<BigRational>, Vec<BigRational>)>,
}

impl ThomaParam {
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        let w = ThomaParam { alpha, beta, exact: None };
        w.validate()?;
        Ok(w)
    }

    /// `ω_0 = ((0,…),(0,…))`, the limit of balanced shapes.
    pub fn omega0() -> Self {
        ThomaParam { alpha: vec![], beta: vec![], exact: None }
    }

    /// `ω_1 = ((1,0,…),(0,…))`, the limit of one-row shapes.
    pub fn omega1() -> Self {
        ThomaParam { alpha: vec![1.0], beta: vec![], exact: None }
    }

    /// `ω_{−1} = ((0,…),(1,0,…))`, the limit of one-column shapes.
    pub fn omega_minus1() -> Self {
        ThomaParam { alpha: vec![], beta: vec![1.0], exact: None }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let w: ThomaParam =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            if let Some(x) = v.iter().find(|x| !(0.0..=1.0).contains(*x)) {
                return Err(Error::InvalidSimplexPoint(format!("{name} entry {x} not in [0,1]")));
            }
            if v.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidSimplexPoint(format!("{name} is not nonincreasing")));
            }
        }
        let s = self.alpha.iter().sum::<f64>() + self.beta.iter().sum::<f64>();
        if s > 1.0 + SIMPLEX_TOL {
            return Err(Error::InvalidSimplexPoint(format!("coordinates sum to {s} > 1")));
        }
        Ok(())
    }

    pub fn gamma(&self) -> f64 {
        if let Some((a, b)) = &self.exact {
            let s: BigRational = a.iter().chain(b.iter()).sum();
            return rational_to_f64(&(BigRational::one() - s));
        }
        let s = self.alpha.iter().sum::<f64>() + self.beta.iter().sum::<f64>();
        (1.0 - s).max(0.0)
    }

    /// `p_k(ω) = Σ α_i^k + (−1)^{k−1} Σ β_i^k` for `k ≥ 2`, and `p_1 = 1`.
    pub fn moment(&self, k: u32) -> f64 {
        if k == 1 {
            return 1.0;
        }
        if let Some(m) = self.moment_exact(k) {
            return rational_to_f64(&m);
        }
        let sa: f64 = self.alpha.iter().map(|x| x.powi(k as i32)).sum();
        let sb: f64 = self.beta.iter().map(|x| x.powi(k as i32)).sum();
        if k % 2 == 1 {
            sa + sb
        } else {
            sa - sb
        }
    }

    pub fn moment_exact(&self, k: u32) -> Option<BigRational> {
        let (a, b) = self.exact.as_ref()?;
        if k == 1 {
            return Some(BigRational::one());
        }
        let sa: BigRational = a.iter().map(|x| num_traits::pow(x.clone(), k as usize)).sum();
        let sb: BigRational = b.iter().map(|x| num_traits::pow(x.clone(), k as usize)).sum();
        Some(if k % 2 == 1 { sa + sb } else { sa - sb })
    }

    pub fn measure(&self) -> Result<DiscreteMeasure> {
        measure_of(self)
    }
}

/// `μ_ω = Σ α_i δ_{α_i} + Σ β_i δ_{−β_i} + γ δ_0`, with coincident atoms merged.
pub fn measure_of(w: &ThomaParam) -> Result<DiscreteMeasure> {
    w.validate()?;
    let mut atoms: Vec<(f64, f64)> = Vec::new();
    let mut push = |x: f64, m: f64| {
        if m == 0.0 {
            return;
        }
        match atoms.iter_mut().find(|(y, _)| *y == x) {
            Some(a) => a.1 += m,
            None => atoms.push((x, m)),
        }
    };
    match &w.exact {
        Some((a, b)) => {
            for x in a {
                let x = rational_to_f64(x);
                push(x, x);
            }
            for x in b {
                let x = rational_to_f64(x);
                push(-x, x);
            }
        }
        None => {
            for &x in &w.alpha {
                push(x, x);
            }
            for &x in &w.beta {
                push(-x, x);
            }
        }
    }
    let gamma = w.gamma();
    match atoms.iter_mut().find(|(x, _)| *x == 0.0) {
        Some(a) => a.1 += gamma,
        None => atoms.push((0.0, gamma)),
    }
    Ok(DiscreteMeasure { atoms, thoma: Some(w.clone()) })
}

/// A finitely supported probability measure on `[−1, 1]`, always carrying
/// one (possibly weightless) atom at 0.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    pub atoms: Vec<(f64, f64)>,
    thoma: Option<ThomaParam>,
}

impl DiscreteMeasure {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > 1e-14 * atoms.len().max(1) as f64 {
            return Err(Error::InvalidSimplexPoint(format!("weights sum to {total}")));
        }
        if let Some(a) = atoms.iter().find(|a| a.0.abs() > 1.0 || a.1 < 0.0) {
            return Err(Error::InvalidSimplexPoint(format!("bad atom ({}, {})", a.0, a.1)));
        }
        let mut merged: Vec<(f64, f64)> = Vec::new();
        for (x, m) in atoms {
            match merged.iter_mut().find(|(y, _)| *y == x) {
                Some(a) => a.1 += m,
                None => merged.push((x, m)),
            }
        }
        if !merged.iter().any(|a| a.0 == 0.0) {
            merged.push((0.0, 0.0));
        }
        Ok(DiscreteMeasure { atoms: merged, thoma: None })
    }

    pub fn dirac(x: f64) -> Self {
        let mut atoms = vec![(x, 1.0)];
        if x != 0.0 {
            atoms.push((0.0, 0.0));
        }
        DiscreteMeasure { atoms, thoma: None }
    }

    /// Atoms with positive weight.
    pub fn support(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.atoms.iter().copied().filter(|a| a.1 > 0.0)
    }

    pub fn zero_mass(&self) -> f64 {
        self.atoms.iter().filter(|a| a.0 == 0.0).map(|a| a.1).sum()
    }

    /// `∫ x^k dμ`.
    pub fn moment(&self, k: u32) -> f64 {
        if k == 0 {
            return self.support().map(|a| a.1).sum();
        }
        self.support().map(|(x, w)| w * x.powi(k as i32)).sum()
    }

    /// `∫ x dμ = p_2(ω)`.
    pub fn p2(&self) -> f64 {
        self.moment(1)
    }

    /// ω_1 and ω_{−1}, the points excluded from the large-deviation theory.
    pub fn is_degenerate(&self) -> bool {
        self.support().all(|(x, _)| x == 1.0) || self.support().all(|(x, _)| x == -1.0)
    }

    pub fn thoma(&self) -> Option<&ThomaParam> {
        self.thoma.as_ref()
    }
}

impl Partition {
    /// `α_i = a_i/n`, `β_i = b_i/n`, with the exact rationals kept alongside.
    pub fn thoma_embed(&self) -> Result<ThomaParam> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let n = BigRational::from_integer(self.size().into());
        let f = self.frobenius();
        let a: Vec<BigRational> = f.a.iter().map(|x| x / &n).collect();
        let b: Vec<BigRational> = f.b.iter().map(|x| x / &n).collect();
        let s: BigRational = a.iter().chain(b.iter()).sum();
        assert!(s == BigRational::one(), "Frobenius coordinates of {self} do not sum to n");
        Ok(ThomaParam {
            alpha: a.iter().map(rational_to_f64).collect(),
            beta: b.iter().map(rational_to_f64).collect(),
            exact: Some((a, b)),
        })
    }

    pub fn measure(&self) -> Result<DiscreteMeasure> {
        measure_of(&self.thoma_embed()?)
    }
}
