//! Growing sequences of partitions `λ^(n) ⊢ n` with a known Thoma limit.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::thoma::ThomaParam;
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Rows `⌊f_i n⌋`, remainder added to the first row; limit `α = f`.
    Rows(Vec<f64>),
    /// Conjugates of [`Family::Rows`]; limit `β = f`.
    Cols(Vec<f64>),
    /// `(⌈n/2⌉, ⌊n/2⌋)`.
    TwoRow,
    /// Staircases padded to size `n`; limit `ω₀`.
    Staircase,
    /// `(n − 1, 1)`; limit `ω₁`.
    Hook,
    /// `k` rows of nearly equal length.
    Rect(usize),
}

fn check_frequencies(f: &[f64]) -> Result<()> {
    if f.is_empty() || f.iter().any(|x| !(*x > 0.0) || *x > 1.0) {
        return Err(Error::Parse("frequencies must lie in (0, 1]".into()));
    }
    if f.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse("frequencies must be nonincreasing".into()));
    }
    let s: f64 = f.iter().sum();
    if (s - 1.0).abs() > 1e-9 {
        return Err(Error::Parse(format!("frequencies sum to {s}, expected 1")));
    }
    Ok(())
}

fn rows_from_frequencies(f: &[f64], n: usize) -> Partition {
    let mut rows: Vec<usize> = f.iter().map(|x| (x * n as f64 + 1e-9).floor() as usize).collect();
    let used: usize = rows.iter().sum();
    rows[0] += n.saturating_sub(used);
    rows.retain(|&r| r > 0);
    Partition::new(rows).expect("floors of nonincreasing frequencies are nonincreasing")
}

impl Family {
    pub fn shape(&self, n: usize) -> Result<Partition> {
        if n == 0 {
            return Err(Error::EmptyPartition);
        }
        Ok(match self {
            Family::Rows(f) => rows_from_frequencies(f, n),
            Family::Cols(f) => rows_from_frequencies(f, n).conjugate(),
            Family::TwoRow => rows_from_frequencies(&[0.5, 0.5], n),
            Family::Rect(k) => rows_from_frequencies(&vec![1.0 / *k as f64; *k], n),
            Family::Hook => {
                if n == 1 {
                    Partition::single_row(1)
                } else {
                    Partition::new(vec![n - 1, 1]).unwrap()
                }
            }
            Family::Staircase => {
                let mut k = 0;
                while (k + 1) * (k + 2) / 2 <= n {
                    k += 1;
                }
                let extra = n - k * (k + 1) / 2;
                let rows = (0..k).map(|i| k - i + usize::from(i < extra)).collect();
                Partition::new(rows).unwrap()
            }
        })
    }

    pub fn limit(&self) -> ThomaParam {
        match self {
            Family::Rows(f) => ThomaParam { alpha: f.clone(), beta: vec![], exact: None },
            Family::Cols(f) => ThomaParam { alpha: vec![], beta: f.clone(), exact: None },
            Family::TwoRow => ThomaParam { alpha: vec![0.5, 0.5], beta: vec![], exact: None },
            Family::Rect(k) => ThomaParam { alpha: vec![1.0 / *k as f64; *k], beta: vec![], exact: None },
            Family::Staircase => ThomaParam::omega0(),
            Family::Hook => ThomaParam::omega1(),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `two-row`, `staircase`, `hook`, `rect:K`, `rows:f1,f2,…`, `cols:f1,f2,…`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let freqs = |t: &str| -> Result<Vec<f64>> {
            let f = t
                .split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad frequency {x:?}"))))
                .collect::<Result<Vec<_>>>()?;
            check_frequencies(&f)?;
            Ok(f)
        };
        match s {
            "two-row" => return Ok(Family::TwoRow),
            "staircase" => return Ok(Family::Staircase),
            "hook" => return Ok(Family::Hook),
            _ => {}
        }
        if let Some(t) = s.strip_prefix("rows:") {
            return Ok(Family::Rows(freqs(t)?));
        }
        if let Some(t) = s.strip_prefix("cols:") {
            return Ok(Family::Cols(freqs(t)?));
        }
        if let Some(t) = s.strip_prefix("rect:") {
            let k: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad row count {t:?}")))?;
            if k == 0 {
                return Err(Error::Parse("rect needs at least one row".into()));
            }
            return Ok(Family::Rect(k));
        }
        Err(Error::Parse(format!(
            "unknown family {s:?} (expected two-row, staircase, hook, rect:K, rows:…, cols:…)"
        )))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Family::Rows(v) => write!(f, "rows:{}", join(v)),
            Family::Cols(v) => write!(f, "cols:{}", join(v)),
            Family::TwoRow => write!(f, "two-row"),
            Family::Staircase => write!(f, "staircase"),
            Family::Hook => write!(f, "hook"),
            Family::Rect(k) => write!(f, "rect:{k}"),
        }
    }
}
