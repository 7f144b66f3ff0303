use std::thread;

use majmeter_core::asymptotics::{berry_esseen_bound, bochner_check, ld_estimate, lambda_prime_limit, LdOptions};
use majmeter_core::error::Error;
use majmeter_core::exact::{
    cumulant_decomposition, exact_cumulant, kolmogorov_distance_to_normal, maj_polynomial, mean_maj, predicted_cumulant_exact,
    range_maj, rational_to_f64, tail_probability, var_maj, Side,
};
use majmeter_core::families::Family;
use majmeter_core::partitions::parse_partition;
use majmeter_core::tableaux::{maj_histogram_mc, RNG_NAME};
use majmeter_core::{BigRational, Partition, ThomaParam};
use serde_json::{json, Value};

use crate::args::{OmegaInput, PartitionInput};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};

/// What a command produces: a table, and optionally a JSON shape of its own.
pub struct Output {
    pub table: Table,
    pub json: Option<Value>,
}

impl From<Table> for Output {
    fn from(table: Table) -> Self {
        Output { table, json: None }
    }
}

pub fn read_partition(input: &PartitionInput) -> Result<Partition, CliError> {
    let text = match (&input.partition, &input.partition_file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(CliError::Usage("a partition is required".into())),
    };
    Ok(parse_partition(&text, false)?)
}

pub fn read_omega(input: &OmegaInput) -> Result<Option<ThomaParam>, CliError> {
    let text = match (&input.omega, &input.omega_file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Ok(None),
    };
    Ok(Some(ThomaParam::from_json(&text)?))
}

/// Order-preserving parallel map over a sweep.
fn sweep<T: Send>(ns: &[usize], f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(ns.len().max(1));
    let chunk = ns.len().div_ceil(workers).max(1);
    thread::scope(|s| {
        let handles: Vec<_> = ns.chunks(chunk).map(|c| s.spawn(|| c.iter().map(|&n| f(n)).collect::<Vec<T>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    })
}

fn rational(x: BigRational) -> Cell {
    Cell::Rational(x)
}

pub fn dist(shape: &Partition, cfg: &RunConfig) -> Result<Output, CliError> {
    let p = maj_polynomial(shape, cfg.exact_cap)?;
    let total = p.total();
    let (lo, hi) = range_maj(shape);
    let d_kol = match kolmogorov_distance_to_normal(&p) {
        Ok(d) => Some(d),
        Err(Error::DegenerateDistribution) => None,
        Err(e) => return Err(e.into()),
    };
    let mean = mean_maj(shape);
    let var = var_maj(shape);
    let mut t = Table::new(&["maj", "count", "probability"]);
    t.meta("partition", Cell::Text(shape.to_string()));
    t.meta("total", Cell::Big(total.to_string()));
    t.meta("mean", rational(mean.clone()));
    t.meta("variance", rational(var.clone()));
    t.meta("min", Cell::Int(lo as i64));
    t.meta("max", Cell::Int(hi as i64));
    t.meta("d_kol", d_kol.map_or(Cell::Empty, Cell::Float));
    for (m, c) in p.terms() {
        let prob = BigRational::new(c.clone(), total.clone());
        t.push(vec![Cell::Int(m as i64), Cell::Big(c.to_string()), Cell::Float(rational_to_f64(&prob))]);
    }
    let json = json!({
        "partition": shape.rows(),
        "polynomial": p,
        "total": total.to_string(),
        "mean": majmeter_core::exact::rational_string(&mean),
        "variance": majmeter_core::exact::rational_string(&var),
        "range": [lo, hi],
        "d_kol": d_kol,
    });
    Ok(Output { table: t, json: Some(json) })
}

pub fn cumulants(shape: &Partition, max_order: u32, cfg: &RunConfig) -> Result<Output, CliError> {
    if max_order == 0 {
        return Err(CliError::Usage("--max-order must be at least 1".into()));
    }
    if shape.size() > cfg.exact_cap {
        return Err(Error::CapExceeded { size: shape.size(), cap: cfg.exact_cap }.into());
    }
    let mut t = Table::new(&["r", "kappa", "kappa_float", "predicted", "alpha", "beta", "gamma"]);
    t.meta("partition", Cell::Text(shape.to_string()));
    for r in 1..=max_order {
        let k = exact_cumulant(shape, r).value;
        let kf = rational_to_f64(&k);
        let mut row = vec![Cell::Int(r as i64), rational(k), Cell::Float(kf)];
        if r % 2 == 0 {
            row.push(rational(predicted_cumulant_exact(shape, r)?));
            let d = cumulant_decomposition(shape, r)?;
            row.extend([rational(d.alpha_r), rational(d.beta_r), rational(d.gamma_r)]);
        } else {
            row.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
        }
        t.push(row);
    }
    Ok(t.into())
}

pub fn sample(shape: &Partition, trials: u64, cfg: &RunConfig) -> Result<Output, CliError> {
    let hist = maj_histogram_mc(shape, trials, cfg.seed);
    let mut t = Table::new(&["maj", "count", "frequency"]);
    t.meta("partition", Cell::Text(shape.to_string()));
    t.meta("trials", Cell::Int(trials as i64));
    t.meta("seed", Cell::Big(cfg.seed.to_string()));
    t.meta("rng", Cell::Text(RNG_NAME.into()));
    let mut sum = 0.0;
    for (&m, &c) in &hist {
        sum += m as f64 * c as f64;
        t.push(vec![Cell::Int(m as i64), Cell::Int(c as i64), Cell::Float(c as f64 / trials as f64)]);
    }
    t.meta("empirical_mean", Cell::Float(sum / trials as f64));
    t.meta("exact_mean", rational(mean_maj(shape)));
    Ok(t.into())
}

pub struct LdArgs {
    pub family: Family,
    pub limit: Option<ThomaParam>,
    pub y: f64,
    pub ns: Vec<usize>,
    pub side: Side,
    pub all_at_n: bool,
}

fn exact_tail(shape: &Partition, y: f64, side: Side, cap: usize) -> Result<f64, Error> {
    let p = maj_polynomial(shape, cap)?;
    let n = shape.size() as f64;
    let mean = rational_to_f64(&mean_maj(shape));
    let threshold = match side {
        Side::Upper => (mean + y * n * n).ceil(),
        Side::Lower => (mean - y * n * n).floor(),
    };
    Ok(rational_to_f64(&tail_probability(&p, threshold as i64, side)))
}

pub fn ld(a: &LdArgs, cfg: &RunConfig) -> Result<Output, CliError> {
    let limit = a.limit.clone().unwrap_or_else(|| a.family.limit());
    let mu_limit = limit.measure()?;
    let slope = lambda_prime_limit(&mu_limit);
    if !(a.y > 0.0 && a.y < slope) {
        return Err(Error::OutOfRange(format!("y = {} must lie in (0, {slope})", a.y)).into());
    }
    let opts = LdOptions { quad: cfg.quad, all_at_n: a.all_at_n };
    let rows = sweep(&a.ns, |n| -> Result<Vec<Cell>, Error> {
        let shape = a.family.shape(n)?;
        let mu_n = shape.measure()?;
        let rep = ld_estimate(&mu_n, &mu_limit, a.y, n as u64, a.side, &opts)?;
        let tail = if n <= cfg.exact_cap { Some(exact_tail(&shape, a.y, a.side, cfg.exact_cap)?) } else { None };
        Ok(vec![
            Cell::Int(n as i64),
            tail.map_or(Cell::Empty, Cell::Float),
            Cell::Float(rep.estimate),
            Cell::Float(rep.rate),
            tail.map_or(Cell::Empty, |t| Cell::Float(t / rep.estimate)),
        ])
    });
    let mut t = Table::new(&["n", "exact_tail", "estimate", "rate", "ratio"]);
    t.meta("family", Cell::Text(a.family.to_string()));
    t.meta("y", Cell::Float(a.y));
    t.meta("side", Cell::Text(format!("{:?}", a.side).to_lowercase()));
    for r in rows {
        t.push(r?);
    }
    Ok(t.into())
}

pub fn bkol(family: &Family, ns: &[usize], cfg: &RunConfig) -> Result<Output, CliError> {
    let rows = sweep(ns, |n| -> Result<Vec<Cell>, Error> {
        let shape = family.shape(n)?;
        let (bound, ok) = berry_esseen_bound(&shape);
        let p = maj_polynomial(&shape, cfg.exact_cap)?;
        let d = match kolmogorov_distance_to_normal(&p) {
            Ok(d) => Cell::Float(d),
            Err(Error::DegenerateDistribution) => Cell::Empty,
            Err(e) => return Err(e),
        };
        Ok(vec![Cell::Int(n as i64), d, Cell::Float(bound), Cell::Bool(ok)])
    });
    let mut t = Table::new(&["n", "d_kol", "bound", "hypothesis_ok"]);
    t.meta("family", Cell::Text(family.to_string()));
    for r in rows {
        t.push(r?);
    }
    Ok(t.into())
}

pub fn bochner(omega: &ThomaParam, xis: &[f64], cfg: &RunConfig) -> Result<Output, CliError> {
    let res = bochner_check(&omega.measure()?, xis, &cfg.quad)?;
    let mut t = Table::new(&["i", "j", "re", "im"]);
    t.meta("min_eigenvalue", Cell::Float(res.min_eigenvalue));
    for (i, row) in res.matrix.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            t.push(vec![Cell::Int(i as i64), Cell::Int(j as i64), Cell::Float(z.re), Cell::Float(z.im)]);
        }
    }
    let json = serde_json::to_value(&res).expect("bochner result serialises");
    Ok(Output { table: t, json: Some(json) })
}
