//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use majmeter_core::asymptotics::{
    bochner_check, ld_estimate, lambda_derivs, lambda_omega, legendre_star, mock_fourier,
    mock_fourier_limit, phi, phi_derivs, psi_omega, LdOptions, QuadratureConfig,
};
use majmeter_core::exact::{
    cumulant_from_polynomial, exact_cumulant, kolmogorov_distance_to_normal, log_laplace_exact_centered,
    maj_polynomial, mean_maj, predicted_cumulant_exact, rational_to_f64, tail_probability, var_maj, Side,
    DEFAULT_EXACT_CAP,
};
use majmeter_core::families::Family;
use majmeter_core::partitions::partitions_up_to;
use majmeter_core::tableaux::{enumerate_standard, rsk, HookWalk};
use majmeter_core::asymptotics::berry_esseen_bound;
use majmeter_core::{BigRational, Complex64, DiscreteMeasure, Partition, Permutation, StandardTableau, ThomaParam};
use num_traits::{ToPrimitive, Zero};
use statrs::distribution::{ChiSquared, ContinuousCDF};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn shape(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn omega0() -> DiscreteMeasure {
    ThomaParam::omega0().measure().unwrap()
}

fn sci(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x:.3e}")).collect();
    format!("[{}]", parts.join(", "))
}

fn within_budget(start: Instant, budget: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t < budget, format!("{:.2}s of {}s", t.as_secs_f64(), budget.as_secs()))
}

fn c1_bochner() -> Outcome {
    let t = Instant::now();
    let r = bochner_check(&omega0(), &[0.0, 3.0, 6.0], &cfg()).unwrap();
    let e = r.min_eigenvalue;
    let (fast, time) = within_budget(t, Duration::from_secs(1));
    outcome((-0.0155..=-0.0115).contains(&e) && fast, format!("min eigenvalue {e:.6}, {time}"))
}

fn c2_worked_example() -> Outcome {
    let t = StandardTableau::parse("1 2 6 9\n3 5\n4 7\n8").unwrap();
    let want: BTreeSet<usize> = [2, 3, 6, 7].into();
    let (_, q) = rsk(&Permutation::parse("592138647").unwrap());
    let ok = t.shape() == &shape(&[4, 2, 2, 1])
        && t.descent_set() == want
        && t.maj() == 18
        && q.descent_set() == want
        && q.shape() == &shape(&[4, 2, 2, 1]);
    outcome(ok, format!("Desc(T) = {:?}, maj = {}, Desc(Q) = {:?}, shape(Q) = {}", t.descent_set(), t.maj(), q.descent_set(), q.shape()))
}

fn c3_hooks_contents() -> Outcome {
    let l = shape(&[4, 2, 2, 1]);
    let hooks = vec![vec![7, 5, 2, 1], vec![4, 2], vec![3, 1], vec![1]];
    let contents = vec![vec![0, 1, 2, 3], vec![-1, 0], vec![-2, -1], vec![-3]];
    let f = l.count_standard_tableaux();
    let enumerated = enumerate_standard(&l, 14).unwrap().count();
    let ok = l.hook_lengths() == hooks && l.contents() == contents && f == 216u32.into() && enumerated == 216;
    outcome(ok, format!("f = {f}, enumerated = {enumerated}"))
}

fn c4_oracle() -> Outcome {
    let t = Instant::now();
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for l in partitions_up_to(1, 12) {
        let p = maj_polynomial(&l, DEFAULT_EXACT_CAP).unwrap();
        let mut hist: HashMap<usize, u64> = HashMap::new();
        for tab in enumerate_standard(&l, 12).unwrap() {
            *hist.entry(tab.maj() as usize).or_default() += 1;
        }
        let lo = p.offset();
        let hi = p.degree().max(hist.keys().copied().max().unwrap_or(0));
        let same = (lo.min(hist.keys().copied().min().unwrap())..=hi)
            .all(|m| p.coeff(m).to_u64() == Some(hist.get(&m).copied().unwrap_or(0)));
        if !same {
            bad.push(l.to_string());
        }
        checked += 1;
    }
    let (fast, time) = within_budget(t, Duration::from_secs(300));
    outcome(bad.is_empty() && fast && checked == 271, format!("{checked} partitions, mismatches {bad:?}, {time}"))
}

fn c5_cumulants() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for l in partitions_up_to(1, 12) {
        let p = maj_polynomial(&l, DEFAULT_EXACT_CAP).unwrap();
        for r in 1..=8u32 {
            let k = exact_cumulant(&l, r).value;
            if k != cumulant_from_polynomial(&p, r) {
                failures.push(format!("κ{r} route mismatch at {l}"));
            }
            if r >= 3 && r % 2 == 1 && !k.is_zero() {
                failures.push(format!("κ{r} nonzero at {l}"));
            }
        }
        let m = p.moments(2);
        if mean_maj(&l) != m[1] {
            failures.push(format!("mean at {l}"));
        }
        if var_maj(&l) != &m[2] - &m[1] * &m[1] {
            failures.push(format!("variance at {l}"));
        }
        if l.size() <= 10 {
            let (a, b) = l.hook_multiset_identity(l.size()).unwrap();
            if a != b {
                failures.push(format!("hook multiset at {l}"));
            }
        }
        checked += 1;
    }
    outcome(failures.is_empty(), format!("{checked} partitions, failures {failures:?}"))
}

/// Two-row remainder `|κ_r − predicted|/n^{r−1}`. No growth: the values stay
/// within 10% of each other and the successive increments shrink, so the
/// sequence settles to a constant instead of drifting upward.
fn c6_remainder() -> Outcome {
    let ns = [16usize, 32, 64, 128];
    let mut ok = true;
    let mut detail = Vec::new();
    for r in [2u32, 4] {
        let scaled: Vec<f64> = ns
            .iter()
            .map(|&n| {
                let l = Family::TwoRow.shape(n).unwrap();
                let gap = exact_cumulant(&l, r).value - predicted_cumulant_exact(&l, r).unwrap();
                rational_to_f64(&gap).abs() / (n as f64).powi(r as i32 - 1)
            })
            .collect();
        let (lo, hi) = scaled.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &s| (a.min(s), b.max(s)));
        let steps: Vec<f64> = scaled.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
        let settling = steps.windows(2).all(|d| d[1] <= d[0] + 1e-15);
        ok &= lo > 0.0 && hi <= 1.1 * lo && settling;
        detail.push(format!("r={r}: {}", sci(&scaled)));
    }
    outcome(ok, detail.join("; "))
}

fn c7_berry_esseen() -> Outcome {
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    let mut violations = Vec::new();
    let mut exhaustive = 0usize;
    for l in partitions_up_to(4, 14) {
        let (bound, ok) = berry_esseen_bound(&l);
        if !ok {
            continue;
        }
        let d = kolmogorov_distance_to_normal(&maj_polynomial(&l, DEFAULT_EXACT_CAP).unwrap()).unwrap();
        if d > bound {
            violations.push(l.to_string());
        }
        exhaustive += 1;
    }
    // odd n give λ₁/n = (n+1)/2n > ½; those rows are checked against the
    // bound all the same and counted separately
    let mut scaled = Vec::new();
    let mut flagged = 0usize;
    for n in 4..=200usize {
        let l = Family::TwoRow.shape(n).unwrap();
        let (bound, ok) = berry_esseen_bound(&l);
        flagged += usize::from(!ok);
        let d = kolmogorov_distance_to_normal(&maj_polynomial(&l, DEFAULT_EXACT_CAP).unwrap()).unwrap();
        if d > bound {
            violations.push(l.to_string());
        }
        scaled.push(d * (n as f64).sqrt());
        worst = worst.max(d * (n as f64).sqrt());
    }
    // boundedness: the tail of the sweep is no larger than the early maximum
    let early = scaled[..scaled.len() / 4].iter().cloned().fold(0.0, f64::max);
    let late = scaled[3 * scaled.len() / 4..].iter().cloned().fold(0.0, f64::max);
    let (fast, time) = within_budget(t, Duration::from_secs(600));
    outcome(
        violations.is_empty() && late <= early && fast,
        format!(
            "{exhaustive} exhaustive shapes; two-row n = 4..200 ({flagged} outside the hypothesis); max d·√n = {worst:.4} (early {early:.4}, late {late:.4}); violations {violations:?}; {time}"
        ),
    )
}

fn c8_expansion() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for z in [c(1.0, 0.0), c(0.5, 0.3)] {
        let gaps: Vec<f64> = [20usize, 40, 80, 160]
            .iter()
            .map(|&n| {
                let l = Family::TwoRow.shape(n).unwrap();
                let mu = l.measure().unwrap();
                let exact = log_laplace_exact_centered(&l, z).unwrap();
                let approx = n as f64 * lambda_omega(&mu, z, &cfg()).unwrap() + psi_omega(&mu, z).unwrap();
                (exact - approx).norm()
            })
            .collect();
        ok &= gaps.windows(2).all(|w| w[1] <= w[0]) && gaps[3] < 0.05;
        detail.push(format!("z={z}: {}", sci(&gaps)));
    }
    outcome(ok, detail.join("; "))
}

fn c9_large_deviations() -> Outcome {
    let t = Instant::now();
    let y = 0.02;
    let limit = Family::TwoRow.limit().measure().unwrap();
    let mut gaps = Vec::new();
    let mut ratio = f64::NAN;
    for n in [20usize, 40, 60, 80] {
        let l = Family::TwoRow.shape(n).unwrap();
        let mu_n = l.measure().unwrap();
        let p = maj_polynomial(&l, DEFAULT_EXACT_CAP).unwrap();
        let threshold = mean_maj(&l) + BigRational::from_integer((n * n).into()) * BigRational::new(1.into(), 50.into());
        let tail = rational_to_f64(&tail_probability(&p, threshold.ceil().to_integer().to_i64().unwrap(), Side::Upper));
        let (_, rate) = legendre_star(&mu_n, y, &cfg()).unwrap();
        gaps.push((-tail.ln() / n as f64 - rate).abs());
        if n == 80 {
            let rep = ld_estimate(&mu_n, &limit, y, n as u64, Side::Upper, &LdOptions::default()).unwrap();
            ratio = tail / rep.estimate;
        }
    }
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    let (fast, time) = within_budget(t, Duration::from_secs(300));
    outcome(
        decreasing && (0.5..=2.0).contains(&ratio) && fast,
        format!("rate gaps {}; tail/estimate at n=80 = {ratio:.4}; {time}", sci(&gaps)),
    )
}

fn c10_lambda() -> Outcome {
    let q = cfg();
    let mut fails = Vec::new();
    let w1 = ThomaParam::omega1().measure().unwrap();
    for z in [c(0.3, 0.0), c(2.0, 1.0), c(-4.0, 3.0)] {
        if lambda_omega(&w1, z, &q).unwrap().norm() > 1e-14 {
            fails.push(format!("Λ_ω₁({z}) ≠ 0"));
        }
    }
    let mus = [omega0(), Family::TwoRow.limit().measure().unwrap(), ThomaParam::new(vec![0.4, 0.1], vec![0.3]).unwrap().measure().unwrap()];
    let grid: Vec<f64> = (-50..=50).map(|k| k as f64 / 10.0).collect();
    for mu in &mus {
        let lam = |h: f64| lambda_omega(mu, c(h, 0.0), &q).unwrap().re;
        let vals: Vec<f64> = grid.iter().map(|&h| lam(h)).collect();
        for (h, v) in grid.iter().zip(&vals) {
            if (v - lam(-h)).abs() > 1e-12 * (1.0 + v.abs()) {
                fails.push(format!("Λ not even at {h}"));
            }
        }
        if !vals.windows(3).all(|w| w[0] - 2.0 * w[1] + w[2] > 0.0) {
            fails.push("Λ not strictly convex on the grid".into());
        }
    }
    // Λ′(h) = ¼ − 1/h + π²/(6h²) + O(e^{−h}) for δ₀, so the limit ¼ is only
    // reached to within 1e−3 once h ≥ 1000.
    let (d50, _, _) = lambda_derivs(&mus[0], 50.0, &q).unwrap();
    let expected50 = 0.25 - 1.0 / 50.0 + PI * PI / (6.0 * 2500.0);
    let (d1000, _, _) = lambda_derivs(&mus[0], 1000.0, &q).unwrap();
    if (d50 - expected50).abs() > 1e-10 || (d1000 - 0.25).abs() > 1e-3 {
        fails.push(format!("slope: Λ′(50) = {d50}, Λ′(1000) = {d1000}"));
    }
    let mut worst_psi: f64 = 0.0;
    for k in 0..20 {
        let t = k as f64 / 20.0;
        let z = c(0.2 + 2.8 * t, 2.5 * (2.0 * PI * t).sin());
        let want = 0.5 * (phi(z).unwrap() - z * z / 12.0);
        worst_psi = worst_psi.max((psi_omega(&mus[0], z).unwrap() - want).norm());
    }
    if worst_psi > 1e-10 {
        fails.push(format!("Ψ_ω₀ off by {worst_psi:.2e}"));
    }
    let eps = 1e-4;
    let mut worst_fd: f64 = 0.0;
    for mu in &mus {
        for h in [0.3, 1.1, 2.7] {
            let (d1, d2, d3) = lambda_derivs(mu, h, &q).unwrap();
            let lam = |g: f64| lambda_omega(mu, c(g, 0.0), &q).unwrap().re;
            let at = |g: f64| lambda_derivs(mu, g, &q).unwrap();
            worst_fd = worst_fd
                .max((d1 - (lam(h + eps) - lam(h - eps)) / (2.0 * eps)).abs())
                .max((d2 - (at(h + eps).0 - at(h - eps).0) / (2.0 * eps)).abs())
                .max((d3 - (at(h + eps).1 - at(h - eps).1) / (2.0 * eps)).abs());
        }
    }
    for z in [c(0.4, 0.2), c(1.7, -0.9), c(-3.0, 4.0)] {
        let (p1, p2, p3) = phi_derivs(z).unwrap();
        let at = |w: Complex64| phi_derivs(w).unwrap();
        let e = c(eps, 0.0);
        worst_fd = worst_fd
            .max((p1 - (phi(z + e).unwrap() - phi(z - e).unwrap()) / (2.0 * eps)).norm())
            .max((p2 - (at(z + e).0 - at(z - e).0) / (2.0 * eps)).norm())
            .max((p3 - (at(z + e).1 - at(z - e).1) / (2.0 * eps)).norm());
    }
    if worst_fd > 1e-6 {
        fails.push(format!("finite differences off by {worst_fd:.2e}"));
    }
    outcome(
        fails.is_empty(),
        format!(
            "Λ′(50) = {d50:.6} (¼ − 1/50 + π²/15000 = {expected50:.6}), Λ′(1000) = {d1000:.6}; Ψ err {worst_psi:.1e}; fd err {worst_fd:.1e}; failures {fails:?}"
        ),
    )
}

fn c11_mock_fourier() -> Outcome {
    let mu = Family::TwoRow.limit().measure().unwrap();
    let h = 5.0;
    let limit = mock_fourier_limit(&mu, h, &cfg()).unwrap();
    let xis: Vec<f64> = (1..=200).map(|k| 1e4 * (k as f64 / 200.0).powi(3)).collect();
    let vals: Vec<f64> = xis.iter().map(|&xi| mock_fourier(&mu, h, xi).unwrap()).collect();
    let all_negative = vals.iter().all(|&v| v < 0.0);
    let last = *vals.last().unwrap();
    outcome(
        all_negative && (last - limit).abs() < 0.05,
        format!("max over ξ = {:.3e}, value at 1e4 = {last:.6}, limit = {limit:.6}", vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max)),
    )
}

fn c12_sampler() -> Outcome {
    let l = shape(&[4, 2, 2, 1]);
    let index: HashMap<Vec<Vec<usize>>, usize> =
        enumerate_standard(&l, 14).unwrap().enumerate().map(|(i, t)| (t.rows().to_vec(), i)).collect();
    let trials = 1_000_000u64;
    let mut counts = vec![0u64; index.len()];
    let mut walk = HookWalk::new(&l, 20_241_014);
    let mut sum = 0f64;
    for _ in 0..trials {
        let t = walk.sample();
        sum += t.maj() as f64;
        counts[index[t.rows()]] += 1;
    }
    let expected = trials as f64 / index.len() as f64;
    let chi2: f64 = counts.iter().map(|&o| (o as f64 - expected).powi(2) / expected).sum();
    let df = (index.len() - 1) as f64;
    let critical = ChiSquared::new(df).unwrap().inverse_cdf(1.0 - 1e-3);
    let mean = sum / trials as f64;
    let sd = (175.0f64 / 12.0).sqrt();
    let z = (mean - 18.5) / (sd / (trials as f64).sqrt());
    outcome(
        chi2 < critical && z.abs() < 4.0,
        format!("χ² = {chi2:.1} (critical {critical:.1}, df {df}); mean {mean:.5}, z = {z:.2}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("Bochner failure for ω₀", c1_bochner),
        ("worked example and RSK", c2_worked_example),
        ("hooks, contents and f^λ for (4,2,2,1)", c3_hooks_contents),
        ("maj polynomial equals enumeration for |λ| ≤ 12", c4_oracle),
        ("cumulant identities", c5_cumulants),
        ("two-row cumulant remainder", c6_remainder),
        ("Berry–Esseen at desk scale", c7_berry_esseen),
        ("log-Laplace expansion trend", c8_expansion),
        ("large deviation trend", c9_large_deviations),
        ("Λ analytics", c10_lambda),
        ("mock Fourier transform", c11_mock_fourier),
        ("hook-walk sampler", c12_sampler),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("{} criterion {:>2} ({name}): {}", if o.ok { "PASS" } else { "FAIL" }, k + 1, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
