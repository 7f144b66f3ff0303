//! Identity suite over every shape up to a given size.

use std::collections::BTreeMap;

use majmeter_core::exact::{cumulant_from_polynomial, exact_cumulant, maj_polynomial, mean_maj, var_maj, QPolynomial};
use majmeter_core::partitions::partitions_up_to;
use majmeter_core::tableaux::{enumerate_standard, rsk, DEFAULT_ENUMERATION_CAP};
use majmeter_core::{BigInt, Partition, Permutation};

use crate::table::{Cell, Table};

/// Largest size for the exhaustive RSK check (7! permutations).
const RSK_MAX_N: usize = 7;

struct Identity {
    name: &'static str,
    checked: usize,
    counterexample: Option<String>,
}

impl Identity {
    fn new(name: &'static str) -> Self {
        Identity { name, checked: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }
}

fn corrupt(p: &QPolynomial) -> QPolynomial {
    let mut c = p.coeffs().to_vec();
    c[0] += BigInt::from(1);
    QPolynomial::new(p.offset(), c)
}

/// Runs all identities; the second value is the number that failed.
pub fn run(max_n: usize, inject_fault: bool) -> (Table, usize) {
    let mut hooks = Identity::new("hook multiset identity");
    let mut moments = Identity::new("Frobenius moment routes");
    let mut oracle = Identity::new("maj polynomial equals enumeration");
    let mut cumulants = Identity::new("cumulant formula equals polynomial route");
    let mut mean = Identity::new("mean closed form");
    let mut var = Identity::new("variance closed form");
    let mut range = Identity::new("maj range");
    let mut rsk_id = Identity::new("RSK preserves descents");
    let mut shapes = 0usize;
    for l in partitions_up_to(1, max_n.min(DEFAULT_ENUMERATION_CAP)) {
        shapes += 1;
        let name = || l.to_string();
        let (a, b) = l.hook_multiset_identity(l.size()).expect("n = |λ| is long enough");
        hooks.record(a == b, name);
        let same = (1..=6).all(|k| Some(l.frobenius_moment(k)) == l.frobenius_moment_descent(k, l.size()).ok());
        moments.record(same, name);
        let mut p = maj_polynomial(&l, usize::MAX).expect("no cap");
        if inject_fault && l.size() >= 3 {
            p = corrupt(&p);
        }
        oracle.record(matches_enumeration(&l, &p), name);
        cumulants.record((1..=8).all(|r| exact_cumulant(&l, r).value == cumulant_from_polynomial(&p, r)), name);
        let m = p.moments(2);
        mean.record(mean_maj(&l) == m[1], name);
        var.record(var_maj(&l) == &m[2] - &m[1] * &m[1], name);
        range.record(p.offset() as u64 == l.b_stat() && p.degree() as u64 == l.maj_max(), name);
    }
    for n in 1..=max_n.min(RSK_MAX_N) {
        for sigma in Permutation::all(n) {
            let (p, q) = rsk(&sigma);
            let ok = p.shape() == q.shape() && q.descent_set() == sigma.descent_set();
            rsk_id.record(ok, || format!("{:?}", sigma.images()));
        }
    }
    let all = [hooks, moments, oracle, cumulants, mean, var, range, rsk_id];
    let mut t = Table::new(&["identity", "status", "checked", "counterexample"]);
    t.meta("max_n", Cell::Int(max_n as i64));
    t.meta("partitions_checked", Cell::Int(shapes as i64));
    let mut failed = 0;
    for id in all {
        failed += usize::from(id.counterexample.is_some());
        t.push(vec![
            Cell::Text(id.name.into()),
            Cell::Text(if id.counterexample.is_some() { "fail" } else { "pass" }.into()),
            Cell::Int(id.checked as i64),
            id.counterexample.map_or(Cell::Empty, Cell::Text),
        ]);
    }
    (t, failed)
}

fn matches_enumeration(l: &Partition, p: &QPolynomial) -> bool {
    let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
    for t in enumerate_standard(l, DEFAULT_ENUMERATION_CAP).expect("size within the enumeration cap") {
        *hist.entry(t.maj() as usize).or_default() += 1;
    }
    let from_poly: BTreeMap<usize, u64> = p
        .terms()
        .filter(|(_, c)| **c != BigInt::from(0))
        .map(|(m, c)| (m, u64::try_from(c).unwrap_or(u64::MAX)))
        .collect();
    hist == from_poly
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_and_faulty() {
        let (t, failed) = run(8, false);
        assert_eq!(failed, 0);
        assert!(matches!(t.meta[1].1, Cell::Int(66)));
        let (t, failed) = run(5, true);
        assert!(failed >= 2);
        let oracle = &t.rows[2];
        assert!(matches!(&oracle[1], Cell::Text(s) if s == "fail"));
        assert!(matches!(&oracle[3], Cell::Text(s) if s == "(3)"));
    }
}
