//! Fixtures shared by the benchmarks in `benches/`.

use majmeter_core::families::Family;
use majmeter_core::{DiscreteMeasure, Partition, ThomaParam};

/// Shapes of increasing size for the exact layer.
pub fn exact_shapes() -> Vec<Partition> {
    [vec![4, 2, 2, 1], vec![10, 8, 6, 4, 2], vec![20, 15, 10, 5], vec![40, 30, 20, 10]]
        .into_iter()
        .map(|r| Partition::new(r).expect("valid fixture"))
        .chain([Family::TwoRow.shape(200).expect("n > 0")])
        .collect()
}

pub fn measures() -> Vec<(&'static str, DiscreteMeasure)> {
    vec![
        ("omega0", ThomaParam::omega0().measure().expect("valid")),
        ("two-row", Family::TwoRow.limit().measure().expect("valid")),
        ("mixed", ThomaParam::new(vec![0.4, 0.2], vec![0.25, 0.1]).and_then(|w| w.measure()).expect("valid")),
    ]
}
