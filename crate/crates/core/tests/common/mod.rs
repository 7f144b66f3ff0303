#![allow(dead_code)]

use majmeter_core::partitions::partitions_of;
use majmeter_core::Partition;
use proptest::prelude::*;

/// A uniformly chosen size in `lo..=hi`, then a uniformly chosen partition of it.
pub fn partition(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        proptest::sample::select(all)
    })
}

pub fn shape(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}
