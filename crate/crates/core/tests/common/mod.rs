#![allow(dead_code)]

use triblock::characterization::enumerate_nm1_parameterizations;
use triblock::constructions::{build_spectrum_blocker, enumerate_min_blockers, max_reachable};
use triblock::enumeration::{all_saturated_blockers, all_saturated_blockers_with, SearchOptions};
use triblock::EdgeSet;

/// Every saturated blocker for `n` in `4..=8`, then the size `n-2` and
/// `n-1` ones for `n = 9`.
pub fn exhaustive_corpus() -> Vec<EdgeSet> {
    let mut out = Vec::new();
    for n in 4..=8 {
        out.extend(all_saturated_blockers(n, None).unwrap());
    }
    out.extend(size_search(9, 7));
    out.extend(size_search(9, 8));
    out
}

pub fn size_search(n: usize, t: usize) -> Vec<EdgeSet> {
    all_saturated_blockers_with(n, Some(t), SearchOptions::default()).unwrap()
}

/// Spectrum, minimum-sized and size `n-1` constructions.
pub fn constructed_corpus() -> Vec<EdgeSet> {
    let mut out = Vec::new();
    for n in 5..=30 {
        for t in n - 2..=max_reachable(n) {
            out.push(build_spectrum_blocker(n, t).unwrap());
        }
    }
    for n in 5..=10 {
        out.extend(enumerate_min_blockers(n).unwrap());
    }
    for n in 6..=11 {
        for c in enumerate_nm1_parameterizations(n) {
            out.push(c.build(n).unwrap());
        }
    }
    out
}
