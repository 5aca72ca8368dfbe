//! Acceptance criteria, one line each. Exits non-zero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use triblock::characterization::observations::{
    has_isolated_vertex, leaves_have_ear_covers, uncovered_degree_two,
    uncovered_degrees_at_most_two, uncovered_vertices,
};
use triblock::characterization::{
    classify_nm1, enumerate_nm1_parameterizations, recognize_min_blocker, stability_distance,
    Nm1Variant,
};
use triblock::constructions::{
    build_spectrum_blocker, closed_form_coefficients, enumerate_min_blockers, max_reachable,
    recursion_coefficients,
};
use triblock::enumeration::{
    all_saturated_blockers, orbit_representatives, Group, TriangulationOracle,
};
use triblock::{is_blocker, is_saturated_blocker, EdgeSet};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn diagonals(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == n - 1))
        .collect()
}

fn from_mask(n: usize, diags: &[(usize, usize)], mask: u64) -> EdgeSet {
    EdgeSet::from_pairs(
        n,
        diags
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p),
    )
    .unwrap()
}

/// Every `k`-subset of `0..d` as a bitmask.
fn k_subsets(d: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << d).filter(move |m| m.count_ones() as usize == k)
}

fn a1() -> Outcome {
    let start = Instant::now();
    let mut violations = 0;
    let mut checked = 0u64;
    for n in 4..=8 {
        let diags = diagonals(n);
        // blocking is monotone, so a blocker below n-2 would leave one of size exactly n-3
        for mask in k_subsets(diags.len(), n - 3) {
            checked += 1;
            if is_blocker(&from_mask(n, &diags, mask)) {
                violations += 1;
            }
        }
        let found = all_saturated_blockers(n, None).unwrap();
        violations += found.iter().filter(|b| b.len() < n - 2).count();
    }
    let elapsed = start.elapsed();
    outcome(
        violations == 0 && elapsed < Duration::from_secs(300),
        format!(
            "{checked} sets of size n-3 for n=4..8, {violations} blockers, {:.1}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn a2() -> Outcome {
    let sizes = |sets: &[EdgeSet]| sets.iter().map(EdgeSet::len).collect::<BTreeSet<_>>();
    let n4 = all_saturated_blockers(4, None).unwrap();
    let n5 = all_saturated_blockers(5, None).unwrap();
    let n6 = all_saturated_blockers(6, None).unwrap();
    let b65 = EdgeSet::from_pairs(6, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)]).unwrap();
    let size5: Vec<EdgeSet> = n6.iter().filter(|b| b.len() == 5).cloned().collect();
    let orbit5 = orbit_representatives(size5.iter(), Group::Rotation);
    let orbit_of_b65 = orbit_representatives([&b65], Group::Rotation);
    let checks = [
        sizes(&n4) == BTreeSet::from([2]) && n4.len() == 1,
        sizes(&n5) == BTreeSet::from([3]) && n5.len() == 5,
        orbit_representatives(n5.iter(), Group::Rotation).len() == 1,
        sizes(&n6) == BTreeSet::from([4, 5]),
        orbit5 == orbit_of_b65 && size5.contains(&b65),
        n6.iter().all(|b| b.len() < 6),
    ];
    outcome(
        checks.iter().all(|&c| c),
        format!(
            "n=4: {} set(s) sizes {:?}; n=5: {} sets, {} orbit; n=6 sizes {:?}, size-5 orbit = B65: {}",
            n4.len(),
            sizes(&n4),
            n5.len(),
            orbit_representatives(n5.iter(), Group::Rotation).len(),
            sizes(&n6),
            checks[4]
        ),
    )
}

fn a3() -> Outcome {
    let mut mismatches = 0;
    let mut counts = Vec::new();
    for n in 5..=8 {
        let found = all_saturated_blockers(n, Some(n - 2)).unwrap();
        let built = enumerate_min_blockers(n).unwrap();
        let canon = |s: &[EdgeSet]| orbit_representatives(s.iter(), Group::Rotation);
        let labeled: BTreeSet<_> = found.iter().cloned().collect();
        let generated: BTreeSet<_> = built.iter().cloned().collect();
        mismatches += labeled.symmetric_difference(&generated).count();
        mismatches += canon(&found).symmetric_difference(&canon(&built)).count();
        counts.push(format!("{n}:{}", found.len()));
    }
    outcome(
        mismatches == 0,
        format!(
            "labeled counts {}, {mismatches} mismatches",
            counts.join(" ")
        ),
    )
}

/// Saturated size `n-1` blockers for n = 7..9, searched once.
fn nm1_corpus() -> Vec<EdgeSet> {
    (7..=9)
        .flat_map(|n| common::size_search(n, n - 1))
        .collect()
}

fn a4(corpus: &[EdgeSet], search_time: Duration) -> Outcome {
    let mut failures = 0;
    let mut tally = [0usize; 3];
    for b in corpus {
        match classify_nm1(b) {
            Ok(c) => tally[c.variant as usize] += 1,
            Err(_) => failures += 1,
        }
    }
    let mut built_total = 0;
    for n in 7..=9 {
        let built: BTreeSet<EdgeSet> = enumerate_nm1_parameterizations(n)
            .iter()
            .map(|c| c.build(n).unwrap())
            .collect();
        built_total += built.len();
        failures += built.iter().filter(|b| !is_saturated_blocker(b)).count();
        // parameterizations are listed before rotation, so compare orbits
        let found: Vec<&EdgeSet> = corpus.iter().filter(|b| b.n() == n).collect();
        let found = orbit_representatives(found, Group::Rotation);
        failures += found
            .symmetric_difference(&orbit_representatives(built.iter(), Group::Rotation))
            .count();
    }
    outcome(
        failures == 0 && search_time < Duration::from_secs(1800),
        format!(
            "{} found (seagull {}, butterfly {}, bouquet {}), {built_total} parameterized sets, {failures} failures, search {:.1}s",
            corpus.len(),
            tally[Nm1Variant::Seagull as usize],
            tally[Nm1Variant::Butterfly as usize],
            tally[Nm1Variant::Bouquet as usize],
            search_time.as_secs_f64()
        ),
    )
}

fn a5(corpus: &[EdgeSet]) -> Outcome {
    let mut failures = 0;
    let mut worst = 0;
    for b in corpus {
        match stability_distance(b) {
            Ok((near, d)) => {
                worst = worst.max(d);
                let n = b.n();
                let ok = d <= 5
                    && near.len() == n - 2
                    && is_saturated_blocker(&near)
                    && recognize_min_blocker(&near).is_some()
                    && b.symmetric_difference_len(&near) == d;
                failures += usize::from(!ok);
            }
            Err(_) => failures += 1,
        }
    }
    outcome(
        failures == 0,
        format!(
            "{} blockers, largest distance {worst}, {failures} failures",
            corpus.len()
        ),
    )
}

fn a6() -> Outcome {
    let mut failures = 0;
    let mut parts = Vec::new();
    let mut n60 = Duration::ZERO;
    for n in [25, 30, 40, 60] {
        let start = Instant::now();
        let top = max_reachable(n);
        for t in n - 2..=top {
            match build_spectrum_blocker(n, t) {
                Ok(b) if b.len() == t && is_saturated_blocker(&b) => {}
                _ => failures += 1,
            }
        }
        if n == 60 {
            n60 = start.elapsed();
        }
        parts.push(format!("n={n}: {} sizes", top - n + 3));
    }
    outcome(
        failures == 0 && n60 < Duration::from_secs(1200),
        format!(
            "{}; {failures} failures; n=60 took {:.1}s",
            parts.join(", "),
            n60.as_secs_f64()
        ),
    )
}

fn a7() -> Outcome {
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let seed = recursion_coefficients(0);
    let seeded =
        seed.quadratic == q(13, 32) && seed.linear == q(-53, 8) && seed.constant == q(193, 4);
    let disagreements = (0..=64)
        .filter(|&i| recursion_coefficients(i) != closed_form_coefficients(i))
        .count();
    outcome(
        seeded && disagreements == 0,
        format!(
            "seed (13/32, -53/8, 193/4): {seeded}; steps 0..=64, {disagreements} disagreements"
        ),
    )
}

fn a8() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in [40usize, 60, 80, 100] {
        let reach = max_reachable(n);
        let floor_ok = 4 * reach >= n * n;
        let nf = n as f64;
        let ratio = (nf * nf / 2.0 - reach as f64) / (nf * nf.log2());
        pass &= floor_ok && ratio <= 10.0;
        parts.push(format!(
            "n={n}: reach {reach} {} n^2/4={}, ratio {ratio:.3}",
            if floor_ok { ">=" } else { "<" },
            n * n / 4
        ));
    }
    outcome(pass, parts.join("; "))
}

fn a9() -> Outcome {
    let mut disagreements = 0;
    let n = 6;
    let diags = diagonals(n);
    let oracle = TriangulationOracle::new(n).unwrap();
    for mask in 0u64..1 << diags.len() {
        let b = from_mask(n, &diags, mask);
        disagreements += usize::from(is_blocker(&b) != oracle.blocks(&b));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7269_626c_6f63);
    let mut blockers = 0;
    for n in 7..=9 {
        let diags = diagonals(n);
        let oracle = TriangulationOracle::new(n).unwrap();
        for _ in 0..100_000 {
            // vary the density so both verdicts appear often
            let density: f64 = rng.gen_range(0.2..0.9);
            let mask =
                (0..diags.len()).fold(0u64, |m, i| m | u64::from(rng.gen_bool(density)) << i);
            let b = from_mask(n, &diags, mask);
            let dp = is_blocker(&b);
            blockers += usize::from(dp);
            disagreements += usize::from(dp != oracle.blocks(&b));
        }
    }
    outcome(
        disagreements == 0,
        format!("512 sets at n=6, 300000 random at n=7..9 ({blockers} blockers), {disagreements} disagreements"),
    )
}

fn a10() -> Outcome {
    let mut corpus = common::exhaustive_corpus();
    corpus.extend(common::constructed_corpus());
    let mut violations = Vec::new();
    for b in &corpus {
        let n = b.n();
        if has_isolated_vertex(b) {
            violations.push("isolated vertex");
        }
        if !leaves_have_ear_covers(b) {
            violations.push("leaf without ear-cover");
        }
        if b.len() == n - 1 && !uncovered_degrees_at_most_two(b) {
            violations.push("uncovered vertex of degree > 2");
        }
        if n >= 5 && uncovered_vertices(b).len() < 2 {
            violations.push("fewer than two uncovered vertices");
        }
        if b.len() == n - 1 && n >= 7 {
            if let Ok(c) = classify_nm1(b) {
                let single = uncovered_degree_two(b).len() == 1;
                if single && c.variant != Nm1Variant::Seagull {
                    violations.push("single uncovered degree-two vertex outside seagulls");
                }
            }
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "{} blockers, {} violations {:?}",
            corpus.len(),
            violations.len(),
            violations.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn main() {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    let mut record = |name, f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let o = f();
        println!(
            "{name} {} ({:.1}s) {}",
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
        results.push((name, o));
    };
    record("A1", &a1);
    record("A2", &a2);
    record("A3", &a3);
    let start = Instant::now();
    let corpus = nm1_corpus();
    let search_time = start.elapsed();
    record("A4", &|| a4(&corpus, search_time));
    record("A5", &|| a5(&corpus));
    record("A6", &a6);
    record("A7", &a7);
    record("A8", &a8);
    record("A9", &a9);
    record("A10", &a10);
    let failed: Vec<&str> = results
        .iter()
        .filter(|(_, o)| !o.pass)
        .map(|(n, _)| *n)
        .collect();
    println!(
        "{} of {} criteria pass",
        results.len() - failed.len(),
        results.len()
    );
    if !failed.is_empty() {
        println!("failing: {}", failed.join(", "));
        std::process::exit(1);
    }
}
