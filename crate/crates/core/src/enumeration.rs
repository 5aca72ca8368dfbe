//! Brute-force oracles: Catalan enumeration of triangulations, exhaustive
//! saturated-blocker search and canonical forms up to symmetry.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::capacity::{Guard, MAX_ENUMERATE_N, MAX_EXHAUSTIVE_N, MAX_FIXED_SIZE_N};
use crate::dp::{is_blocker, is_saturated_blocker};
use crate::error::{Error, Result};
use crate::geometry::{diagonal_count, Edge, EdgeSet, Triangulation};

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::PolygonTooSmall(n))
    } else {
        Ok(())
    }
}

/// Every triangulation of the `n`-gon, each exactly once. The count is the
/// Catalan number `C(n-2)`.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    enumerate_triangulations_with(n, Guard::from_env())
}

pub fn enumerate_triangulations_with(n: usize, guard: Guard) -> Result<Vec<Triangulation>> {
    check_n(n)?;
    guard.check("triangulation enumeration", n, MAX_ENUMERATE_N)?;
    // Triangulations of the sub-polygon 0..=span, as diagonal lists relative
    // to vertex 0; shifted into place when reused.
    let mut by_span: HashMap<usize, Vec<Vec<(usize, usize)>>> = HashMap::new();
    by_span.insert(1, vec![Vec::new()]);
    for span in 2..n {
        let mut all = Vec::new();
        for k in 1..span {
            let left = &by_span[&k];
            let right = &by_span[&(span - k)];
            for l in left {
                for r in right {
                    let mut t = Vec::with_capacity(l.len() + r.len() + 2);
                    t.extend_from_slice(l);
                    t.extend(r.iter().map(|&(a, b)| (a + k, b + k)));
                    if k >= 2 {
                        t.push((0, k));
                    }
                    if span - k >= 2 {
                        t.push((k, span));
                    }
                    all.push(t);
                }
            }
        }
        by_span.insert(span, all);
    }
    let list = by_span.remove(&(n - 1)).unwrap_or_default();
    Ok(list
        .into_iter()
        .map(|t| {
            let d = EdgeSet::from_edges(n, t.into_iter().map(|(a, b)| Edge::of(a, b)))
                .expect("enumerated edges are diagonals");
            Triangulation::new_unchecked(d)
        })
        .collect())
}

/// Holds an enumerated triangulation family for repeated blocker checks.
pub struct TriangulationOracle {
    n: usize,
    family: Vec<EdgeSet>,
}

impl TriangulationOracle {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_guard(n, Guard::from_env())
    }

    pub fn with_guard(n: usize, guard: Guard) -> Result<Self> {
        Ok(TriangulationOracle {
            n,
            family: enumerate_triangulations_with(n, guard)?
                .into_iter()
                .map(Triangulation::into_diagonals)
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    /// Every triangulation shares a diagonal with `b`. A triangle follows the
    /// same vacuous convention as [`crate::is_blocker`].
    pub fn blocks(&self, b: &EdgeSet) -> bool {
        assert_eq!(b.n(), self.n);
        self.n == 3 || self.family.iter().all(|t| t.intersects(b))
    }

    /// The first triangulation avoiding `b`, if any.
    pub fn missed(&self, b: &EdgeSet) -> Option<&EdgeSet> {
        self.family.iter().find(|t| !t.intersects(b))
    }
}

/// Blocker test by enumeration; the independent reference for
/// [`crate::is_blocker`].
pub fn is_blocker_bruteforce(b: &EdgeSet) -> Result<bool> {
    Ok(TriangulationOracle::new(b.n())?.blocks(b))
}

/// Search knobs.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Prune on isolated vertices, on the minimum size `n - 2`, and on
    /// supersets of blockers.
    pub prune: bool,
    /// Split the search by first chosen diagonal across threads.
    pub parallel: bool,
    pub guard: Guard,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune: true,
            parallel: true,
            guard: Guard::from_env(),
        }
    }
}

/// Every saturated blocker of the `n`-gon, optionally of one size only,
/// sorted by [`EdgeSet`] order.
pub fn all_saturated_blockers(n: usize, size_filter: Option<usize>) -> Result<Vec<EdgeSet>> {
    all_saturated_blockers_with(n, size_filter, SearchOptions::default())
}

pub fn all_saturated_blockers_with(
    n: usize,
    size_filter: Option<usize>,
    opts: SearchOptions,
) -> Result<Vec<EdgeSet>> {
    check_n(n)?;
    match size_filter {
        Some(_) => opts
            .guard
            .check("fixed-size saturated blocker search", n, MAX_FIXED_SIZE_N)?,
        None => opts
            .guard
            .check("saturated blocker search", n, MAX_EXHAUSTIVE_N)?,
    }
    if n == 3 {
        return Ok(match size_filter {
            None | Some(0) => vec![EdgeSet::empty_unchecked(3)],
            Some(_) => Vec::new(),
        });
    }
    let mut found = if opts.prune {
        PrunedSearch::new(n, size_filter).run(opts.parallel)
    } else {
        unpruned(n, size_filter)
    };
    found.sort();
    found.dedup();
    Ok(found)
}

fn unpruned(n: usize, size_filter: Option<usize>) -> Vec<EdgeSet> {
    let d = diagonal_count(n);
    assert!(d < 32, "unpruned search is for tiny polygons only");
    (0u64..1 << d)
        .filter(|mask| size_filter.is_none_or(|s| mask.count_ones() as usize == s))
        .filter_map(|mask| {
            let mut s = EdgeSet::empty_unchecked(n);
            for slot in 0..d {
                if mask >> slot & 1 == 1 {
                    s.set_slot(slot);
                }
            }
            is_saturated_blocker(&s).then_some(s)
        })
        .collect()
}

struct PrunedSearch {
    n: usize,
    slots: Vec<Edge>,
    last_slot: Vec<usize>,
    min_size: usize,
    max_size: usize,
}

struct Frame {
    set: EdgeSet,
    degree: Vec<usize>,
    count: usize,
}

impl PrunedSearch {
    fn new(n: usize, size_filter: Option<usize>) -> Self {
        let full = EdgeSet::full(n).expect("n >= 4");
        let slots: Vec<Edge> = full.iter().collect();
        let mut last_slot = vec![0; n];
        for (idx, e) in slots.iter().enumerate() {
            last_slot[e.a()] = idx;
            last_slot[e.b()] = idx;
        }
        let (min_size, max_size) = match size_filter {
            Some(s) => (s, s),
            None => (n - 2, slots.len()),
        };
        PrunedSearch {
            n,
            slots,
            last_slot,
            min_size,
            max_size,
        }
    }

    fn run(&self, parallel: bool) -> Vec<EdgeSet> {
        if self.max_size < self.n - 2 || self.max_size > self.slots.len() {
            return Vec::new();
        }
        let root = |first: usize| {
            let mut frame = Frame {
                set: EdgeSet::empty_unchecked(self.n),
                degree: vec![0; self.n],
                count: 0,
            };
            let mut out = Vec::new();
            if !self.isolated_before(&frame, first) {
                self.push(&mut frame, first);
                self.descend(&mut frame, first + 1, &mut out);
            }
            out
        };
        let firsts = 0..self.slots.len();
        if parallel {
            firsts.into_par_iter().flat_map_iter(root).collect()
        } else {
            firsts.flat_map(root).collect()
        }
    }

    fn push(&self, f: &mut Frame, slot: usize) {
        let e = self.slots[slot];
        f.set.set_slot(slot);
        f.degree[e.a()] += 1;
        f.degree[e.b()] += 1;
        f.count += 1;
    }

    fn pop(&self, f: &mut Frame, slot: usize) {
        let e = self.slots[slot];
        f.set.clear_slot(slot);
        f.degree[e.a()] -= 1;
        f.degree[e.b()] -= 1;
        f.count -= 1;
    }

    /// Some vertex is still uncovered and every slot that could cover it lies
    /// before `next`.
    fn isolated_before(&self, f: &Frame, next: usize) -> bool {
        (0..self.n).any(|v| f.degree[v] == 0 && self.last_slot[v] < next)
    }

    fn descend(&self, f: &mut Frame, next: usize, out: &mut Vec<EdgeSet>) {
        if f.count >= self.n - 2 && is_blocker(&f.set) {
            if f.count >= self.min_size && is_saturated_blocker(&f.set) {
                out.push(f.set.clone());
            }
            return;
        }
        if f.count == self.max_size {
            return;
        }
        if f.count + (self.slots.len() - next) < self.min_size {
            return;
        }
        if self.isolated_before(f, next) {
            return;
        }
        for slot in next..self.slots.len() {
            if self.isolated_before(f, slot) {
                break;
            }
            self.push(f, slot);
            self.descend(f, slot + 1, out);
            self.pop(f, slot);
        }
    }
}

/// `{ |b| : b saturated }` over the whole `n`-gon.
pub fn saturation_spectrum_exhaustive(n: usize) -> Result<BTreeSet<usize>> {
    Ok(all_saturated_blockers(n, None)?
        .iter()
        .map(EdgeSet::len)
        .collect())
}

/// Symmetry group used for "up to symmetry" comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Rotation,
    Dihedral,
}

/// The least image of a set under its symmetry group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub representative: EdgeSet,
    pub group: Group,
}

/// All images of `b` under the group, rotations first.
pub fn orbit(b: &EdgeSet, group: Group) -> Vec<EdgeSet> {
    let n = b.n();
    let mut images: Vec<EdgeSet> = (0..n).map(|r| b.rotate(r)).collect();
    if group == Group::Dihedral {
        let reflected = b.reflect();
        images.extend((0..n).map(|r| reflected.rotate(r)));
    }
    images
}

pub fn canonicalize(b: &EdgeSet, group: Group) -> CanonicalForm {
    let representative = orbit(b, group)
        .into_iter()
        .min()
        .expect("orbit is never empty");
    CanonicalForm {
        representative,
        group,
    }
}

/// Distinct canonical representatives of a collection.
pub fn orbit_representatives<'a, I>(sets: I, group: Group) -> BTreeSet<EdgeSet>
where
    I: IntoIterator<Item = &'a EdgeSet>,
{
    sets.into_iter()
        .map(|b| canonicalize(b, group).representative)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    fn b65() -> EdgeSet {
        set(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)])
    }

    #[test]
    fn triangulation_counts() {
        assert_eq!(enumerate_triangulations(3).unwrap().len(), 1);
        assert!(enumerate_triangulations(3).unwrap()[0]
            .diagonals()
            .is_empty());
        assert_eq!(enumerate_triangulations(4).unwrap().len(), 2);
        assert_eq!(enumerate_triangulations(6).unwrap().len(), 14);
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            enumerate_triangulations_with(15, Guard::default()),
            Err(Error::Capacity { limit: 14, .. })
        ));
        assert!(matches!(
            all_saturated_blockers_with(
                9,
                None,
                SearchOptions {
                    guard: Guard::default(),
                    ..SearchOptions::default()
                }
            ),
            Err(Error::Capacity { limit: 8, .. })
        ));
        assert!(matches!(
            all_saturated_blockers_with(
                10,
                Some(9),
                SearchOptions {
                    guard: Guard::default(),
                    ..SearchOptions::default()
                }
            ),
            Err(Error::Capacity { limit: 9, .. })
        ));
    }

    #[test]
    fn bruteforce_examples() {
        assert!(is_blocker_bruteforce(&b65()).unwrap());
        assert!(is_blocker_bruteforce(&set(5, &[(0, 2), (1, 3), (2, 4)])).unwrap());
        assert!(!is_blocker_bruteforce(&EdgeSet::empty(6).unwrap()).unwrap());
        assert!(!is_blocker_bruteforce(&set(6, &[(0, 2)])).unwrap());
    }

    #[test]
    fn small_saturated_lists() {
        let five = all_saturated_blockers(5, Some(3)).unwrap();
        assert_eq!(five.len(), 5);
        let net = canonicalize(&set(5, &[(0, 2), (1, 3), (2, 4)]), Group::Rotation);
        assert!(five.iter().all(|b| canonicalize(b, Group::Rotation) == net));

        let six = all_saturated_blockers(6, Some(5)).unwrap();
        // the example is invariant under a half turn, so its orbit has 3 members
        assert_eq!(six.len(), 3);
        assert_eq!(b65().rotate(3), b65());
        let rep = canonicalize(&b65(), Group::Rotation).representative;
        assert!(six
            .iter()
            .all(|b| canonicalize(b, Group::Rotation).representative == rep));

        assert!(all_saturated_blockers(6, Some(6)).unwrap().is_empty());
    }

    #[test]
    fn small_spectra() {
        assert_eq!(
            saturation_spectrum_exhaustive(4).unwrap(),
            BTreeSet::from([2])
        );
        assert_eq!(
            saturation_spectrum_exhaustive(5).unwrap(),
            BTreeSet::from([3])
        );
        assert_eq!(
            saturation_spectrum_exhaustive(6).unwrap(),
            BTreeSet::from([4, 5])
        );
    }

    #[test]
    fn pruned_matches_unpruned() {
        for n in 4..=6 {
            for filter in [None, Some(n - 2), Some(n - 1), Some(n)] {
                let opts = |prune| SearchOptions {
                    prune,
                    parallel: false,
                    guard: Guard::default(),
                };
                assert_eq!(
                    all_saturated_blockers_with(n, filter, opts(true)).unwrap(),
                    all_saturated_blockers_with(n, filter, opts(false)).unwrap(),
                    "n={n} filter={filter:?}"
                );
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let rep = canonicalize(&b65(), Group::Rotation);
        for r in 0..6 {
            assert_eq!(canonicalize(&b65().rotate(r), Group::Rotation), rep);
        }
        assert_eq!(canonicalize(&rep.representative, Group::Rotation), rep);
        // least sorted edge list over the five rotations of the net
        let b = set(5, &[(1, 3), (2, 4), (3, 0)]);
        assert_eq!(
            canonicalize(&b, Group::Rotation).representative,
            set(5, &[(0, 2), (0, 3), (1, 4)])
        );
    }
}
