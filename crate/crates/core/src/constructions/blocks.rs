//! Building blocks: minimum-sized blockers, quadrilateral blockers and the
//! nested (Matrioshka) variant.

use std::collections::BTreeSet;

use crate::capacity::{Guard, MAX_MIN_BLOCKER_N};
use crate::dp::is_saturated_blocker;
use crate::error::{Error, Result};
use crate::geometry::{Edge, EdgeSet};

fn beam_vertex(m: usize, j: usize) -> usize {
    m + 2 + j
}

/// Beams `(first_vertex + j, targets[j])`: every target in `[lo, hi]` and no
/// later target two or more above an earlier one.
pub(crate) fn check_beams(
    first_vertex: usize,
    targets: &[usize],
    lo: usize,
    hi: usize,
) -> Result<()> {
    for (j, &t) in targets.iter().enumerate() {
        if t < lo || t > hi {
            return Err(Error::BeamTargetOutOfRange {
                vertex: first_vertex + j,
                target: t,
                lo,
                hi,
            });
        }
    }
    for j in 0..targets.len() {
        for k in j + 1..targets.len() {
            if targets[k] >= targets[j] + 2 {
                return Err(Error::ConflictingBeams {
                    v1: first_vertex + j,
                    t1: targets[j],
                    v2: first_vertex + k,
                    t2: targets[k],
                });
            }
        }
    }
    Ok(())
}

/// The minimum-sized blocker with ear-covers `(j, j+2)` for `j = 0..=m` and
/// beams `(m+2+j, targets[j-1])` for `j = 1..=n-3-m`.
pub fn build_min_blocker(n: usize, m: usize, beam_targets: &[usize]) -> Result<EdgeSet> {
    if n < 4 {
        return Err(Error::PolygonTooSmall(n));
    }
    if m < 1 || m > n - 3 {
        return Err(Error::InvalidParameter(format!(
            "net length m={m} outside 1..={}",
            n - 3
        )));
    }
    if beam_targets.len() != n - 3 - m {
        return Err(Error::InvalidParameter(format!(
            "expected {} beam targets for n={n}, m={m}, got {}",
            n - 3 - m,
            beam_targets.len()
        )));
    }
    check_beams(beam_vertex(m, 1), beam_targets, 1, m + 1)?;
    let mut b = EdgeSet::empty_unchecked(n);
    for j in 0..=m {
        b.insert(Edge::of(j, j + 2));
    }
    for (j, &t) in beam_targets.iter().enumerate() {
        b.insert(Edge::of(beam_vertex(m, j + 1), t));
    }
    Ok(b)
}

/// The full net `(0,2), .., (s-3, s-1)` on an `s`-gon.
pub(crate) fn full_net(s: usize) -> EdgeSet {
    build_min_blocker(s, s - 3, &[]).expect("full net is always valid")
}

/// Non-conflicting target lists of the given length over `[lo, hi]`.
pub(crate) fn beam_sequences(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn go(
        len: usize,
        lo: usize,
        hi: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for t in lo..=hi.min(cap) {
            cur.push(t);
            go(len, lo, hi, cap.min(t + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Every minimum-sized saturated blocker of the `n`-gon as a labeled set,
/// sorted and without repeats.
pub fn enumerate_min_blockers(n: usize) -> Result<Vec<EdgeSet>> {
    enumerate_min_blockers_with(n, Guard::from_env())
}

pub fn enumerate_min_blockers_with(n: usize, guard: Guard) -> Result<Vec<EdgeSet>> {
    if n < 4 {
        return Err(Error::PolygonTooSmall(n));
    }
    guard.check("minimum blocker enumeration", n, MAX_MIN_BLOCKER_N)?;
    let mut all = BTreeSet::new();
    for m in 1..=n - 3 {
        for targets in beam_sequences(n - 3 - m, 1, m + 1) {
            let b = build_min_blocker(n, m, &targets)?;
            for r in 0..n {
                all.insert(b.rotate(r));
            }
        }
    }
    Ok(all.into_iter().collect())
}

/// Four consecutive non-empty vertex runs: right `0..a`, bottom `a..b`,
/// left `b..c`, top `c..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadPartition {
    n: usize,
    a: usize,
    b: usize,
    c: usize,
}

impl QuadPartition {
    pub fn new(n: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        if !(0 < a && a < b && b < c && c < n) {
            return Err(Error::InvalidParameter(format!(
                "cuts must satisfy 0 < a < b < c < n, got n={n} a={a} b={b} c={c}"
            )));
        }
        Ok(QuadPartition { n, a, b, c })
    }

    /// From the run lengths, in the order right, bottom, left, top.
    pub fn from_sides(right: usize, bottom: usize, left: usize, top: usize) -> Result<Self> {
        let a = right;
        let b = a + bottom;
        let c = b + left;
        Self::new(c + top, a, b, c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> (usize, usize, usize) {
        (self.a, self.b, self.c)
    }

    pub fn right(&self) -> usize {
        self.a
    }

    pub fn bottom(&self) -> usize {
        self.b - self.a
    }

    pub fn left(&self) -> usize {
        self.c - self.b
    }

    pub fn top(&self) -> usize {
        self.n - self.c
    }

    pub fn quadrilateral_size(&self) -> usize {
        self.right() * self.left() + self.top() * self.bottom()
    }
}

/// All right-left and top-bottom pairs.
pub fn build_quadrilateral(p: &QuadPartition) -> EdgeSet {
    let (a, b, c) = p.cuts();
    let mut out = EdgeSet::empty_unchecked(p.n);
    for r in 0..a {
        for l in b..c {
            out.insert(Edge::of(r, l));
        }
    }
    for bottom in a..b {
        for top in c..p.n {
            out.insert(Edge::of(bottom, top));
        }
    }
    out
}

/// Quadrilateral blocker with `(0, c-1)` and `(a-1, b)` swapped for the
/// saturated blockers `top` and `bottom` of the two cut-off sub-polygons.
///
/// `top` lives on the `(|top|+2)`-gon labeled `0 -> 0`, `1 -> c-1`,
/// `j -> c+j-2`; `bottom` on the `(|bottom|+2)`-gon labeled `j -> a-1+j`.
pub fn build_matrioshka(p: &QuadPartition, top: &EdgeSet, bottom: &EdgeSet) -> Result<EdgeSet> {
    if p.left() < 3 || p.right() < 3 || p.top() < 2 || p.bottom() < 2 {
        return Err(Error::InvalidParameter(format!(
            "nested construction needs left, right >= 3 and top, bottom >= 2; got right={} bottom={} left={} top={}",
            p.right(),
            p.bottom(),
            p.left(),
            p.top()
        )));
    }
    let (a, b, c) = p.cuts();
    let top_n = p.top() + 2;
    let bottom_n = p.bottom() + 2;
    if top.n() != top_n || !is_saturated_blocker(top) {
        return Err(Error::InvalidSubBlocker {
            which: "top",
            expected_n: top_n,
        });
    }
    if bottom.n() != bottom_n || !is_saturated_blocker(bottom) {
        return Err(Error::InvalidSubBlocker {
            which: "bottom",
            expected_n: bottom_n,
        });
    }
    let mut out = build_quadrilateral(p);
    out.remove(Edge::of(0, c - 1));
    out.remove(Edge::of(a - 1, b));
    let top_map = |v: usize| match v {
        0 => 0,
        v => c + v - 2,
    };
    let embedded_top = top.map_vertices(p.n, top_map)?;
    let embedded_bottom = bottom.map_vertices(p.n, |v| a - 1 + v)?;
    debug_assert!(!out.intersects(&embedded_top) && !out.intersects(&embedded_bottom));
    Ok(out.union(&embedded_top).union(&embedded_bottom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{all_saturated_blockers, canonicalize, Group, TriangulationOracle};

    fn set(n: usize, pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn min_blocker_examples() {
        assert_eq!(
            build_min_blocker(5, 2, &[]).unwrap(),
            set(5, &[(0, 2), (1, 3), (2, 4)])
        );
        let b = build_min_blocker(6, 1, &[1, 2]).unwrap();
        assert_eq!(b, set(6, &[(0, 2), (1, 3), (1, 4), (2, 5)]));
        assert!(is_saturated_blocker(&b));
        assert!(TriangulationOracle::new(6).unwrap().blocks(&b));
        let full = build_min_blocker(6, 3, &[]).unwrap();
        assert_eq!(full, set(6, &[(0, 2), (1, 3), (2, 4), (3, 5)]));
        assert!(is_saturated_blocker(&full));
    }

    #[test]
    fn min_blocker_rejections() {
        assert!(matches!(
            build_min_blocker(6, 0, &[1, 1, 1]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            build_min_blocker(6, 4, &[]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            build_min_blocker(6, 1, &[1, 3]),
            Err(Error::BeamTargetOutOfRange { target: 3, .. })
        ));
        assert!(matches!(
            build_min_blocker(7, 2, &[1, 3]),
            Err(Error::ConflictingBeams {
                v1: 5,
                t1: 1,
                v2: 6,
                t2: 3
            })
        ));
        assert!(build_min_blocker(7, 2, &[3, 1]).is_ok());
    }

    #[test]
    fn min_blocker_enumeration_small() {
        assert_eq!(
            enumerate_min_blockers(4).unwrap(),
            vec![set(4, &[(0, 2), (1, 3)])]
        );
        assert_eq!(enumerate_min_blockers(5).unwrap().len(), 5);
        let six = enumerate_min_blockers(6).unwrap();
        let orbits: BTreeSet<_> = six
            .iter()
            .map(|b| canonicalize(b, Group::Rotation))
            .collect();
        assert_eq!(orbits.len(), 3);
        assert_eq!(six, all_saturated_blockers(6, Some(4)).unwrap());
    }

    #[test]
    fn beam_sequences_respect_the_conflict_rule() {
        let seqs = beam_sequences(3, 1, 3);
        assert!(seqs.contains(&vec![3, 1, 2]));
        assert!(!seqs.contains(&vec![1, 3, 1]));
        assert!(seqs.iter().all(|s| check_beams(5, s, 1, 3).is_ok()));
    }

    #[test]
    fn quadrilateral_examples() {
        let p = QuadPartition::new(5, 2, 3, 4).unwrap();
        assert_eq!((p.right(), p.bottom(), p.left(), p.top()), (2, 1, 1, 1));
        let q = build_quadrilateral(&p);
        assert_eq!(q.len(), 3);
        assert!(is_saturated_blocker(&q));

        let p = QuadPartition::new(8, 2, 4, 6).unwrap();
        let q = build_quadrilateral(&p);
        assert_eq!(q.len(), 8);
        assert!(is_saturated_blocker(&q));
        assert!(TriangulationOracle::new(8).unwrap().blocks(&q));

        assert!(QuadPartition::new(8, 2, 2, 6).is_err());
        assert!(QuadPartition::new(8, 0, 2, 6).is_err());
        assert!(QuadPartition::new(8, 2, 4, 8).is_err());
    }

    #[test]
    fn quadrilateral_size_formula() {
        for n in 4..=12 {
            for a in 1..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        let p = QuadPartition::new(n, a, b, c).unwrap();
                        assert_eq!(build_quadrilateral(&p).len(), p.quadrilateral_size());
                    }
                }
            }
        }
    }

    #[test]
    fn smallest_matrioshka() {
        let p = QuadPartition::from_sides(3, 2, 3, 2).unwrap();
        assert_eq!(p.n(), 10);
        let net = full_net(4);
        let b = build_matrioshka(&p, &net, &net).unwrap();
        assert_eq!(b.len(), 15);
        assert!(is_saturated_blocker(&b));
        assert!(crate::dp::is_saturated_blocker_per_edge(&b));
    }

    #[test]
    fn matrioshka_rejections() {
        let net = full_net(4);
        let narrow = QuadPartition::from_sides(2, 2, 3, 2).unwrap();
        assert!(matches!(
            build_matrioshka(&narrow, &net, &net),
            Err(Error::InvalidParameter(_))
        ));
        let p = QuadPartition::from_sides(3, 2, 3, 2).unwrap();
        let not_blocker = set(4, &[(0, 2)]);
        assert!(matches!(
            build_matrioshka(&p, &not_blocker, &net),
            Err(Error::InvalidSubBlocker {
                which: "top",
                expected_n: 4
            })
        ));
        assert!(matches!(
            build_matrioshka(&p, &net, &full_net(5)),
            Err(Error::InvalidSubBlocker {
                which: "bottom",
                expected_n: 4
            })
        ));
        let taller = QuadPartition::from_sides(3, 2, 3, 3).unwrap();
        let unsaturated = set(5, &[(0, 2), (1, 3), (2, 4), (1, 4)]);
        assert!(matches!(
            build_matrioshka(&taller, &unsaturated, &net),
            Err(Error::InvalidSubBlocker {
                which: "top",
                expected_n: 5
            })
        ));
        assert!(build_matrioshka(&taller, &full_net(5), &net).is_ok());
    }
}
