//! Edges and diagonal sets on a labeled convex polygon.
//!
//! Vertices of an `n`-gon are `0..n` in counterclockwise order. An [`EdgeSet`]
//! holds diagonals only (order at least 2) and stores membership as a bitset
//! over the `n(n-3)/2` diagonal slots in lexicographic `(a, b)` order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: usize,
    b: usize,
}

impl Edge {
    /// Canonicalizes `(u, v)` to `(min, max)`.
    pub fn new(u: usize, v: usize) -> Result<Self> {
        match u.cmp(&v) {
            Ordering::Less => Ok(Edge { a: u, b: v }),
            Ordering::Greater => Ok(Edge { a: v, b: u }),
            Ordering::Equal => Err(Error::LoopEdge(u)),
        }
    }

    /// Like [`Edge::new`] for arguments already known to differ.
    pub(crate) fn of(u: usize, v: usize) -> Self {
        debug_assert_ne!(u, v);
        Edge {
            a: u.min(v),
            b: u.max(v),
        }
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    /// `min(b - a, n - (b - a))`: 1 for boundary edges, 2 for ear-covers.
    pub fn order(self, n: usize) -> usize {
        let d = self.b - self.a;
        d.min(n - d)
    }

    pub fn is_diagonal(self, n: usize) -> bool {
        self.b < n && self.order(n) >= 2
    }

    pub fn is_incident(self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.a == v {
            Some(self.b)
        } else if self.b == v {
            Some(self.a)
        } else {
            None
        }
    }

    /// Maps both endpoints through `v -> (v + shift) mod n`.
    pub fn rotated(self, shift: usize, n: usize) -> Self {
        Edge::of((self.a + shift) % n, (self.b + shift) % n)
    }

    /// Maps both endpoints through `v -> (n - v) mod n`.
    pub fn reflected(self, n: usize) -> Self {
        Edge::of((n - self.a) % n, (n - self.b) % n)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// True iff the two chords share an interior point. Shared endpoints do not
/// count as a crossing.
pub fn crosses(e1: Edge, e2: Edge) -> bool {
    let (i, j, k, l) = (e1.a, e1.b, e2.a, e2.b);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Number of diagonals of an `n`-gon.
pub fn diagonal_count(n: usize) -> usize {
    if n < 4 {
        0
    } else {
        n * (n - 3) / 2
    }
}

fn row_base(n: usize, a: usize) -> usize {
    if a == 0 {
        0
    } else {
        (n - 3) + (a - 1) * (n - 2) - a * (a - 1) / 2
    }
}

fn slot(n: usize, a: usize, b: usize) -> usize {
    if a == 0 {
        b - 2
    } else {
        row_base(n, a) + (b - a - 2)
    }
}

/// Range of `b` values such that `(a, b)` is a diagonal with `a < b`.
fn row_range(n: usize, a: usize) -> std::ops::Range<usize> {
    if a == 0 {
        2..n.saturating_sub(1)
    } else {
        (a + 2)..n
    }
}

/// A set of diagonals of a convex `n`-gon.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    n: usize,
    bits: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::PolygonTooSmall(n));
        }
        Ok(Self::empty_unchecked(n))
    }

    pub(crate) fn empty_unchecked(n: usize) -> Self {
        EdgeSet {
            n,
            bits: vec![0; diagonal_count(n).div_ceil(64)],
        }
    }

    /// All `n(n-3)/2` diagonals.
    pub fn full(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        let d = diagonal_count(n);
        for (w, word) in s.bits.iter_mut().enumerate() {
            let lo = w * 64;
            let cnt = (d - lo).min(64);
            *word = if cnt == 64 {
                u64::MAX
            } else {
                (1u64 << cnt) - 1
            };
        }
        Ok(s)
    }

    /// Builds a set from vertex pairs, rejecting loops, out-of-range vertices,
    /// boundary edges and duplicates.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = Self::empty(n)?;
        for (u, v) in pairs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            let e = Edge::new(u, v)?;
            if e.order(n) < 2 {
                return Err(Error::BoundaryEdge { a: e.a, b: e.b, n });
            }
            if !s.insert(e) {
                return Err(Error::DuplicateEdge { a: e.a, b: e.b });
            }
        }
        Ok(s)
    }

    /// Like [`EdgeSet::from_pairs`], but silently merges duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut s = Self::empty(n)?;
        for e in edges {
            if e.b >= n {
                return Err(Error::VertexOutOfRange { vertex: e.b, n });
            }
            if e.order(n) < 2 {
                return Err(Error::BoundaryEdge { a: e.a, b: e.b, n });
            }
            s.insert(e);
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub(crate) fn slot_of(&self, e: Edge) -> Option<usize> {
        if e.is_diagonal(self.n) {
            Some(slot(self.n, e.a, e.b))
        } else {
            None
        }
    }

    pub fn contains(&self, e: Edge) -> bool {
        match self.slot_of(e) {
            Some(s) => self.bits[s / 64] >> (s % 64) & 1 == 1,
            None => false,
        }
    }

    /// Membership test on raw vertex indices; false for boundary edges.
    pub fn has(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.contains(Edge::of(u, v))
    }

    /// Inserts a diagonal; returns false if it was already present.
    ///
    /// Panics if `e` is not a diagonal of this polygon.
    pub fn insert(&mut self, e: Edge) -> bool {
        let s = self
            .slot_of(e)
            .unwrap_or_else(|| panic!("{e} is not a diagonal of a {}-gon", self.n));
        let mask = 1u64 << (s % 64);
        let was = self.bits[s / 64] & mask != 0;
        self.bits[s / 64] |= mask;
        !was
    }

    pub fn remove(&mut self, e: Edge) -> bool {
        match self.slot_of(e) {
            Some(s) => {
                let mask = 1u64 << (s % 64);
                let was = self.bits[s / 64] & mask != 0;
                self.bits[s / 64] &= !mask;
                was
            }
            None => false,
        }
    }

    pub(crate) fn set_slot(&mut self, s: usize) {
        self.bits[s / 64] |= 1u64 << (s % 64);
    }

    pub(crate) fn clear_slot(&mut self, s: usize) {
        self.bits[s / 64] &= !(1u64 << (s % 64));
    }

    /// Members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| {
            row_range(n, a).filter_map(move |b| {
                let s = slot(n, a, b);
                (self.bits[s / 64] >> (s % 64) & 1 == 1).then_some(Edge { a, b })
            })
        })
    }

    pub fn to_pairs(&self) -> Vec<(usize, usize)> {
        self.iter().map(|e| (e.a, e.b)).collect()
    }

    /// All diagonals not in `self`.
    pub fn complement(&self) -> EdgeSet {
        let mut full = EdgeSet::full(self.n).expect("n >= 3 by construction");
        for (w, &x) in full.bits.iter_mut().zip(&self.bits) {
            *w &= !x;
        }
        full
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, &x) in out.bits.iter_mut().zip(&other.bits) {
            *w |= x;
        }
        out
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, &x) in out.bits.iter_mut().zip(&other.bits) {
            *w &= !x;
        }
        out
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Size of the symmetric difference.
    pub fn symmetric_difference_len(&self, other: &EdgeSet) -> usize {
        assert_eq!(self.n, other.n);
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Number of members incident to `v`.
    pub fn degree(&self, v: usize) -> usize {
        if v >= self.n {
            return 0;
        }
        (0..self.n).filter(|&u| self.has(u, v)).count()
    }

    /// Neighbours of `v`, ascending.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has(u, v)).collect()
    }

    /// Whether the ear-cover `(v-1, v+1)` is present.
    pub fn is_covered(&self, v: usize) -> bool {
        let n = self.n;
        n >= 4 && self.has((v + n - 1) % n, (v + 1) % n)
    }

    /// Relabels every vertex `v -> (v + shift) mod n`.
    pub fn rotate(&self, shift: usize) -> EdgeSet {
        let n = self.n;
        let mut out = EdgeSet::empty_unchecked(n);
        for e in self.iter() {
            out.insert(e.rotated(shift % n, n));
        }
        out
    }

    /// Relabels every vertex `v -> (n - v) mod n`.
    pub fn reflect(&self) -> EdgeSet {
        let n = self.n;
        let mut out = EdgeSet::empty_unchecked(n);
        for e in self.iter() {
            out.insert(e.reflected(n));
        }
        out
    }

    /// Restriction to the `(n-1)`-gon obtained by deleting vertex `i`: drops
    /// every edge at `i` and the ear-cover `(i-1, i+1)`, then shifts labels
    /// above `i` down by one.
    pub fn vertex_deletion(&self, i: usize) -> Result<EdgeSet> {
        let n = self.n;
        if i >= n {
            return Err(Error::VertexOutOfRange { vertex: i, n });
        }
        if n < 4 {
            return Err(Error::PolygonTooSmall(n - 1));
        }
        let ear = Edge::of((i + n - 1) % n, (i + 1) % n);
        let relabel = |v: usize| if v > i { v - 1 } else { v };
        let mut out = EdgeSet::empty_unchecked(n - 1);
        for e in self.iter() {
            if e.is_incident(i) || e == ear {
                continue;
            }
            let moved = Edge::of(relabel(e.a), relabel(e.b));
            debug_assert!(moved.is_diagonal(n - 1));
            out.insert(moved);
        }
        Ok(out)
    }

    /// Transfers the set onto a sub-polygon (or super-polygon) through a
    /// vertex map, failing if an image is not a diagonal of `target_n`.
    pub fn map_vertices<F>(&self, target_n: usize, mut f: F) -> Result<EdgeSet>
    where
        F: FnMut(usize) -> usize,
    {
        EdgeSet::from_edges(
            target_n,
            self.iter()
                .map(|e| Edge::new(f(e.a), f(e.b)))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl Ord for EdgeSet {
    /// Polygon size first, then the sorted edge sequences lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet(n={}, {{", self.n)?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", e.a, e.b)?;
        }
        write!(f, "}})")
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A set of `n - 3` pairwise non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    diagonals: EdgeSet,
}

impl Triangulation {
    pub fn new(diagonals: EdgeSet) -> Result<Self> {
        if is_triangulation(&diagonals) {
            Ok(Triangulation { diagonals })
        } else {
            Err(Error::InvalidParameter(format!(
                "{diagonals} is not a triangulation"
            )))
        }
    }

    pub(crate) fn new_unchecked(diagonals: EdgeSet) -> Self {
        debug_assert!(is_triangulation(&diagonals));
        Triangulation { diagonals }
    }

    pub fn n(&self) -> usize {
        self.diagonals.n()
    }

    pub fn diagonals(&self) -> &EdgeSet {
        &self.diagonals
    }

    pub fn into_diagonals(self) -> EdgeSet {
        self.diagonals
    }
}

/// `|t| = n - 3` and no two members cross.
pub fn is_triangulation(t: &EdgeSet) -> bool {
    let n = t.n();
    let edges: Vec<Edge> = t.iter().collect();
    if edges.len() != n.saturating_sub(3) {
        return false;
    }
    edges
        .iter()
        .enumerate()
        .all(|(x, &e1)| edges[x + 1..].iter().all(|&e2| !crosses(e1, e2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn crossing_examples() {
        let e = |a, b| Edge::new(a, b).unwrap();
        assert!(crosses(e(0, 3), e(1, 4)));
        assert!(!crosses(e(0, 3), e(3, 5)));
        assert!(!crosses(e(0, 2), e(3, 5)));
        assert!(!crosses(e(0, 4), e(1, 3)));
    }

    #[test]
    fn order_and_canonical_form() {
        let e = Edge::new(5, 1).unwrap();
        assert_eq!((e.a(), e.b()), (1, 5));
        assert_eq!(e.order(6), 2);
        assert_eq!(Edge::new(0, 5).unwrap().order(6), 1);
        assert_eq!(Edge::new(0, 3).unwrap().order(6), 3);
        assert!(matches!(Edge::new(2, 2), Err(Error::LoopEdge(2))));
    }

    #[test]
    fn slots_are_dense_and_lexicographic() {
        for n in 4..20 {
            let mut expected = 0;
            for a in 0..n {
                for b in row_range(n, a) {
                    assert_eq!(slot(n, a, b), expected, "n={n} ({a},{b})");
                    expected += 1;
                }
            }
            assert_eq!(expected, diagonal_count(n));
            assert_eq!(EdgeSet::full(n).unwrap().len(), diagonal_count(n));
        }
    }

    #[test]
    fn parse_rejections() {
        assert!(matches!(
            EdgeSet::from_pairs(5, [(0, 1)]),
            Err(Error::BoundaryEdge { .. })
        ));
        assert!(matches!(
            EdgeSet::from_pairs(5, [(0, 4)]),
            Err(Error::BoundaryEdge { .. })
        ));
        assert!(matches!(
            EdgeSet::from_pairs(5, [(0, 7)]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        ));
        assert!(matches!(
            EdgeSet::from_pairs(5, [(0, 2), (2, 0)]),
            Err(Error::DuplicateEdge { a: 0, b: 2 })
        ));
        assert!(matches!(EdgeSet::empty(2), Err(Error::PolygonTooSmall(2))));
    }

    #[test]
    fn triangulation_examples() {
        assert!(is_triangulation(&set(6, &[(0, 2), (0, 3), (0, 4)])));
        assert!(!is_triangulation(&set(6, &[(0, 2), (1, 3), (2, 4)])));
        assert!(is_triangulation(&set(4, &[(0, 2)])));
        assert!(is_triangulation(&EdgeSet::empty(3).unwrap()));
        assert!(!is_triangulation(&set(6, &[(0, 2), (0, 3)])));
    }

    #[test]
    fn degree_examples() {
        let b65 = set(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)]);
        assert_eq!(b65.degree(0), 2);
        assert_eq!(b65.degree(5), 1);
        let empty = EdgeSet::empty(7).unwrap();
        assert!((0..7).all(|v| empty.degree(v) == 0));
    }

    #[test]
    fn vertex_deletion_examples() {
        let b65 = set(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)]);
        assert_eq!(
            b65.vertex_deletion(2).unwrap(),
            set(5, &[(0, 2), (0, 3), (1, 3)])
        );
        let net = set(5, &[(0, 2), (1, 3), (2, 4)]);
        assert_eq!(net.vertex_deletion(0).unwrap(), set(4, &[(0, 2), (1, 3)]));
        // isolated, uncovered vertex: same cardinality, relabeled
        let b = set(7, &[(0, 2), (1, 3), (2, 4)]);
        let d = b.vertex_deletion(5).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d, set(6, &[(0, 2), (1, 3), (2, 4)]));
    }

    #[test]
    fn rotation_and_reflection() {
        let net = set(5, &[(0, 2), (1, 3), (2, 4)]);
        assert_eq!(net.rotate(1), set(5, &[(1, 3), (2, 4), (0, 3)]));
        assert_eq!(net.rotate(5), net);
        assert_eq!(net.reflect().reflect(), net);
        assert_eq!(net.reflect(), set(5, &[(0, 3), (1, 3), (2, 4)]));
    }

    #[test]
    fn ordering_compares_sorted_edge_lists() {
        let a = set(5, &[(0, 2), (1, 3), (2, 4)]);
        let b = set(5, &[(0, 3), (1, 3), (2, 4)]);
        assert!(a < b);
        let c = set(5, &[(0, 2)]);
        assert!(c < a);
        assert!(EdgeSet::empty(5).unwrap() < c);
        let late = set(20, &[(17, 19)]);
        let early = set(20, &[(0, 2)]);
        assert!(early < late);
    }
}
