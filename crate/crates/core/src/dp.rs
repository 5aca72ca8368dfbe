//! Interval dynamic programming over the linear vertex order `0..n`.
//!
//! `inner[i][j]` (for `i < j`) says whether the sub-polygon `i, i+1, .., j`
//! can be triangulated using only allowed diagonals, with `(i, j)` treated as
//! its closing side. `outer[i][j]` says the same for the complementary
//! sub-polygon `j, .., n-1, 0, .., i`. A diagonal `e` lies in some
//! all-allowed triangulation iff both sides of `e` are triangulable.

use crate::geometry::{Edge, EdgeSet, Triangulation};

struct Usable {
    n: usize,
    cells: Vec<bool>,
}

impl Usable {
    fn new(allowed: &EdgeSet) -> Self {
        let n = allowed.n();
        let mut cells = vec![false; n * n];
        for i in 0..n {
            let j = (i + 1) % n;
            cells[i * n + j] = true;
            cells[j * n + i] = true;
        }
        for e in allowed.iter() {
            cells[e.a() * n + e.b()] = true;
            cells[e.b() * n + e.a()] = true;
        }
        Usable { n, cells }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }
}

/// Inner table plus the first split vertex found for every solvable interval.
struct Inner {
    n: usize,
    ok: Vec<bool>,
    split: Vec<usize>,
}

impl Inner {
    fn compute(usable: &Usable) -> Self {
        let n = usable.n;
        let mut ok = vec![false; n * n];
        let mut split = vec![usize::MAX; n * n];
        for i in (0..n).rev() {
            if i + 1 < n {
                ok[i * n + i + 1] = true;
            }
            for j in i + 2..n {
                for k in i + 1..j {
                    if usable.get(i, k) && usable.get(k, j) && ok[i * n + k] && ok[k * n + j] {
                        ok[i * n + j] = true;
                        split[i * n + j] = k;
                        break;
                    }
                }
            }
        }
        Inner { n, ok, split }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.ok[i * self.n + j]
    }

    fn collect(&self, i: usize, j: usize, out: &mut EdgeSet) {
        if j <= i + 1 {
            return;
        }
        let k = self.split[i * self.n + j];
        debug_assert!(k < self.n);
        for (x, y) in [(i, k), (k, j)] {
            let e = Edge::of(x, y);
            if e.is_diagonal(self.n) {
                out.insert(e);
            }
        }
        self.collect(i, k, out);
        self.collect(k, j, out);
    }
}

fn outer_table(usable: &Usable, inner: &Inner) -> Vec<bool> {
    let n = usable.n;
    let mut out = vec![false; n * n];
    out[n - 1] = true;
    for span in (1..n - 1).rev() {
        for i in 0..n - span {
            let j = i + span;
            let mut found = false;
            for k in 0..i {
                if usable.get(k, i) && usable.get(k, j) && inner.get(k, i) && out[k * n + j] {
                    found = true;
                    break;
                }
            }
            if !found {
                for k in j + 1..n {
                    if usable.get(j, k) && usable.get(i, k) && inner.get(j, k) && out[i * n + k] {
                        found = true;
                        break;
                    }
                }
            }
            out[i * n + j] = found;
        }
    }
    out
}

/// True iff some triangulation uses only diagonals from `allowed`.
pub fn contains_triangulation(allowed: &EdgeSet) -> bool {
    let n = allowed.n();
    let inner = Inner::compute(&Usable::new(allowed));
    inner.get(0, n - 1)
}

/// A triangulation inside `allowed`, traced back through the DP split points.
pub fn witness_triangulation(allowed: &EdgeSet) -> Option<Triangulation> {
    let n = allowed.n();
    let inner = Inner::compute(&Usable::new(allowed));
    if !inner.get(0, n - 1) {
        return None;
    }
    let mut out = EdgeSet::empty_unchecked(n);
    inner.collect(0, n - 1, &mut out);
    Some(Triangulation::new_unchecked(out))
}

/// True iff `b` meets every triangulation.
///
/// For a triangle the family of triangulations is treated as empty, so every
/// set (there is only the empty one) blocks vacuously.
pub fn is_blocker(b: &EdgeSet) -> bool {
    b.n() == 3 || !contains_triangulation(&b.complement())
}

/// For every `e` in `b`, whether `b \ {e}` still blocks. Computed with one
/// inner/outer pass over the complement of `b`.
fn removable_flags(b: &EdgeSet) -> Vec<(Edge, bool)> {
    let usable = Usable::new(&b.complement());
    let inner = Inner::compute(&usable);
    let outer = outer_table(&usable, &inner);
    let n = b.n();
    b.iter()
        .map(|e| {
            let escapes = inner.get(e.a(), e.b()) && outer[e.a() * n + e.b()];
            (e, !escapes)
        })
        .collect()
}

/// A blocker from which no single edge can be dropped.
pub fn is_saturated_blocker(b: &EdgeSet) -> bool {
    if b.n() == 3 {
        return b.is_empty();
    }
    is_blocker(b) && removable_flags(b).iter().all(|&(_, removable)| !removable)
}

/// Edges of `b` whose removal leaves a blocker.
pub fn redundant_edges(b: &EdgeSet) -> Vec<Edge> {
    if b.n() == 3 {
        return Vec::new();
    }
    removable_flags(b)
        .into_iter()
        .filter_map(|(e, removable)| removable.then_some(e))
        .collect()
}

/// Reference form of [`is_saturated_blocker`]: one full DP per removed edge.
pub fn is_saturated_blocker_per_edge(b: &EdgeSet) -> bool {
    if b.n() == 3 {
        return b.is_empty();
    }
    is_blocker(b)
        && b.iter().all(|e| {
            let mut smaller = b.clone();
            smaller.remove(e);
            !is_blocker(&smaller)
        })
}
