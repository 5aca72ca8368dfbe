//! Structural facts every saturated blocker satisfies, as checkable
//! predicates.

use crate::geometry::EdgeSet;

/// Vertices without the ear-cover `(i-1, i+1)`.
pub fn uncovered_vertices(b: &EdgeSet) -> Vec<usize> {
    (0..b.n()).filter(|&v| !b.is_covered(v)).collect()
}

/// Uncovered vertices of degree two.
pub fn uncovered_degree_two(b: &EdgeSet) -> Vec<usize> {
    uncovered_vertices(b)
        .into_iter()
        .filter(|&v| b.degree(v) == 2)
        .collect()
}

pub fn has_isolated_vertex(b: &EdgeSet) -> bool {
    (0..b.n()).any(|v| b.degree(v) == 0)
}

/// A vertex of degree one forces the ear-cover around its neighbour.
pub fn leaves_have_ear_covers(b: &EdgeSet) -> bool {
    (0..b.n()).all(|v| match b.neighbours(v).as_slice() {
        [j] => b.is_covered(*j),
        _ => true,
    })
}

/// Every uncovered vertex has degree at most two.
pub fn uncovered_degrees_at_most_two(b: &EdgeSet) -> bool {
    uncovered_vertices(b).into_iter().all(|v| b.degree(v) <= 2)
}
