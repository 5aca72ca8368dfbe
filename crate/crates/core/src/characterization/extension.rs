use crate::error::{Error, Result};
use crate::geometry::{Edge, EdgeSet};

/// Inserts a vertex into the boundary gap `(gap, gap+1)` (the gap `n-1`
/// closes the polygon) and adds two edges at it.
///
/// The new vertex is labeled `gap + 1` and later vertices shift up by one;
/// `e1` and `e2` use the new labels. The result is not checked for
/// saturation.
pub fn extend_by_vertex(b: &EdgeSet, gap: usize, e1: Edge, e2: Edge) -> Result<EdgeSet> {
    let n = b.n();
    if gap >= n {
        return Err(Error::VertexOutOfRange { vertex: gap, n });
    }
    let v = gap + 1;
    for e in [e1, e2] {
        if !e.is_incident(v) {
            return Err(Error::NotIncident {
                a: e.a(),
                b: e.b(),
                vertex: v,
            });
        }
        if e.b() > n || !e.is_diagonal(n + 1) {
            return Err(Error::BoundaryEdge {
                a: e.a(),
                b: e.b(),
                n: n + 1,
            });
        }
    }
    let mut out = b.map_vertices(n + 1, |u| if u > gap { u + 1 } else { u })?;
    out.insert(e1);
    out.insert(e2);
    Ok(out)
}
