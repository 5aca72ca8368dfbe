use crate::dp::is_saturated_blocker;
use crate::error::{Error, Result};
use crate::geometry::{Edge, EdgeSet};

use super::nm1::{classify_nm1, Nm1Variant};
use super::{recognize_min_blocker, template};

fn edit(c: &EdgeSet, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Option<EdgeSet> {
    let n = c.n();
    let mut out = c.clone();
    for &(u, v) in remove {
        out.remove(Edge::of(u, v));
    }
    for &(u, v) in add {
        let e = Edge::of(u, v);
        if !e.is_diagonal(n) {
            return None;
        }
        out.insert(e);
    }
    Some(out)
}

/// A minimum-sized blocker near a size `n-1` saturated blocker, and the size
/// of their symmetric difference.
///
/// Seagulls give back their missing ear-cover for two edges; butterflies
/// give back two ear-covers for three edges; bouquets drop the rim and one
/// side of the vase for a single beam to the base.
pub fn stability_distance(b: &EdgeSet) -> Result<(EdgeSet, usize)> {
    let n = b.n();
    let class = classify_nm1(b)?;
    let c = template(b, class.rotation);
    let l = class.pivot;
    let candidates: Vec<Option<EdgeSet>> = match class.variant {
        Nm1Variant::Seagull => vec![edit(
            &c,
            &[(l - 1, l + 2), (l - 2, l + 1)],
            &[(l - 1, l + 1)],
        )],
        Nm1Variant::Butterfly => vec![edit(
            &c,
            &[(l, l + 3), (l + 2, l - 1), (l + 1, l - 2)],
            &[(l - 1, l + 1), (l, l + 2)],
        )],
        Nm1Variant::Bouquet => {
            let k = class.anchor.expect("bouquet has an anchor");
            let far = k + class.width.expect("bouquet has a width");
            vec![
                edit(&c, &[(k, l - 1), (k, far)], &[(k, l)]),
                edit(&c, &[(k, l - 1), (k, far)], &[(k, l + 1)]),
                edit(&c, &[(far, l + 1), (k, far)], &[(far, l)]),
                edit(&c, &[(far, l + 1), (k, far)], &[(far, l - 1)]),
            ]
        }
    };
    let near = candidates
        .into_iter()
        .flatten()
        .map(|m| m.rotate(class.rotation))
        .find(|m| m.len() == n - 2 && recognize_min_blocker(m).is_some() && is_saturated_blocker(m))
        .ok_or_else(|| {
            Error::Classification(format!("no minimum-sized neighbour found for {b}"))
        })?;
    let distance = b.symmetric_difference_len(&near);
    Ok((near, distance))
}
