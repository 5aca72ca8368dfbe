use crate::constructions::build_min_blocker;
use crate::geometry::EdgeSet;

use super::template;

/// Parameters of a minimum-sized blocker: it equals
/// `build_min_blocker(n, net_length, beam_targets).rotate(rotation)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinBlockerShape {
    pub rotation: usize,
    pub net_length: usize,
    pub beam_targets: Vec<usize>,
}

impl MinBlockerShape {
    pub fn build(&self, n: usize) -> EdgeSet {
        build_min_blocker(n, self.net_length, &self.beam_targets)
            .expect("recognized shapes are valid")
            .rotate(self.rotation)
    }
}

/// Single neighbours of the vertices `from..to`, or `None` if one of them
/// has degree other than one.
pub(crate) fn leaf_targets(b: &EdgeSet, from: usize, to: usize) -> Option<Vec<usize>> {
    (from..to)
        .map(|v| match b.neighbours(v).as_slice() {
            [t] => Some(*t),
            _ => None,
        })
        .collect()
}

/// The parameterization of `b` as a minimum-sized blocker with the smallest
/// rotation and, for that rotation, the longest net, if any. A beam from
/// `m+3` to `m+1` is itself an ear-cover, so the longest net absorbs it.
pub fn recognize_min_blocker(b: &EdgeSet) -> Option<MinBlockerShape> {
    let n = b.n();
    if n < 4 || b.len() != n - 2 {
        return None;
    }
    for rotation in 0..n {
        let c = template(b, rotation);
        let longest = (0..=n - 3).take_while(|&j| c.has(j, j + 2)).count();
        for m in (1..longest).rev() {
            let Some(targets) = leaf_targets(&c, m + 3, n) else {
                continue;
            };
            if build_min_blocker(n, m, &targets).is_ok_and(|built| built == c) {
                return Some(MinBlockerShape {
                    rotation,
                    net_length: m,
                    beam_targets: targets,
                });
            }
        }
    }
    None
}
