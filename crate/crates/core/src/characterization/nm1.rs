//! Saturated blockers with one edge more than the minimum: seagull,
//! butterfly and bouquet shapes.

use std::cmp::Reverse;
use std::fmt;

use crate::constructions::{beam_sequences, check_beams};
use crate::error::{Error, Result};
use crate::geometry::{Edge, EdgeSet};

use super::min_blocker::leaf_targets;
use super::template;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nm1Variant {
    Seagull,
    Butterfly,
    Bouquet,
}

impl Nm1Variant {
    pub fn label(self) -> &'static str {
        match self {
            Nm1Variant::Seagull => "seagull",
            Nm1Variant::Butterfly => "butterfly",
            Nm1Variant::Bouquet => "bouquet",
        }
    }
}

impl fmt::Display for Nm1Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Parameters of a size `n-1` saturated blocker, which equals the matching
/// builder's output rotated by `rotation`.
///
/// `anchor` and `width` are set for bouquets only; `beam_targets_right` is
/// empty except for bouquets, whose `beam_targets` are the beams before the
/// anchor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nm1Classification {
    pub variant: Nm1Variant,
    pub rotation: usize,
    pub pivot: usize,
    pub net_length: usize,
    pub anchor: Option<usize>,
    pub width: Option<usize>,
    pub beam_targets: Vec<usize>,
    pub beam_targets_right: Vec<usize>,
}

impl Nm1Classification {
    /// The unrotated set.
    pub fn build_template(&self, n: usize) -> Result<EdgeSet> {
        match self.variant {
            Nm1Variant::Seagull => {
                build_seagull(n, self.pivot, self.net_length, &self.beam_targets)
            }
            Nm1Variant::Butterfly => {
                build_butterfly(n, self.pivot, self.net_length, &self.beam_targets)
            }
            Nm1Variant::Bouquet => build_bouquet(
                n,
                self.pivot,
                self.net_length,
                self.anchor.unwrap_or(0),
                self.width.unwrap_or(0),
                &self.beam_targets,
                &self.beam_targets_right,
            ),
        }
    }

    pub fn build(&self, n: usize) -> Result<EdgeSet> {
        Ok(self.build_template(n)?.rotate(self.rotation))
    }

    /// The seagull, butterfly or bouquet edges alone, rotated into place.
    pub fn special_edges(&self, n: usize) -> EdgeSet {
        let l = self.pivot;
        let pairs: Vec<(usize, usize)> = match self.variant {
            Nm1Variant::Seagull => vec![(l - 2, l), (l - 2, l + 1), (l - 1, l + 2), (l, l + 2)],
            Nm1Variant::Butterfly => {
                vec![
                    (l - 2, l),
                    (l - 2, l + 1),
                    (l - 1, l + 2),
                    (l, l + 3),
                    (l + 1, l + 3),
                ]
            }
            Nm1Variant::Bouquet => {
                let k = self.anchor.unwrap_or(0);
                let far = k + self.width.unwrap_or(0);
                let mut v = vec![(l - 1, l + 1), (k, l - 1), (far, l + 1), (k, far)];
                v.extend((k + 1..far).map(|x| (x, l)));
                v
            }
        };
        let mut out = EdgeSet::empty_unchecked(n);
        insert_all(&mut out, pairs);
        out.rotate(self.rotation)
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn check_excluded(first_vertex: usize, targets: &[usize], excluded: &[usize]) -> Result<()> {
    for (j, t) in targets.iter().enumerate() {
        if excluded.contains(t) {
            return Err(invalid(format!(
                "beam ({}, {t}) may not end at {excluded:?}",
                first_vertex + j
            )));
        }
    }
    Ok(())
}

fn insert_all(b: &mut EdgeSet, edges: impl IntoIterator<Item = (usize, usize)>) {
    for (u, v) in edges {
        b.insert(Edge::of(u, v));
    }
}

fn beams_after(m: usize, n: usize, targets: &[usize]) -> Result<()> {
    if targets.len() != n - 3 - m {
        return Err(invalid(format!(
            "expected {} beam targets, got {}",
            n - 3 - m,
            targets.len()
        )));
    }
    Ok(())
}

/// Ear-covers `(j, j+2)` for `j in 0..=m` except the seagull gap at
/// `pivot - 1`, the seagull four, and beams `(m+3+j, targets[j])` avoiding
/// the pivot.
pub fn build_seagull(n: usize, pivot: usize, m: usize, beam_targets: &[usize]) -> Result<EdgeSet> {
    let l = pivot;
    if m < 4 || m + 3 > n {
        return Err(invalid(format!(
            "seagull needs 4 <= m <= n-3, got m={m}, n={n}"
        )));
    }
    if !(2 < l && l < m) {
        return Err(invalid(format!(
            "seagull needs 2 < pivot < m, got pivot={l}, m={m}"
        )));
    }
    beams_after(m, n, beam_targets)?;
    check_beams(m + 3, beam_targets, 1, m + 1)?;
    check_excluded(m + 3, beam_targets, &[l])?;
    let mut b = EdgeSet::empty_unchecked(n);
    insert_all(
        &mut b,
        [(l - 2, l), (l - 2, l + 1), (l - 1, l + 2), (l, l + 2)],
    );
    insert_all(&mut b, (0..=l - 3).chain(l + 1..=m).map(|j| (j, j + 2)));
    insert_all(
        &mut b,
        beam_targets
            .iter()
            .enumerate()
            .map(|(j, &t)| (m + 3 + j, t)),
    );
    Ok(b)
}

/// Net with the two ear-covers at `pivot - 1` and `pivot` replaced by the
/// butterfly, and beams avoiding `pivot` and `pivot + 1`.
pub fn build_butterfly(
    n: usize,
    pivot: usize,
    m: usize,
    beam_targets: &[usize],
) -> Result<EdgeSet> {
    let l = pivot;
    if m < 5 || m + 3 > n {
        return Err(invalid(format!(
            "butterfly needs 5 <= m <= n-3, got m={m}, n={n}"
        )));
    }
    if !(2 < l && l + 1 < m) {
        return Err(invalid(format!(
            "butterfly needs 2 < pivot < m-1, got pivot={l}, m={m}"
        )));
    }
    beams_after(m, n, beam_targets)?;
    check_beams(m + 3, beam_targets, 1, m + 1)?;
    check_excluded(m + 3, beam_targets, &[l, l + 1])?;
    let mut b = EdgeSet::empty_unchecked(n);
    insert_all(
        &mut b,
        [
            (l - 2, l),
            (l - 2, l + 1),
            (l - 1, l + 2),
            (l, l + 3),
            (l + 1, l + 3),
        ],
    );
    insert_all(&mut b, (0..=l - 3).chain(l + 2..=m).map(|j| (j, j + 2)));
    insert_all(
        &mut b,
        beam_targets
            .iter()
            .enumerate()
            .map(|(j, &t)| (m + 3 + j, t)),
    );
    Ok(b)
}

/// Full net `(j, j+2)` for `j in 0..=m`, the vase on base `(pivot-1,
/// pivot+1)` with rim `(anchor, anchor+width)`, beams from inside the vase
/// to the pivot, and outer beams: `beams_left` from `m+3..anchor` into
/// `pivot..=m+1`, `beams_right` from `anchor+width+1..n` into `1..=pivot`.
pub fn build_bouquet(
    n: usize,
    pivot: usize,
    m: usize,
    anchor: usize,
    width: usize,
    beams_left: &[usize],
    beams_right: &[usize],
) -> Result<EdgeSet> {
    let (l, k, t) = (pivot, anchor, width);
    if !(0 < l && l < m + 2) {
        return Err(invalid(format!(
            "bouquet needs 0 < pivot < m+2, got pivot={l}, m={m}"
        )));
    }
    if k <= m + 2 {
        return Err(invalid(format!(
            "bouquet needs anchor > m+2, got anchor={k}, m={m}"
        )));
    }
    if t < 2 || k + t > n - 1 {
        return Err(invalid(format!(
            "bouquet needs width >= 2 and anchor+width <= n-1, got anchor={k}, width={t}, n={n}"
        )));
    }
    if beams_left.len() != k - m - 3 {
        return Err(invalid(format!(
            "expected {} beams before the anchor, got {}",
            k - m - 3,
            beams_left.len()
        )));
    }
    if beams_right.len() != n - 1 - k - t {
        return Err(invalid(format!(
            "expected {} beams after the rim, got {}",
            n - 1 - k - t,
            beams_right.len()
        )));
    }
    check_beams(m + 3, beams_left, l, m + 1)?;
    check_beams(k + t + 1, beams_right, 1, l)?;
    let mut b = EdgeSet::empty_unchecked(n);
    insert_all(&mut b, (0..=m).map(|j| (j, j + 2)));
    insert_all(
        &mut b,
        [(l - 1, l + 1), (k, l - 1), (k + t, l + 1), (k, k + t)],
    );
    insert_all(&mut b, (k + 1..k + t).map(|v| (v, l)));
    insert_all(
        &mut b,
        beams_left.iter().enumerate().map(|(j, &x)| (m + 3 + j, x)),
    );
    insert_all(
        &mut b,
        beams_right
            .iter()
            .enumerate()
            .map(|(j, &x)| (k + t + 1 + j, x)),
    );
    Ok(b)
}

/// Indices `j` in `0..=m` with `(j, j+2)` missing from `c`.
fn missing_net(c: &EdgeSet, m: usize) -> Vec<usize> {
    (0..=m).filter(|&j| !c.has(j, j + 2)).collect()
}

fn match_seagull(c: &EdgeSet, rotation: usize, m: usize) -> Option<Nm1Classification> {
    let n = c.n();
    let missing = missing_net(c, m);
    let &[gap] = missing.as_slice() else {
        return None;
    };
    let pivot = gap + 1;
    let targets = leaf_targets(c, m + 3, n)?;
    (build_seagull(n, pivot, m, &targets).ok()? == *c).then(|| Nm1Classification {
        variant: Nm1Variant::Seagull,
        rotation,
        pivot,
        net_length: m,
        anchor: None,
        width: None,
        beam_targets: targets,
        beam_targets_right: Vec::new(),
    })
}

fn match_butterfly(c: &EdgeSet, rotation: usize, m: usize) -> Option<Nm1Classification> {
    let n = c.n();
    let missing = missing_net(c, m);
    let &[first, _] = missing.as_slice() else {
        return None;
    };
    let pivot = first + 1;
    let targets = leaf_targets(c, m + 3, n)?;
    (build_butterfly(n, pivot, m, &targets).ok()? == *c).then(|| Nm1Classification {
        variant: Nm1Variant::Butterfly,
        rotation,
        pivot,
        net_length: m,
        anchor: None,
        width: None,
        beam_targets: targets,
        beam_targets_right: Vec::new(),
    })
}

fn match_bouquet(c: &EdgeSet, rotation: usize, m: usize) -> Option<Nm1Classification> {
    let n = c.n();
    if !missing_net(c, m).is_empty() {
        return None;
    }
    let mut rims = c.iter().filter(|e| e.a() > m + 2);
    let (rim, None) = (rims.next()?, rims.next()) else {
        return None;
    };
    let (k, t) = (rim.a(), rim.b() - rim.a());
    let left_base = c
        .neighbours(k)
        .into_iter()
        .filter(|&v| v != k + t)
        .collect::<Vec<_>>();
    let [base] = left_base.as_slice() else {
        return None;
    };
    let pivot = base + 1;
    let left = leaf_targets(c, m + 3, k)?;
    let right = leaf_targets(c, k + t + 1, n)?;
    (build_bouquet(n, pivot, m, k, t, &left, &right).ok()? == *c).then_some(Nm1Classification {
        variant: Nm1Variant::Bouquet,
        rotation,
        pivot,
        net_length: m,
        anchor: Some(k),
        width: Some(t),
        beam_targets: left,
        beam_targets_right: right,
    })
}

/// A butterfly whose outer end `pivot - 2` or `pivot + 3` lacks its
/// ear-cover counts as a bouquet.
fn butterfly_end_uncovered(c: &EdgeSet, pivot: usize) -> bool {
    let n = c.n();
    !c.is_covered(pivot - 2) || !c.is_covered((pivot + 3) % n)
}

/// Every parameterization of `b` across rotations.
fn all_matches(b: &EdgeSet) -> Vec<Nm1Classification> {
    let n = b.n();
    let mut out = Vec::new();
    for rotation in 0..n {
        let c = template(b, rotation);
        if !c.has(0, 2) {
            continue;
        }
        for m in 0..=n - 3 {
            out.extend(match_seagull(&c, rotation, m));
            out.extend(match_butterfly(&c, rotation, m));
            out.extend(match_bouquet(&c, rotation, m));
        }
    }
    out
}

/// Which of the three shapes `b` has. Among its parameterizations the one
/// with the smallest rotation wins, then the longest net.
///
/// Fails if no shape matches or if two different shapes do.
pub fn classify_nm1(b: &EdgeSet) -> Result<Nm1Classification> {
    let n = b.n();
    if n < 6 {
        return Err(Error::Classification(format!(
            "no saturated blocker of size n-1 exists for n={n}"
        )));
    }
    if b.len() != n - 1 {
        return Err(Error::Classification(format!(
            "size {} is not n-1 = {}",
            b.len(),
            n - 1
        )));
    }
    let mut matches = all_matches(b);
    let relabeled = matches.iter().any(|c| {
        c.variant == Nm1Variant::Butterfly
            && butterfly_end_uncovered(&template(b, c.rotation), c.pivot)
    });
    if relabeled {
        matches.retain(|c| c.variant != Nm1Variant::Butterfly);
    }
    matches.sort_by(|x, y| {
        (
            x.rotation,
            Reverse(x.net_length),
            x.pivot,
            x.anchor,
            x.width,
        )
            .cmp(&(
                y.rotation,
                Reverse(y.net_length),
                y.pivot,
                y.anchor,
                y.width,
            ))
            .then_with(|| x.cmp(y))
    });
    let Some(first) = matches.first() else {
        return Err(Error::Classification(format!(
            "{b} matches none of the three shapes"
        )));
    };
    if let Some(other) = matches.iter().find(|c| c.variant != first.variant) {
        return Err(Error::Classification(format!(
            "{b} matches both a {} and a {}",
            first.variant, other.variant
        )));
    }
    Ok(first.clone())
}

/// Every valid parameterization of the three shapes on the `n`-gon, before
/// rotation.
pub fn enumerate_nm1_parameterizations(n: usize) -> Vec<Nm1Classification> {
    let mut out = Vec::new();
    let plain = |variant, pivot, m, beams: Vec<usize>| Nm1Classification {
        variant,
        rotation: 0,
        pivot,
        net_length: m,
        anchor: None,
        width: None,
        beam_targets: beams,
        beam_targets_right: Vec::new(),
    };
    for m in 4..=n.saturating_sub(3) {
        for l in 3..m {
            for beams in beam_sequences(n - 3 - m, 1, m + 1) {
                if !beams.contains(&l) {
                    out.push(plain(Nm1Variant::Seagull, l, m, beams.clone()));
                }
                if m >= 5 && l + 1 < m && !beams.contains(&l) && !beams.contains(&(l + 1)) {
                    out.push(plain(Nm1Variant::Butterfly, l, m, beams));
                }
            }
        }
    }
    for m in 0..n.saturating_sub(5) {
        for l in 1..m + 2 {
            for k in m + 3..n {
                for t in 2..n.saturating_sub(k) {
                    for left in beam_sequences(k - m - 3, l, m + 1) {
                        for right in beam_sequences(n - 1 - k - t, 1, l) {
                            out.push(Nm1Classification {
                                variant: Nm1Variant::Bouquet,
                                rotation: 0,
                                pivot: l,
                                net_length: m,
                                anchor: Some(k),
                                width: Some(t),
                                beam_targets: left.clone(),
                                beam_targets_right: right,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}
