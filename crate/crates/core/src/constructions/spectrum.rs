//! Saturated blockers of every size in the reachable spectrum.
//!
//! Four bands, lowest first: plain quadrilateral blockers, a bridge of fixed
//! nested shape, a family of balanced nested shapes, and the recursive shell
//! with three-vertex sides whose sub-polygons are filled by the dispatcher
//! itself.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::dp::is_saturated_blocker;
use crate::error::{Error, Result};
use crate::geometry::EdgeSet;

use super::blocks::{build_matrioshka, build_quadrilateral, full_net, QuadPartition};

/// Inclusive integer interval.
pub type Span = (usize, usize);

fn floor_div(num: i64, den: i64) -> i64 {
    num.div_euclid(den)
}

fn ceil_div(num: i64, den: i64) -> i64 {
    -(-num).div_euclid(den)
}

fn clamp_span(lo: i64, hi: i64) -> Option<Span> {
    (lo <= hi && hi >= 0).then(|| (lo.max(0) as usize, hi as usize))
}

/// Sorted, merged union of inclusive spans.
fn merge(mut spans: Vec<Span>) -> Vec<Span> {
    spans.sort_unstable();
    let mut out: Vec<Span> = Vec::with_capacity(spans.len());
    for (lo, hi) in spans {
        match out.last_mut() {
            Some(last) if lo <= last.1 + 1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

fn intersect(spans: &[Span], window: Span) -> Vec<Span> {
    spans
        .iter()
        .filter_map(|&(lo, hi)| {
            let lo = lo.max(window.0);
            let hi = hi.min(window.1);
            (lo <= hi).then_some((lo, hi))
        })
        .collect()
}

fn covers(spans: &[Span], t: usize) -> bool {
    spans.iter().any(|&(lo, hi)| lo <= t && t <= hi)
}

/// Which construction produced a spectrum blocker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    Quadrilateral,
    Bridge,
    Nested,
    Recursive,
}

impl Band {
    pub const ALL: [Band; 4] = [
        Band::Quadrilateral,
        Band::Bridge,
        Band::Nested,
        Band::Recursive,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Band::Quadrilateral => "quadrilateral",
            Band::Bridge => "bridge",
            Band::Nested => "nested",
            Band::Recursive => "recursive",
        }
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `floor(n^2/8 + n/4 - 11/8)`, the top of the quadrilateral band.
pub fn quadrilateral_band_top(n: usize) -> usize {
    let n = n as i64;
    floor_div(n * n + 2 * n - 11, 8).max(0) as usize
}

/// Stated target range of a band, before checking exact coverage.
pub fn band_range(band: Band, n: usize) -> Option<Span> {
    let m = n as i64;
    match band {
        Band::Quadrilateral if n >= 5 => clamp_span(m - 2, quadrilateral_band_top(n) as i64),
        Band::Bridge if n >= 21 => clamp_span(
            ceil_div(m * m + 2 * m - 11, 8),
            floor_div(m * m + 4 * m - 16, 8),
        ),
        Band::Nested if n >= 25 => clamp_span(
            ceil_div(m * m + 4 * m - 16, 8),
            floor_div(5 * m * m - 48 * m + 205, 16),
        ),
        Band::Recursive => {
            recursive_shell(n)?;
            clamp_span(ceil_div(m * m - 8 * m + 40, 4), max_reachable(n) as i64)
        }
        _ => None,
    }
}

// ---------------------------------------------------------------- quadrilateral

/// The `k`-th quadrilateral family: top side `k`, right side `k+1`. Sizes run
/// `k(n-2k-1) + left` over `left` in `1..=n-2k-2`.
fn quadrilateral_family(n: usize, k: usize) -> Option<Span> {
    let rest = n.checked_sub(2 * k + 2)?;
    (k >= 1 && rest >= 1).then(|| {
        let base = k * (n - 2 * k - 1);
        (base + 1, base + rest)
    })
}

/// The quadrilateral partition used for size `t`: the smallest family that
/// reaches `t`. Accepts every size some family reaches, which may run past
/// the band's stated top.
pub fn quadrilateral_band_partition(n: usize, t: usize) -> Result<QuadPartition> {
    let families: Vec<(usize, Span)> = (1..n)
        .filter_map(|k| quadrilateral_family(n, k).map(|span| (k, span)))
        .collect();
    let Some(k) = families
        .iter()
        .find(|(_, (lo, hi))| *lo <= t && t <= *hi)
        .map(|&(k, _)| k)
    else {
        let hi = families.iter().map(|(_, (_, hi))| *hi).max().unwrap_or(0);
        return Err(Error::SizeOutOfRange {
            n,
            t,
            lo: n.saturating_sub(2),
            hi,
        });
    };
    let left = t - k * (n - 2 * k - 1);
    let bottom = n - 2 * k - 1 - left;
    QuadPartition::from_sides(k + 1, bottom, left, k)
}

pub fn realize_quadrilateral_band(n: usize, t: usize) -> Result<EdgeSet> {
    let p = quadrilateral_band_partition(n, t)?;
    let b = build_quadrilateral(&p);
    if b.len() != t {
        return Err(Error::Construction(format!(
            "quadrilateral for n={n} has {} edges, wanted {t}",
            b.len()
        )));
    }
    Ok(b)
}

fn quadrilateral_coverage(n: usize) -> Vec<Span> {
    let Some(window) = band_range(Band::Quadrilateral, n) else {
        return Vec::new();
    };
    let spans = (1..n).filter_map(|k| quadrilateral_family(n, k)).collect();
    intersect(&merge(spans), window)
}

/// A saturated blocker of the `s`-gon of any size in `s-2..=top`, via the
/// quadrilateral band (`s >= 5`).
fn quadrilateral_sub_range(s: usize) -> Span {
    (s - 2, quadrilateral_band_top(s))
}

// ---------------------------------------------------------------- nested shapes

/// A nested shape with fixed outer partition; sizes vary with its two
/// sub-blockers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NestedShape {
    pub partition: QuadPartition,
    pub top_range: Span,
    pub bottom_range: Span,
}

impl NestedShape {
    /// Edges outside the two sub-blockers.
    pub fn fixed_size(&self) -> usize {
        self.partition.quadrilateral_size() - 2
    }

    pub fn size_range(&self) -> Span {
        let f = self.fixed_size();
        (
            f + self.top_range.0 + self.bottom_range.0,
            f + self.top_range.1 + self.bottom_range.1,
        )
    }

    /// Sub-blocker sizes summing to `t - fixed_size`: both start at their
    /// minimum and grow alternately by one, top first, each capped at its
    /// maximum.
    pub fn split(&self, t: usize) -> Option<(usize, usize)> {
        let (lo, hi) = self.size_range();
        if t < lo || t > hi {
            return None;
        }
        let extra = t - lo;
        let cap_top = self.top_range.1 - self.top_range.0;
        let cap_bottom = self.bottom_range.1 - self.bottom_range.0;
        let mut top = extra.div_ceil(2);
        let mut bottom = extra / 2;
        if top > cap_top {
            bottom += top - cap_top;
            top = cap_top;
        }
        if bottom > cap_bottom {
            top += bottom - cap_bottom;
            bottom = cap_bottom;
        }
        Some((self.top_range.0 + top, self.bottom_range.0 + bottom))
    }
}

/// Balanced nested shapes, indexed by how far top and bottom grow past a
/// quarter of the vertices.
pub fn nested_shapes(n: usize) -> Vec<NestedShape> {
    if n < 25 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for k in 0.. {
        let top = n / 4 + k;
        let left = n.div_ceil(4).saturating_sub(k);
        if left < 3 || top + 2 * left >= n {
            break;
        }
        let bottom = n - top - 2 * left;
        if bottom < 2 {
            break;
        }
        let partition =
            QuadPartition::from_sides(left, bottom, left, top).expect("sides are positive");
        out.push(NestedShape {
            partition,
            top_range: quadrilateral_sub_range(top + 2),
            bottom_range: quadrilateral_sub_range(bottom + 2),
        });
    }
    out
}

fn nested_coverage(n: usize) -> Vec<Span> {
    let Some(window) = band_range(Band::Nested, n) else {
        return Vec::new();
    };
    let spans = nested_shapes(n)
        .iter()
        .map(NestedShape::size_range)
        .collect();
    intersect(&merge(spans), window)
}

fn realize_nested(
    shape: &NestedShape,
    t: usize,
    fill: impl Fn(usize, usize) -> Result<EdgeSet>,
) -> Result<EdgeSet> {
    let (t_top, t_bottom) = shape
        .split(t)
        .ok_or_else(|| Error::Construction(format!("size {t} outside the shape's range")))?;
    let p = &shape.partition;
    let top = fill(p.top() + 2, t_top)?;
    let bottom = fill(p.bottom() + 2, t_bottom)?;
    let b = build_matrioshka(p, &top, &bottom)?;
    if b.len() != t {
        return Err(Error::Construction(format!(
            "nested blocker for n={} has {} edges, wanted {t}",
            p.n(),
            b.len()
        )));
    }
    Ok(b)
}

fn unavailable(band: Band, n: usize) -> Error {
    Error::InvalidParameter(format!("the {band} band is not available for n={n}"))
}

fn out_of_shapes(n: usize, t: usize, shapes: &[NestedShape]) -> Error {
    let lo = shapes.iter().map(|s| s.size_range().0).min().unwrap_or(0);
    let hi = shapes.iter().map(|s| s.size_range().1).max().unwrap_or(0);
    Error::SizeOutOfRange { n, t, lo, hi }
}

/// Uses the first balanced shape whose sizes include `t`; accepts any size one
/// of the shapes reaches.
pub fn realize_nested_band(n: usize, t: usize) -> Result<EdgeSet> {
    let shapes = nested_shapes(n);
    if shapes.is_empty() {
        return Err(unavailable(Band::Nested, n));
    }
    let shape = shapes
        .iter()
        .find(|s| s.split(t).is_some())
        .ok_or_else(|| out_of_shapes(n, t, &shapes))?;
    realize_nested(shape, t, realize_quadrilateral_band)
}

// ---------------------------------------------------------------- bridge

/// Left side of three, right side about a quarter, bottom two less, top the
/// rest. The bottom keeps its full net; only the top varies.
pub fn bridge_shape(n: usize) -> Option<NestedShape> {
    if n < 21 {
        return None;
    }
    let right = n / 4;
    let bottom = n / 4 - 2;
    let left = 3;
    let top = n - right - bottom - left;
    let partition = QuadPartition::from_sides(right, bottom, left, top).ok()?;
    Some(NestedShape {
        partition,
        top_range: quadrilateral_sub_range(top + 2),
        bottom_range: (bottom, bottom),
    })
}

fn bridge_coverage(n: usize) -> Vec<Span> {
    match (band_range(Band::Bridge, n), bridge_shape(n)) {
        (Some(window), Some(shape)) => intersect(&[shape.size_range()], window),
        _ => Vec::new(),
    }
}

/// Accepts every size the bridge shape reaches, which starts below the
/// band's stated bottom.
pub fn realize_bridge_band(n: usize, t: usize) -> Result<EdgeSet> {
    let shape = bridge_shape(n).ok_or_else(|| unavailable(Band::Bridge, n))?;
    if shape.split(t).is_none() {
        return Err(out_of_shapes(n, t, &[shape]));
    }
    realize_nested(&shape, t, |s, size| {
        if size == s - 2 && s == shape.partition.bottom() + 2 {
            Ok(full_net(s))
        } else {
            realize_quadrilateral_band(s, size)
        }
    })
}

// ---------------------------------------------------------------- recursive

/// Outer partition of the recursive shell: left and right of three, top and
/// bottom splitting the rest as evenly as possible.
pub fn recursive_shell(n: usize) -> Option<QuadPartition> {
    if n < 12 {
        return None;
    }
    let top = (n - 6) / 2;
    let bottom = n - 6 - top;
    QuadPartition::from_sides(3, bottom, 3, top).ok()
}

fn recursive_shape(n: usize) -> Option<NestedShape> {
    let partition = recursive_shell(n)?;
    let top_n = partition.top() + 2;
    let bottom_n = partition.bottom() + 2;
    Some(NestedShape {
        partition,
        top_range: (top_n - 2, max_reachable(top_n)),
        bottom_range: (bottom_n - 2, max_reachable(bottom_n)),
    })
}

/// Contiguous reach of the three lower bands from `n - 2`.
fn lower_reach(n: usize) -> usize {
    let spans = merge(
        [
            quadrilateral_coverage(n),
            bridge_coverage(n),
            nested_coverage(n),
        ]
        .concat(),
    );
    contiguous_end(&spans, n - 2).unwrap_or(n - 2)
}

fn contiguous_end(spans: &[Span], start: usize) -> Option<usize> {
    spans
        .iter()
        .find(|&&(lo, hi)| lo <= start && start <= hi)
        .map(|&(_, hi)| hi)
}

/// The recursive band is switched on only where it joins the lower bands
/// without a gap.
fn recursive_enabled_span(n: usize) -> Option<Span> {
    let shape = recursive_shape(n)?;
    let m = n as i64;
    let stated_lo = ceil_div(m * m - 8 * m + 40, 4).max(0) as usize;
    let (lo, hi) = shape.size_range();
    let lo = lo.max(stated_lo);
    (lo <= hi && lo <= lower_reach(n) + 1).then_some((lo, hi))
}

fn recursive_coverage(n: usize) -> Vec<Span> {
    recursive_enabled_span(n).into_iter().collect()
}

pub fn realize_recursive_band(n: usize, t: usize) -> Result<EdgeSet> {
    let Some((lo, hi)) = recursive_enabled_span(n) else {
        return Err(unavailable(Band::Recursive, n));
    };
    if t < lo || t > hi {
        return Err(Error::SizeOutOfRange { n, t, lo, hi });
    }
    let shape = recursive_shape(n).expect("enabled span implies shape");
    realize_nested(&shape, t, build_spectrum_blocker)
}

// ---------------------------------------------------------------- dispatcher

/// Sizes a band actually realizes for this `n`, within its stated range.
pub fn band_coverage(band: Band, n: usize) -> Vec<Span> {
    match band {
        Band::Quadrilateral => quadrilateral_coverage(n),
        Band::Bridge => bridge_coverage(n),
        Band::Nested => nested_coverage(n),
        Band::Recursive => recursive_coverage(n),
    }
}

fn memo() -> &'static RwLock<HashMap<usize, usize>> {
    static MEMO: OnceLock<RwLock<HashMap<usize, usize>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Largest `t` such that every size in `n-2..=t` is realized.
///
/// # Panics
///
/// If `n < 5`.
pub fn max_reachable(n: usize) -> usize {
    assert!(n >= 5, "the spectrum dispatcher starts at the pentagon");
    if let Some(&v) = memo().read().expect("memo lock").get(&n) {
        return v;
    }
    let lower = lower_reach(n);
    let value = match recursive_enabled_span(n) {
        Some((_, hi)) => lower.max(hi),
        None => lower,
    };
    memo().write().expect("memo lock").insert(n, value);
    value
}

/// A spectrum blocker together with the band that built it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumBlocker {
    pub blocker: EdgeSet,
    pub band: Band,
}

/// The band the dispatcher uses for `(n, t)`: the lowest one covering `t`.
pub fn dispatch_band(n: usize, t: usize) -> Result<Band> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "spectrum constructions need n >= 5, got {n}"
        )));
    }
    let hi = max_reachable(n);
    if t + 2 < n || t > hi {
        return Err(Error::SizeOutOfRange {
            n,
            t,
            lo: n - 2,
            hi,
        });
    }
    Band::ALL
        .into_iter()
        .find(|&band| covers(&band_coverage(band, n), t))
        .ok_or_else(|| Error::Construction(format!("no band covers t={t} for n={n}")))
}

pub fn build_spectrum_blocker_traced(n: usize, t: usize) -> Result<SpectrumBlocker> {
    let band = dispatch_band(n, t)?;
    let blocker = match band {
        Band::Quadrilateral => realize_quadrilateral_band(n, t),
        Band::Bridge => realize_bridge_band(n, t),
        Band::Nested => realize_nested_band(n, t),
        Band::Recursive => realize_recursive_band(n, t),
    }?;
    debug_assert!(
        is_saturated_blocker(&blocker),
        "spectrum blocker ({n}, {t}) unsaturated"
    );
    Ok(SpectrumBlocker { blocker, band })
}

/// A saturated blocker of the `n`-gon with exactly `t` edges, for any `t` in
/// `n-2..=max_reachable(n)`.
pub fn build_spectrum_blocker(n: usize, t: usize) -> Result<EdgeSet> {
    build_spectrum_blocker_traced(n, t).map(|s| s.blocker)
}
