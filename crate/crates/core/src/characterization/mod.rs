//! Recognizers and builders for the characterized families of saturated
//! blockers, the stability check for size `n-1`, and vertex extension.

mod extension;
mod min_blocker;
mod nm1;
pub mod observations;
mod stability;
mod verdict;

pub use extension::extend_by_vertex;
pub use min_blocker::{recognize_min_blocker, MinBlockerShape};
pub use nm1::{
    build_bouquet, build_butterfly, build_seagull, classify_nm1, enumerate_nm1_parameterizations,
    Nm1Classification, Nm1Variant,
};
pub use stability::stability_distance;
pub use verdict::{verdict, Recognized, Verdict};

use crate::geometry::EdgeSet;

/// The set before rotating by `rotation`, so that
/// `template(b, r).rotate(r) == b`.
fn template(b: &EdgeSet, rotation: usize) -> EdgeSet {
    let n = b.n();
    b.rotate((n - rotation % n) % n)
}
