//! One-call summary of a diagonal set: blocker, saturated, and which family.

use crate::dp::{is_blocker, is_saturated_blocker};
use crate::geometry::EdgeSet;

use super::min_blocker::{recognize_min_blocker, MinBlockerShape};
use super::nm1::{classify_nm1, Nm1Classification};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognized {
    Minimum(MinBlockerShape),
    OneAbove(Nm1Classification),
}

impl Recognized {
    pub fn label(&self) -> &'static str {
        match self {
            Recognized::Minimum(_) => "minimum",
            Recognized::OneAbove(c) => c.variant.label(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub is_blocker: bool,
    pub is_saturated: bool,
    /// Set for saturated blockers of size `n-2` or `n-1` that match a family.
    pub recognized: Option<Recognized>,
}

pub fn verdict(b: &EdgeSet) -> Verdict {
    let n = b.n();
    let blocker = is_blocker(b);
    let saturated = blocker && is_saturated_blocker(b);
    let recognized = match saturated {
        true if n >= 4 && b.len() == n - 2 => recognize_min_blocker(b).map(Recognized::Minimum),
        true if n >= 4 && b.len() == n - 1 => classify_nm1(b).ok().map(Recognized::OneAbove),
        _ => None,
    };
    Verdict {
        is_blocker: blocker,
        is_saturated: saturated,
        recognized,
    }
}
