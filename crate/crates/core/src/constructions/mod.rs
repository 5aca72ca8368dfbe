//! Constructions of saturated blockers.

mod blocks;
mod coefficients;
mod spectrum;

pub(crate) use blocks::{beam_sequences, check_beams};
pub use blocks::{
    build_matrioshka, build_min_blocker, build_quadrilateral, enumerate_min_blockers,
    enumerate_min_blockers_with, QuadPartition,
};
pub use coefficients::{closed_form_coefficients, recursion_coefficients, RecursionCoefficients};
pub use spectrum::{
    band_coverage, band_range, bridge_shape, build_spectrum_blocker, build_spectrum_blocker_traced,
    dispatch_band, max_reachable, nested_shapes, quadrilateral_band_partition,
    quadrilateral_band_top, realize_bridge_band, realize_nested_band, realize_quadrilateral_band,
    realize_recursive_band, recursive_shell, Band, NestedShape, Span, SpectrumBlocker,
};
