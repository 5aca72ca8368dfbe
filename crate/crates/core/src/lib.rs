//! Saturated blockers for triangulations of convex polygons.
//!
//! A *blocker* is a set of diagonals of a convex `n`-gon that meets every
//! triangulation; it is *saturated* when no member can be dropped. This crate
//! decides both properties with an `O(n^3)` interval DP, enumerates small
//! cases exhaustively, constructs saturated blockers of every size the
//! spectrum constructions reach, and recognizes the minimum-sized and
//! `(n-1)`-sized families.

pub mod capacity;
pub mod characterization;
pub mod constructions;
pub mod document;
pub mod dp;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod render;

pub use dp::{contains_triangulation, is_blocker, is_saturated_blocker, witness_triangulation};
pub use error::{Error, Result};
pub use geometry::{crosses, is_triangulation, Edge, EdgeSet, Triangulation};
