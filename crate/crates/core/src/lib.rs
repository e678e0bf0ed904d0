//! Exact rational geometry for visibility and collinearity in finite planar
//! point sets.
//!
//! The crate has three layers:
//!
//! - [`geometry`], [`rational`], [`incidence`]: exact points, canonical
//!   lines, orientation, the open-segment blocking predicate, and the map
//!   from spanned lines to the points on them.
//! - [`visibility`]: visibility graphs, the largest collinear subset and the
//!   largest pairwise-visible subset, and [`visibility::check_blbc_instance`]
//!   for asking whether a set has `l` collinear or `k` mutually visible
//!   points.
//! - [`construction`] and [`verifier`]: a deterministic sequence with no four
//!   collinear points in which every visible pair is eventually blocked by a
//!   later point, plus independent checkers for its finite-prefix
//!   properties.
//!
//! [`format`], [`svg`] and [`cli`] provide the JSON point and trace files,
//! SVG rendering, and the command layer behind the `blbc` binary.
//!
//! ```
//! use blbc::construction::{generate, SeedTriple};
//! use blbc::verifier::verify_no_k_collinear;
//!
//! let state = generate(&SeedTriple::default(), 20).unwrap();
//! assert!(verify_no_k_collinear(state.points(), 4).unwrap().passed);
//! ```

// Errors carry the offending points and parameters by value for diagnostics.
#![allow(clippy::result_large_err)]

mod bitset;
pub mod cli;
pub mod clique;
pub mod construction;
pub mod farey;
pub mod format;
pub mod geometry;
pub mod incidence;
pub mod pointset;
pub mod rational;
pub mod svg;
pub mod verifier;
pub mod visibility;

pub use construction::{generate, ConstructionState, InsertionRecord, OrdinaryPair, SeedTriple};
pub use geometry::{CanonicalLine, Orientation, Point};
pub use pointset::PointSet;
pub use rational::Rational;
pub use visibility::{BlbcOutcome, BlbcVerdict, VisibilityGraph};
