//! Covering and inscribing constructions for non-separable families of
//! homothets of a convex body.
//!
//! A *family* is a convex body `K` together with positive homothets
//! `o_i + tau_i * K`. The family is *non-separable* when no hyperplane
//! strictly separates it into two nonempty parts, which for projections
//! onto a direction means the shadow intervals form a contiguous union.
//! This crate constructs covering homothets whose scale factor is
//! controlled by the total scale `sum tau_i` (with a constant depending on
//! the symmetry of `K`), inscribes homothets into unions of bounded
//! stabbing depth, computes the Minkowski asymmetry of polytopes, checks
//! separability and depth conditions in several modes, and generates the
//! extremal families showing the constants are sharp.
//!
//! One-dimensional projections are handled exactly over big rationals
//! (module [`intervals`]); everything else is floating point with explicit
//! tolerances.

pub mod asymmetry;
pub mod covering;
mod error;
pub mod generators;
pub mod geometry;
pub mod inscribing;
pub mod intervals;
mod linalg;
mod lp;
pub(crate) mod sampling;
pub mod separability;

pub use error::{Error, Result};
pub use geometry::{ConvexBody, Family, Homothet, Interval, Vector, DEFAULT_TOLERANCE};
pub use intervals::{DepthProfile, Rat, WeightedInterval};
