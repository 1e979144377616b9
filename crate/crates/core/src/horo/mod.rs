//! Horofunction boundary machinery for possibly asymmetric metric spaces.
//!
//! Everything here works against an [`AsymmetricSpace`], a distance oracle
//! with a base point. Functions on the space are represented by finite
//! tables over a probe set ([`SampledFunction`]).

mod digraph;
mod ops;
mod sampled;

pub use digraph::{digraph_brute_oracle, BruteOracle, DigraphSpace};
pub use ops::{
    almost_geodesic_defect, detour_cost_along, detour_metric, horolimit_estimate, psi, rebase,
    DefectOptions, DetourEstimate, DetourOptions, HorolimitEstimate, HorolimitOptions, DEFAULT_CAP,
    DEFAULT_ESCAPE_THRESHOLD,
};
pub use sampled::{Provenance, SampledFunction};

use crate::error::Result;
use std::fmt::Debug;

/// A space with a distance that satisfies every metric axiom except symmetry.
pub trait AsymmetricSpace {
    type Point: Clone + PartialEq + Debug;

    /// The (possibly asymmetric) distance `d(x, y)`.
    fn distance(&self, x: &Self::Point, y: &Self::Point) -> Result<f64>;

    fn base(&self) -> &Self::Point;

    fn same_point(&self, x: &Self::Point, y: &Self::Point) -> bool {
        x == y
    }

    /// `d(x, y) + d(y, x)`; induces the topology of the space.
    fn sym_distance(&self, x: &Self::Point, y: &Self::Point) -> Result<f64> {
        Ok(self.distance(x, y)? + self.distance(y, x)?)
    }

    /// Slack allowed in the triangle inequality by the distance oracle.
    fn tolerance(&self) -> f64 {
        0.0
    }
}
