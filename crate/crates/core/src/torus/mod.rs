//! The once-punctured torus: trace coordinates, curves, lengths, the
//! Lipschitz metric and the mapping class group.

mod experiments;
mod grid;
mod matrices;
mod mcg;
mod metric;
mod point;
mod search;
mod slope;
mod space;
mod trace;

pub use experiments::{
    convergence_table, horofunction_table, near_additive_search, probe_points, ConvergenceRow,
    NearAdditive,
};
pub use grid::MAX_DEPTH;
pub use matrices::{commutator_trace, curve_word, realize_matrices, Mat2};
pub use mcg::{
    attracting_lamination, mcg_apply, mcg_apply_direct, orbit, pa_sequence, twist_sequence,
    Generator, Gl2Z,
};
pub use metric::{
    horofunction, lamination_sup, lipschitz_distance, maxset, HoroValue, SupEstimate, TorusMetric,
};
pub use point::{teich_from_xy, Branch, TracePoint, DEGENERATE_TRACE, MARKOV_TOLERANCE};
pub use slope::{intersection, CurveSlope, MeasuredLam, ProjectiveSlope, SLOPE_EQ_TOL};
pub use space::TorusSpace;
pub use trace::{curve_length, curve_log_trace, curve_trace, half_length_from_log_trace};
