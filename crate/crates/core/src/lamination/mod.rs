//! Closed forms for detour costs between horofunctions of measured
//! laminations given as weighted sums of ergodic components.
//!
//! All arithmetic is exact over `BigRational`. Decimal inputs are taken at
//! their exact binary value and flagged as inexact in reports.

mod closed;
mod model;
mod rational;

pub use closed::{
    detour_cost_closed, detour_cost_ratio, detour_metric_closed, detour_metric_ratio,
    lfactor_model, ll_relation, ratio_sup_bound, LlRelation, RatioSupReport,
};
pub use model::{ErgodicBasis, FormalLamination, TestCurveModel};
pub use rational::{ln_ratio, parse_rational, rational_from_f64, rational_to_string};
