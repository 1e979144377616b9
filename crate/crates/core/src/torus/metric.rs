//! Thurston's Lipschitz distance and the horofunctions of measured
//! laminations, as suprema over simple closed curves.

use serde::Serialize;

use super::grid::{check_depth, grid, length_table, SlopeGrid};
use super::point::TracePoint;
use super::search::{sup_search, Best, Objective};
use super::slope::{CurveSlope, MeasuredLam};
use super::trace::{curve_log_trace, length_from_log_trace};
use crate::error::Result;

/// A supremum over curves to a given depth, reported in log form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SupEstimate {
    /// Log of the supremum. A lower bound for the supremum over all curves.
    pub value: f64,
    pub witness: CurveSlope,
    /// Change in `value` when the same search runs at half the depth.
    pub error: Option<f64>,
    pub depth: u32,
}

fn length(pt: &TracePoint, c: CurveSlope) -> f64 {
    length_from_log_trace(curve_log_trace(pt, c))
}

struct LengthRatio<'a> {
    num: &'a [f64],
    den: &'a [f64],
    num_pt: &'a TracePoint,
    den_pt: &'a TracePoint,
}

impl Objective for LengthRatio<'_> {
    fn on_grid(&self, i: usize) -> f64 {
        self.num[i] / self.den[i]
    }
    fn at(&self, c: CurveSlope) -> f64 {
        length(self.num_pt, c) / length(self.den_pt, c)
    }
}

/// `i(μ, c) / ℓ(c)` for a projective class `μ = (a : b)`.
struct IntersectionRatio<'a> {
    a: f64,
    b: f64,
    grid: &'a SlopeGrid,
    den: &'a [f64],
    den_pt: &'a TracePoint,
}

impl IntersectionRatio<'_> {
    fn meet(&self, c: CurveSlope) -> f64 {
        (self.a * c.q() as f64 - self.b * c.p() as f64).abs()
    }
}

impl Objective for IntersectionRatio<'_> {
    fn on_grid(&self, i: usize) -> f64 {
        self.meet(self.grid.slope(i)) / self.den[i]
    }
    fn at(&self, c: CurveSlope) -> f64 {
        self.meet(c) / length(self.den_pt, c)
    }
}

fn run_search(grid: &SlopeGrid, obj: &impl Objective) -> (Best, Option<Best>) {
    let depth = grid.depth();
    let full = sup_search(grid, obj, 0..grid.len(), depth);
    let coarse = (!grid.coarse().is_empty()).then(|| {
        sup_search(
            grid,
            obj,
            grid.coarse().iter().map(|&i| i as usize),
            depth / 2,
        )
    });
    (full, coarse)
}

fn estimate(full: Best, coarse: Option<Best>, depth: u32) -> SupEstimate {
    let value = full.value.ln();
    SupEstimate {
        value,
        witness: full.witness,
        error: coarse.map(|c| (value - c.value.ln()).abs()),
        depth,
    }
}

/// `L(x, y) = log sup_c ℓ_y(c) / ℓ_x(c)` over curves to the given depth, with
/// local refinement around the best grid slopes.
pub fn lipschitz_distance(x: &TracePoint, y: &TracePoint, depth: u32) -> Result<SupEstimate> {
    check_depth(depth)?;
    if x.log_traces() == y.log_traces() {
        // every ratio is 1; the tie-break picks 1/0
        return Ok(SupEstimate {
            value: 0.0,
            witness: CurveSlope::VERTICAL,
            error: Some(0.0),
            depth,
        });
    }
    let g = grid(depth);
    let tx = length_table(x, depth);
    let ty = length_table(y, depth);
    let obj = LengthRatio {
        num: &ty,
        den: &tx,
        num_pt: y,
        den_pt: x,
    };
    let (full, coarse) = run_search(&g, &obj);
    Ok(estimate(full, coarse, depth))
}

/// Grid slopes whose ratio `ℓ_y / ℓ_x` is within relative `tol` of the grid
/// maximum, in tie-break order.
pub fn maxset(x: &TracePoint, y: &TracePoint, depth: u32, tol: f64) -> Result<Vec<CurveSlope>> {
    check_depth(depth)?;
    if !(tol >= 0.0) {
        return Err(crate::Error::contract(format!(
            "tolerance {tol} must be >= 0"
        )));
    }
    let g = grid(depth);
    let tx = length_table(x, depth);
    let ty = length_table(y, depth);
    let ratio = |i: usize| ty[i] / tx[i];
    let max = (0..g.len()).map(ratio).fold(f64::NEG_INFINITY, f64::max);
    let floor = max * (1.0 - tol);
    let mut out: Vec<CurveSlope> = (0..g.len())
        .filter(|&i| ratio(i) >= floor)
        .map(|i| g.slope(i))
        .collect();
    out.sort_by(|a, b| a.tie_order(b));
    Ok(out)
}

/// `log sup_c i(μ, c) / ℓ_x(c)`, computed for the unit-weight representative
/// of the projective class of `μ`.
pub fn lamination_sup(mu: &MeasuredLam, x: &TracePoint, depth: u32) -> Result<SupEstimate> {
    check_depth(depth)?;
    let g = grid(depth);
    let tx = length_table(x, depth);
    let s = mu.slope();
    let obj = IntersectionRatio {
        a: s.a(),
        b: s.b(),
        grid: &g,
        den: &tx,
        den_pt: x,
    };
    let (full, coarse) = run_search(&g, &obj);
    Ok(estimate(full, coarse, depth))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HoroValue {
    pub value: f64,
    /// Argmax of `i(μ, c) / ℓ_x(c)`.
    pub witness: CurveSlope,
    pub base_witness: CurveSlope,
    pub error: Option<f64>,
    pub depth: u32,
}

/// `Ψ_μ(x) = log sup_c i(μ,c)/ℓ_x(c) − log sup_c i(μ,c)/ℓ_b(c)`. Depends only
/// on the projective class of `μ`.
pub fn horofunction(
    mu: &MeasuredLam,
    x: &TracePoint,
    base: &TracePoint,
    depth: u32,
) -> Result<HoroValue> {
    let at_x = lamination_sup(mu, x, depth)?;
    let at_b = lamination_sup(mu, base, depth)?;
    let error = match (at_x.error, at_b.error) {
        (Some(e), Some(f)) => Some(e + f),
        _ => None,
    };
    Ok(HoroValue {
        value: at_x.value - at_b.value,
        witness: at_x.witness,
        base_witness: at_b.witness,
        error,
        depth,
    })
}

/// A metric bundle: base point and depth.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusMetric {
    pub base: TracePoint,
    pub depth: u32,
}

impl TorusMetric {
    pub fn new(base: TracePoint, depth: u32) -> Result<Self> {
        check_depth(depth)?;
        Ok(Self { base, depth })
    }

    pub fn distance(&self, x: &TracePoint, y: &TracePoint) -> Result<SupEstimate> {
        lipschitz_distance(x, y, self.depth)
    }

    pub fn horofunction(&self, mu: &MeasuredLam, x: &TracePoint) -> Result<HoroValue> {
        horofunction(mu, x, &self.base, self.depth)
    }

    pub fn maxset(&self, x: &TracePoint, y: &TracePoint, tol: f64) -> Result<Vec<CurveSlope>> {
        maxset(x, y, self.depth, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::point::{teich_from_xy, Branch};

    #[test]
    fn zero_on_diagonal() {
        let x = teich_from_xy(3.5, 4.5, Branch::Plus).unwrap();
        let d = lipschitz_distance(&x, &x, 50).unwrap();
        assert_eq!(d.value, 0.0);
        assert_eq!(d.error, Some(0.0));
        assert_eq!(d.witness, CurveSlope::VERTICAL);
        assert_eq!(maxset(&x, &x, 10, 1e-8).unwrap().len(), grid(10).len());
    }

    #[test]
    fn diagonal_shortcut_agrees_with_scan() {
        let x = teich_from_xy(3.5, 4.5, Branch::Plus).unwrap();
        let depth = 300;
        let g = grid(depth);
        let t = length_table(&x, depth);
        let obj = LengthRatio {
            num: &t,
            den: &t,
            num_pt: &x,
            den_pt: &x,
        };
        let (full, coarse) = run_search(&g, &obj);
        assert_eq!(
            estimate(full, coarse, depth),
            lipschitz_distance(&x, &x, depth).unwrap()
        );
    }

    #[test]
    fn positive_off_diagonal() {
        let x = TracePoint::modular();
        let y = teich_from_xy(4.0, 4.0, Branch::Minus).unwrap();
        let a = lipschitz_distance(&x, &y, 100).unwrap();
        let b = lipschitz_distance(&y, &x, 100).unwrap();
        assert!(a.value > 0.0 && b.value > 0.0);
        assert!(a.error.unwrap() < 1e-6);
    }

    #[test]
    fn horofunction_vanishes_at_base_and_ignores_weight() {
        let b = TracePoint::modular();
        let x = teich_from_xy(4.0, 4.0, Branch::Minus).unwrap();
        let mu = MeasuredLam::new(1.0, 0.0, 1.0).unwrap();
        assert_eq!(horofunction(&mu, &b, &b, 60).unwrap().value, 0.0);
        let h = horofunction(&mu, &x, &b, 60).unwrap().value;
        let h7 = horofunction(&mu.scaled(7.3).unwrap(), &x, &b, 60)
            .unwrap()
            .value;
        assert_eq!(h.to_bits(), h7.to_bits());
    }
}
