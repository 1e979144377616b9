//! Traces and lengths of simple closed curves.
//!
//! For Farey neighbours `a`, `b` the traces of `a + b` and `a − b` are the two
//! roots of the Markov cubic with the other two coordinates fixed, so
//! `t(a+b) · t(a−b) = t(a)² + t(b)²`. All recursions use this product form in
//! log space, which involves no cancellation and never overflows.

use super::point::{TracePoint, DEGENERATE_TRACE};
use super::slope::CurveSlope;
use crate::error::{Error, Result};

const LN_EPS_GAP: f64 = 40.0;
const LARGE_LOG_TRACE: f64 = 20.0;
/// Runs longer than this use the closed form of the linear recurrence.
const STEPWISE_RUN: i128 = 16;

/// `ln(e^{2a} + e^{2b})`.
#[inline]
pub(crate) fn log_sum_sq(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    let gap = 2.0 * (lo - hi);
    if gap < -LN_EPS_GAP {
        2.0 * hi
    } else {
        2.0 * hi + gap.exp().ln_1p()
    }
}

/// Log-trace of `a + b` from those of `a`, `b` and `a − b`.
#[inline]
pub(crate) fn vieta(ua: f64, ub: f64, u_diff: f64) -> f64 {
    log_sum_sq(ua, ub) - u_diff
}

pub(crate) fn log_trace_of_value(t: f64) -> f64 {
    t.ln()
}

/// `arccosh(t/2)` for `t = e^u`: half the hyperbolic length.
#[inline]
pub fn half_length_from_log_trace(u: f64) -> f64 {
    if u > LARGE_LOG_TRACE {
        // arccosh(t/2) = ln t + O(t⁻²)
        u
    } else {
        (0.5 * u.exp()).acosh()
    }
}

/// Steps `k` times along `v_j = v_0 + j·g` and returns the log-traces of
/// `v_{k−1}` and `v_k`, given those of `v_{−1}`, `v_0` and the generator `g`.
fn run(u_prev: f64, u_cur: f64, u_gen: f64, k: i128) -> (f64, f64) {
    debug_assert!(k >= 1);
    let h = half_length_from_log_trace(u_gen);
    if k <= STEPWISE_RUN || h < 1e-3 {
        let (mut a, mut b) = (u_prev, u_cur);
        for _ in 0..k {
            let c = vieta(b, u_gen, a);
            a = b;
            b = c;
        }
        return (a, b);
    }
    // t_j = α λ^j + β λ^{−j} with ln λ = h, scaled by t_0
    let beta = ((u_prev - u_cur).exp() - (-h).exp()) / (2.0 * h.sinh());
    let alpha = 1.0 - beta;
    let at = |j: f64| u_cur + j * h + (alpha + beta * (-2.0 * j * h).exp()).ln();
    let kf = k as f64;
    (at(kf - 1.0), at(kf))
}

/// Log-trace of `p/q` in the positive cone, given the log-traces of 0/1, 1/0
/// and 1/1. Descends the Stern–Brocot tree one continued-fraction run at a time.
fn descend(ul0: f64, ur0: f64, um0: f64, p: i128, q: i128) -> f64 {
    debug_assert!(p > 0 && q > 0);
    let (mut l, mut r) = ((0i128, 1i128), (1i128, 0i128));
    let (mut ul, mut ur, mut um) = (ul0, ur0, um0);
    loop {
        let m = (l.0 + r.0, l.1 + r.1);
        if m == (p, q) {
            return um;
        }
        let right = p * m.1 - q * m.0;
        if right > 0 {
            let den = q * r.0 - p * r.1;
            let k = (right + den - 1) / den;
            let (prev, cur) = run(ul, um, ur, k);
            l = (m.0 + (k - 1) * r.0, m.1 + (k - 1) * r.1);
            ul = prev;
            um = cur;
        } else {
            let num = -right;
            let den = p * l.1 - q * l.0;
            let k = (num + den - 1) / den;
            let (prev, cur) = run(ur, um, ul, k);
            r = (m.0 + (k - 1) * l.0, m.1 + (k - 1) * l.1);
            ur = prev;
            um = cur;
        }
    }
}

/// Natural log of the trace of `c` at `pt`.
pub fn curve_log_trace(pt: &TracePoint, c: CurveSlope) -> f64 {
    let [lx, ly, lz] = pt.log_traces();
    match c.as_vector() {
        (0, _) => lx,
        (_, 0) => ly,
        (p, q) if p > 0 => descend(lx, ly, lz, p as i128, q as i128),
        // the reflection (p, q) ↦ (−p, q) swaps z with its Vieta conjugate
        (p, q) => descend(lx, ly, pt.log_conjugate_z(), -(p as i128), q as i128),
    }
}

/// Trace of `c` at `pt`. Overflows to `+∞` for very long curves; use
/// [`curve_log_trace`] there.
pub fn curve_trace(pt: &TracePoint, c: CurveSlope) -> f64 {
    curve_log_trace(pt, c).exp()
}

/// Hyperbolic length `2·arccosh(t/2)` of the geodesic representative of `c`.
pub fn curve_length(pt: &TracePoint, c: CurveSlope) -> Result<f64> {
    let u = curve_log_trace(pt, c);
    if u <= (2.0 + DEGENERATE_TRACE).ln() {
        return Err(Error::degenerate(format!(
            "trace of {c} is within 1e-12 of 2"
        )));
    }
    Ok(2.0 * half_length_from_log_trace(u))
}

/// Length from a log-trace, for hot loops that already validated the point.
#[inline]
pub(crate) fn length_from_log_trace(u: f64) -> f64 {
    2.0 * half_length_from_log_trace(u)
}
