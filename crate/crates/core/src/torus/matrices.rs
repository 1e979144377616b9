//! Explicit `SL(2,ℝ)` realization of a trace triple, used as an independent
//! check on the trace recursion.

use super::point::TracePoint;
use super::slope::CurveSlope;
use crate::error::{Error, Result};

/// A real 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[f64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1.0, 0.0], [0.0, 1.0]]);

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = o.0;
        Mat2([
            [a * e + b * g, a * f + b * h],
            [c * e + d * g, c * f + d * h],
        ])
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> f64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Inverse of a unimodular matrix.
    pub fn adjugate(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        Mat2([[d, -b], [-c, a]])
    }
}

/// Matrices `A`, `B` with `tr A = x`, `tr B = y`, `tr AB = z`.
pub fn realize_matrices(pt: &TracePoint) -> Result<(Mat2, Mat2)> {
    let [x, y, z] = pt.traces();
    if !(z > 2.0) || !z.is_finite() || !x.is_finite() || !y.is_finite() {
        return Err(Error::degenerate(format!(
            "cannot realize traces ({x}, {y}, {z})"
        )));
    }
    let zeta = 0.5 * (z + (z * z - 4.0).sqrt());
    let a = Mat2([[x, -1.0], [1.0, 0.0]]);
    let b = Mat2([[0.0, zeta], [-1.0 / zeta, y]]);
    Ok((a, b))
}

pub fn commutator_trace(a: &Mat2, b: &Mat2) -> f64 {
    a.mul(b).mul(&a.adjugate()).mul(&b.adjugate()).trace()
}

/// The word for `c` in `A` and `B`: `A` for 0/1, `B` for 1/0, and
/// `W(left)·W(right)` for a mediant. Negative slopes use `B⁻¹` in place of `B`.
pub fn curve_word(a: &Mat2, b: &Mat2, c: CurveSlope) -> Mat2 {
    let (p, q) = c.as_vector();
    if p == 0 {
        return *a;
    }
    if q == 0 {
        return *b;
    }
    let b = if p < 0 { b.adjugate() } else { *b };
    let (p, q) = (p.abs(), q);
    let (mut l, mut r) = ((0i64, 1i64), (1i64, 0i64));
    let (mut wl, mut wr) = (*a, b);
    loop {
        let m = (l.0 + r.0, l.1 + r.1);
        let wm = wl.mul(&wr);
        if m == (p, q) {
            return wm;
        }
        if p * m.1 > q * m.0 {
            l = m;
            wl = wm;
        } else {
            r = m;
            wr = wm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_realization() {
        let (a, b) = realize_matrices(&TracePoint::modular()).unwrap();
        assert!((a.trace() - 3.0).abs() < 1e-14);
        assert!((b.trace() - 3.0).abs() < 1e-14);
        assert!((a.mul(&b).trace() - 3.0).abs() < 1e-14);
        assert!((b.det() - 1.0).abs() < 1e-14);
        assert!((commutator_trace(&a, &b) + 2.0).abs() < 1e-12);
        let w = curve_word(&a, &b, CurveSlope::new(1, 2).unwrap());
        assert!((w.trace() - 6.0).abs() < 1e-12);
        let w = curve_word(&a, &b, CurveSlope::new(-1, 1).unwrap());
        assert!((w.trace() - 6.0).abs() < 1e-12);
    }
}
