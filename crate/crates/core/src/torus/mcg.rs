//! The extended mapping class group `GL(2,ℤ)` acting on trace coordinates,
//! slopes and measured laminations.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::TracePoint;
use super::slope::{CurveSlope, MeasuredLam};
use super::trace::{curve_log_trace, log_sum_sq};
use crate::error::{Error, Result};

/// An integer matrix `[[a, b], [c, d]]` with determinant ±1, acting on slope
/// vectors `(p, q)` by matrix multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gl2Z {
    m: [[i64; 2]; 2],
}

impl Gl2Z {
    pub const IDENTITY: Gl2Z = Gl2Z {
        m: [[1, 0], [0, 1]],
    };
    /// The twist `T = [[1, 1], [0, 1]]`.
    pub const T: Gl2Z = Gl2Z {
        m: [[1, 1], [0, 1]],
    };
    /// The coordinate swap `[[0, 1], [1, 0]]`.
    pub const S: Gl2Z = Gl2Z {
        m: [[0, 1], [1, 0]],
    };
    /// The reflection `diag(−1, 1)`.
    pub const R: Gl2Z = Gl2Z {
        m: [[-1, 0], [0, 1]],
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let g = Gl2Z {
            m: [[a, b], [c, d]],
        };
        match a.checked_mul(d).zip(b.checked_mul(c)) {
            Some((ad, bc)) if (ad - bc).abs() == 1 => Ok(g),
            _ => Err(Error::contract(format!("|det {g}| != 1"))),
        }
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> i64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn mul(&self, o: &Gl2Z) -> Gl2Z {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = o.m;
        Gl2Z {
            m: [
                [a * e + b * g, a * f + b * h],
                [c * e + d * g, c * f + d * h],
            ],
        }
    }

    pub fn inverse(&self) -> Gl2Z {
        let [[a, b], [c, d]] = self.m;
        let s = self.det();
        Gl2Z {
            m: [[s * d, -s * b], [-s * c, s * a]],
        }
    }

    pub fn pow(&self, n: i64) -> Gl2Z {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(Gl2Z::IDENTITY, |acc, _| acc.mul(&base))
    }

    pub fn apply_vector(&self, v: (i64, i64)) -> (i64, i64) {
        let [[a, b], [c, d]] = self.m;
        (a * v.0 + b * v.1, c * v.0 + d * v.1)
    }

    pub fn apply_slope(&self, s: CurveSlope) -> CurveSlope {
        let (p, q) = self.apply_vector(s.as_vector());
        CurveSlope::from_vector(p, q).expect("unimodular image of a primitive vector")
    }

    pub fn apply_lamination(&self, mu: &MeasuredLam) -> MeasuredLam {
        let [[a, b], [c, d]] = self.m.map(|r| r.map(|e| e as f64));
        let (x, y) = mu.representative();
        MeasuredLam::new(a * x + b * y, c * x + d * y, mu.weight())
            .expect("invertible image of a nonzero lamination")
    }

    /// The Dehn twist about `c = (a, b)`: `v ↦ v + i(c, v)·c` up to sign.
    pub fn twist_about(c: CurveSlope) -> Gl2Z {
        let (a, b) = c.as_vector();
        Gl2Z {
            m: [[1 + a * b, -a * a], [b * b, 1 - a * b]],
        }
    }

    /// Row reduction: returns `E₁, …, E_k` (powers of `T`, or `S`) and a
    /// diagonal `D` with `E_k ⋯ E₁ · self = D`.
    pub fn decompose(&self) -> (Vec<Generator>, Gl2Z) {
        let mut m = self.m;
        // left factors E with E_k ⋯ E_1 · self = D; returned inverted
        let mut left = Vec::new();
        while m[1][0] != 0 {
            let k = m[0][0].div_euclid(m[1][0]);
            if k != 0 {
                m[0][0] -= k * m[1][0];
                m[0][1] -= k * m[1][1];
                left.push(Generator::Twist(-k));
            }
            m.swap(0, 1);
            left.push(Generator::Swap);
        }
        if m[0][1] != 0 {
            let k = m[0][1] * m[1][1];
            m[0][1] -= k * m[1][1];
            left.push(Generator::Twist(-k));
        }
        (left, Gl2Z { m })
    }
}

impl fmt::Display for Gl2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl Serialize for Gl2Z {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gl2Z {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, d]] = <[[i64; 2]; 2]>::deserialize(d)?;
        Gl2Z::new(a, b, c, d).map_err(serde::de::Error::custom)
    }
}

/// A factor in [`Gl2Z::decompose`]: `T^k` or `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Twist(i64),
    Swap,
}

/// Log-trace moves. `t_{g·pt}(c) = t_pt(g⁻¹·c)`.
fn move_t(l: [f64; 3]) -> [f64; 3] {
    [log_sum_sq(l[0], l[1]) - l[2], l[1], l[0]]
}

fn move_t_inv(l: [f64; 3]) -> [f64; 3] {
    [l[2], l[1], log_sum_sq(l[2], l[1]) - l[0]]
}

fn move_reflect(l: [f64; 3]) -> [f64; 3] {
    [l[0], l[1], log_sum_sq(l[0], l[1]) - l[2]]
}

/// The point `g·pt`, obtained by applying generator moves.
pub fn mcg_apply(g: &Gl2Z, pt: &TracePoint) -> Result<TracePoint> {
    let (left, diag) = g.decompose();
    let mut l = pt.log_traces();
    let [[a, _], [_, d]] = diag.m;
    if a * d < 0 {
        l = move_reflect(l);
    }
    // g = E₁⁻¹ ⋯ E_k⁻¹ · D: innermost factor acts first
    for e in left.iter().rev() {
        match *e {
            Generator::Swap => l = [l[1], l[0], l[2]],
            Generator::Twist(k) => {
                // E = T^k, so E⁻¹ = T^{−k}
                for _ in 0..k.unsigned_abs() {
                    l = if k > 0 { move_t_inv(l) } else { move_t(l) };
                }
            }
        }
    }
    TracePoint::from_log(l[0], l[1], l[2])
}

/// `g·pt` read off directly from the traces of `g⁻¹` applied to the three
/// chart curves. Independent of [`mcg_apply`]; used for cross-checks.
pub fn mcg_apply_direct(g: &Gl2Z, pt: &TracePoint) -> Result<TracePoint> {
    let h = g.inverse();
    let l = [
        CurveSlope::HORIZONTAL,
        CurveSlope::VERTICAL,
        CurveSlope::DIAGONAL,
    ]
    .map(|c| curve_log_trace(pt, h.apply_slope(c)));
    TracePoint::from_log(l[0], l[1], l[2])
}

/// `xₙ = gⁿ · base` for `n = 0..=n_max`.
pub fn orbit(g: &Gl2Z, n_max: usize, base: &TracePoint) -> Result<Vec<TracePoint>> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(*base);
    for n in 0..n_max {
        out.push(mcg_apply(g, &out[n])?);
    }
    Ok(out)
}

/// Iterates the Dehn twist about `c`.
pub fn twist_sequence(c: CurveSlope, n_max: usize, base: &TracePoint) -> Result<Vec<TracePoint>> {
    orbit(&Gl2Z::twist_about(c), n_max, base)
}

/// Iterates a hyperbolic matrix (`det = 1`, `|trace| > 2`).
pub fn pa_sequence(g: &Gl2Z, n_max: usize, base: &TracePoint) -> Result<Vec<TracePoint>> {
    if g.det() != 1 || g.trace().abs() <= 2 {
        return Err(Error::contract(format!("{g} is not hyperbolic")));
    }
    orbit(g, n_max, base)
}

/// The attracting eigendirection of a hyperbolic matrix, as a unit-weight
/// lamination.
pub fn attracting_lamination(g: &Gl2Z) -> Result<MeasuredLam> {
    if g.det().abs() != 1 || g.trace().abs() <= 2 {
        return Err(Error::contract(format!("{g} is not hyperbolic")));
    }
    let [[a, b], [c, d]] = g.m.map(|r| r.map(|e| e as f64));
    let tr = a + d;
    let disc = (tr * tr - 4.0 * g.det() as f64).sqrt();
    let lambda = 0.5 * (tr + tr.signum() * disc);
    // (b, λ − a) or (λ − d, c), whichever is better conditioned
    let (x, y) = if b.abs() >= c.abs() {
        (b, lambda - a)
    } else {
        (lambda - d, c)
    };
    MeasuredLam::new(x, y, 1.0)
}
