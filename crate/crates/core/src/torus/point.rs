use serde::{Deserialize, Serialize};

use super::trace::{log_sum_sq, log_trace_of_value};
use crate::error::{Error, Result};

/// Largest admissible relative Markov residual `|x²+y²+z²−xyz| / xyz`.
pub const MARKOV_TOLERANCE: f64 = 1e-9;

/// Traces within this distance of 2 are treated as degenerate.
pub const DEGENERATE_TRACE: f64 = 1e-12;

/// A point of the Teichmüller space of the once-punctured torus, given by the
/// traces of the curves of slope 0/1, 1/0 and 1/1.
///
/// The triple lies on the Markov cubic `x² + y² + z² = xyz`. Traces are held
/// as natural logarithms so that points deep in a mapping-class orbit do not
/// overflow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TracePoint {
    log: [f64; 3],
    /// The traces themselves; `+∞` once they overflow.
    raw: [f64; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// The larger root of the cubic in `z`.
    Plus,
    Minus,
}

impl TracePoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        for (name, t) in [("x", x), ("y", y), ("z", z)] {
            if !t.is_finite() || t <= 2.0 + DEGENERATE_TRACE {
                return Err(Error::degenerate(format!("trace {name} = {t} is not > 2")));
            }
        }
        let mut pt = Self::from_log(x.ln(), y.ln(), z.ln())?;
        pt.raw = [x, y, z];
        Ok(pt)
    }

    /// Builds a point from log-traces, validating the Markov relation.
    pub fn from_log(lx: f64, ly: f64, lz: f64) -> Result<Self> {
        let pt = Self {
            log: [lx, ly, lz],
            raw: [lx.exp(), ly.exp(), lz.exp()],
        };
        for (name, u) in [("x", lx), ("y", ly), ("z", lz)] {
            if !u.is_finite() || u <= log_trace_of_value(2.0 + DEGENERATE_TRACE) {
                return Err(Error::degenerate(format!(
                    "log-trace {name} = {u} is not > ln 2"
                )));
            }
        }
        let r = pt.markov_residual();
        if r.is_nan() || r > MARKOV_TOLERANCE {
            return Err(Error::contract(format!(
                "Markov residual {r:e} exceeds {MARKOV_TOLERANCE:e}"
            )));
        }
        Ok(pt)
    }

    /// The modular torus `(3, 3, 3)`.
    pub fn modular() -> Self {
        Self {
            log: [3f64.ln(); 3],
            raw: [3.0; 3],
        }
    }

    pub fn x(&self) -> f64 {
        self.raw[0]
    }

    pub fn y(&self) -> f64 {
        self.raw[1]
    }

    pub fn z(&self) -> f64 {
        self.raw[2]
    }

    pub fn traces(&self) -> [f64; 3] {
        self.raw
    }

    pub fn log_traces(&self) -> [f64; 3] {
        self.log
    }

    /// Log-trace of the slope −1/1, the other root `xy − z = (x² + y²)/z`.
    pub fn log_conjugate_z(&self) -> f64 {
        log_sum_sq(self.log[0], self.log[1]) - self.log[2]
    }

    /// `|x² + y² + z² − xyz| / max(1, xyz)`, evaluated scale-free.
    pub fn markov_residual(&self) -> f64 {
        let [a, b, c] = self.log;
        let s = a + b + c;
        let sum = (2.0 * a - s).exp() + (2.0 * b - s).exp() + (2.0 * c - s).exp();
        (sum - 1.0).abs() * s.exp().min(1.0)
    }
}

/// JSON form `{"x":…, "y":…, "z":…}`.
#[derive(Serialize, Deserialize)]
struct PointJson {
    x: f64,
    y: f64,
    z: f64,
}

impl Serialize for TracePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointJson {
            x: self.x(),
            y: self.y(),
            z: self.z(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TracePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let p = PointJson::deserialize(d)?;
        TracePoint::new(p.x, p.y, p.z).map_err(serde::de::Error::custom)
    }
}

/// Chart on Teichmüller space: solves `z² − xyz + x² + y² = 0` for `z`.
pub fn teich_from_xy(x: f64, y: f64, branch: Branch) -> Result<TracePoint> {
    if !(x > 2.0 + DEGENERATE_TRACE && y > 2.0 + DEGENERATE_TRACE)
        || !x.is_finite()
        || !y.is_finite()
    {
        return Err(Error::degenerate(format!(
            "traces ({x}, {y}) must exceed 2"
        )));
    }
    // roots are xy(1 ± s)/2 with s = sqrt(1 − 4/x² − 4/y²)
    let disc = 1.0 - 4.0 / (x * x) - 4.0 / (y * y);
    if disc < 0.0 {
        return Err(Error::OutsideChart(format!(
            "no real z for (x, y) = ({x}, {y})"
        )));
    }
    let s = disc.sqrt();
    let (lx, ly) = (x.ln(), y.ln());
    let lz = match branch {
        Branch::Plus => lx + ly + ((1.0 + s) / 2.0).ln(),
        // product of the roots is x² + y²
        Branch::Minus => (2.0 * (x / y + y / x) / (1.0 + s)).ln(),
    };
    let mut pt = TracePoint::from_log(lx, ly, lz)?;
    pt.raw[0] = x;
    pt.raw[1] = y;
    Ok(pt)
}
