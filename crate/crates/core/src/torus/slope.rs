use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for projective equality of slopes.
pub const SLOPE_EQ_TOL: f64 = 1e-12;

/// A simple closed curve on the punctured torus, identified with a reduced
/// slope `p/q`. Canonical form has `q > 0`, or `(p, q) = (1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveSlope {
    p: i64,
    q: i64,
}

impl CurveSlope {
    pub const HORIZONTAL: CurveSlope = CurveSlope { p: 0, q: 1 };
    pub const VERTICAL: CurveSlope = CurveSlope { p: 1, q: 0 };
    pub const DIAGONAL: CurveSlope = CurveSlope { p: 1, q: 1 };

    /// Accepts only canonical pairs.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let c = Self::from_vector(p, q)?;
        if (c.p, c.q) != (p, q) {
            return Err(Error::contract(format!(
                "slope ({p}, {q}) is not canonical"
            )));
        }
        Ok(c)
    }

    /// Reduces and normalizes any nonzero integer vector.
    pub fn from_vector(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::contract("zero vector is not a slope"));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    /// For pairs already known to be canonical.
    pub(crate) const fn canonical_unchecked(p: i64, q: i64) -> Self {
        Self { p, q }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn as_vector(&self) -> (i64, i64) {
        (self.p, self.q)
    }

    /// `|ps − qr|`.
    pub fn intersection(&self, other: &CurveSlope) -> i64 {
        (self.p as i128 * other.q as i128 - self.q as i128 * other.p as i128).unsigned_abs() as i64
    }

    /// `max(|p|, q)`, the grid depth at which this slope first appears.
    pub fn height(&self) -> i64 {
        self.p.abs().max(self.q)
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    pub fn projective(&self) -> ProjectiveSlope {
        ProjectiveSlope::new(self.p as f64, self.q as f64).expect("curve slopes are nonzero")
    }

    /// Deterministic tie-break: smaller denominator, then smaller `|p|`, then `p`.
    pub fn tie_order(&self, other: &CurveSlope) -> Ordering {
        self.q
            .cmp(&other.q)
            .then(self.p.abs().cmp(&other.p.abs()))
            .then(self.p.cmp(&other.p))
    }
}

impl fmt::Display for CurveSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl Serialize for CurveSlope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.p, self.q].serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurveSlope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [p, q] = <[i64; 2]>::deserialize(d)?;
        CurveSlope::from_vector(p, q).map_err(serde::de::Error::custom)
    }
}

/// A point of projective measured-lamination space: a real slope `(a : b)`,
/// normalized so that `max(|a|, |b|) = 1` and `b > 0` (or `(a, b) = (1, 0)`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectiveSlope {
    a: f64,
    b: f64,
}

impl ProjectiveSlope {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || (a == 0.0 && b == 0.0) {
            return Err(Error::contract(format!(
                "({a} : {b}) is not a projective slope"
            )));
        }
        let scale = a.abs().max(b.abs());
        let (mut a, mut b) = (a / scale, b / scale);
        if b < 0.0 || (b == 0.0 && a < 0.0) {
            a = -a;
            b = -b;
        }
        // -0.0 normalization keeps equality and hashing predictable
        Ok(Self {
            a: a + 0.0,
            b: b + 0.0,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Intersection with a curve, per unit weight: `|a·q − b·p|`.
    pub fn intersection(&self, c: &CurveSlope) -> f64 {
        (self.a * c.q as f64 - self.b * c.p as f64).abs()
    }

    pub fn intersection_with(&self, other: &ProjectiveSlope) -> f64 {
        (self.a * other.b - self.b * other.a).abs()
    }

    pub fn same_as(&self, other: &ProjectiveSlope) -> bool {
        self.intersection_with(other) <= SLOPE_EQ_TOL
    }

    /// `a/b`, infinite for the vertical slope.
    pub fn value(&self) -> f64 {
        self.a / self.b
    }
}

impl From<CurveSlope> for ProjectiveSlope {
    fn from(c: CurveSlope) -> Self {
        c.projective()
    }
}

impl Serialize for ProjectiveSlope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectiveSlope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[f64; 2]>::deserialize(d)?;
        ProjectiveSlope::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// A measured lamination on the punctured torus: a slope `(a : b)` with a
/// positive weight. The representative `(a, b)` is kept as given, so the
/// transverse measure is the vector `weight · (a, b)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasuredLam {
    a: f64,
    b: f64,
    weight: f64,
}

impl MeasuredLam {
    pub fn new(a: f64, b: f64, weight: f64) -> Result<Self> {
        ProjectiveSlope::new(a, b)?;
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::contract(format!("weight {weight} must be positive")));
        }
        Ok(Self { a, b, weight })
    }

    pub fn from_slope(slope: ProjectiveSlope, weight: f64) -> Result<Self> {
        Self::new(slope.a(), slope.b(), weight)
    }

    /// A simple closed curve with unit weight.
    pub fn curve(c: CurveSlope) -> Self {
        Self {
            a: c.p() as f64,
            b: c.q() as f64,
            weight: 1.0,
        }
    }

    pub fn slope(&self) -> ProjectiveSlope {
        ProjectiveSlope::new(self.a, self.b).expect("validated at construction")
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn representative(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.a, self.b, self.weight * c)
    }
}

#[derive(Serialize, Deserialize)]
struct LamJson {
    slope: [f64; 2],
    weight: f64,
}

impl Serialize for MeasuredLam {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LamJson {
            slope: [self.a, self.b],
            weight: self.weight,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MeasuredLam {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = LamJson::deserialize(d)?;
        MeasuredLam::new(r.slope[0], r.slope[1], r.weight).map_err(serde::de::Error::custom)
    }
}

/// `i(μ, c) = weight · |a·q − b·p|`.
pub fn intersection(mu: &MeasuredLam, c: &CurveSlope) -> f64 {
    mu.weight * (mu.a * c.q() as f64 - mu.b * c.p() as f64).abs()
}
