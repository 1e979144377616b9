use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::rational::{is_nonneg, json_rational, rational_from_f64, rational_to_string};
use crate::error::{Error, Result};
use crate::torus::{curve_length, intersection, CurveSlope, MeasuredLam, TracePoint};

/// Names of pairwise non-intersecting, projectively distinct ergodic
/// laminations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErgodicBasis {
    ids: Arc<Vec<String>>,
}

impl ErgodicBasis {
    pub fn new<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Result<Self> {
        let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        if ids.is_empty() {
            return Err(Error::contract("empty basis"));
        }
        let mut seen = HashSet::new();
        for id in &ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::contract(format!("duplicate basis id {id:?}")));
            }
        }
        Ok(Self { ids: Arc::new(ids) })
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|s| s == id)
    }

    pub(crate) fn check_same(&self, other: &ErgodicBasis) -> Result<()> {
        if self != other {
            return Err(Error::contract(format!(
                "basis mismatch: {:?} vs {:?}",
                self.ids(),
                other.ids()
            )));
        }
        Ok(())
    }
}

/// `Σ_j w_j β_j` over an [`ErgodicBasis`], with nonnegative weights not all
/// zero.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalLamination {
    basis: ErgodicBasis,
    weights: Vec<BigRational>,
    exact: bool,
}

impl FormalLamination {
    pub fn new(basis: ErgodicBasis, weights: Vec<BigRational>) -> Result<Self> {
        Self::with_exactness(basis, weights, true)
    }

    fn with_exactness(basis: ErgodicBasis, weights: Vec<BigRational>, exact: bool) -> Result<Self> {
        if weights.len() != basis.len() {
            return Err(Error::contract(format!(
                "{} weights for a basis of {}",
                weights.len(),
                basis.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !is_nonneg(w)) {
            return Err(Error::contract(format!("negative weight {w}")));
        }
        if weights.iter().all(Zero::is_zero) {
            return Err(Error::contract("lamination is identically zero"));
        }
        Ok(Self {
            basis,
            weights,
            exact,
        })
    }

    /// Integer weights, convenient for tests and examples.
    pub fn from_integers(basis: &ErgodicBasis, weights: &[i64]) -> Result<Self> {
        Self::new(
            basis.clone(),
            weights
                .iter()
                .map(|&w| BigRational::from_integer(w.into()))
                .collect(),
        )
    }

    /// Weights given as doubles, taken at their exact binary value.
    pub fn from_f64(basis: &ErgodicBasis, weights: &[f64]) -> Result<Self> {
        let w = weights
            .iter()
            .map(|&x| rational_from_f64(x))
            .collect::<Result<Vec<_>>>()?;
        Self::with_exactness(basis.clone(), w, false)
    }

    pub fn basis(&self) -> &ErgodicBasis {
        &self.basis
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    /// Whether every weight was supplied as an exact rational.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn support(&self) -> Vec<bool> {
        self.weights.iter().map(|w| w.is_positive()).collect()
    }

    pub fn scaled(&self, c: &BigRational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::contract(format!("scale {c} must be positive")));
        }
        Self::with_exactness(
            self.basis.clone(),
            self.weights.iter().map(|w| w * c).collect(),
            self.exact,
        )
    }

    /// Parses `{"basis": [...], "weights": {id: w, ...}}`. Weights may be
    /// numbers or `"p/q"` strings; missing ids get weight 0.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let ids = v
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"basis\" array".into()))?
            .iter()
            .map(|s| {
                s.as_str()
                    .map(str::to_owned)
                    .ok_or_else(|| Error::Parse(format!("basis id {s} is not a string")))
            })
            .collect::<Result<Vec<_>>>()?;
        let basis = ErgodicBasis::new(ids)?;
        let map = v
            .get("weights")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing \"weights\" object".into()))?;
        let mut weights = vec![BigRational::zero(); basis.len()];
        let mut exact = true;
        for (id, w) in map {
            let j = basis
                .index_of(id)
                .ok_or_else(|| Error::contract(format!("weight for unknown component {id:?}")))?;
            let (r, e) = json_rational(w)?;
            exact &= e;
            weights[j] = r;
        }
        Self::with_exactness(basis, weights, exact)
    }

    pub fn to_json(&self) -> Value {
        let weights: BTreeMap<&str, String> = self
            .basis
            .ids()
            .iter()
            .zip(&self.weights)
            .map(|(id, w)| (id.as_str(), rational_to_string(w)))
            .collect();
        serde_json::json!({ "basis": self.basis.ids(), "weights": weights })
    }
}

/// A finite set of test curves standing in for the supremum over all
/// measured laminations: intersections `M[j][k] = i(β_j, c_k)` and base
/// lengths `lb[k] = ℓ_b(c_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TestCurveModel {
    curves: Vec<String>,
    m: Vec<Vec<BigRational>>,
    lb: Vec<BigRational>,
    exact: bool,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    curves: Vec<String>,
    #[serde(rename = "M")]
    m: Vec<Vec<Value>>,
    lb: Vec<Value>,
}

impl TestCurveModel {
    pub fn new(
        curves: Vec<String>,
        m: Vec<Vec<BigRational>>,
        lb: Vec<BigRational>,
    ) -> Result<Self> {
        Self::with_exactness(curves, m, lb, true)
    }

    fn with_exactness(
        curves: Vec<String>,
        m: Vec<Vec<BigRational>>,
        lb: Vec<BigRational>,
        exact: bool,
    ) -> Result<Self> {
        let n = curves.len();
        if n == 0 || lb.len() != n {
            return Err(Error::contract(format!(
                "{} curves with {} base lengths",
                n,
                lb.len()
            )));
        }
        if m.is_empty() {
            return Err(Error::contract("intersection table has no rows"));
        }
        for (j, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::contract(format!(
                    "row {j} has {} entries, want {n}",
                    row.len()
                )));
            }
            if row.iter().any(|x| x.is_negative()) {
                return Err(Error::contract(format!(
                    "row {j} has a negative intersection"
                )));
            }
            if row.iter().all(Zero::is_zero) {
                return Err(Error::contract(format!(
                    "component {j} meets no test curve"
                )));
            }
        }
        if let Some(k) = lb.iter().position(|l| !l.is_positive()) {
            return Err(Error::contract(format!(
                "base length of curve {k} is not positive"
            )));
        }
        Ok(Self {
            curves,
            m,
            lb,
            exact,
        })
    }

    pub fn from_integers(m: &[Vec<i64>], lb: &[i64]) -> Result<Self> {
        let r = |x: &i64| BigRational::from_integer((*x).into());
        Self::new(
            (0..lb.len()).map(|k| format!("c{}", k + 1)).collect(),
            m.iter().map(|row| row.iter().map(r).collect()).collect(),
            lb.iter().map(r).collect(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: ModelJson = serde_json::from_str(text)?;
        let mut exact = true;
        let mut conv = |v: &Value| -> Result<BigRational> {
            let (r, e) = json_rational(v)?;
            exact &= e;
            Ok(r)
        };
        let m =
            j.m.iter()
                .map(|row| row.iter().map(&mut conv).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
        let lb = j.lb.iter().map(&mut conv).collect::<Result<Vec<_>>>()?;
        Self::with_exactness(j.curves, m, lb, exact)
    }

    pub fn to_json(&self) -> Value {
        let s = |r: &BigRational| Value::String(rational_to_string(r));
        serde_json::json!({
            "curves": self.curves,
            "M": self.m.iter().map(|row| row.iter().map(s).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "lb": self.lb.iter().map(s).collect::<Vec<_>>(),
        })
    }

    /// The model induced by torus data: components are measured laminations,
    /// test curves are slopes, base lengths are hyperbolic lengths at `base`.
    /// Values are doubles taken exactly, so the model is flagged inexact.
    pub fn from_torus(
        components: &[MeasuredLam],
        curves: &[CurveSlope],
        base: &TracePoint,
    ) -> Result<Self> {
        let m = components
            .iter()
            .map(|mu| {
                curves
                    .iter()
                    .map(|c| rational_from_f64(intersection(mu, c)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let lb = curves
            .iter()
            .map(|&c| rational_from_f64(curve_length(base, c)?))
            .collect::<Result<Vec<_>>>()?;
        Self::with_exactness(curves.iter().map(|c| c.to_string()).collect(), m, lb, false)
    }

    /// The same test curves with base lengths measured at another base point.
    pub fn with_base_lengths(&self, lb: Vec<BigRational>) -> Result<Self> {
        Self::with_exactness(self.curves.clone(), self.m.clone(), lb, false)
    }

    pub fn curves(&self) -> &[String] {
        &self.curves
    }

    pub fn intersections(&self) -> &[Vec<BigRational>] {
        &self.m
    }

    pub fn base_lengths(&self) -> &[BigRational] {
        &self.lb
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub(crate) fn check_basis(&self, basis: &ErgodicBasis) -> Result<()> {
        if self.m.len() != basis.len() {
            return Err(Error::contract(format!(
                "model has {} component rows, basis has {}",
                self.m.len(),
                basis.len()
            )));
        }
        Ok(())
    }

    /// `i(μ, c_k) = Σ_j μ_j M[j][k]`.
    pub(crate) fn meet(&self, weights: &[BigRational], k: usize) -> BigRational {
        weights
            .iter()
            .zip(&self.m)
            .fold(BigRational::zero(), |acc, (w, row)| acc + w * &row[k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_rules() {
        assert!(ErgodicBasis::new(["a", "b", "a"]).is_err());
        assert!(ErgodicBasis::new(Vec::<String>::new()).is_err());
        assert_eq!(
            ErgodicBasis::new(["a", "b"]).unwrap().index_of("b"),
            Some(1)
        );
    }

    #[test]
    fn lamination_json() {
        let l = FormalLamination::from_json(
            r#"{"basis":["e1","e2","e3"],"weights":{"e1":2,"e3":"1/3"}}"#,
        )
        .unwrap();
        assert!(l.is_exact());
        assert_eq!(l.support(), vec![true, false, true]);
        assert_eq!(l.weights()[2], BigRational::new(1.into(), 3.into()));
        let back = FormalLamination::from_value(&l.to_json()).unwrap();
        assert_eq!(back, l);
        let f = FormalLamination::from_json(r#"{"basis":["e1"],"weights":{"e1":0.25}}"#).unwrap();
        assert!(!f.is_exact());
        for bad in [
            r#"{"basis":["e1"],"weights":{"e2":1}}"#,
            r#"{"basis":["e1"],"weights":{"e1":-1}}"#,
            r#"{"basis":["e1"],"weights":{"e1":0}}"#,
            r#"{"weights":{"e1":1}}"#,
        ] {
            assert!(FormalLamination::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn model_json_and_validation() {
        let m =
            TestCurveModel::from_json(r#"{"curves":["a","b"],"M":[[2,0],[0,5]],"lb":[1,"3/2"]}"#)
                .unwrap();
        assert!(m.is_exact());
        assert_eq!(
            TestCurveModel::from_json(&m.to_json().to_string()).unwrap(),
            m
        );
        assert!(TestCurveModel::from_integers(&[vec![0, 0]], &[1, 1]).is_err());
        assert!(TestCurveModel::from_integers(&[vec![1, 0]], &[1, 0]).is_err());
        assert!(TestCurveModel::from_integers(&[vec![1]], &[1, 1]).is_err());
    }

    #[test]
    fn torus_induced_model() {
        let comps = [MeasuredLam::new(0.0, 1.0, 1.0).unwrap()];
        let curves = [
            CurveSlope::VERTICAL,
            CurveSlope::DIAGONAL,
            CurveSlope::new(1, 2).unwrap(),
        ];
        let m = TestCurveModel::from_torus(&comps, &curves, &TracePoint::modular()).unwrap();
        assert!(!m.is_exact());
        assert_eq!(m.intersections()[0][2], BigRational::from_integer(1.into()));
        assert_eq!(m.curves()[2], "1/2");
    }
}
