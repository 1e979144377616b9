use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Provenance {
    Exact,
    /// Estimated values together with the residual reported by the estimator.
    Estimated {
        residual: f64,
    },
}

/// A real-valued function tabulated on a finite probe set.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledFunction<P> {
    probes: Vec<P>,
    values: Vec<f64>,
    provenance: Provenance,
}

impl<P: PartialEq + std::fmt::Debug> SampledFunction<P> {
    pub fn new(probes: Vec<P>, values: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if probes.len() != values.len() {
            return Err(Error::contract(format!(
                "{} probes but {} values",
                probes.len(),
                values.len()
            )));
        }
        Ok(Self {
            probes,
            values,
            provenance,
        })
    }

    pub fn probes(&self) -> &[P] {
        &self.probes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_exact(&self) -> bool {
        self.provenance == Provenance::Exact
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at `point`, if `point` is one of the probes.
    pub fn value_at(&self, point: &P) -> Option<f64> {
        self.probes
            .iter()
            .position(|p| p == point)
            .map(|i| self.values[i])
    }

    /// Like [`value_at`](Self::value_at) but failing with an evaluation error.
    pub fn eval(&self, point: &P) -> Result<f64> {
        self.value_at(point)
            .ok_or_else(|| Error::evaluation(point, "table", "point is not in the probe set"))
    }

    pub(crate) fn map_values(&self, f: impl Fn(f64) -> f64) -> Self
    where
        P: Clone,
    {
        Self {
            probes: self.probes.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
            provenance: self.provenance,
        }
    }

    /// Largest pointwise difference to another table on the same probes.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.probes != other.probes {
            return Err(Error::contract("tables are over different probe sets"));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// JSON layout: `{probes:[…], values:[…], exact:bool, residual:number|null}`.
impl<P: Serialize> Serialize for SampledFunction<P> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SampledFunction", 4)?;
        s.serialize_field("probes", &self.probes)?;
        s.serialize_field("values", &self.values)?;
        match self.provenance {
            Provenance::Exact => {
                s.serialize_field("exact", &true)?;
                s.serialize_field("residual", &Option::<f64>::None)?;
            }
            Provenance::Estimated { residual } => {
                s.serialize_field("exact", &false)?;
                s.serialize_field("residual", &Some(residual))?;
            }
        }
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_mismatch_is_rejected() {
        assert!(SampledFunction::new(vec![1, 2], vec![0.0], Provenance::Exact).is_err());
    }

    #[test]
    fn json_schema() {
        let f = SampledFunction::new(vec![0usize, 1], vec![0.0, -1.5], Provenance::Exact).unwrap();
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"probes":[0,1],"values":[0.0,-1.5],"exact":true,"residual":null})
        );
        let g = SampledFunction::new(
            vec![0usize],
            vec![2.0],
            Provenance::Estimated { residual: 0.25 },
        )
        .unwrap();
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["exact"], false);
        assert_eq!(v["residual"], 0.25);
    }
}
