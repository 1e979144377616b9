use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::model::{FormalLamination, TestCurveModel};
use super::rational::{ln_ratio, rational_to_string};
use crate::error::{Error, Result};

/// Result of testing `σ ≪ β`.
#[derive(Clone, Debug, PartialEq)]
pub struct LlRelation {
    pub holds: bool,
    /// `f_j = σ_j / β_j` on the support of `β`, `None` off it.
    pub f: Vec<Option<BigRational>>,
}

impl LlRelation {
    /// `max_j f_j` over the support of `β`, when `σ ≪ β`.
    pub fn max_f(&self) -> Option<BigRational> {
        if !self.holds {
            return None;
        }
        self.f.iter().flatten().max().cloned()
    }
}

/// Whether `σ` is a nonnegative reweighting of the components of `β`.
pub fn ll_relation(sigma: &FormalLamination, beta: &FormalLamination) -> Result<LlRelation> {
    sigma.basis().check_same(beta.basis())?;
    let mut holds = true;
    let f = sigma
        .weights()
        .iter()
        .zip(beta.weights())
        .map(|(s, b)| {
            if b.is_positive() {
                Some(s / b)
            } else {
                holds &= s.is_zero();
                None
            }
        })
        .collect();
    Ok(LlRelation { holds, f })
}

/// `max_k i(μ, c_k) / ℓ_b(c_k)` over the model's test curves.
pub fn lfactor_model(mu: &FormalLamination, model: &TestCurveModel) -> Result<BigRational> {
    model.check_basis(mu.basis())?;
    Ok((0..model.base_lengths().len())
        .map(|k| model.meet(mu.weights(), k) / &model.base_lengths()[k])
        .max()
        .expect("model has curves"))
}

/// `exp H(Ψ_β, Ψ_σ)` as an exact rational, `None` when the cost is infinite.
pub fn detour_cost_ratio(
    beta: &FormalLamination,
    sigma: &FormalLamination,
    model: &TestCurveModel,
) -> Result<Option<BigRational>> {
    let rel = ll_relation(sigma, beta)?;
    let Some(max_f) = rel.max_f() else {
        return Ok(None);
    };
    let lb = lfactor_model(beta, model)?;
    let ls = lfactor_model(sigma, model)?;
    Ok(Some(lb * max_f / ls))
}

/// Detour cost `H(Ψ_β, Ψ_σ)`; `+∞` unless `σ ≪ β`.
pub fn detour_cost_closed(
    beta: &FormalLamination,
    sigma: &FormalLamination,
    model: &TestCurveModel,
) -> Result<f64> {
    Ok(detour_cost_ratio(beta, sigma, model)?.map_or(f64::INFINITY, |r| ln_ratio(&r)))
}

/// `exp δ(Ψ_σ, Ψ_β)` as an exact rational, `None` when infinite. Symmetric in
/// its arguments and independent of any model.
pub fn detour_metric_ratio(
    sigma: &FormalLamination,
    beta: &FormalLamination,
) -> Result<Option<BigRational>> {
    sigma.basis().check_same(beta.basis())?;
    let mut up: Option<BigRational> = None;
    let mut down: Option<BigRational> = None;
    for (s, b) in sigma.weights().iter().zip(beta.weights()) {
        match (s.is_positive(), b.is_positive()) {
            (false, false) => {}
            (true, true) => {
                let r = s / b;
                let inv = b / s;
                if up.as_ref().is_none_or(|u| r > *u) {
                    up = Some(r);
                }
                if down.as_ref().is_none_or(|d| inv > *d) {
                    down = Some(inv);
                }
            }
            _ => return Ok(None),
        }
    }
    Ok(Some(
        up.expect("nonzero laminations") * down.expect("nonzero laminations"),
    ))
}

/// Detour metric `δ(Ψ_σ, Ψ_β)`; `+∞` unless the two supports coincide. The
/// model only has to be compatible with the basis; its values are not used.
pub fn detour_metric_closed(
    sigma: &FormalLamination,
    beta: &FormalLamination,
    model: &TestCurveModel,
) -> Result<f64> {
    model.check_basis(sigma.basis())?;
    Ok(detour_metric_ratio(sigma, beta)?.map_or(f64::INFINITY, |r| ln_ratio(&r)))
}

/// Closed-form supremum of `i(σ, η) / i(β, η)` against a sampled maximum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioSupReport {
    /// `max_j f_j`, or `+∞` when `σ` is not `≪ β`.
    pub closed_form: f64,
    pub closed_form_exact: Option<String>,
    pub sampled_max: f64,
    pub sampled_max_exact: Option<String>,
    /// Relative gap `1 − sampled / closed`, 0 when the bound is reached.
    pub gap: f64,
    pub samples: usize,
    /// Samples with `i(β, η) = 0`.
    pub skipped: usize,
    /// Samples whose ratio exceeded the closed form (always 0 when `σ ≪ β`).
    pub violations: usize,
}

/// Samples random nonnegative integer combinations `η` of test-curve columns
/// and compares `i(σ, η) / i(β, η)` with `max_j f_j`, exactly.
pub fn ratio_sup_bound(
    sigma: &FormalLamination,
    beta: &FormalLamination,
    model: &TestCurveModel,
    samples: usize,
    seed: u64,
) -> Result<RatioSupReport> {
    model.check_basis(sigma.basis())?;
    let rel = ll_relation(sigma, beta)?;
    let bound = rel.max_f();
    let n = model.base_lengths().len();
    let col_s: Vec<BigRational> = (0..n).map(|k| model.meet(sigma.weights(), k)).collect();
    let col_b: Vec<BigRational> = (0..n).map(|k| model.meet(beta.weights(), k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<BigRational> = None;
    let (mut skipped, mut violations) = (0, 0);
    for _ in 0..samples {
        let picks = rng.gen_range(1..=3.min(n));
        let mut num = BigRational::zero();
        let mut den = BigRational::zero();
        for _ in 0..picks {
            let k = rng.gen_range(0..n);
            let w = BigRational::from_integer(rng.gen_range(1..=16i64).into());
            num += &w * &col_s[k];
            den += &w * &col_b[k];
        }
        if den.is_zero() {
            skipped += 1;
            continue;
        }
        let r = num / den;
        if bound.as_ref().is_some_and(|b| r > *b) {
            violations += 1;
        }
        if best.as_ref().is_none_or(|b| r > *b) {
            best = Some(r);
        }
    }
    let as_f64 = |r: &BigRational| r.to_f64().unwrap_or(f64::INFINITY);
    let closed_form = bound.as_ref().map_or(f64::INFINITY, as_f64);
    let sampled_max = best.as_ref().map_or(f64::NAN, as_f64);
    let gap = match (&bound, &best) {
        (Some(b), Some(s)) if b.is_positive() => as_f64(&(BigRational::one() - s / b)),
        _ => f64::NAN,
    };
    if samples > 0 && skipped == samples {
        return Err(Error::degenerate(
            "every sampled test lamination misses beta",
        ));
    }
    Ok(RatioSupReport {
        closed_form,
        closed_form_exact: bound.as_ref().map(rational_to_string),
        sampled_max,
        sampled_max_exact: best.as_ref().map(rational_to_string),
        gap,
        samples,
        skipped,
        violations,
    })
}
