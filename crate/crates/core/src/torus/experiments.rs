//! Numerical experiments: convergence of sequences to boundary
//! horofunctions, and near-additive triples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::metric::{horofunction, lipschitz_distance, maxset};
use super::point::{teich_from_xy, Branch, TracePoint};
use super::slope::{CurveSlope, MeasuredLam};
use super::space::TorusSpace;
use crate::error::Result;
use crate::horo::{psi, AsymmetricSpace, Provenance, SampledFunction};

/// `k` seeded points near `base`, obtained by perturbing the first two traces
/// by up to 10% and keeping the root closest to the base's third trace.
pub fn probe_points(base: &TracePoint, k: usize, seed: u64) -> Vec<TracePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(k);
    while out.len() < k {
        let x = base.x() * (1.0 + rng.gen_range(0.0..0.1));
        let y = base.y() * (1.0 + rng.gen_range(0.0..0.1));
        let candidates = [Branch::Minus, Branch::Plus].map(|b| teich_from_xy(x, y, b));
        let best = candidates.into_iter().flatten().min_by(|a, b| {
            let da = (a.log_traces()[2] - base.log_traces()[2]).abs();
            let db = (b.log_traces()[2] - base.log_traces()[2]).abs();
            da.total_cmp(&db)
        });
        if let Some(p) = best {
            out.push(p);
        }
    }
    out
}

/// `Ψ_μ` tabulated at the probes.
pub fn horofunction_table(
    mu: &MeasuredLam,
    probes: &[TracePoint],
    base: &TracePoint,
    depth: u32,
) -> Result<SampledFunction<TracePoint>> {
    let mut values = Vec::with_capacity(probes.len());
    let mut worst: f64 = 0.0;
    for p in probes {
        let h = horofunction(mu, p, base, depth)?;
        worst = worst.max(h.error.unwrap_or(0.0));
        values.push(h.value);
    }
    SampledFunction::new(
        probes.to_vec(),
        values,
        Provenance::Estimated { residual: worst },
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    /// `L(b, xₙ)`.
    pub d_b_xn: f64,
    /// `max_p |ψ_{xₙ}(p) − Ψ_μ(p)|` over the probes.
    pub residual: f64,
    /// Slope maximizing `ℓ_b / ℓ_{xₙ}`.
    pub witness: CurveSlope,
    pub psi: Vec<f64>,
}

/// Compares `ψ_{xₙ}` with `Ψ_μ` on the probes along a sequence.
pub fn convergence_table(
    seq: &[TracePoint],
    mu: &MeasuredLam,
    probes: &[TracePoint],
    base: &TracePoint,
    depth: u32,
) -> Result<(SampledFunction<TracePoint>, Vec<ConvergenceRow>)> {
    let space = TorusSpace::new(*base, depth)?;
    let target = horofunction_table(mu, probes, base, depth)?;
    let mut rows = Vec::with_capacity(seq.len());
    for (n, x) in seq.iter().enumerate() {
        let d = lipschitz_distance(base, x, depth)?.value;
        let table = psi(&space, x, probes)?;
        let witness = lipschitz_distance(x, base, depth)?.witness;
        rows.push(ConvergenceRow {
            n,
            d_b_xn: d,
            residual: table.max_abs_diff(&target)?,
            witness,
            psi: table.values().to_vec(),
        });
    }
    Ok((target, rows))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NearAdditive {
    pub y: TracePoint,
    /// `L(x, y) + L(y, z) − L(x, z)`.
    pub defect: f64,
    pub maxset_xy: Vec<CurveSlope>,
    pub maxset_yz: Vec<CurveSlope>,
    pub maxset_xz: Vec<CurveSlope>,
    /// Whether every common slope of the first two maxsets lies in the third.
    /// Only meaningful when the defect is small.
    pub contained: bool,
    pub evaluations: usize,
}

/// Searches for `y` nearly on a geodesic from `x` to `z` by Nelder–Mead over
/// the chart `(log x_y, log y_y)` on the given branch, then compares maxsets.
pub fn near_additive_search(
    x: &TracePoint,
    z: &TracePoint,
    branch: Branch,
    depth: u32,
    tol: f64,
    max_evals: usize,
) -> Result<NearAdditive> {
    let space = TorusSpace::new(*x, depth)?;
    let dxz = space.distance(x, z)?;
    let evals = std::cell::Cell::new(0usize);
    let mut defect_at = |v: [f64; 2]| -> f64 {
        evals.set(evals.get() + 1);
        match teich_from_xy(v[0].exp(), v[1].exp(), branch) {
            Ok(y) => match (space.distance(x, &y), space.distance(&y, z)) {
                (Ok(a), Ok(b)) => a + b - dxz,
                _ => f64::INFINITY,
            },
            Err(_) => f64::INFINITY,
        }
    };
    let start = [
        0.5 * (x.log_traces()[0] + z.log_traces()[0]),
        0.5 * (x.log_traces()[1] + z.log_traces()[1]),
    ];
    let mut simplex = [
        start,
        [start[0] + 0.05, start[1]],
        [start[0], start[1] + 0.05],
    ];
    let mut f = simplex.map(&mut defect_at);
    while evals.get() < max_evals {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&a, &b| f[a].total_cmp(&f[b]));
        simplex = order.map(|i| simplex[i]);
        f = order.map(|i| f[i]);
        if f[0] < 1e-12 || (f[2] - f[0]).abs() < 1e-14 {
            break;
        }
        let c = [
            0.5 * (simplex[0][0] + simplex[1][0]),
            0.5 * (simplex[0][1] + simplex[1][1]),
        ];
        let along = |t: f64| {
            [
                c[0] + t * (simplex[2][0] - c[0]),
                c[1] + t * (simplex[2][1] - c[1]),
            ]
        };
        let r = along(-1.0);
        let fr = defect_at(r);
        if fr < f[0] {
            let e = along(-2.0);
            let fe = defect_at(e);
            if fe < fr {
                simplex[2] = e;
                f[2] = fe;
            } else {
                simplex[2] = r;
                f[2] = fr;
            }
        } else if fr < f[1] {
            simplex[2] = r;
            f[2] = fr;
        } else {
            let k = if fr < f[2] { along(-0.5) } else { along(0.5) };
            let fk = defect_at(k);
            if fk < f[2].min(fr) {
                simplex[2] = k;
                f[2] = fk;
            } else {
                for i in 1..3 {
                    simplex[i] = [
                        0.5 * (simplex[0][0] + simplex[i][0]),
                        0.5 * (simplex[0][1] + simplex[i][1]),
                    ];
                    f[i] = defect_at(simplex[i]);
                }
            }
        }
    }
    let best = (0..3).min_by(|&a, &b| f[a].total_cmp(&f[b])).unwrap();
    let y = teich_from_xy(simplex[best][0].exp(), simplex[best][1].exp(), branch)?;
    let defect = space.distance(x, &y)? + space.distance(&y, z)? - dxz;
    let maxset_xy = maxset(x, &y, depth, tol)?;
    let maxset_yz = maxset(&y, z, depth, tol)?;
    let maxset_xz = maxset(x, z, depth, tol)?;
    let contained = maxset_xy
        .iter()
        .filter(|c| maxset_yz.contains(c))
        .all(|c| maxset_xz.contains(c));
    Ok(NearAdditive {
        y,
        defect,
        maxset_xy,
        maxset_yz,
        maxset_xz,
        contained,
        evaluations: evals.get(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probes_are_valid_and_seeded() {
        let b = TracePoint::modular();
        let p = probe_points(&b, 5, 42);
        assert_eq!(p.len(), 5);
        assert_eq!(p, probe_points(&b, 5, 42));
        for q in &p {
            assert!(q.markov_residual() < 1e-12);
        }
    }

    #[test]
    fn base_row_of_constant_sequence() {
        let b = TracePoint::modular();
        let probes = probe_points(&b, 3, 1);
        let mu = MeasuredLam::curve(CurveSlope::HORIZONTAL);
        let (target, rows) = convergence_table(&[b], &mu, &probes, &b, 40).unwrap();
        let psi_b: Vec<f64> = probes
            .iter()
            .map(|p| lipschitz_distance(p, &b, 40).unwrap().value)
            .collect();
        let expect = psi_b
            .iter()
            .zip(target.values())
            .map(|(a, t)| (a - t).abs())
            .fold(0.0, f64::max);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].residual, expect);
        assert_eq!(rows[0].d_b_xn, 0.0);
    }
}
