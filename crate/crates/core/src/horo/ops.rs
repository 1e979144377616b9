use super::{AsymmetricSpace, Provenance, SampledFunction};
use crate::error::{Error, Result};

/// Values at or above this are reported as `+∞`.
pub const DEFAULT_CAP: f64 = 1e12;

/// Symmetrized distance to the base that a sequence tail must exceed to be
/// considered escaping. Diagnostic only.
pub const DEFAULT_ESCAPE_THRESHOLD: f64 = 10.0;

const ALL_PAIRS_LIMIT: usize = 1000;

fn finite_distance<S: AsymmetricSpace>(space: &S, x: &S::Point, y: &S::Point) -> Result<f64> {
    let d = space.distance(x, y)?;
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::evaluation(x, y, format!("distance is {d}")))
    }
}

/// The coordinate function `ψ_z(x) = d(x, z) − d(b, z)` tabulated over `probes`.
pub fn psi<S: AsymmetricSpace>(
    space: &S,
    z: &S::Point,
    probes: &[S::Point],
) -> Result<SampledFunction<S::Point>> {
    if probes.is_empty() {
        return Err(Error::contract("empty probe set"));
    }
    let offset = finite_distance(space, space.base(), z)?;
    let values = probes
        .iter()
        .map(|x| Ok(finite_distance(space, x, z)? - offset))
        .collect::<Result<Vec<_>>>()?;
    SampledFunction::new(probes.to_vec(), values, Provenance::Exact)
}

#[derive(Clone, Copy, Debug)]
pub struct HorolimitOptions {
    pub tail_window: usize,
    pub escape_threshold: f64,
}

impl HorolimitOptions {
    pub fn with_tail(tail_window: usize) -> Self {
        Self {
            tail_window,
            escape_threshold: DEFAULT_ESCAPE_THRESHOLD,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HorolimitEstimate<P> {
    /// The last ψ table, tagged with the largest tail oscillation as residual.
    pub function: SampledFunction<P>,
    /// Per probe: max − min of ψ over the tail window.
    pub oscillation: Vec<f64>,
    pub max_oscillation: f64,
    /// `d_sym(b, x_n)` over the tail window.
    pub tail_sym_distances: Vec<f64>,
    /// False when some tail point stays within the escape threshold of the base.
    pub escaping: bool,
}

/// Estimates the horofunction limit of `ψ_{x_n}` from the tail of a sequence.
pub fn horolimit_estimate<S: AsymmetricSpace>(
    space: &S,
    sequence: &[S::Point],
    probes: &[S::Point],
    opts: HorolimitOptions,
) -> Result<HorolimitEstimate<S::Point>> {
    if probes.is_empty() {
        return Err(Error::contract("empty probe set"));
    }
    if opts.tail_window < 2 {
        return Err(Error::contract("tail window must be at least 2"));
    }
    if sequence.len() <= opts.tail_window {
        return Err(Error::contract(format!(
            "tail window {} does not fit a sequence of length {}",
            opts.tail_window,
            sequence.len()
        )));
    }
    let tail = &sequence[sequence.len() - opts.tail_window..];
    let mut lo = vec![f64::INFINITY; probes.len()];
    let mut hi = vec![f64::NEG_INFINITY; probes.len()];
    let mut last = None;
    let mut tail_sym_distances = Vec::with_capacity(tail.len());
    for z in tail {
        let table = psi(space, z, probes)?;
        for (i, &v) in table.values().iter().enumerate() {
            lo[i] = lo[i].min(v);
            hi[i] = hi[i].max(v);
        }
        tail_sym_distances.push(space.sym_distance(space.base(), z)?);
        last = Some(table);
    }
    let oscillation: Vec<f64> = hi.iter().zip(&lo).map(|(h, l)| h - l).collect();
    let max_oscillation = oscillation.iter().copied().fold(0.0, f64::max);
    let escaping = tail_sym_distances
        .iter()
        .all(|&d| d > opts.escape_threshold);
    let last = last.expect("tail is non-empty");
    let function = SampledFunction::new(
        last.probes().to_vec(),
        last.values().to_vec(),
        Provenance::Estimated {
            residual: max_oscillation,
        },
    )?;
    Ok(HorolimitEstimate {
        function,
        oscillation,
        max_oscillation,
        tail_sym_distances,
        escaping,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct DetourOptions {
    /// Number of trailing sequence entries the infimum is taken over.
    pub tail: usize,
    pub cap: f64,
}

impl DetourOptions {
    pub fn with_tail(tail: usize) -> Self {
        Self {
            tail,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DetourEstimate {
    /// Infimum of the trace over the tail; `+∞` above the cap.
    ///
    /// This bounds the detour cost from above. It equals the detour cost when
    /// the sequence samples an almost-geodesic.
    pub value: f64,
    /// `d(b, x_n) + η(x_n)` for every n.
    pub trace: Vec<f64>,
    /// `min_{m ≥ n}` of the trace.
    pub suffix_inf: Vec<f64>,
}

impl DetourEstimate {
    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }
}

/// Detour cost estimate along a sequence: the tail infimum of `d(b, x_n) + η(x_n)`.
pub fn detour_cost_along<S, F>(
    space: &S,
    sequence: &[S::Point],
    eta: F,
    opts: DetourOptions,
) -> Result<DetourEstimate>
where
    S: AsymmetricSpace,
    F: Fn(&S::Point) -> Result<f64>,
{
    if sequence.is_empty() {
        return Err(Error::contract("empty sequence"));
    }
    if opts.tail == 0 || opts.tail > sequence.len() {
        return Err(Error::contract(format!(
            "tail {} does not fit a sequence of length {}",
            opts.tail,
            sequence.len()
        )));
    }
    let cap = |v: f64| if v >= opts.cap { f64::INFINITY } else { v };
    let trace = sequence
        .iter()
        .map(|x| Ok(cap(space.distance(space.base(), x)? + eta(x)?)))
        .collect::<Result<Vec<f64>>>()?;
    let mut suffix_inf = trace.clone();
    for i in (0..suffix_inf.len().saturating_sub(1)).rev() {
        suffix_inf[i] = suffix_inf[i].min(suffix_inf[i + 1]);
    }
    let value = suffix_inf[trace.len() - opts.tail];
    Ok(DetourEstimate {
        value,
        trace,
        suffix_inf,
    })
}

/// Symmetrized detour cost `δ = H(ξ,η) + H(η,ξ)`, with `+∞` absorbing.
pub fn detour_metric(h12: f64, h21: f64) -> Result<f64> {
    for h in [h12, h21] {
        if h.is_nan() || h < 0.0 {
            return Err(Error::contract(format!("detour cost {h} is not >= 0")));
        }
    }
    Ok(h12 + h21)
}

/// Moves the base point of a horofunction table: `ξ′ = ξ − ξ(b′)`.
pub fn rebase<P: Clone + PartialEq + std::fmt::Debug>(
    xi: &SampledFunction<P>,
    b_prime: &P,
) -> Result<SampledFunction<P>> {
    let shift = xi
        .value_at(b_prime)
        .ok_or_else(|| Error::evaluation(b_prime, "table", "new base point is not a probe"))?;
    Ok(xi.map_values(|v| v - shift))
}

#[derive(Clone, Copy, Debug)]
pub struct DefectOptions {
    /// Fraction of the path, counted from the end, that pairs are drawn from.
    pub tail_fraction: f64,
}

impl Default for DefectOptions {
    fn default() -> Self {
        Self { tail_fraction: 1.0 }
    }
}

/// `sup |d(γ(0),γ(s)) + d(γ(s),γ(t)) − t|` over sampled pairs `s ≤ t`.
///
/// Parameters are measured from the first point of `path`. Paths longer than
/// 1000 points are sampled with a fixed stride.
pub fn almost_geodesic_defect<S: AsymmetricSpace>(
    space: &S,
    path: &[S::Point],
    params: &[f64],
    opts: DefectOptions,
) -> Result<f64> {
    if path.len() < 3 {
        return Err(Error::contract("path needs at least 3 points"));
    }
    if params.len() != path.len() {
        return Err(Error::contract(format!(
            "{} parameters for {} path points",
            params.len(),
            path.len()
        )));
    }
    if !(opts.tail_fraction > 0.0 && opts.tail_fraction <= 1.0) {
        return Err(Error::contract("tail fraction must lie in (0, 1]"));
    }
    let n = path.len();
    let start = ((1.0 - opts.tail_fraction) * n as f64).floor() as usize;
    let stride = (n - start).div_ceil(ALL_PAIRS_LIMIT).max(1);
    let idx: Vec<usize> = (start..n).step_by(stride).collect();
    let t0 = params[0];
    let origin = &path[0];
    let from_origin = idx
        .iter()
        .map(|&s| finite_distance(space, origin, &path[s]))
        .collect::<Result<Vec<f64>>>()?;
    let mut defect: f64 = 0.0;
    for (a, &s) in idx.iter().enumerate() {
        for &t in &idx[a..] {
            let leg = finite_distance(space, &path[s], &path[t])?;
            defect = defect.max((from_origin[a] + leg - (params[t] - t0)).abs());
        }
    }
    Ok(defect)
}

#[cfg(test)]
mod tests {
    use super::super::{digraph_brute_oracle, DigraphSpace};
    use super::*;
    use proptest::prelude::*;

    fn three_vertex() -> DigraphSpace {
        DigraphSpace::new(
            3,
            &[
                (0, 1, 1.0),
                (1, 0, 4.0),
                (1, 2, 2.0),
                (2, 1, 1.0),
                (0, 2, 5.0),
                (2, 0, 6.0),
            ],
            0,
        )
        .unwrap()
    }

    /// Path 0→1→…→n with unit forward edges and heavy backward edges.
    fn ray(n: usize, back: f64) -> DigraphSpace {
        let mut edges = Vec::new();
        for k in 0..n {
            edges.push((k, k + 1, 1.0));
            edges.push((k + 1, k, back));
        }
        DigraphSpace::new(n + 1, &edges, 0).unwrap()
    }

    #[test]
    fn psi_worked_example() {
        let g = three_vertex();
        let t = psi(&g, &2, &[0, 1, 2]).unwrap();
        assert_eq!(t.value_at(&1), Some(-1.0));
        assert_eq!(t.value_at(&0), Some(0.0));
        assert!(t.is_exact());
    }

    #[test]
    fn psi_at_base_is_distance() {
        let g = three_vertex();
        let t = psi(&g, &0, &[0, 1, 2]).unwrap();
        assert_eq!(t.values(), &[0.0, 4.0, 5.0]);
    }

    #[test]
    fn psi_needs_probes() {
        assert!(psi(&three_vertex(), &0, &[]).is_err());
    }

    #[test]
    fn ray_horolimit_is_minus_k() {
        let n = 40;
        let g = ray(n, 100.0);
        let probes: Vec<usize> = (0..=5).collect();
        let seq: Vec<usize> = (0..=n).collect();
        let est = horolimit_estimate(&g, &seq, &probes, HorolimitOptions::with_tail(10)).unwrap();
        let expect: Vec<f64> = probes.iter().map(|&k| -(k as f64)).collect();
        assert_eq!(est.function.values(), expect.as_slice());
        assert_eq!(est.max_oscillation, 0.0);
        assert!(est.escaping);
    }

    #[test]
    fn constant_sequence_not_escaping() {
        let g = three_vertex();
        let seq = vec![2usize; 5];
        let est = horolimit_estimate(&g, &seq, &[0, 1, 2], HorolimitOptions::with_tail(3)).unwrap();
        assert!(!est.escaping);
        assert_eq!(
            est.function.values(),
            psi(&g, &2, &[0, 1, 2]).unwrap().values()
        );
    }

    #[test]
    fn horolimit_window_errors() {
        let g = three_vertex();
        assert!(horolimit_estimate(&g, &[0, 1], &[0], HorolimitOptions::with_tail(2)).is_err());
        assert!(horolimit_estimate(&g, &[0, 1, 2], &[0], HorolimitOptions::with_tail(1)).is_err());
        assert!(horolimit_estimate(&g, &[0, 1, 2], &[], HorolimitOptions::with_tail(2)).is_err());
    }

    #[test]
    fn detour_along_own_ray_is_zero() {
        let g = ray(30, 50.0);
        let seq: Vec<usize> = (0..=30).collect();
        // the ray's limit function is x ↦ −x on the forward part
        let est = detour_cost_along(&g, &seq, |&k| Ok(-(k as f64)), DetourOptions::with_tail(10))
            .unwrap();
        assert_eq!(est.value, 0.0);
        assert!(est.trace.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn detour_between_disjoint_rays_is_infinite() {
        // base 0, ray A on 1..=n, ray B on n+1..=2n, backward edges of weight w
        let n = 12;
        let w = 2e12;
        let a = |k: usize| if k == 0 { 0 } else { k };
        let b = |k: usize| if k == 0 { 0 } else { n + k };
        let mut edges = Vec::new();
        for k in 0..n {
            edges.push((a(k), a(k + 1), 1.0));
            edges.push((a(k + 1), a(k), w));
            edges.push((b(k), b(k + 1), 1.0));
            edges.push((b(k + 1), b(k), w));
        }
        let g = DigraphSpace::new(2 * n + 1, &edges, 0).unwrap();
        let all: Vec<usize> = g.vertices().collect();
        let eta = psi(&g, &b(n), &all).unwrap();
        let seq: Vec<usize> = (0..=n).map(a).collect();
        let est =
            detour_cost_along(&g, &seq, |x| eta.eval(x), DetourOptions::with_tail(5)).unwrap();
        assert!(est.is_infinite());
        assert_eq!(est.trace[0], 0.0);
    }

    #[test]
    fn detour_eval_failure_propagates() {
        let g = three_vertex();
        let eta = psi(&g, &2, &[0, 1]).unwrap();
        assert!(
            detour_cost_along(&g, &[0, 1, 2], |x| eta.eval(x), DetourOptions::with_tail(1))
                .is_err()
        );
    }

    #[test]
    fn detour_metric_cases() {
        assert_eq!(detour_metric(0.0, 0.0).unwrap(), 0.0);
        let d = detour_metric(2f64.ln(), 3f64.ln()).unwrap();
        assert!((d - 6f64.ln()).abs() < 1e-15);
        assert_eq!(detour_metric(f64::INFINITY, 0.0).unwrap(), f64::INFINITY);
        assert!(detour_metric(-1.0, 0.0).is_err());
        assert!(detour_metric(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn rebase_ray_limit() {
        let g = ray(20, 50.0);
        let probes: Vec<usize> = (0..=5).collect();
        let xi = psi(&g, &20, &probes).unwrap();
        let moved = rebase(&xi, &2).unwrap();
        for (k, (&a, &b)) in xi.values().iter().zip(moved.values()).enumerate() {
            assert_eq!(a, -(k as f64));
            assert_eq!(b, a + 2.0);
        }
        assert_eq!(rebase(&xi, &0).unwrap(), xi);
        assert_eq!(rebase(&moved, &0).unwrap(), xi);
        assert!(rebase(&xi, &7).is_err());
    }

    #[test]
    fn defect_of_geodesic_ray_is_zero() {
        let g = ray(15, 50.0);
        let path: Vec<usize> = (0..=15).collect();
        let t: Vec<f64> = path.iter().map(|&k| k as f64).collect();
        assert_eq!(
            almost_geodesic_defect(&g, &path, &t, DefectOptions::default()).unwrap(),
            0.0
        );
        // any sub-path, parameters measured from its first point
        assert_eq!(
            almost_geodesic_defect(&g, &path[4..11], &t[4..11], DefectOptions::default()).unwrap(),
            0.0
        );
    }

    #[test]
    fn defect_of_detour() {
        // ray 0..=10 plus a vertex 11 between 4 and 5 with d(4,11)+d(11,5) = 1 + c
        let c = 3.0;
        let mut edges = Vec::new();
        for k in 0..10 {
            edges.push((k, k + 1, 1.0));
            edges.push((k + 1, k, 50.0));
        }
        edges.push((4, 11, 2.0));
        edges.push((11, 5, 2.0));
        edges.push((11, 4, 50.0));
        let g = DigraphSpace::new(12, &edges, 0).unwrap();
        let path = vec![0, 1, 2, 3, 4, 11, 5, 6, 7, 8, 9, 10];
        let mut t = vec![0.0, 1.0, 2.0, 3.0, 4.0, 6.0];
        t.extend((5..=10).map(|k| k as f64 + c));
        let defect = almost_geodesic_defect(&g, &path, &t, DefectOptions::default()).unwrap();
        assert_eq!(defect, c);
    }

    #[test]
    fn defect_of_chained_segments_is_bounded() {
        // shortcuts j→j+2 save eps/2^{j+1}; the unit path stays within eps
        let eps = 0.5;
        let n = 30;
        let mut edges = Vec::new();
        for j in 0..n {
            edges.push((j, j + 1, 1.0));
            edges.push((j + 1, j, 40.0));
            if j + 2 <= n {
                edges.push((j, j + 2, 2.0 - eps / 2f64.powi(j as i32 + 1)));
            }
        }
        let g = DigraphSpace::new(n + 1, &edges, 0).unwrap();
        let path: Vec<usize> = (0..=n).collect();
        let t: Vec<f64> = path.iter().map(|&k| k as f64).collect();
        let defect = almost_geodesic_defect(&g, &path, &t, DefectOptions::default()).unwrap();
        assert!(defect > 0.0 && defect <= eps, "{defect}");
    }

    #[test]
    fn defect_needs_parameters() {
        let g = ray(5, 10.0);
        assert!(
            almost_geodesic_defect(&g, &[0, 1, 2], &[0.0, 1.0], DefectOptions::default()).is_err()
        );
        assert!(
            almost_geodesic_defect(&g, &[0, 1], &[0.0, 1.0], DefectOptions::default()).is_err()
        );
    }

    fn random_digraph(n: usize, seed_edges: &[(usize, usize, u8)]) -> DigraphSpace {
        let mut edges: Vec<(usize, usize, f64)> = (0..n).map(|k| (k, (k + 1) % n, 7.0)).collect();
        edges.extend(seed_edges.iter().map(|&(u, v, w)| (u % n, v % n, w as f64)));
        DigraphSpace::new(n, &edges, 0).unwrap()
    }

    proptest! {
        #[test]
        fn psi_is_sym_lipschitz(
            n in 2usize..8,
            extra in prop::collection::vec((0usize..8, 0usize..8, 0u8..20), 0..20),
        ) {
            let g = random_digraph(n, &extra);
            let pts: Vec<usize> = g.vertices().collect();
            for z in &pts {
                let t = psi(&g, z, &pts).unwrap();
                for x in &pts {
                    for y in &pts {
                        let lhs = (t.value_at(x).unwrap() - t.value_at(y).unwrap()).abs();
                        prop_assert!(lhs <= g.sym_distance(x, y).unwrap());
                    }
                }
            }
        }

        #[test]
        fn injectivity_inequality(
            n in 2usize..8,
            extra in prop::collection::vec((0usize..8, 0usize..8, 0u8..20), 0..20),
        ) {
            // for d(b,x) >= d(b,y): ψ_y(x) − ψ_x(x) >= d(x,y)
            let g = random_digraph(n, &extra);
            let pts: Vec<usize> = g.vertices().collect();
            for &x in &pts {
                for &y in &pts {
                    if x == y || g.distance(&0, &x).unwrap() < g.distance(&0, &y).unwrap() {
                        continue;
                    }
                    let py = psi(&g, &y, &[x]).unwrap().values()[0];
                    let px = psi(&g, &x, &[x]).unwrap().values()[0];
                    prop_assert!(py - px >= g.distance(&x, &y).unwrap());
                }
            }
        }

        #[test]
        fn rebase_round_trip(
            n in 2usize..8,
            extra in prop::collection::vec((0usize..8, 0usize..8, 0u8..20), 0..20),
            z in 0usize..8,
            bp in 0usize..8,
        ) {
            let g = random_digraph(n, &extra);
            let pts: Vec<usize> = g.vertices().collect();
            let xi = psi(&g, &(z % n), &pts).unwrap();
            let back = rebase(&rebase(&xi, &(bp % n)).unwrap(), &0).unwrap();
            prop_assert_eq!(back, xi);
        }

        #[test]
        fn detour_ignores_prefix(
            trace in prop::collection::vec(0u8..50, 6..30),
            drop in 0usize..5,
        ) {
            // sequence over a complete graph whose eta values are the trace
            let n = trace.len();
            let mut edges = Vec::new();
            for u in 0..n { for v in 0..n { if u != v { edges.push((u, v, 1.0)); } } }
            let g = DigraphSpace::new(n, &edges, 0).unwrap();
            let seq: Vec<usize> = (0..n).collect();
            let eta = |&k: &usize| Ok(trace[k] as f64);
            let opts = DetourOptions::with_tail(n - 5);
            let full = detour_cost_along(&g, &seq, eta, opts).unwrap();
            let cut = detour_cost_along(&g, &seq[drop..], eta, opts).unwrap();
            prop_assert_eq!(full.value, cut.value);
        }
    }

    #[test]
    fn oracle_matches_psi_on_worked_example() {
        let g = three_vertex();
        let o = digraph_brute_oracle(&g).unwrap();
        for z in 0..3 {
            assert_eq!(
                psi(&g, &z, &[0, 1, 2]).unwrap().values(),
                o.psi(0, z).as_slice()
            );
        }
    }
}
