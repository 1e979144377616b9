use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::config::{Format, RunConfig};
use crate::error::{Error, Result};
use crate::horo::{
    detour_cost_along, digraph_brute_oracle, psi, AsymmetricSpace, DetourOptions, DigraphSpace,
};
use crate::lamination::{
    detour_cost_closed, detour_metric_closed, ll_relation, ratio_sup_bound, rational_to_string,
    ErgodicBasis, FormalLamination, RatioSupReport, TestCurveModel,
};
use crate::torus::{
    attracting_lamination, convergence_table, horofunction, lipschitz_distance, maxset, mcg_apply,
    pa_sequence, probe_points, teich_from_xy, twist_sequence, Branch, ConvergenceRow, CurveSlope,
    Gl2Z, HoroValue, MeasuredLam, SupEstimate, TorusSpace, TracePoint,
};

/// Machine-readable command output.
pub trait Report: Serialize {
    fn csv(&self) -> String;

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => Ok(self.csv()),
        }
    }
}

/// Serializes `±∞` and NaN as strings, which JSON numbers cannot hold.
fn ext_real<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else if v.is_nan() {
        s.serialize_str("nan")
    } else if *v > 0.0 {
        s.serialize_str("inf")
    } else {
        s.serialize_str("-inf")
    }
}

fn ext_reals<S: Serializer>(v: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct W(f64);
    impl Serialize for W {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            ext_real(&self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for &x in v {
        seq.serialize_element(&W(x))?;
    }
    seq.end()
}

fn fmt_ext(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_owned()
    } else {
        format!("{v}")
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(String::new, |e| format!("{e}"))
}

#[derive(Debug, Serialize)]
pub struct DistReport {
    pub x: TracePoint,
    pub y: TracePoint,
    pub depth: u32,
    pub l_xy: SupEstimate,
    pub l_yx: SupEstimate,
}

impl Report for DistReport {
    fn csv(&self) -> String {
        let row = |name: &str, e: &SupEstimate| {
            format!(
                "{name},{},{},{},{}\n",
                e.value,
                e.witness.p(),
                e.witness.q(),
                fmt_opt(e.error)
            )
        };
        format!(
            "direction,value,witness_p,witness_q,error\n{}{}",
            row("xy", &self.l_xy),
            row("yx", &self.l_yx)
        )
    }
}

/// `L(x, y)` and `L(y, x)` with witnesses and half-depth error estimates.
pub fn cmd_dist(x: &TracePoint, y: &TracePoint, cfg: &RunConfig) -> Result<DistReport> {
    cfg.validate()?;
    Ok(DistReport {
        x: *x,
        y: *y,
        depth: cfg.depth,
        l_xy: lipschitz_distance(x, y, cfg.depth)?,
        l_yx: lipschitz_distance(y, x, cfg.depth)?,
    })
}

#[derive(Debug, Serialize)]
pub struct HoroReport {
    pub mu: MeasuredLam,
    pub x: TracePoint,
    pub base: TracePoint,
    pub horofunction: HoroValue,
}

impl Report for HoroReport {
    fn csv(&self) -> String {
        let h = &self.horofunction;
        format!(
            "value,witness_p,witness_q,error\n{},{},{},{}\n",
            h.value,
            h.witness.p(),
            h.witness.q(),
            fmt_opt(h.error)
        )
    }
}

/// `Ψ_μ(x)` relative to the configured base point.
pub fn cmd_horo(mu: &MeasuredLam, x: &TracePoint, cfg: &RunConfig) -> Result<HoroReport> {
    cfg.validate()?;
    Ok(HoroReport {
        mu: *mu,
        x: *x,
        base: cfg.base,
        horofunction: horofunction(mu, x, &cfg.base, cfg.depth)?,
    })
}

/// Which boundary-converging sequence to follow.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SequenceSpec {
    /// Iterated Dehn twist about a curve.
    Twist { curve: CurveSlope },
    /// Iterated hyperbolic matrix.
    Pa { matrix: Gl2Z },
}

impl SequenceSpec {
    /// `kind` is `twist` (param: slope `[p, q]`) or `pa` (param: matrix).
    pub fn parse(kind: &str, param: &str) -> Result<Self> {
        match kind {
            "twist" => Ok(SequenceSpec::Twist {
                curve: serde_json::from_str(param)?,
            }),
            "pa" => Ok(SequenceSpec::Pa {
                matrix: serde_json::from_str(param)?,
            }),
            other => Err(Error::Parse(format!("unknown sequence kind {other:?}"))),
        }
    }

    pub fn points(&self, n_max: usize, base: &TracePoint) -> Result<Vec<TracePoint>> {
        match self {
            SequenceSpec::Twist { curve } => twist_sequence(*curve, n_max, base),
            SequenceSpec::Pa { matrix } => pa_sequence(matrix, n_max, base),
        }
    }

    /// The lamination the sequence converges to.
    pub fn limit(&self) -> Result<MeasuredLam> {
        match self {
            SequenceSpec::Twist { curve } => Ok(MeasuredLam::curve(*curve)),
            SequenceSpec::Pa { matrix } => {
                if matrix.det() != 1 || matrix.trace().abs() <= 2 {
                    return Err(Error::contract(format!("{matrix} is not hyperbolic")));
                }
                attracting_lamination(matrix)
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConvergeReport {
    pub sequence: SequenceSpec,
    pub mu: MeasuredLam,
    pub depth: u32,
    pub probes: Vec<TracePoint>,
    #[serde(serialize_with = "ext_reals")]
    pub target: Vec<f64>,
    pub rows: Vec<ConvergenceRow>,
}

impl Report for ConvergeReport {
    fn csv(&self) -> String {
        let mut out = String::from("n,d_b_xn,residual,witness_p,witness_q\n");
        for r in &self.rows {
            out += &format!(
                "{},{},{},{},{}\n",
                r.n,
                r.d_b_xn,
                r.residual,
                r.witness.p(),
                r.witness.q()
            );
        }
        out
    }
}

/// Residual table `max_p |ψ_{xₙ}(p) − Ψ_μ(p)|` along a sequence.
pub fn cmd_converge(
    seq: &SequenceSpec,
    n_max: usize,
    probes: usize,
    cfg: &RunConfig,
) -> Result<ConvergeReport> {
    cfg.validate()?;
    if probes == 0 {
        return Err(Error::contract("need at least one probe"));
    }
    let mu = seq.limit()?;
    let points = seq.points(n_max, &cfg.base)?;
    let probe_pts = probe_points(&cfg.base, probes, cfg.seed);
    let (target, rows) = convergence_table(&points, &mu, &probe_pts, &cfg.base, cfg.depth)?;
    Ok(ConvergeReport {
        sequence: *seq,
        mu,
        depth: cfg.depth,
        probes: probe_pts,
        target: target.values().to_vec(),
        rows,
    })
}

#[derive(Debug, Serialize)]
pub struct DetourClosedReport {
    pub sigma_ll_beta: bool,
    /// `f_j = σ_j / β_j` as exact rationals, `null` off the support of `β`.
    pub f: Vec<Option<String>>,
    /// `H(Ψ_β, Ψ_σ)`.
    #[serde(serialize_with = "ext_real")]
    pub h_beta_sigma: f64,
    #[serde(serialize_with = "ext_real")]
    pub h_sigma_beta: f64,
    /// `δ(Ψ_σ, Ψ_β)`.
    #[serde(serialize_with = "ext_real")]
    pub delta: f64,
    pub infinite: bool,
    pub exact_inputs: bool,
    pub ratio_sup: RatioSupReport,
}

impl Report for DetourClosedReport {
    fn csv(&self) -> String {
        format!(
            "sigma_ll_beta,h_beta_sigma,h_sigma_beta,delta,infinite,ratio_sup_closed,ratio_sup_sampled\n{},{},{},{},{},{},{}\n",
            self.sigma_ll_beta,
            fmt_ext(self.h_beta_sigma),
            fmt_ext(self.h_sigma_beta),
            fmt_ext(self.delta),
            self.infinite,
            fmt_ext(self.ratio_sup.closed_form),
            self.ratio_sup.sampled_max
        )
    }
}

const RATIO_SAMPLES: usize = 10_000;

/// Closed-form detour costs between formal laminations over a test-curve
/// model. Without a model, the identity model on the basis is used.
pub fn cmd_detour(
    sigma: &FormalLamination,
    beta: &FormalLamination,
    model: Option<&TestCurveModel>,
    cfg: &RunConfig,
) -> Result<DetourClosedReport> {
    sigma.basis().check_same(beta.basis())?;
    let identity;
    let model = match model {
        Some(m) => m,
        None => {
            let n = sigma.basis().len();
            let m: Vec<Vec<i64>> = (0..n)
                .map(|j| (0..n).map(|k| i64::from(j == k)).collect())
                .collect();
            identity = TestCurveModel::from_integers(&m, &vec![1; n])?;
            &identity
        }
    };
    let rel = ll_relation(sigma, beta)?;
    let h_bs = detour_cost_closed(beta, sigma, model)?;
    let h_sb = detour_cost_closed(sigma, beta, model)?;
    let delta = detour_metric_closed(sigma, beta, model)?;
    Ok(DetourClosedReport {
        sigma_ll_beta: rel.holds,
        f: rel
            .f
            .iter()
            .map(|f| f.as_ref().map(rational_to_string))
            .collect(),
        h_beta_sigma: h_bs,
        h_sigma_beta: h_sb,
        delta,
        infinite: delta.is_infinite(),
        exact_inputs: sigma.is_exact() && beta.is_exact() && model.is_exact(),
        ratio_sup: ratio_sup_bound(sigma, beta, model, RATIO_SAMPLES, cfg.seed)?,
    })
}

#[derive(Debug, Serialize)]
pub struct DetourAlongReport {
    pub sequence: SequenceSpec,
    pub sigma: MeasuredLam,
    pub beta: MeasuredLam,
    /// Closed form `H(Ψ_β, Ψ_σ)` on the torus-induced model.
    #[serde(serialize_with = "ext_real")]
    pub closed_form: f64,
    /// Tail infimum of `L(b, xₙ) + Ψ_σ(xₙ)`.
    #[serde(serialize_with = "ext_real")]
    pub along: f64,
    #[serde(serialize_with = "ext_reals")]
    pub trace: Vec<f64>,
    /// Relation expected between the two values.
    pub inequality: &'static str,
}

impl Report for DetourAlongReport {
    fn csv(&self) -> String {
        let mut out = String::from("n,running,closed_form\n");
        for (n, v) in self.trace.iter().enumerate() {
            out += &format!("{n},{},{}\n", fmt_ext(*v), fmt_ext(self.closed_form));
        }
        out
    }
}

/// Slopes with `max(|p|, q) ≤ depth`, used as test curves on the torus.
pub fn small_slopes(depth: i64) -> Vec<CurveSlope> {
    let mut out = vec![CurveSlope::VERTICAL];
    for q in 1..=depth {
        for p in -depth..=depth {
            if p.gcd(&q) == 1 {
                out.push(CurveSlope::new(p, q).expect("reduced"));
            }
        }
    }
    out
}

/// `H(Ψ_β, Ψ_σ)` for torus laminations, through the induced single-component
/// model when `σ` and `β` share a slope; `+∞` otherwise.
pub fn torus_closed_detour(
    beta: &MeasuredLam,
    sigma: &MeasuredLam,
    base: &TracePoint,
) -> Result<f64> {
    if !beta.slope().same_as(&sigma.slope()) {
        return Ok(f64::INFINITY);
    }
    let basis = ErgodicBasis::new(["beta"])?;
    let unit = MeasuredLam::from_slope(beta.slope(), 1.0)?;
    let model = TestCurveModel::from_torus(&[unit], &small_slopes(12), base)?;
    let scale = |mu: &MeasuredLam| {
        let (a, b) = mu.representative();
        mu.weight() * a.abs().max(b.abs())
    };
    let fb = FormalLamination::from_f64(&basis, &[scale(beta)])?;
    let fs = FormalLamination::from_f64(&basis, &[scale(sigma)])?;
    detour_cost_closed(&fb, &fs, &model)
}

/// Detour cost of `Ψ_σ` along a sequence converging to `Ψ_β`, against the
/// closed form.
pub fn cmd_detour_along(
    seq: &SequenceSpec,
    n_max: usize,
    sigma: &MeasuredLam,
    cfg: &RunConfig,
) -> Result<DetourAlongReport> {
    cfg.validate()?;
    let beta = seq.limit()?;
    let points = seq.points(n_max, &cfg.base)?;
    let space = TorusSpace::new(cfg.base, cfg.depth)?;
    let est = detour_cost_along(
        &space,
        &points,
        |x| Ok(horofunction(sigma, x, &cfg.base, cfg.depth)?.value),
        DetourOptions::with_tail(1),
    )?;
    Ok(DetourAlongReport {
        sequence: *seq,
        sigma: *sigma,
        beta,
        closed_form: torus_closed_detour(&beta, sigma, &cfg.base)?,
        along: est.value,
        trace: est.trace,
        inequality: "along >= closed_form",
    })
}

#[derive(Debug, Serialize)]
pub struct McgCase {
    pub g: Gl2Z,
    pub x: TracePoint,
    pub y: TracePoint,
    pub l_xy: f64,
    pub l_gxgy: f64,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct McgReport {
    pub depth: u32,
    pub cases: Vec<McgCase>,
    pub max_residual: f64,
}

impl Report for McgReport {
    fn csv(&self) -> String {
        let mut out = String::from("g,l_xy,l_gxgy,residual\n");
        for c in &self.cases {
            out += &format!("\"{}\",{},{},{}\n", c.g, c.l_xy, c.l_gxgy, c.residual);
        }
        out
    }
}

fn mcg_case(g: &Gl2Z, x: &TracePoint, y: &TracePoint, depth: u32) -> Result<McgCase> {
    let l_xy = lipschitz_distance(x, y, depth)?.value;
    let gx = mcg_apply(g, x)?;
    let gy = mcg_apply(g, y)?;
    let l_gxgy = lipschitz_distance(&gx, &gy, depth)?.value;
    Ok(McgCase {
        g: *g,
        x: *x,
        y: *y,
        l_xy,
        l_gxgy,
        residual: (l_gxgy - l_xy).abs(),
    })
}

/// Isometry residual `|L(gx, gy) − L(x, y)|`.
pub fn cmd_mcg(g: &Gl2Z, x: &TracePoint, y: &TracePoint, cfg: &RunConfig) -> Result<McgReport> {
    cfg.validate()?;
    let case = mcg_case(g, x, y, cfg.depth)?;
    Ok(McgReport {
        depth: cfg.depth,
        max_residual: case.residual,
        cases: vec![case],
    })
}

/// A seeded point of the chart with first two traces in `[2.9, 6]`.
pub fn random_point(rng: &mut impl Rng) -> TracePoint {
    loop {
        let x = rng.gen_range(2.9..6.0);
        let y = rng.gen_range(2.9..6.0);
        let branch = if rng.gen_bool(0.5) {
            Branch::Plus
        } else {
            Branch::Minus
        };
        if let Ok(p) = teich_from_xy(x, y, branch) {
            return p;
        }
    }
}

/// A seeded product of at most `max_len` generators `T^{±1}`, `S`, `R`.
pub fn random_mapping_class(rng: &mut impl Rng, max_len: usize) -> Gl2Z {
    let gens = [Gl2Z::T, Gl2Z::T.inverse(), Gl2Z::S, Gl2Z::R];
    let len = rng.gen_range(1..=max_len);
    (0..len).fold(Gl2Z::IDENTITY, |acc, _| {
        acc.mul(&gens[rng.gen_range(0..gens.len())])
    })
}

/// Seeded suite of isometry residuals.
pub fn cmd_mcg_suite(cases: usize, cfg: &RunConfig) -> Result<McgReport> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cases);
    for _ in 0..cases {
        let g = random_mapping_class(&mut rng, 5);
        let x = random_point(&mut rng);
        let y = random_point(&mut rng);
        out.push(mcg_case(&g, &x, &y, cfg.depth)?);
    }
    let max_residual = out.iter().map(|c| c.residual).fold(0.0, f64::max);
    Ok(McgReport {
        depth: cfg.depth,
        cases: out,
        max_residual,
    })
}

#[derive(Debug, Serialize)]
pub struct MaxsetReport {
    pub x: TracePoint,
    pub y: TracePoint,
    pub depth: u32,
    pub tol: f64,
    pub count: usize,
    /// The first `limit` slopes in tie-break order.
    pub slopes: Vec<CurveSlope>,
}

impl Report for MaxsetReport {
    fn csv(&self) -> String {
        let mut out = String::from("p,q\n");
        for s in &self.slopes {
            out += &format!("{},{}\n", s.p(), s.q());
        }
        out
    }
}

pub fn cmd_maxset(
    x: &TracePoint,
    y: &TracePoint,
    limit: usize,
    cfg: &RunConfig,
) -> Result<MaxsetReport> {
    cfg.validate()?;
    let mut slopes = maxset(x, y, cfg.depth, cfg.tol)?;
    let count = slopes.len();
    slopes.truncate(limit);
    Ok(MaxsetReport {
        x: *x,
        y: *y,
        depth: cfg.depth,
        tol: cfg.tol,
        count,
        slopes,
    })
}

#[derive(Debug, Serialize)]
pub struct GraphDemoReport {
    pub vertices: usize,
    pub base: usize,
    /// `psi[z][x] = d(x, z) − d(b, z)`.
    pub psi: Vec<Vec<f64>>,
    /// `h[z][w]`: detour cost of `ψ_w` along the constant sequence at `z`.
    #[serde(serialize_with = "nested_ext")]
    pub h: Vec<Vec<f64>>,
    pub distinct_psi_tables: usize,
    pub exact_match: bool,
}

fn nested_ext<S: Serializer>(v: &[Vec<f64>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Row<'a>(&'a [f64]);
    impl Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            ext_reals(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}

impl Report for GraphDemoReport {
    fn csv(&self) -> String {
        let mut out = String::from("z,x,psi\n");
        for (z, row) in self.psi.iter().enumerate() {
            for (x, v) in row.iter().enumerate() {
                out += &format!("{z},{x},{v}\n");
            }
        }
        out
    }
}

/// The three-vertex demo graph.
pub const DEMO_GRAPH: &str = "base 0\n0 1 1\n1 0 4\n1 2 2\n2 1 1\n0 2 5\n2 0 6\n";

/// ψ and detour tables of a weighted digraph through the generic routines,
/// compared exactly with a brute-force all-pairs oracle.
pub fn cmd_graph_demo(g: &DigraphSpace) -> Result<GraphDemoReport> {
    let oracle = digraph_brute_oracle(g)?;
    let b = *g.base();
    let vs: Vec<usize> = g.vertices().collect();
    let mut exact = true;
    let mut psi_rows = Vec::with_capacity(vs.len());
    for &z in &vs {
        let t = psi(g, &z, &vs)?;
        exact &= t.values() == oracle.psi(b, z).as_slice();
        psi_rows.push(t.values().to_vec());
    }
    let mut h = Vec::with_capacity(vs.len());
    for &z in &vs {
        let mut row = Vec::with_capacity(vs.len());
        for &w in &vs {
            let table = &psi_rows[w];
            let est = detour_cost_along(g, &[z], |x| Ok(table[*x]), DetourOptions::with_tail(1))?;
            let brute = oracle.dist[b][z] + oracle.dist[z][w] - oracle.dist[b][w];
            exact &= est.value == brute;
            row.push(est.value);
        }
        h.push(row);
    }
    exact &= (0..vs.len())
        .all(|x| (0..vs.len()).all(|y| g.distance(&x, &y).ok() == Some(oracle.dist[x][y])));
    Ok(GraphDemoReport {
        vertices: vs.len(),
        base: b,
        psi: psi_rows,
        h,
        distinct_psi_tables: oracle.psi_tables.len(),
        exact_match: exact,
    })
}
