//! Twisting the modular torus about 0/1: the distance functions of the orbit
//! converge to the horofunction of the twisting curve.

use std::time::Instant;

use lipschitz_horo::torus::{
    convergence_table, probe_points, twist_sequence, CurveSlope, MeasuredLam, TracePoint,
};

fn main() -> lipschitz_horo::Result<()> {
    let base = TracePoint::modular();
    let c = CurveSlope::HORIZONTAL;
    let t = Instant::now();
    let seq = twist_sequence(c, 30, &base)?;
    let probes = probe_points(&base, 5, 42);
    let (_, rows) = convergence_table(&seq, &MeasuredLam::curve(c), &probes, &base, 2000)?;
    println!("n,d_b_xn,residual,witness");
    for r in &rows {
        println!("{},{:.10},{:.3e},{}", r.n, r.d_b_xn, r.residual, r.witness);
    }
    eprintln!("{:.1}s", t.elapsed().as_secs_f64());
    Ok(())
}
