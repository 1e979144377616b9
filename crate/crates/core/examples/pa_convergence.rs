//! Orbit of a pseudo-Anosov class: ψ_{x_n} settles on the horofunction of
//! the attracting lamination, and the witnesses are Fibonacci ratios.

use lipschitz_horo::torus::{
    attracting_lamination, convergence_table, pa_sequence, probe_points, Gl2Z, TracePoint,
};

fn main() -> lipschitz_horo::Result<()> {
    let base = TracePoint::modular();
    let g = Gl2Z::new(2, 1, 1, 1)?;
    let mu = attracting_lamination(&g)?;
    println!("attracting slope {:.15}", mu.slope().value());
    let seq = pa_sequence(&g, 5, &base)?;
    let probes = probe_points(&base, 5, 42);
    let (_, rows) = convergence_table(&seq, &mu, &probes, &base, 2000)?;
    for r in &rows {
        println!(
            "n={}  d(b,x_n)={:.10}  residual {:.1e}  witness {} = {:.8}",
            r.n,
            r.d_b_xn,
            r.residual,
            r.witness,
            r.witness.to_f64()
        );
    }
    Ok(())
}
