//! The running detour value d(b, x_n) + Ψ_σ(x_n) along twist and
//! pseudo-Anosov orbits, next to the closed form.

use lipschitz_horo::cli::{cmd_detour_along, RunConfig, SequenceSpec};
use lipschitz_horo::torus::MeasuredLam;

fn main() -> lipschitz_horo::Result<()> {
    let cfg = RunConfig::default();
    let phi = 0.5 * (1.0 + 5f64.sqrt());
    let cases = [
        ("twist", "[0,1]", 12, MeasuredLam::new(0.0, 1.0, 2.0)?),
        ("twist", "[0,1]", 12, MeasuredLam::new(1.0, 1.0, 1.0)?),
        ("pa", "[[2,1],[1,1]]", 5, MeasuredLam::new(phi, 1.0, 1.0)?),
    ];
    for (kind, param, n_max, sigma) in cases {
        let seq = SequenceSpec::parse(kind, param)?;
        let r = cmd_detour_along(&seq, n_max, &sigma, &cfg)?;
        let trace: Vec<String> = r.trace.iter().map(|v| format!("{v:.4}")).collect();
        println!(
            "{kind} {param} sigma slope {:.4}: closed form {}  running [{}]",
            sigma.slope().value(),
            r.closed_form,
            trace.join(" ")
        );
    }
    Ok(())
}
