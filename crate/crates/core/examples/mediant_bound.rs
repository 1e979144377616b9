//! Sampled ratios i(σ, η) / i(β, η) never exceed max_j σ_j / β_j, and get
//! close to it once a test curve sees mostly one component.

use lipschitz_horo::lamination::{ratio_sup_bound, ErgodicBasis, FormalLamination, TestCurveModel};

fn main() -> lipschitz_horo::Result<()> {
    let basis = ErgodicBasis::new(["a", "b", "c"])?;
    let sigma = FormalLamination::from_integers(&basis, &[6, 1, 2])?;
    let beta = FormalLamination::from_integers(&basis, &[2, 1, 1])?;
    let spread = TestCurveModel::from_integers(&[vec![1, 2], vec![3, 1], vec![2, 2]], &[1, 1])?;
    let peaked = TestCurveModel::from_integers(
        &[vec![1, 2, 10_000], vec![3, 1, 1], vec![2, 2, 0]],
        &[1, 1, 1],
    )?;
    for (name, model) in [("spread", spread), ("near-diagonal", peaked)] {
        let r = ratio_sup_bound(&sigma, &beta, &model, 10_000, 1)?;
        println!(
            "{name:14} bound {}  sampled max {}  gap {:.2e}  violations {}",
            r.closed_form_exact.as_deref().unwrap_or("inf"),
            r.sampled_max_exact.as_deref().unwrap_or("-"),
            r.gap,
            r.violations
        );
    }
    Ok(())
}
