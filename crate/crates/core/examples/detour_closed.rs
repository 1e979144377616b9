//! Exact detour costs between horofunctions of formal laminations.

use lipschitz_horo::lamination::{
    detour_cost_ratio, detour_metric_ratio, ll_relation, rational_to_string, ErgodicBasis,
    FormalLamination, TestCurveModel,
};

fn main() -> lipschitz_horo::Result<()> {
    let basis = ErgodicBasis::new(["eta1", "eta2"])?;
    let sigma = FormalLamination::from_integers(&basis, &[2, 1])?;
    let beta = FormalLamination::from_integers(&basis, &[1, 3])?;
    let model = TestCurveModel::from_integers(&[vec![1, 0, 2], vec![0, 1, 1]], &[2, 3, 4])?;

    let rel = ll_relation(&sigma, &beta)?;
    let f: Vec<String> = rel.f.iter().flatten().map(rational_to_string).collect();
    println!("sigma << beta: {}  f = [{}]", rel.holds, f.join(", "));
    let show = |r: Option<num_rational::BigRational>| {
        r.map_or("inf".to_string(), |r| {
            format!("log({})", rational_to_string(&r))
        })
    };
    println!(
        "H(beta, sigma) = {}",
        show(detour_cost_ratio(&beta, &sigma, &model)?)
    );
    println!(
        "H(sigma, beta) = {}",
        show(detour_cost_ratio(&sigma, &beta, &model)?)
    );
    println!(
        "delta          = {}",
        show(detour_metric_ratio(&sigma, &beta)?)
    );

    // dropping a component breaks absolute continuity one way only
    let partial = FormalLamination::from_integers(&basis, &[5, 0])?;
    println!(
        "H(beta, partial) = {}",
        show(detour_cost_ratio(&beta, &partial, &model)?)
    );
    println!(
        "H(partial, beta) = {}",
        show(detour_cost_ratio(&partial, &beta, &model)?)
    );
    Ok(())
}
