//! Maximally stretched curves, and a search for a point nearly on a geodesic
//! from x to z whose maxsets can then be compared.

use lipschitz_horo::torus::{maxset, near_additive_search, teich_from_xy, Branch, TracePoint};

fn main() -> lipschitz_horo::Result<()> {
    let x = TracePoint::modular();
    let z = teich_from_xy(4.0, 4.0, Branch::Minus)?;
    let depth = 500;
    let set = maxset(&x, &z, depth, 1e-9)?;
    println!("maxset(x, z): {}", join(&set));
    for branch in [Branch::Plus, Branch::Minus] {
        let r = near_additive_search(&x, &z, branch, depth, 1e-6, 300)?;
        println!(
            "{branch:?}: y = ({:.6}, {:.6}, {:.6})  defect {:.2e} after {} evaluations",
            r.y.x(),
            r.y.y(),
            r.y.z(),
            r.defect,
            r.evaluations
        );
        println!("  maxset(x,y) {}", join(&r.maxset_xy));
        println!("  maxset(y,z) {}", join(&r.maxset_yz));
        println!("  common slopes inside maxset(x,z): {}", r.contained);
    }
    Ok(())
}

fn join(s: &[impl std::fmt::Display]) -> String {
    s.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
