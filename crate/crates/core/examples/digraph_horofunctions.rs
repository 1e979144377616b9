//! The generic machinery on a weighted digraph, where every value is exact.

use lipschitz_horo::horo::{
    detour_cost_along, digraph_brute_oracle, psi, AsymmetricSpace, DetourOptions, DigraphSpace,
};

fn main() -> lipschitz_horo::Result<()> {
    // a directed 5-cycle with cheap forward and expensive backward edges
    let mut text = String::from("base 0\n");
    for v in 0..5 {
        text += &format!("{v} {} 1\n{} {v} 3\n", (v + 1) % 5, (v + 1) % 5);
    }
    let g = DigraphSpace::parse(&text)?;
    let vs: Vec<usize> = g.vertices().collect();
    let oracle = digraph_brute_oracle(&g)?;
    for &z in &vs {
        let t = psi(&g, &z, &vs)?;
        println!(
            "psi_{z} = {:?}  oracle agrees: {}",
            t.values(),
            t.values() == oracle.psi(0, z)
        );
    }
    // H(ψ_z, ψ_w) along the constant sequence at z
    for (z, w) in [(1, 1), (1, 3), (3, 1)] {
        let eta = |x: &usize| Ok(g.distance(x, &w)? - g.distance(g.base(), &w)?);
        let h = detour_cost_along(&g, &[z, z], eta, DetourOptions::with_tail(1))?;
        println!("H(psi_{z}, psi_{w}) = {}", h.value);
    }
    Ok(())
}
