//! Recursive curve traces against explicit matrix words in SL(2,R).

use lipschitz_horo::torus::{
    commutator_trace, curve_trace, curve_word, realize_matrices, teich_from_xy, Branch, CurveSlope,
};

fn main() -> lipschitz_horo::Result<()> {
    let pt = teich_from_xy(3.7, 5.2, Branch::Plus)?;
    let (a, b) = realize_matrices(&pt)?;
    println!("tr [A,B] = {:.12}", commutator_trace(&a, &b));
    let mut worst: f64 = 0.0;
    for (p, q) in [
        (0, 1),
        (1, 0),
        (1, 1),
        (-1, 1),
        (2, 3),
        (-5, 8),
        (13, 21),
        (-34, 55),
        (40, 7),
    ] {
        let c = CurveSlope::new(p, q)?;
        let fast = curve_trace(&pt, c);
        let word = curve_word(&a, &b, c).trace();
        let rel = (fast - word).abs() / word;
        worst = worst.max(rel);
        println!("{c:>7}  recursion {fast:.10e}  word {word:.10e}  rel {rel:.1e}");
    }
    println!("max relative deviation {worst:.1e}");
    Ok(())
}
