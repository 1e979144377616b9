//! Mapping classes act by isometries: L(gx, gy) = L(x, y).

use lipschitz_horo::torus::{lipschitz_distance, mcg_apply, teich_from_xy, Branch, Gl2Z};

fn main() -> lipschitz_horo::Result<()> {
    let x = teich_from_xy(3.2, 4.1, Branch::Plus)?;
    let y = teich_from_xy(5.0, 3.6, Branch::Minus)?;
    let depth = 2000;
    let d = lipschitz_distance(&x, &y, depth)?;
    println!("L(x,y) = {:.15} at {}", d.value, d.witness);
    let gs = [
        ("T", Gl2Z::T),
        ("S", Gl2Z::S),
        ("R", Gl2Z::R),
        ("[[2,1],[1,1]]", Gl2Z::new(2, 1, 1, 1)?),
        (
            "T^3 S T^-2",
            Gl2Z::T.pow(3).mul(&Gl2Z::S).mul(&Gl2Z::T.pow(-2)),
        ),
    ];
    for (name, g) in gs {
        let dg = lipschitz_distance(&mcg_apply(&g, &x)?, &mcg_apply(&g, &y)?, depth)?;
        println!(
            "{name:14} L(gx,gy) = {:.15}  witness {} (g·{} = {})  |diff| {:.1e}",
            dg.value,
            dg.witness,
            d.witness,
            g.apply_slope(d.witness),
            (dg.value - d.value).abs()
        );
    }
    Ok(())
}
