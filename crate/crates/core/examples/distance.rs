//! Lipschitz distance in both directions between two points of the chart.

use std::time::Instant;

use lipschitz_horo::torus::{lipschitz_distance, teich_from_xy, Branch, TracePoint};

fn main() -> lipschitz_horo::Result<()> {
    let x = TracePoint::modular();
    let y = teich_from_xy(4.0, 4.0, Branch::Minus)?;
    for depth in [250, 1000, 2000] {
        let t = Instant::now();
        let xy = lipschitz_distance(&x, &y, depth)?;
        let yx = lipschitz_distance(&y, &x, depth)?;
        println!(
            "Q={depth:5}  L(x,y)={:.12} at {}  L(y,x)={:.12} at {}  err={:.1e}/{:.1e}  {:.2}s",
            xy.value,
            xy.witness,
            yx.value,
            yx.witness,
            xy.error.unwrap_or(f64::NAN),
            yx.error.unwrap_or(f64::NAN),
            t.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
