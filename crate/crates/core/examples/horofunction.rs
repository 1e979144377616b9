//! Horofunction of a measured lamination at a few points, and its
//! insensitivity to the lamination's weight.

use lipschitz_horo::torus::{horofunction, teich_from_xy, Branch, MeasuredLam, TracePoint};

fn main() -> lipschitz_horo::Result<()> {
    let base = TracePoint::modular();
    let depth = 2000;
    let phi = 0.5 * (1.0 + 5f64.sqrt());
    let laminations = [
        ("0/1", MeasuredLam::new(0.0, 1.0, 1.0)?),
        ("1/1", MeasuredLam::new(1.0, 1.0, 1.0)?),
        ("golden", MeasuredLam::new(phi, 1.0, 1.0)?),
    ];
    let points = [
        teich_from_xy(4.0, 4.0, Branch::Minus)?,
        teich_from_xy(3.0, 5.0, Branch::Plus)?,
        teich_from_xy(6.0, 3.5, Branch::Minus)?,
    ];
    for (name, mu) in &laminations {
        for x in &points {
            let h = horofunction(mu, x, &base, depth)?;
            let h7 = horofunction(&mu.scaled(7.3)?, x, &base, depth)?;
            println!(
                "mu={name:7} x=({:.4},{:.4},{:.4})  Psi={:+.12}  witness {}  err {:.1e}  scaled equal: {}",
                x.x(),
                x.y(),
                x.z(),
                h.value,
                h.witness,
                h.error.unwrap_or(f64::NAN),
                h.value.to_bits() == h7.value.to_bits()
            );
        }
    }
    Ok(())
}
