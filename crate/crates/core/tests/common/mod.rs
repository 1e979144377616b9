#![allow(dead_code)]

pub mod golden;

use lipschitz_horo::torus::Mat2;

/// Trace of the word for `p/q`, built by multiplying matrices down the
/// Stern–Brocot tree: `A` for 0/1, `B` for 1/0 (`B⁻¹` for negative slopes).
pub fn word_trace(a: &Mat2, b: &Mat2, p: i64, q: i64) -> f64 {
    fn mul(x: &[[f64; 2]; 2], y: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
        [
            [
                x[0][0] * y[0][0] + x[0][1] * y[1][0],
                x[0][0] * y[0][1] + x[0][1] * y[1][1],
            ],
            [
                x[1][0] * y[0][0] + x[1][1] * y[1][0],
                x[1][0] * y[0][1] + x[1][1] * y[1][1],
            ],
        ]
    }
    let am = a.0;
    let bm = if p < 0 {
        let [[a, b], [c, d]] = b.0;
        [[d, -b], [-c, a]]
    } else {
        b.0
    };
    let p = p.abs();
    if p == 0 {
        return am[0][0] + am[1][1];
    }
    if q == 0 {
        return bm[0][0] + bm[1][1];
    }
    let (mut l, mut r) = ((0i64, 1i64), (1i64, 0i64));
    let (mut wl, mut wr) = (am, bm);
    loop {
        let m = (l.0 + r.0, l.1 + r.1);
        let wm = mul(&wl, &wr);
        if m == (p, q) {
            return wm[0][0] + wm[1][1];
        }
        if p * m.1 > q * m.0 {
            l = m;
            wl = wm;
        } else {
            r = m;
            wr = wm;
        }
    }
}
