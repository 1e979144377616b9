//! Supremum of a ratio over simple closed curves: exhaustive grid scan, then
//! golden-section refinement between the best grid slopes and their Farey
//! neighbours.

use std::cmp::Ordering;

use super::grid::SlopeGrid;
use super::slope::CurveSlope;

const CANDIDATES: usize = 4;
/// Resolution of the refinement parameter.
const REFINE_DENOM: i64 = 1 << 30;
const GOLDEN_STEPS: usize = 48;

/// A positive function on slopes, available both on the grid and pointwise.
pub(crate) trait Objective {
    fn on_grid(&self, i: usize) -> f64;
    fn at(&self, c: CurveSlope) -> f64;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Best {
    pub value: f64,
    pub witness: CurveSlope,
}

impl Best {
    fn offer(&mut self, value: f64, c: CurveSlope) {
        if better(value, c, self.value, self.witness) {
            self.value = value;
            self.witness = c;
        }
    }
}

fn better(v: f64, c: CurveSlope, w: f64, d: CurveSlope) -> bool {
    match v.partial_cmp(&w) {
        Some(Ordering::Greater) => true,
        Some(Ordering::Equal) => c.tie_order(&d) == Ordering::Less,
        _ => false,
    }
}

/// Indices of the best few grid entries, best first.
fn top_candidates(
    grid: &SlopeGrid,
    obj: &impl Objective,
    indices: impl Iterator<Item = usize>,
) -> Vec<(f64, usize)> {
    let mut top: Vec<(f64, usize)> = Vec::with_capacity(CANDIDATES + 1);
    let mut floor = f64::NEG_INFINITY;
    for i in indices {
        let v = obj.on_grid(i);
        if v < floor {
            continue;
        }
        let pos = top
            .iter()
            .position(|&(w, j)| v > w || (v == w && better(v, grid.slope(i), w, grid.slope(j))))
            .unwrap_or(top.len());
        if pos < CANDIDATES {
            top.insert(pos, (v, i));
            top.truncate(CANDIDATES);
            if top.len() == CANDIDATES {
                floor = top[CANDIDATES - 1].0;
            }
        }
    }
    top
}

/// Stern–Brocot parents of a positive slope `p/q`.
fn parents(p: i64, q: i64) -> ((i64, i64), (i64, i64)) {
    let (mut l, mut r) = ((0i64, 1i64), (1i64, 0i64));
    loop {
        let m = (l.0 + r.0, l.1 + r.1);
        if m == (p, q) {
            return (l, r);
        }
        if p * m.1 > q * m.0 {
            l = m;
        } else {
            r = m;
        }
    }
}

/// The two slopes adjacent to `c` among those with `max(|p|, q) ≤ depth`, as
/// vectors oriented to have positive inner product with `c`.
fn neighbours(c: CurveSlope, depth: i64) -> [(i64, i64); 2] {
    let (p, q) = c.as_vector();
    let raw = if q == 0 {
        [(depth, 1), (-depth, 1)]
    } else if p == 0 {
        [(1, depth), (-1, depth)]
    } else {
        let (l, r) = parents(p.abs(), q);
        let fit = |a: (i64, i64)| {
            // largest j with a + j·c inside the grid
            let (cp, cq) = (p.abs(), q);
            let jp = (depth - a.0) / cp;
            let jq = (depth - a.1) / cq;
            let j = jp.min(jq);
            (a.0 + j * cp, a.1 + j * cq)
        };
        let (a, b) = (fit(l), fit(r));
        if p < 0 {
            [(-a.0, a.1), (-b.0, b.1)]
        } else {
            [a, b]
        }
    };
    raw.map(|u| {
        if u.0 * p + u.1 * q < 0 {
            (-u.0, -u.1)
        } else {
            u
        }
    })
}

/// Golden-section maximisation over the segment from `u` to `c`.
fn refine_segment(obj: &impl Objective, u: (i64, i64), c: (i64, i64), best: &mut Best) {
    let point = |k: i64| {
        let i = REFINE_DENOM - k;
        CurveSlope::from_vector(i * u.0 + k * c.0, i * u.1 + k * c.1)
            .expect("refinement vectors are nonzero")
    };
    let eval = |k: i64, best: &mut Best| {
        let s = point(k);
        let v = obj.at(s);
        best.offer(v, s);
        v
    };
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let to_k = |t: f64| (t * REFINE_DENOM as f64).round() as i64;
    let mut a = hi - g * (hi - lo);
    let mut b = lo + g * (hi - lo);
    let mut fa = eval(to_k(a), best);
    let mut fb = eval(to_k(b), best);
    for _ in 0..GOLDEN_STEPS {
        if to_k(b) - to_k(a) <= 1 {
            break;
        }
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + g * (hi - lo);
            fb = eval(to_k(b), best);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - g * (hi - lo);
            fa = eval(to_k(a), best);
        }
    }
}

/// Supremum of `obj` over grid entries with the given indices at `depth`,
/// refined around the best candidates.
pub(crate) fn sup_search(
    grid: &SlopeGrid,
    obj: &impl Objective,
    indices: impl Iterator<Item = usize>,
    depth: u32,
) -> Best {
    let top = top_candidates(grid, obj, indices);
    let (v0, i0) = top[0];
    let mut best = Best {
        value: v0,
        witness: grid.slope(i0),
    };
    for &(_, i) in &top {
        let c = grid.slope(i);
        for u in neighbours(c, depth as i64) {
            refine_segment(obj, u, c.as_vector(), &mut best);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbours_are_adjacent() {
        for (p, q) in [(1, 1), (2, 3), (-3, 7), (0, 1), (1, 0), (5, 1)] {
            let c = CurveSlope::new(p, q).unwrap();
            for u in neighbours(c, 10) {
                assert_eq!((u.0 * q - u.1 * p).abs(), 1, "{c} {u:?}");
                assert!(u.0.abs() <= 10 && u.1.abs() <= 10);
                assert!(u.0 * p + u.1 * q > 0);
            }
        }
    }

    struct Bump(f64);

    impl Objective for Bump {
        fn on_grid(&self, _: usize) -> f64 {
            unreachable!()
        }
        fn at(&self, c: CurveSlope) -> f64 {
            let x = c.p() as f64 / c.q() as f64;
            1.0 - (x - self.0).powi(2)
        }
    }

    #[test]
    fn golden_section_finds_interior_max() {
        let target = 0.5 + 1.0 / 17.0;
        let mut best = Best {
            value: f64::NEG_INFINITY,
            witness: CurveSlope::HORIZONTAL,
        };
        refine_segment(&Bump(target), (1, 2), (3, 4), &mut best);
        assert!((best.witness.to_f64() - target).abs() < 1e-8);
    }
}
