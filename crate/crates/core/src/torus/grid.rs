//! The depth-`Q` slope grid and per-point length tables over it.
//!
//! The grid holds every canonical slope `p/q` with `max(|p|, q) ≤ Q`, in the
//! order `0/1, 1/0`, positive cone (left-first Stern–Brocot pre-order),
//! negative cone (same order, reflected). Length tables follow that order.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::point::TracePoint;
use super::slope::CurveSlope;
use super::trace::{length_from_log_trace, vieta};
use crate::error::{Error, Result};

/// Largest supported Farey depth.
pub const MAX_DEPTH: u32 = 4096;
const TABLE_CACHE: usize = 8;

pub(crate) fn check_depth(depth: u32) -> Result<()> {
    if depth == 0 || depth > MAX_DEPTH {
        return Err(Error::contract(format!(
            "depth {depth} outside 1..={MAX_DEPTH}"
        )));
    }
    Ok(())
}

pub(crate) struct SlopeGrid {
    depth: u32,
    positive: Vec<(u32, u32)>,
    /// Full-table indices of slopes with `max(|p|, q) ≤ depth / 2`.
    coarse: Vec<u32>,
}

/// Walks the positive cone to depth `q_max`, calling `visit(p, q, u)` in grid
/// order with the log-trace `u` of `p/q`.
fn walk_cone(q_max: u32, ul: f64, ur: f64, um: f64, mut visit: impl FnMut(u32, u32, f64)) {
    struct Node {
        l: (u32, u32),
        r: (u32, u32),
        ul: f64,
        ur: f64,
        um: f64,
    }
    if q_max < 1 {
        return;
    }
    let mut stack = vec![Node {
        l: (0, 1),
        r: (1, 0),
        ul,
        ur,
        um,
    }];
    while let Some(n) = stack.pop() {
        let m = (n.l.0 + n.r.0, n.l.1 + n.r.1);
        visit(m.0, m.1, n.um);
        let right = (m.0 + n.r.0, m.1 + n.r.1);
        if right.0.max(right.1) <= q_max {
            stack.push(Node {
                l: m,
                r: n.r,
                ul: n.um,
                ur: n.ur,
                um: vieta(n.um, n.ur, n.ul),
            });
        }
        let left = (m.0 + n.l.0, m.1 + n.l.1);
        if left.0.max(left.1) <= q_max {
            stack.push(Node {
                l: n.l,
                r: m,
                ul: n.ul,
                ur: n.um,
                um: vieta(n.um, n.ul, n.ur),
            });
        }
    }
}

impl SlopeGrid {
    fn build(depth: u32) -> Self {
        let mut positive = Vec::new();
        walk_cone(depth, 0.0, 0.0, 0.0, |p, q, _| positive.push((p, q)));
        let half = depth / 2;
        let n = positive.len();
        let mut coarse = Vec::new();
        if half >= 1 {
            coarse.extend([0u32, 1]);
            for sign in 0..2 {
                for (i, &(p, q)) in positive.iter().enumerate() {
                    if p.max(q) <= half {
                        coarse.push((2 + sign * n + i) as u32);
                    }
                }
            }
        }
        Self {
            depth,
            positive,
            coarse,
        }
    }

    pub(crate) fn depth(&self) -> u32 {
        self.depth
    }

    pub(crate) fn len(&self) -> usize {
        2 + 2 * self.positive.len()
    }

    pub(crate) fn coarse(&self) -> &[u32] {
        &self.coarse
    }

    pub(crate) fn slope(&self, i: usize) -> CurveSlope {
        let n = self.positive.len();
        let (p, q) = match i {
            0 => (0, 1),
            1 => (1, 0),
            _ if i < 2 + n => {
                let (p, q) = self.positive[i - 2];
                (p as i64, q as i64)
            }
            _ => {
                let (p, q) = self.positive[i - 2 - n];
                (-(p as i64), q as i64)
            }
        };
        CurveSlope::canonical_unchecked(p, q)
    }
}

/// The shared grid of the given depth.
pub(crate) fn grid(depth: u32) -> Arc<SlopeGrid> {
    static GRIDS: OnceLock<Mutex<HashMap<u32, Arc<SlopeGrid>>>> = OnceLock::new();
    let mut map = GRIDS.get_or_init(Default::default).lock().unwrap();
    map.entry(depth)
        .or_insert_with(|| Arc::new(SlopeGrid::build(depth)))
        .clone()
}

type TableKey = (u32, [u64; 3]);

struct TableCache {
    entries: Vec<(TableKey, Arc<Vec<f64>>)>,
}

/// Hyperbolic lengths at `pt` of every grid slope, in grid order.
pub(crate) fn length_table(pt: &TracePoint, depth: u32) -> Arc<Vec<f64>> {
    static CACHE: OnceLock<Mutex<TableCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        Mutex::new(TableCache {
            entries: Vec::new(),
        })
    });
    let key = (depth, pt.log_traces().map(f64::to_bits));
    {
        let mut c = cache.lock().unwrap();
        if let Some(pos) = c.entries.iter().position(|(k, _)| *k == key) {
            let hit = c.entries.remove(pos);
            let table = hit.1.clone();
            c.entries.push(hit);
            return table;
        }
    }
    let table = Arc::new(build_table(pt, depth));
    let mut c = cache.lock().unwrap();
    if !c.entries.iter().any(|(k, _)| *k == key) {
        if c.entries.len() >= TABLE_CACHE {
            c.entries.remove(0);
        }
        c.entries.push((key, table.clone()));
    }
    table
}

fn build_table(pt: &TracePoint, depth: u32) -> Vec<f64> {
    let [lx, ly, lz] = pt.log_traces();
    let n = grid(depth).positive.len();
    let mut out = Vec::with_capacity(2 + 2 * n);
    out.push(length_from_log_trace(lx));
    out.push(length_from_log_trace(ly));
    walk_cone(depth, lx, ly, lz, |_, _, u| {
        out.push(length_from_log_trace(u))
    });
    walk_cone(depth, lx, ly, pt.log_conjugate_z(), |_, _, u| {
        out.push(length_from_log_trace(u))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::point::{teich_from_xy, Branch};
    use crate::torus::trace::curve_length;
    use num_integer::Integer;

    #[test]
    fn grid_is_complete_and_canonical() {
        let g = grid(12);
        let mut seen = std::collections::HashSet::new();
        for i in 0..g.len() {
            let c = g.slope(i);
            assert!(c.p().abs() <= 12 && c.q() <= 12);
            assert!(seen.insert(c));
        }
        let mut count = 2;
        for q in 1..=12i64 {
            for p in -12..=12i64 {
                if p != 0 && p.gcd(&q) == 1 {
                    count += 1;
                }
            }
        }
        assert_eq!(g.len(), count);
        for &i in g.coarse() {
            let c = g.slope(i as usize);
            assert!(c.p().abs() <= 6 && c.q() <= 6);
        }
    }

    #[test]
    fn table_matches_single_curve_lengths() {
        let pt = teich_from_xy(3.7, 5.2, Branch::Plus).unwrap();
        let g = grid(40);
        let t = length_table(&pt, 40);
        for i in 0..g.len() {
            let c = g.slope(i);
            let l = curve_length(&pt, c).unwrap();
            assert!((t[i] - l).abs() <= 1e-13 * l, "{c}: {} vs {l}", t[i]);
        }
    }

    #[test]
    fn depth_bounds() {
        assert!(check_depth(0).is_err());
        assert!(check_depth(MAX_DEPTH + 1).is_err());
        assert!(check_depth(1).is_ok());
    }
}
