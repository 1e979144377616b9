use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::AsymmetricSpace;
use crate::error::{Error, Result};

/// A finite weighted digraph with its shortest-path distance.
///
/// Absent edges have weight `f64::INFINITY`. Every vertex must reach, and be
/// reachable from, the base vertex, so that the symmetrized distance to the
/// base is finite.
#[derive(Clone, Debug)]
pub struct DigraphSpace {
    n: usize,
    weights: Vec<f64>,
    base: usize,
    dist: Vec<f64>,
}

impl DigraphSpace {
    pub fn new(n: usize, edges: &[(usize, usize, f64)], base: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::contract("digraph needs at least one vertex"));
        }
        if base >= n {
            return Err(Error::contract(format!("base vertex {base} out of range")));
        }
        let mut weights = vec![f64::INFINITY; n * n];
        for i in 0..n {
            weights[i * n + i] = 0.0;
        }
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!("edge {u}->{v} out of range")));
            }
            if w.is_nan() || w < 0.0 {
                return Err(Error::contract(format!(
                    "negative weight {w} on edge {u}->{v}"
                )));
            }
            // parallel edges keep the lighter one
            let slot = &mut weights[u * n + v];
            *slot = slot.min(w);
        }
        let dist = dijkstra_all_pairs(n, &weights);
        for v in 0..n {
            if !dist[base * n + v].is_finite() || !dist[v * n + base].is_finite() {
                return Err(Error::contract(format!(
                    "vertex {v} is not strongly connected to the base vertex {base}"
                )));
            }
        }
        Ok(Self {
            n,
            weights,
            base,
            dist,
        })
    }

    /// Parses the edge-list format: a `base <v>` header followed by `u v w` lines.
    ///
    /// Blank lines and `#` comments are ignored. The vertex count is one more
    /// than the largest index mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        let mut base = None;
        let mut edges = Vec::new();
        let mut n = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: malformed `{}`", lineno + 1, raw.trim()));
            match fields.as_slice() {
                ["base", v] => {
                    if base.is_some() {
                        return Err(Error::Parse(format!("line {}: duplicate base", lineno + 1)));
                    }
                    let v: usize = v.parse().map_err(|_| bad())?;
                    n = n.max(v + 1);
                    base = Some(v);
                }
                [u, v, w] => {
                    let u: usize = u.parse().map_err(|_| bad())?;
                    let v: usize = v.parse().map_err(|_| bad())?;
                    let w: f64 = w.parse().map_err(|_| bad())?;
                    n = n.max(u + 1).max(v + 1);
                    edges.push((u, v, w));
                }
                _ => return Err(bad()),
            }
        }
        let base = base.ok_or_else(|| Error::Parse("missing `base <v>` header".into()))?;
        Self::new(n, &edges, base)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edge weight, `INFINITY` when absent.
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.weights[u * self.n + v]
    }

    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                let w = self.weight(u, v);
                if u != v && w.is_finite() {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("base {}\n", self.base);
        for (u, v, w) in self.edges() {
            s.push_str(&format!("{u} {v} {w}\n"));
        }
        s
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::contract(format!("vertex {v} out of range")))
        }
    }
}

impl AsymmetricSpace for DigraphSpace {
    type Point = usize;

    fn distance(&self, x: &usize, y: &usize) -> Result<f64> {
        self.check(*x)?;
        self.check(*y)?;
        let d = self.dist[x * self.n + y];
        if d.is_finite() {
            Ok(d)
        } else {
            Err(Error::evaluation(x, y, "no directed path"))
        }
    }

    fn base(&self) -> &usize {
        &self.base
    }
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .partial_cmp(&self.0)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra_all_pairs(n: usize, weights: &[f64]) -> Vec<f64> {
    let mut out = vec![f64::INFINITY; n * n];
    let mut heap = BinaryHeap::new();
    for s in 0..n {
        let row = &mut out[s * n..(s + 1) * n];
        row[s] = 0.0;
        heap.push(Entry(0.0, s));
        while let Some(Entry(d, u)) = heap.pop() {
            if d > row[u] {
                continue;
            }
            for v in 0..n {
                let w = weights[u * n + v];
                if w.is_finite() && d + w < row[v] {
                    row[v] = d + w;
                    heap.push(Entry(d + w, v));
                }
            }
        }
    }
    out
}

/// Exact all-pairs data for a finite digraph, computed independently of
/// [`DigraphSpace`]'s own distance routine.
#[derive(Clone, Debug)]
pub struct BruteOracle {
    /// `dist[x][y]`.
    pub dist: Vec<Vec<f64>>,
    /// Distinct coordinate tables `x ↦ d(x,z) − d(b,z)`, each tagged with the
    /// first `z` that produces it.
    pub psi_tables: Vec<(usize, Vec<f64>)>,
}

impl BruteOracle {
    pub fn psi(&self, base: usize, z: usize) -> Vec<f64> {
        (0..self.dist.len())
            .map(|x| self.dist[x][z] - self.dist[base][z])
            .collect()
    }
}

/// Floyd–Warshall over the raw edge weights plus the list of distinct ψ tables.
///
/// A finite space has no horofunctions, so this only serves to check the
/// table arithmetic of the generic routines exactly.
pub fn digraph_brute_oracle(g: &DigraphSpace) -> Result<BruteOracle> {
    let n = g.vertex_count();
    let mut dist = vec![vec![f64::INFINITY; n]; n];
    for u in 0..n {
        for v in 0..n {
            let w = g.weight(u, v);
            if w < 0.0 {
                return Err(Error::contract(format!("negative weight on {u}->{v}")));
            }
            dist[u][v] = if u == v { 0.0 } else { w };
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = dist[i][k];
            if !dik.is_finite() {
                continue;
            }
            for j in 0..n {
                let cand = dik + dist[k][j];
                if cand < dist[i][j] {
                    dist[i][j] = cand;
                }
            }
        }
    }
    let b = *g.base();
    let mut oracle = BruteOracle {
        dist,
        psi_tables: Vec::new(),
    };
    for z in 0..n {
        let table = oracle.psi(b, z);
        if !oracle.psi_tables.iter().any(|(_, t)| *t == table) {
            oracle.psi_tables.push((z, table));
        }
    }
    Ok(oracle)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn three_vertex() -> DigraphSpace {
        // vertices 1..=3 of the worked example, shifted to 0..=2
        DigraphSpace::new(
            3,
            &[
                (0, 1, 1.0),
                (1, 0, 4.0),
                (1, 2, 2.0),
                (2, 1, 1.0),
                (0, 2, 5.0),
                (2, 0, 6.0),
            ],
            0,
        )
        .unwrap()
    }

    #[test]
    fn three_vertex_distances() {
        let g = three_vertex();
        assert_eq!(g.distance(&0, &2).unwrap(), 3.0);
        assert_eq!(g.distance(&2, &0).unwrap(), 5.0);
        let o = digraph_brute_oracle(&g).unwrap();
        assert_eq!(o.dist[0][2], 3.0);
        assert_eq!(o.dist[2][0], 5.0);
    }

    #[test]
    fn single_vertex() {
        let g = DigraphSpace::new(1, &[], 0).unwrap();
        assert_eq!(g.distance(&0, &0).unwrap(), 0.0);
        let o = digraph_brute_oracle(&g).unwrap();
        assert_eq!(o.psi_tables, vec![(0, vec![0.0])]);
    }

    #[test]
    fn complete_unit_graph() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    edges.push((u, v, 1.0));
                }
            }
        }
        let g = DigraphSpace::new(4, &edges, 0).unwrap();
        let o = digraph_brute_oracle(&g).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                let expect = if u == v { 0.0 } else { 1.0 };
                assert_eq!(o.dist[u][v], expect);
                assert_eq!(g.distance(&u, &v).unwrap(), expect);
            }
        }
    }

    #[test]
    fn negative_weight_rejected() {
        assert!(DigraphSpace::new(2, &[(0, 1, -1.0), (1, 0, 1.0)], 0).is_err());
    }

    #[test]
    fn disconnected_rejected() {
        assert!(DigraphSpace::new(2, &[(0, 1, 1.0)], 0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let g = three_vertex();
        let text = g.to_edge_list();
        let h = DigraphSpace::parse(&text).unwrap();
        assert_eq!(h.edges(), g.edges());
        assert_eq!(h.base(), g.base());
    }

    #[test]
    fn parse_errors() {
        assert!(DigraphSpace::parse("0 1 1\n1 0 1\n").is_err());
        assert!(DigraphSpace::parse("base 0\n0 1\n").is_err());
        assert!(DigraphSpace::parse("base 0\n0 1 x\n1 0 1\n").is_err());
        assert!(DigraphSpace::parse("base 0\nbase 1\n0 1 1\n1 0 1\n").is_err());
    }
}
