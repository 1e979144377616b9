//! The generic horofunction routines on weighted digraphs, where every value
//! can be checked exactly against all-pairs shortest paths.

use proptest::prelude::*;

use lipschitz_horo::horo::{
    detour_cost_along, digraph_brute_oracle, psi, rebase, AsymmetricSpace, DetourOptions,
    DigraphSpace,
};

/// A Hamiltonian cycle keeps the graph strongly connected; chords are extra.
fn digraph() -> impl Strategy<Value = DigraphSpace> {
    (2usize..=12).prop_flat_map(|n| {
        (
            prop::collection::vec(1u32..30, n),
            prop::collection::vec((0..n, 0..n, 0u32..30), 0..3 * n),
            0..n,
        )
            .prop_map(move |(cycle, chords, base)| {
                let mut edges: Vec<(usize, usize, f64)> =
                    (0..n).map(|v| (v, (v + 1) % n, cycle[v] as f64)).collect();
                edges.extend(
                    chords
                        .into_iter()
                        .filter(|(u, v, _)| u != v)
                        .map(|(u, v, w)| (u, v, w as f64)),
                );
                DigraphSpace::new(n, &edges, base).unwrap()
            })
    })
}

#[test]
fn parse_rejects_garbage() {
    assert!(DigraphSpace::parse("0 1 1\n").is_err());
    assert!(DigraphSpace::parse("base 0\n0 1\n").is_err());
    assert!(DigraphSpace::parse("base 0\nbase 1\n0 1 1\n1 0 1\n").is_err());
    assert!(DigraphSpace::parse("base 0\n0 1 -2\n1 0 1\n").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn edge_list_round_trips(g in digraph()) {
        let back = DigraphSpace::parse(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.base(), g.base());
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(back.distance(&u, &v).unwrap(), g.distance(&u, &v).unwrap());
            }
        }
    }

    #[test]
    fn psi_matches_oracle_exactly(g in digraph()) {
        let oracle = digraph_brute_oracle(&g).unwrap();
        let vs: Vec<usize> = g.vertices().collect();
        for &z in &vs {
            let t = psi(&g, &z, &vs).unwrap();
            prop_assert!(t.is_exact());
            let expect = oracle.psi(*g.base(), z);
            prop_assert_eq!(t.values(), expect.as_slice());
        }
    }

    #[test]
    fn distances_satisfy_triangle(g in digraph()) {
        let vs: Vec<usize> = g.vertices().collect();
        for &a in &vs {
            prop_assert_eq!(g.distance(&a, &a).unwrap(), 0.0);
            for &b in &vs {
                for &c in &vs {
                    let lhs = g.distance(&a, &c).unwrap();
                    prop_assert!(lhs <= g.distance(&a, &b).unwrap() + g.distance(&b, &c).unwrap());
                }
            }
        }
    }

    #[test]
    fn rebase_matches_a_new_base(g in digraph(), pick in any::<prop::sample::Index>()) {
        let vs: Vec<usize> = g.vertices().collect();
        let b2 = vs[pick.index(vs.len())];
        let moved = DigraphSpace::new(vs.len(), &g.edges(), b2).unwrap();
        for &z in &vs {
            let r = rebase(&psi(&g, &z, &vs).unwrap(), &b2).unwrap();
            let direct = psi(&moved, &z, &vs).unwrap();
            prop_assert_eq!(r.values(), direct.values());
        }
    }

    #[test]
    fn detour_along_constant_sequences(g in digraph()) {
        // H(ψ_w, ψ_z) along x_n = z is d(b,z) + ψ_w(z), which is d(b,z) + d(z,w) − d(b,w)
        let vs: Vec<usize> = g.vertices().collect();
        let b = *g.base();
        for &z in &vs {
            for &w in &vs {
                let eta = |x: &usize| Ok(g.distance(x, &w)? - g.distance(&b, &w)?);
                let seq = vec![z; 3];
                let est = detour_cost_along(&g, &seq, eta, DetourOptions::with_tail(2)).unwrap();
                let expect = g.distance(&b, &z).unwrap() + g.distance(&z, &w).unwrap() - g.distance(&b, &w).unwrap();
                prop_assert_eq!(est.value, expect);
                prop_assert!(est.value >= 0.0);
                if z == w {
                    prop_assert_eq!(est.value, 0.0);
                }
            }
        }
    }
}
