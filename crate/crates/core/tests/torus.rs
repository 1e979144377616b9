//! Integration tests for the torus layer: golden values at the default depth,
//! mapping-class actions and horofunction invariances.

mod common;

use common::golden;
use proptest::prelude::*;

use lipschitz_horo::torus::{
    commutator_trace, curve_trace, horofunction, lipschitz_distance, maxset, mcg_apply,
    mcg_apply_direct, realize_matrices, teich_from_xy, Branch, CurveSlope, Generator, Gl2Z,
    MeasuredLam, TracePoint, MAX_DEPTH,
};

const Q: u32 = 2000;

fn p44() -> TracePoint {
    teich_from_xy(4.0, 4.0, Branch::Minus).unwrap()
}

#[test]
fn golden_values_at_default_depth() {
    let m = TracePoint::modular();
    let d = lipschitz_distance(&m, &p44(), Q).unwrap();
    assert!(
        (d.value - golden::DIST_MODULAR_TO_44MINUS).abs() < 1e-6,
        "{d:?}"
    );
    assert_eq!(d.witness, CurveSlope::new(-1, 1).unwrap());
    let d = lipschitz_distance(&p44(), &m, Q).unwrap();
    assert!(
        (d.value - golden::DIST_44MINUS_TO_MODULAR).abs() < 1e-6,
        "{d:?}"
    );
    assert_eq!(d.witness, CurveSlope::DIAGONAL);
    let h = horofunction(&MeasuredLam::curve(CurveSlope::HORIZONTAL), &p44(), &m, Q).unwrap();
    assert!(
        (h.value - golden::HORO_HORIZONTAL_AT_44MINUS).abs() < 1e-6,
        "{h:?}"
    );
}

#[test]
fn depth_bounds_are_enforced() {
    let m = TracePoint::modular();
    assert!(lipschitz_distance(&m, &m, 0).is_err());
    assert!(lipschitz_distance(&m, &m, MAX_DEPTH + 1).is_err());
    assert!(lipschitz_distance(&m, &m, MAX_DEPTH).is_ok());
}

#[test]
fn maxset_contains_the_witness() {
    let (x, y) = (TracePoint::modular(), p44());
    let d = lipschitz_distance(&x, &y, 200).unwrap();
    let set = maxset(&x, &y, 200, 1e-9).unwrap();
    assert_eq!(set[0], d.witness);
    // the modular point is symmetric under the order-three rotation
    let all = maxset(&x, &x, 50, 0.0).unwrap();
    assert_eq!(all.len(), lipschitz_horo::cli::small_slopes(50).len());
}

#[test]
fn horofunction_vanishes_at_base() {
    let b = p44();
    for (a, bb) in [
        (0.0, 1.0),
        (1.0, 0.0),
        (0.5 * (1.0 + 5f64.sqrt()), 1.0),
        (-2.0, 7.0),
    ] {
        let mu = MeasuredLam::new(a, bb, 3.0).unwrap();
        assert_eq!(horofunction(&mu, &b, &b, 300).unwrap().value, 0.0);
    }
}

fn generator_matrix(e: Generator) -> Gl2Z {
    match e {
        Generator::Twist(k) => Gl2Z::T.pow(k),
        Generator::Swap => Gl2Z::S,
    }
}

fn word() -> impl Strategy<Value = Gl2Z> {
    prop::collection::vec(0..6usize, 0..8).prop_map(|w| {
        let gens = [
            Gl2Z::T,
            Gl2Z::T.inverse(),
            Gl2Z::S,
            Gl2Z::R,
            Gl2Z::T.pow(3),
            Gl2Z::S.mul(&Gl2Z::T),
        ];
        w.into_iter().fold(Gl2Z::IDENTITY, |g, i| g.mul(&gens[i]))
    })
}

fn point() -> impl Strategy<Value = TracePoint> {
    (3.0f64..7.0, 3.0f64..7.0, any::<bool>()).prop_filter_map("outside chart", |(x, y, plus)| {
        teich_from_xy(x, y, if plus { Branch::Plus } else { Branch::Minus }).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_reassembles(g in word()) {
        let (left, d) = g.decompose();
        let prod = left.iter().fold(g, |acc, &e| generator_matrix(e).mul(&acc));
        prop_assert_eq!(prod, d);
        let [[a, b], [c, dd]] = d.entries();
        prop_assert!(b == 0 && c == 0 && a.abs() == 1 && dd.abs() == 1);
    }

    #[test]
    fn generator_moves_match_direct_action(g in word(), pt in point()) {
        let a = mcg_apply(&g, &pt).unwrap();
        let b = mcg_apply_direct(&g, &pt).unwrap();
        for (u, v) in a.log_traces().iter().zip(b.log_traces()) {
            prop_assert!((u - v).abs() <= 1e-10 * u.abs().max(1.0), "{:?} {:?}", a, b);
        }
        prop_assert!(a.markov_residual() < 1e-8);
    }

    #[test]
    fn action_transports_traces(g in word(), pt in point(), p in -20i64..20, q in 1i64..20) {
        prop_assume!(num_integer::gcd(p, q) == 1);
        let c = CurveSlope::new(p, q).unwrap();
        let gp = mcg_apply(&g, &pt).unwrap();
        let lhs = curve_trace(&gp, g.apply_slope(c));
        let rhs = curve_trace(&pt, c);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs);
    }

    #[test]
    fn realized_matrices_are_a_punctured_torus(pt in point()) {
        let (a, b) = realize_matrices(&pt).unwrap();
        prop_assert!((a.det() - 1.0).abs() < 1e-12 && (b.det() - 1.0).abs() < 1e-9);
        prop_assert!((commutator_trace(&a, &b) + 2.0).abs() < 1e-8);
    }

    #[test]
    fn horofunction_is_projective(pt in point(), a in -5.0f64..5.0, w in 0.01f64..100.0) {
        let base = TracePoint::modular();
        let one = horofunction(&MeasuredLam::new(a, 1.0, 1.0).unwrap(), &pt, &base, 200).unwrap();
        let scaled = horofunction(&MeasuredLam::new(a, 1.0, w).unwrap(), &pt, &base, 200).unwrap();
        prop_assert_eq!(one.value.to_bits(), scaled.value.to_bits());
    }

    #[test]
    fn horofunction_is_one_lipschitz(pt in point(), a in -5.0f64..5.0) {
        // ψ(x) ≥ −L(b, x) for every horofunction based at b
        let base = TracePoint::modular();
        let h = horofunction(&MeasuredLam::new(a, 1.0, 1.0).unwrap(), &pt, &base, 300).unwrap();
        let d = lipschitz_distance(&base, &pt, 300).unwrap();
        prop_assert!(h.value + d.value >= -1e-9, "{} {}", h.value, d.value);
    }
}
