//! Invariants checked on randomly generated inputs.

use std::f64::consts::PI;

use approx::assert_relative_eq;
use proptest::prelude::*;

use hypertri::arc_trig::{relation_residuals, side_lengths, triangle_measures, wv_table};
use hypertri::foundations::{key_formula_phi, right_triangle_from_xi, tangent_construction};
use hypertri::geometry::{build_triple, center_distances, radius_angles, Semicircle, TripleConfig, UpperHalfPoint};
use hypertri::laws::{law_report, vertex_cos_from_distances};
use hypertri::oracle::{distance_closed, geodesic_length_quadrature, triangle_tangent_angles};
use hypertri::report::run_report;
use hypertri::solver::{solve_sides, SolveRequest};
use hypertri::{arc_hyp, parallel_angle};

/// Configurations that survive validation; invalid draws are discarded.
fn config() -> impl Strategy<Value = TripleConfig> {
    (-2.0..2.0f64, 0.3..2.5f64, 0.3..2.5f64, 0.3..3.5f64, 0.3..3.5f64, 0.3..3.5f64).prop_filter_map(
        "circles must form a canonical triangle",
        |(oc, g1, g2, rc, rb, ra)| {
            let t = build_triple(
                Semicircle::new(oc + g1 + g2, ra).ok()?,
                Semicircle::new(oc + g1, rb).ok()?,
                Semicircle::new(oc, rc).ok()?,
            )
            .ok()?;
            let m = triangle_measures(&radius_angles(&t).ok()?).ok()?;
            let heights_ok = t.vertices().iter().all(|v| v.y > 1e-3);
            let angles_ok = [m.alpha, m.beta, m.delta].iter().all(|&x| x > 1e-3);
            (heights_ok && angles_ok).then_some(t)
        },
    )
}

fn point() -> impl Strategy<Value = UpperHalfPoint> {
    (-5.0..5.0f64, 0.05..5.0f64).prop_map(|(x, y)| UpperHalfPoint { x, y })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn laws_hold_and_are_scale_invariant(t in config(), scale in 0.1..10.0f64, shift in -5.0..5.0f64) {
        let r1 = run_report(&t).unwrap();
        prop_assert!(r1.max_law() < 1e-9);
        prop_assert!(r1.max_identity() < 1e-10);
        let u = t.transformed(scale, shift);
        let ra = radius_angles(&u).unwrap();
        let m = triangle_measures(&ra).unwrap();
        let wv = wv_table(&ra, &u.radii()).unwrap();
        let laws = law_report(&m, &wv, &u.radii(), &center_distances(&u).unwrap()).unwrap();
        for (a, b) in r1.laws.cosines_i.iter().zip(laws.cosines_i) {
            prop_assert!((a - b).abs() < 1e-11);
        }
        prop_assert!((r1.measures.side_b.length - m.side_b.length).abs() < 1e-10);
    }

    #[test]
    fn hyperbolic_triangles_have_positive_defect(t in config()) {
        let m = triangle_measures(&radius_angles(&t).unwrap()).unwrap();
        prop_assert!(m.angle_defect() > 0.0);
        prop_assert!(m.side_a.length > 0.0 && m.side_b.length > 0.0 && m.side_c.length > 0.0);
        let s = [m.side_a.length, m.side_b.length, m.side_c.length];
        prop_assert!(s[0] < s[1] + s[2] && s[1] < s[0] + s[2] && s[2] < s[0] + s[1]);
    }

    #[test]
    fn relations_are_exact(t in config()) {
        prop_assert!(relation_residuals(&t).max() < 1e-12);
    }

    #[test]
    fn formula_sides_match_point_distances(t in config()) {
        let m = triangle_measures(&radius_angles(&t).unwrap()).unwrap();
        let d = distance_closed(&t.vertex_b, &t.vertex_c).unwrap();
        prop_assert!((m.side_a.length - d).abs() <= 1e-10 * d.max(1.0));
        let d = distance_closed(&t.vertex_a, &t.vertex_b).unwrap();
        prop_assert!((m.side_c.length - d).abs() <= 1e-10 * d.max(1.0));
    }

    #[test]
    fn formula_angles_match_tangents(t in config()) {
        let m = triangle_measures(&radius_angles(&t).unwrap()).unwrap();
        let tan = triangle_tangent_angles(&t).unwrap();
        prop_assert!((m.alpha - tan[0]).abs() < 1e-9);
        prop_assert!((m.beta - tan[1]).abs() < 1e-9);
        prop_assert!((m.delta - tan[2]).abs() < 1e-9);
        prop_assert!(tan.iter().sum::<f64>() < PI);
        let cos = vertex_cos_from_distances(&t).unwrap();
        prop_assert!((cos[0] - m.alpha.cos()).abs() < 1e-10);
    }

    #[test]
    fn distance_is_a_metric(p in point(), q in point(), r in point()) {
        let pq = distance_closed(&p, &q).unwrap();
        prop_assert_eq!(pq, distance_closed(&q, &p).unwrap());
        prop_assert!(pq >= 0.0);
        let pr = distance_closed(&p, &r).unwrap();
        let rq = distance_closed(&r, &q).unwrap();
        prop_assert!(pq <= pr + rq + 1e-12);
    }

    #[test]
    fn quadrature_matches_closed_form(t1 in 0.05..3.09f64, t2 in 0.05..3.09f64, center in -3.0..3.0f64, radius in 0.1..50.0f64) {
        let s = Semicircle::new(center, radius).unwrap();
        let q = geodesic_length_quadrature(&s, t1, t2, 1e-11).unwrap();
        let h = arc_hyp(t1, t2).unwrap();
        prop_assert!((q.value - h.length).abs() <= 1e-10_f64.max(10.0 * 1e-11));
        let d = distance_closed(&s.point_at(t1), &s.point_at(t2)).unwrap();
        prop_assert!((q.value - d).abs() <= 1e-9 * d.max(1.0));
    }

    #[test]
    fn arc_hyp_is_consistent(t1 in 0.01..3.13f64, t2 in 0.01..3.13f64) {
        let h = arc_hyp(t1, t2).unwrap();
        prop_assert!((h.cosh_val * h.cosh_val - h.sinh_val * h.sinh_val - 1.0).abs() <= 1e-12 * h.cosh_val * h.cosh_val);
        prop_assert!(h.length >= 0.0);
        prop_assert_eq!(h, arc_hyp(t2, t1).unwrap());
    }

    #[test]
    fn key_formula_solves_its_equation(a in 0.01..50.0f64, b in 0.01..50.0f64) {
        let phi = key_formula_phi(a, b).unwrap();
        prop_assert!((((a - b) * phi).exp() - a / b).abs() <= 1e-12 * (a / b).max(1.0));
    }

    #[test]
    fn right_triangles_and_tangent_figures(a in 0.01..10.0f64, xi in 0.001..10.0f64) {
        let t = right_triangle_from_xi(a, xi).unwrap();
        prop_assert!(t.invariant_residual() < 1e-12);
        prop_assert!(t.circular_residuals().iter().all(|&r| r < 1e-12));
        prop_assert!(tangent_construction(a, xi).unwrap().invariant_residual() < 1e-12);
    }

    #[test]
    fn parallel_angle_in_range(d in 0.0..30.0f64, kappa in 0.1..10.0f64) {
        let p = parallel_angle(d, kappa).unwrap();
        prop_assert!(p > 0.0 && p <= PI / 2.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn solver_round_trip(a in 0.1..5.0f64, b in 0.1..5.0f64, c in 0.1..5.0f64) {
        prop_assume!(a < b + c && b < a + c && c < a + b);
        let t = solve_sides(&SolveRequest::new(a, b, c)).unwrap();
        let s = side_lengths(&radius_angles(&t).unwrap()).unwrap().lengths();
        assert_relative_eq!(s[0], a, epsilon = 1e-8);
        assert_relative_eq!(s[1], b, epsilon = 1e-8);
        assert_relative_eq!(s[2], c, epsilon = 1e-8);
    }
}
