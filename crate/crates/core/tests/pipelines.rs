use dio_core::arith::{int, rat, BigInt};
use dio_core::curve::CurvePoint;
use dio_core::pipeline::{
    pipeline_map, published_n2m3_point, run_pipeline, Method, PipelineConfig, PipelineId, SeedSource,
};
use dio_core::quartic::QuarticPoint;
use dio_core::solution::verify_int;
use dio_core::Error;
use proptest::prelude::*;
use std::collections::HashSet;

/// Every small point of the method's quartic either yields an exact solution
/// or is rejected as degenerate; the identity itself never fails.
fn points_never_break_identity(id: PipelineId, params: &[i64]) {
    let params: Vec<BigInt> = params.iter().map(|&p| int(p)).collect();
    let method = match Method::new(id, &params) {
        Ok(m) => m,
        Err(Error::InvalidParameter(_) | Error::Degenerate(_) | Error::NotSquarefree(_) | Error::SingularCurve) => {
            return
        }
        Err(e) => panic!("{id} {params:?}: {e}"),
    };
    for p in method.quartic().small_points(12, 3) {
        match method.rational(&p) {
            Ok(_) => {
                let (s, _) = method.solution(&p).unwrap();
                let [x, y, w, z] = s.components();
                assert!(verify_int(id.kind(), x, y, w, z));
            }
            Err(Error::NotASolution(msg)) => panic!("{id} {params:?} at {p}: {msg}"),
            Err(_) => {}
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn n2_method3_identity(u in 1i64..=30) {
        points_never_break_identity(PipelineId::N2M3, &[u]);
    }

    #[test]
    fn n3_method2_identity(u in 1i64..=12) {
        points_never_break_identity(PipelineId::N3M2, &[u]);
    }

    #[test]
    fn n4_method2_identity(a in 1i64..=4, b in 1i64..=4, c in 1i64..=4) {
        points_never_break_identity(PipelineId::N4M2, &[a, b, c]);
    }

    #[test]
    fn n4_method1_triples_lie_on_both_conics(k in -40i64..=40, d in 1i64..=9) {
        let cfg = PipelineConfig::published(PipelineId::N4M1);
        let (method, map) = pipeline_map(&cfg).unwrap();
        let Method::N4M1(m1) = &method else { unreachable!() };
        let kx = rat(k, d);
        let y2 = map.target().rhs(&kx);
        if let Some(y) = dio_core::arith::sqrt_exact(&y2) {
            let p = CurvePoint::affine(kx, y);
            if let Ok(q) = map.backward(&p) {
                if let Ok((t, u, v)) = m1.triple(&q) {
                    prop_assert!(m1.conics.0.contains(&t, &u));
                    prop_assert!(m1.conics.1.contains(&t, &v));
                }
            }
        }
    }
}

#[test]
fn published_configs_emit_distinct_valid_solutions() {
    for id in PipelineId::all() {
        let cfg = PipelineConfig::published(id).with_multiples(3);
        let report = run_pipeline(&cfg).unwrap();
        assert!(!report.emitted.is_empty(), "{id} emitted nothing");
        let mut seen = HashSet::new();
        for e in &report.emitted {
            assert!(seen.insert((e.m, e.branch)), "{id}: duplicate m={} {}", e.m, e.branch);
            let [x, y, w, z] = e.solution.components();
            assert!(verify_int(id.kind(), x, y, w, z), "{id}: {} fails", e.solution);
        }
        for s in &report.skipped {
            assert!(!seen.contains(&(s.m, s.branch)), "{id}: m={} {} both emitted and skipped", s.m, s.branch);
        }
    }
}

#[test]
fn emitted_points_round_trip_through_the_curve() {
    for id in PipelineId::all() {
        let cfg = PipelineConfig::published(id).with_multiples(3).with_mirror(false);
        let (_, map) = pipeline_map(&cfg).unwrap();
        for (m, q) in map.multiples(3).unwrap().points {
            let p = map.forward(&q).unwrap();
            assert_eq!(map.backward(&p).unwrap(), q, "{id} m={m}");
            let expected = map.target().scalar_mul(&int(m as i64), map.seed_image()).unwrap();
            assert_eq!(p, expected, "{id} m={m}");
        }
    }
}

#[test]
fn n2_printed_point_differs_from_doubled_seed_by_two_torsion() {
    let (_, map) = pipeline_map(&PipelineConfig::published(PipelineId::N2M3)).unwrap();
    let e = map.target();
    let printed = map.forward(&published_n2m3_point()).unwrap();
    let doubled = e.double(map.seed_image()).unwrap();
    let diff = e.add(&printed, &e.negate(&doubled)).unwrap();
    assert!(!diff.is_infinity());
    assert!(e.double(&diff).unwrap().is_infinity());
}

#[test]
fn explicit_seed_matches_registry_seed() {
    let cfg = PipelineConfig::published(PipelineId::N3M2).with_multiples(2);
    let explicit = cfg.clone().with_seed(SeedSource::Point(QuarticPoint::new(rat(4, 1), rat(132, 1))));
    assert_eq!(run_pipeline(&cfg).unwrap().solutions(), run_pipeline(&explicit).unwrap().solutions());
}

#[test]
fn lead_square_seed_on_even_quartic_is_torsion_only() {
    let cfg = PipelineConfig::published(PipelineId::N3M2).with_seed(SeedSource::LeadSquare).with_multiples(2);
    assert!(matches!(run_pipeline(&cfg), Err(Error::NoSolutions(_))));
}

#[test]
fn mirror_requires_even_quartic() {
    let cfg = PipelineConfig::published(PipelineId::N4M1).with_mirror(true);
    let (method, _) = pipeline_map(&cfg).unwrap();
    if !method.quartic().is_even() {
        assert!(matches!(run_pipeline(&cfg), Err(Error::InvalidParameter(_))));
    }
}
