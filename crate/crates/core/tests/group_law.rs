use dio_core::arith::{int, rat_int};
use dio_core::curve::{CurvePoint, WeierstrassCurve};
use proptest::prelude::*;

/// `y^2 = x^3 + 17`, with two independent points of infinite order.
fn curve() -> (WeierstrassCurve, CurvePoint, CurvePoint) {
    let e = WeierstrassCurve::from_ints(0, 0, 17).unwrap();
    let p = e.point(rat_int(-2), rat_int(3)).unwrap();
    let q = e.point(rat_int(-1), rat_int(4)).unwrap();
    (e, p, q)
}

fn combo(e: &WeierstrassCurve, a: i64, p: &CurvePoint, b: i64, q: &CurvePoint) -> CurvePoint {
    let ap = e.scalar_mul(&int(a), p).unwrap();
    let bq = e.scalar_mul(&int(b), q).unwrap();
    e.add(&ap, &bq).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_mul_is_additive(m in -6i64..=6, n in -6i64..=6) {
        let (e, p, _) = curve();
        let lhs = e.scalar_mul(&int(m + n), &p).unwrap();
        let rhs = e.add(&e.scalar_mul(&int(m), &p).unwrap(), &e.scalar_mul(&int(n), &p).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(e.on_curve(&lhs));
    }

    #[test]
    fn addition_is_associative_and_commutative(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
        let (e, p, q) = curve();
        let x = combo(&e, a, &p, b, &q);
        let y = combo(&e, c, &p, d, &q);
        let z = combo(&e, 1, &p, 1, &q);
        prop_assert_eq!(e.add(&x, &y).unwrap(), e.add(&y, &x).unwrap());
        let left = e.add(&e.add(&x, &y).unwrap(), &z).unwrap();
        let right = e.add(&x, &e.add(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, combo(&e, a + c + 1, &p, b + d + 1, &q));
    }

    #[test]
    fn negation_is_inverse(a in -4i64..=4, b in -4i64..=4) {
        let (e, p, q) = curve();
        let x = combo(&e, a, &p, b, &q);
        prop_assert!(e.add(&x, &e.negate(&x)).unwrap().is_infinity());
        prop_assert_eq!(e.double(&x).unwrap(), e.add(&x, &x).unwrap());
    }
}

#[test]
fn multiples_match_scalar_mul() {
    let (e, p, _) = curve();
    for (i, m) in e.multiples(&p, 6).unwrap().into_iter().enumerate() {
        assert_eq!(m, e.scalar_mul(&int(i as i64 + 1), &p).unwrap());
    }
}

#[test]
fn two_torsion_doubles_to_identity() {
    // y^2 = x^3 - x has 2-torsion at x = -1, 0, 1.
    let e = WeierstrassCurve::from_ints(0, -1, 0).unwrap();
    for x in [-1, 0, 1] {
        let t = e.point(rat_int(x), rat_int(0)).unwrap();
        assert!(e.double(&t).unwrap().is_infinity());
        assert_eq!(e.negate(&t), t);
    }
}

#[test]
fn off_curve_points_are_rejected() {
    let (e, _, _) = curve();
    assert!(e.point(rat_int(1), rat_int(1)).is_err());
    let bogus = CurvePoint::affine(rat_int(1), rat_int(1));
    assert!(e.add(&bogus, &bogus).is_err());
}
