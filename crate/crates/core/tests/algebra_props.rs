use g2_tokuyama::algebra::rat;
use g2_tokuyama::{BinomialFactor, EvalAt, Error, LaurentPoly, RationalFn, TPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec(-5i64..=5, 0..4).prop_map(|c| TPoly::from_i64s(&c))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=4, -3i64..=4), tpoly()), 0..6).prop_map(LaurentPoly::from_terms)
}

fn factor() -> impl Strategy<Value = BinomialFactor> {
    prop_oneof![
        (1i64..=3, 0i64..=2, prop::bool::ANY),
        (0i64..=0, 1i64..=2, prop::bool::ANY),
    ]
    .prop_map(|(ex, ey, plus)| BinomialFactor::new(ex, ey, if plus { 1 } else { -1 }))
}

fn rational_fn() -> impl Strategy<Value = RationalFn> {
    (laurent(), prop::collection::vec(factor(), 0..3)).prop_map(|(n, d)| RationalFn::new(n, d))
}

/// `x, y > 1`, so `x^i y^j` with `i, j >= 0` never equals 1 and no
/// generated binomial vanishes.
fn point() -> impl Strategy<Value = (BigRational, BigRational, BigRational)> {
    let r = (1i64..=6, 1i64..=5).prop_map(|(n, d)| rat(n + d, d));
    (r.clone(), r, (-6i64..=6, 1i64..=7).prop_map(|(n, d)| rat(n, d)))
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&b), &a - &b);
    }

    #[test]
    fn division_recovers_factor(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn division_rejects_remainder(a in laurent(), f in factor()) {
        let d = f.to_poly();
        let p = &(&a * &d) + &LaurentPoly::monomial(7, 7);
        prop_assert!(matches!(p.div_exact(&d), Err(Error::NonDivisible(_))));
    }

    #[test]
    fn eval_is_a_ring_homomorphism(a in laurent(), b in laurent(), (x, y, t) in point()) {
        let (ea, eb) = (a.eval_at(&x, &y, &t).unwrap(), b.eval_at(&x, &y, &t).unwrap());
        prop_assert_eq!((&a * &b).eval_at(&x, &y, &t).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_at(&x, &y, &t).unwrap(), ea + eb);
    }

    #[test]
    fn rational_functions_agree_with_evaluation(r in rational_fn(), s in rational_fn(), (x, y, t) in point()) {
        let (er, es) = (r.eval_at(&x, &y, &t).unwrap(), s.eval_at(&x, &y, &t).unwrap());
        prop_assert_eq!(r.add(&s).eval_at(&x, &y, &t).unwrap(), &er + &es);
        prop_assert_eq!(r.mul(&s).eval_at(&x, &y, &t).unwrap(), &er * &es);
        prop_assert_eq!(r.sub(&s).eval_at(&x, &y, &t).unwrap(), er - es);
    }

    #[test]
    fn rf_eq_is_representation_independent(r in rational_fn(), f in factor()) {
        // multiply numerator and denominator by the same binomial
        let widened = RationalFn::new(r.numerator() * &f.to_poly(), r.den_factors().chain([f]));
        prop_assert!(r.rf_eq(&widened));
        prop_assert!(r.sub(&widened).is_zero() || r.sub(&widened).rf_eq(&RationalFn::zero()));
        let off = r.add(&RationalFn::one());
        prop_assert!(!r.rf_eq(&off));
    }

    #[test]
    fn json_round_trip(a in laurent(), big in -1000i64..1000) {
        let s = a.to_json();
        prop_assert_eq!(LaurentPoly::from_json(&s).unwrap(), a.clone());
        let huge = BigInt::from(10).pow(30) * big + 1;
        let p = &a + &LaurentPoly::constant(TPoly::new(vec![huge]));
        prop_assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap().to_json(), p.to_json());
    }
}

#[test]
fn pole_is_reported() {
    let r = RationalFn::new(LaurentPoly::one(), [BinomialFactor::plus(1, 1)]);
    assert!(matches!(r.eval_at(&rat(-1, 1), &rat(1, 1), &rat(0, 1)), Err(Error::Pole(_))));
}
