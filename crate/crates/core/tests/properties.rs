//! Randomized property tests over small rational coefficients.

use num_bigint::BigInt;
use proptest::prelude::*;
use wcatalan_core::arith::{gen_binomial, rat, Rational};
use wcatalan_core::catalan::pow_i64;
use wcatalan_core::poly::Poly;
use wcatalan_core::series::{binomial_series, LinearExponent, Series};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    ((1i64..=6), 1i64..=6, any::<bool>())
        .prop_map(|(n, d, neg)| if neg { rat(-n, d) } else { rat(n, d) })
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(arb_rational(), 0..5).prop_map(Poly::from_coeffs)
}

fn arb_exponent() -> impl Strategy<Value = LinearExponent> {
    (arb_rational(), arb_rational()).prop_map(|(a, b)| LinearExponent::new(a, b))
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn affine_substitution_composes(
        p in arb_poly(),
        a in arb_nonzero_rational(),
        b in arb_rational(),
        a2 in arb_nonzero_rational(),
        b2 in arb_rational(),
    ) {
        let twice = p.affine_substitute(&a, &b).affine_substitute(&a2, &b2);
        let once = p.affine_substitute(&(&a * &a2), &(&a * &b2 + &b));
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn eval_commutes_with_substitution(
        p in arb_poly(),
        a in arb_rational(),
        b in arb_rational(),
        r in arb_rational(),
    ) {
        prop_assert_eq!(
            p.affine_substitute(&a, &b).eval(&r),
            p.eval(&(&a * &r + &b))
        );
    }

    #[test]
    fn binomial_series_exponent_additivity(
        a in arb_exponent(),
        b in arb_exponent(),
        order in 1usize..=12,
    ) {
        let lhs = binomial_series(&a, order).mul(&binomial_series(&b, order));
        prop_assert_eq!(lhs, binomial_series(&(&a + &b), order));
    }

    #[test]
    fn binomial_series_inverse_law(a in arb_exponent(), order in 1usize..=12) {
        let neg = LinearExponent::new(-&a.const_part, -&a.x_part);
        let prod = binomial_series(&a, order).mul(&binomial_series(&neg, order));
        prop_assert_eq!(prod, Series::one(order));
    }

    #[test]
    fn reciprocal_round_trips(
        s0 in arb_nonzero_rational(),
        tail in prop::collection::vec(arb_poly(), 0..6),
    ) {
        let mut coeffs = vec![Poly::constant(s0)];
        coeffs.extend(tail);
        let s = Series::from_coeffs(coeffs);
        let recip = s.reciprocal().unwrap();
        prop_assert_eq!(s.mul(&recip), Series::one(s.order()));
    }

    #[test]
    fn constant_binomial_series_matches_gen_binomial(
        a in arb_rational(),
        order in 1usize..=10,
    ) {
        // Cross-module consistency: coefficient k of (1-4t)^a is
        // gen_binomial(a, k) * (-4)^k.
        let s = binomial_series(&LinearExponent::constant(a.clone()), order);
        for k in 0..order {
            let want = gen_binomial(&a, k as u32) * pow_i64(-4, k as u32);
            prop_assert_eq!(s.coeff(k), &Poly::constant(want));
        }
    }

    #[test]
    fn vandermonde_convolution(a in arb_rational(), b in arb_rational(), k in 0u32..=12) {
        let lhs: Rational = (0..=k)
            .map(|j| gen_binomial(&a, j) * gen_binomial(&b, k - j))
            .sum();
        prop_assert_eq!(lhs, gen_binomial(&(&a + &b), k));
    }

    #[test]
    fn catalan_numbers_integral(n in 0u32..=120) {
        let c = wcatalan_core::arith::catalan_number(n);
        prop_assert!(c.is_integer());
        prop_assert!(c.to_integer() > BigInt::from(0));
    }
}
