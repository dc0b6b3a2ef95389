use proptest::prelude::*;

use schurtau_core::poly::{Monomial, Var};
use schurtau_core::rational::frac;
use schurtau_core::{Polynomial, Rational, TruncatedSeries};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(a, b)| frac(a, b))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..3, 4).prop_map(|e| {
        Monomial::from_pairs(
            e.into_iter()
                .enumerate()
                .filter(|&(_, x)| x > 0)
                .map(|(i, x)| {
                    let v = if i < 3 { Var::T(i as u32 + 1) } else { Var::X(1) };
                    (v, x)
                }),
        )
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), rational()), 0..5)
        .prop_map(|terms| Polynomial::from_terms(terms))
}

fn time_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, 3).prop_map(|e| {
        Monomial::from_pairs(e.into_iter().enumerate().map(|(i, x)| (Var::T(i as u32 + 1), x)))
    })
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn reduction_is_idempotent(a in -50i64..50, b in 1i64..50, k in 1i64..20) {
        let q = frac(a * k, b * k);
        prop_assert_eq!(&q, &frac(a, b));
        prop_assert_eq!(Rational::new(q.numer().clone(), q.denom().clone()), q);
    }

    #[test]
    fn polynomial_ring_laws(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn weighted_degree_is_additive(a in time_monomial(), b in time_monomial()) {
        let sum = a.weighted_degree().unwrap() + b.weighted_degree().unwrap();
        prop_assert_eq!(a.mul(&b).weighted_degree().unwrap(), sum);
    }

    #[test]
    fn series_inverse(
        lead in rational().prop_filter("unit", |q| *q != frac(0, 1)),
        rest in prop::collection::vec(rational(), 0..8),
        start in -3i64..3,
        rel in 1i64..10,
    ) {
        let mut coeffs = vec![lead];
        coeffs.extend(rest);
        let s = TruncatedSeries::from_coeffs(start, coeffs, start + rel);
        let inv = s.invert().unwrap();
        let one = &s * &inv;
        prop_assert_eq!(one.precision(), rel);
        prop_assert_eq!(one.truncate(rel), TruncatedSeries::one(rel));
    }
}
