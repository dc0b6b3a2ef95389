use proptest::prelude::*;

use schurtau_core::partition::partitions_up_to;
use schurtau_core::rational::int;
use schurtau_core::schur::{derive_at, derive_at_direct, positive_points, SignedPoint};
use schurtau_core::tau::{random_tau, tau_eval_full};
use schurtau_core::{CurveModel, DerivationIndex, Partition, Polynomial};

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    prop::sample::select(partitions_up_to(max))
}

fn derivation(max_weight: u32) -> impl Strategy<Value = DerivationIndex> {
    prop::sample::select(partitions_up_to(max_weight)).prop_map(|a| DerivationIndex::from_partition(&a))
}

fn points() -> impl Strategy<Value = Vec<SignedPoint>> {
    prop::collection::vec(any::<bool>(), 1..=3).prop_map(|signs| {
        signs
            .iter()
            .enumerate()
            .map(|(i, &plus)| {
                let i = i as u32 + 1;
                if plus { SignedPoint::plus(i) } else { SignedPoint::minus(i) }
            })
            .collect()
    })
}

fn is_homogeneous(p: &Polynomial, d: u32) -> bool {
    p.terms().all(|(m, _)| m.degree() == d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_route_matches_direct_route(l in partition(6), a in derivation(3), pts in points()) {
        prop_assert_eq!(derive_at(&l, &a, &pts), derive_at_direct(&l, &a, &pts));
    }

    #[test]
    fn derivatives_at_points_are_homogeneous(l in partition(7), a in derivation(3), pts in points()) {
        let v = derive_at(&l, &a, &pts);
        if a.weight() > l.weight() {
            prop_assert!(v.is_zero());
        } else {
            prop_assert!(is_homogeneous(&v, l.weight() - a.weight()));
        }
    }

    #[test]
    fn long_partitions_vanish_on_few_points(l in partition(8), k in 1usize..=3) {
        prop_assume!(l.len() > k);
        prop_assert!(derive_at(&l, &DerivationIndex::none(), &positive_points(k)).is_zero());
    }

    #[test]
    fn tau_draws_are_reproducible(l in partition(4), seed in any::<u64>()) {
        let cutoff = l.weight() + 3;
        let a = random_tau(&l, cutoff, seed).unwrap();
        prop_assert_eq!(&a, &random_tau(&l, cutoff, seed).unwrap());
        prop_assert!(a.terms().all(|(mu, _)| l.contained_in(mu) && mu.weight() <= cutoff));
    }

    #[test]
    fn tau_leading_term_is_the_base(l in partition(4), seed in any::<u64>()) {
        prop_assume!(!l.is_empty());
        let tau = random_tau(&l, l.weight() + 3, seed).unwrap();
        let pts = positive_points(l.len());
        let e = tau_eval_full(&tau, &DerivationIndex::none(), &pts);
        let low = e.certified().truncate_degree(l.weight());
        prop_assert_eq!(low, derive_at(&l, &DerivationIndex::none(), &pts));
    }

    #[test]
    fn curve_expansions_solve_the_equation(idx in 0usize..7, seed in any::<u64>()) {
        let (n, s) = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (3, 7)][idx];
        let curve = CurveModel::random(n, s, seed).unwrap();
        let data = curve.expand_y(12);
        let r = curve.residual(&data);
        prop_assert!(r.nonzero_terms().next().is_none());
        let wider = curve.expand_y(24).w.truncate(12);
        prop_assert_eq!(wider, data.w);
    }

    #[test]
    fn differentials_have_gap_orders(idx in 0usize..4, seed in any::<u64>()) {
        let (n, s) = [(2, 3), (2, 5), (3, 4), (3, 5)][idx];
        let curve = CurveModel::random(n, s, seed).unwrap();
        for d in curve.differentials(16).unwrap() {
            prop_assert_eq!(d.series.valuation(), Some(i64::from(d.gap) - 1));
            prop_assert_eq!(d.series.leading_coefficient(), Some(&int(1)));
        }
    }
}
