use proptest::prelude::*;

use schurtau_core::partition::{contains, partitions_of, partitions_up_to};
use schurtau_core::{GapSequence, Partition};

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    prop::sample::select(partitions_up_to(max))
}

#[test]
fn conjugation_is_an_involution() {
    for l in partitions_up_to(10) {
        assert_eq!(l.conjugate().conjugate(), l);
        assert_eq!(l.conjugate().weight(), l.weight());
        assert_eq!(l.is_hook(), l.conjugate().is_hook(), "{l}");
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn containment_is_a_partial_order() {
    let all = partitions_up_to(8);
    for a in &all {
        assert!(contains(a, a));
        for b in &all {
            let ab = contains(a, b);
            if ab && contains(b, a) {
                assert_eq!(a, b);
            }
            if !ab {
                continue;
            }
            for c in &all {
                if contains(b, c) {
                    assert!(contains(a, c), "{a} {b} {c}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn w_sequences_round_trip(l in partition(10), extra in 0usize..3) {
        let len = l.len() + extra;
        let w = l.w_sequence(len).unwrap();
        prop_assert!(w.windows(2).all(|p| p[0] > p[1]));
        prop_assert_eq!(Partition::from_w_sequence(&w), Some(l));
    }

    #[test]
    fn tail_sums_step_by_parts(l in partition(10)) {
        for k in 0..l.len() {
            prop_assert_eq!(l.n_tail(k) - l.n_tail(k + 1), l.part(k + 1));
        }
        prop_assert_eq!(l.n_tail(0), l.weight());
    }
}

#[test]
fn ns_genus_formula() {
    for s in 3..=9u32 {
        for n in 2..s {
            if num_gcd(n, s) != 1 {
                continue;
            }
            let g = GapSequence::from_ns(n, s).unwrap();
            assert_eq!(g.genus() as u32, (n - 1) * (s - 1) / 2, "({n},{s})");
            assert_eq!(g.partition().conjugate(), g.partition(), "({n},{s})");
        }
    }
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { num_gcd(b, a % b) }
}

#[test]
fn a_sequences_of_every_small_semigroup() {
    for g in (1..=6).flat_map(GapSequence::all_of_genus) {
        let l = g.partition();
        for k in 0..=g.genus() {
            let a = g.a_sequence(k).unwrap();
            assert!(a.entries.windows(2).all(|p| p[0] > p[1]));
            assert!(a.entries.iter().all(|&e| g.is_gap(e)), "{g} k={k}");
            assert_eq!(a.sum(), l.n_tail(k), "{g} k={k}");
        }
    }
}

#[test]
fn semigroup_counts_by_genus() {
    let counts: Vec<usize> = (1..=6).map(|g| GapSequence::all_of_genus(g).len()).collect();
    assert_eq!(counts, [1, 2, 4, 7, 12, 23]);
}
