use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use proptest::prelude::*;
use rectlab::biject::{backward_strong, diagonal_layout, gamma_s, gamma_w};
use rectlab::perm::{contains_pattern, patterns, PermClass, Permutation};
use rectlab::rect::{Chirality, Rectangulation};

/// One representative per strong class, keyed by the 2-clumped permutation.
fn strong_classes(n: usize) -> BTreeMap<Permutation, Rectangulation> {
    let mut out = BTreeMap::new();
    for p in Permutation::all(n) {
        let r = gamma_s(&p);
        out.entry(r.strong_key()).or_insert(r);
    }
    out
}

fn weak_classes(n: usize) -> BTreeMap<Permutation, Rectangulation> {
    let mut out = BTreeMap::new();
    for p in Permutation::all(n) {
        let r = gamma_w(&p);
        out.entry(r.weak_key()).or_insert(r);
    }
    out
}

#[test]
fn strong_counts_to_seven() {
    let counts: Vec<usize> = (1..=7).map(|n| strong_classes(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 6, 24, 116, 642, 3938]);
}

#[test]
fn geometric_invariants_to_six() {
    for n in 1..=6 {
        for p in Permutation::all(n) {
            for r in [gamma_w(&p), gamma_s(&p)] {
                assert_eq!(r.segments().len(), n - 1);
                assert_eq!(r.nwse_labeling(), (1..=n).collect::<Vec<_>>());
                let (left, above) = (r.left_of(), r.above());
                for i in 0..n {
                    for j in i + 1..n {
                        // exactly one of the two relations holds, in NW-SE direction
                        assert!(left.contains(i, j) ^ above.contains(i, j));
                        assert!(!left.contains(j, i) && !above.contains(j, i));
                    }
                }
            }
        }
    }
}

#[test]
fn windmills_match_mesh_patterns() {
    for n in 1..=7 {
        for p in Permutation::all(n) {
            let w = gamma_w(&p).find_windmills();
            let cw = w.iter().any(|m| m.chirality == Chirality::Clockwise);
            let ccw = w.iter().any(|m| m.chirality == Chirality::CounterClockwise);
            assert_eq!(cw, contains_pattern(&p, &patterns::p1()), "{p}");
            assert_eq!(ccw, contains_pattern(&p, &patterns::p2()), "{p}");
        }
    }
}

#[test]
fn windmills_iff_not_guillotine() {
    for n in 1..=6 {
        let classes = strong_classes(n);
        let free = classes.values().filter(|r| r.find_windmills().is_empty()).count();
        for r in classes.values() {
            assert_eq!(r.find_windmills().is_empty(), r.is_guillotine());
            if n <= 4 {
                assert!(r.is_guillotine());
            }
        }
        if n == 5 {
            assert_eq!(free, 114);
        }
    }
}

#[test]
fn multiplicities_count_strong_classes() {
    for n in 1..=5 {
        let mut total = BigUint::from(0u32);
        let mut guillotine = BigUint::from(0u32);
        for r in weak_classes(n).values() {
            let m = r.multiplicity();
            let distinct: BTreeSet<_> = r.fiber_w().iter().map(|p| gamma_s(p).strong_key()).collect();
            assert_eq!(m, BigUint::from(distinct.len()));
            if r.is_guillotine() {
                guillotine += &m;
            }
            total += m;
        }
        let want = [1u32, 2, 6, 24, 116][n - 1];
        assert_eq!(total, BigUint::from(want));
        if n == 5 {
            assert_eq!(guillotine, BigUint::from(114u32));
        }
    }
}

#[test]
fn one_sided_weak_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| weak_classes(n).values().filter(|r| r.is_one_sided()).count()).collect();
    assert_eq!(counts, vec![1, 2, 6, 20, 72, 274]);
}

#[test]
fn z_wall_and_semi_baxter() {
    let semi = PermClass::SemiBaxter;
    for n in 1..=7 {
        let classes = strong_classes(n);
        let avoiding = classes.values().filter(|r| !r.has_z_wall()).count();
        let oracle = Permutation::all(n).filter(|p| semi.contains(p)).count();
        assert_eq!(avoiding, oracle, "n = {n}");
        for (key, r) in &classes {
            assert_eq!(!semi.contains(key), r.has_z_wall(), "{key}");
            if n <= 6 && r.has_z_wall() {
                assert!(r.fiber_s().iter().all(|p| !semi.contains(p)));
            }
        }
    }
}

#[test]
fn reflection_is_complement() {
    for n in 1..=5 {
        for p in Permutation::all(n) {
            let r = gamma_s(&p);
            let reflected = r.reflect_swne();
            assert_eq!(reflected.strong_key(), gamma_s(&p.complement()).strong_key());
            assert_eq!(reflected.reflect_swne().strong_key(), r.strong_key());
            assert_eq!(reflected.strong_key(), r.strong_poset().rightmost_extension().complement());
        }
    }
}

#[test]
fn fiber_sizes_sum_to_factorial() {
    for n in 1..=6 {
        let total: u128 = strong_classes(n).values().map(|r| r.strong_poset().count_linear_extensions()).sum();
        assert_eq!(total, (1..=n as u128).product());
        if n <= 4 {
            assert!(strong_classes(n).values().all(|r| r.fiber_s().len() == 1));
        }
    }
}

#[test]
fn fibers_are_disjoint() {
    let mut owner: HashMap<Permutation, Permutation> = HashMap::new();
    for (key, r) in strong_classes(6) {
        for p in r.fiber_s() {
            assert!(owner.insert(p, key.clone()).is_none());
        }
    }
    assert_eq!(owner.len(), 720);
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strong_round_trip(p in permutation(14)) {
        let r = gamma_s(&p);
        let key = r.strong_key();
        prop_assert!(r.strong_poset().is_linear_extension(&p));
        prop_assert_eq!(gamma_s(&key).strong_key(), key.clone());
        prop_assert!(PermClass::TwoClumped.contains(&key));
        prop_assert_eq!(r.segments().len(), p.len() - 1);
    }

    #[test]
    fn weak_round_trip(p in permutation(14)) {
        let r = gamma_w(&p);
        let key = r.weak_key();
        prop_assert!(r.weak_poset().is_linear_extension(&p));
        prop_assert_eq!(gamma_w(&key), r.clone());
        prop_assert!(PermClass::TwistedBaxter.contains(&key));
        prop_assert_eq!(gamma_w(&r.baxter_representative()), r);
    }

    #[test]
    fn layout_is_diagonal(p in permutation(20)) {
        let n = p.len();
        for rect in diagonal_layout(&p) {
            prop_assert!(rect.x_left < rect.label && rect.label <= rect.x_right && rect.x_right <= n);
            prop_assert!(rect.y_top < rect.label && rect.label <= rect.y_bottom && rect.y_bottom <= n);
        }
    }

    #[test]
    fn backward_recovers_input(p in permutation(8)) {
        prop_assert!(backward_strong(&gamma_s(&p)).contains(&p));
    }
}
