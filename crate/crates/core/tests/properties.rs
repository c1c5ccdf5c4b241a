mod common;

use proptest::prelude::*;

use stx_core::modifiers::{check_1_uniformity, Star, Stx, Xor};
use stx_core::monsters::monster1;
use stx_core::tableaux::{has_right_triangle, rows_equal_or_disjoint, saturate};
use stx_core::{Dfa, Limits, Tableau, Transformation};

fn transformation(n: usize) -> impl Strategy<Value = Transformation> {
    proptest::collection::vec(0..n as u32, n)
        .prop_map(|images| Transformation::from_images(images).unwrap())
}

fn triple() -> impl Strategy<Value = (Transformation, Transformation, Transformation)> {
    (1usize..7).prop_flat_map(|n| (transformation(n), transformation(n), transformation(n)))
}

fn tableau(max: usize) -> impl Strategy<Value = Tableau> {
    (1..=max, 1..=max).prop_flat_map(|(n1, n2)| {
        any::<u64>().prop_map(move |bits| {
            let width = n1 * n2;
            Tableau::from_bits(n1, n2, bits & ((1u64 << width) - 1)).unwrap()
        })
    })
}

fn nested_tableaux() -> impl Strategy<Value = (Tableau, Tableau)> {
    (tableau(5), any::<u64>()).prop_map(|(t, extra)| {
        let (n1, n2) = t.dims();
        let mask = (1u64 << (n1 * n2)) - 1;
        let u = Tableau::from_bits(n1, n2, (t.bits() | extra) & mask).unwrap();
        (t, u)
    })
}

/// Same DFA with states renumbered so the initial state is 0.
fn rooted(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let i = d.initial();
    let swap = |q: usize| {
        if q == 0 {
            i
        } else if q == i {
            0
        } else {
            q
        }
    };
    let mut delta = Vec::with_capacity(n * d.letter_count());
    for q in 0..n {
        delta.extend(d.row(swap(q)).iter().map(|&r| swap(r as usize) as u32));
    }
    let finals = (0..n).filter(|&q| d.is_final(swap(q)));
    Dfa::new(d.letter_count(), n, 0, finals, delta).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composition_is_associative((f, g, h) in triple()) {
        let left = Transformation::compose(&Transformation::compose(&f, &g).unwrap(), &h).unwrap();
        let right = Transformation::compose(&f, &Transformation::compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral((f, _, _) in triple()) {
        let id = Transformation::identity(f.size()).unwrap();
        prop_assert_eq!(&Transformation::compose(&id, &f).unwrap(), &f);
        prop_assert_eq!(&Transformation::compose(&f, &id).unwrap(), &f);
    }

    #[test]
    fn cycles_permute_their_support(
        (n, support) in (1usize..8).prop_flat_map(|n| (Just(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
            .prop_flat_map(|(n, perm)| (Just(n), (0..=n).prop_map(move |len| perm[..len].to_vec())))
    ) {
        let c = Transformation::cycle(n, &support).unwrap();
        prop_assert!(c.is_injective());
        let mut image: Vec<usize> = support.iter().map(|&s| c.apply(s)).collect();
        let mut sorted = support.clone();
        image.sort_unstable();
        sorted.sort_unstable();
        prop_assert_eq!(image, sorted);
        for q in (0..n).filter(|q| !support.contains(q)) {
            prop_assert_eq!(c.apply(q), q);
        }
    }

    #[test]
    fn minimize_is_idempotent_and_preserves_language(d in common::dfa(6, 3)) {
        let m = d.minimize();
        prop_assert!(m.is_equivalent(&d).unwrap());
        prop_assert_eq!(m.minimize().state_count(), m.state_count());
        prop_assert_eq!(m.nerode_partition().class_count, m.state_count());
    }

    #[test]
    fn accessible_part_is_stable(d in common::dfa(6, 3)) {
        let (acc, _) = d.accessible_part();
        prop_assert!(acc.state_count() <= d.state_count());
        prop_assert!(acc.is_equivalent(&d).unwrap());
        prop_assert_eq!(acc.accessible_part().0, acc);
    }

    #[test]
    fn renaming_never_increases_state_complexity((d, phi) in common::dfa_and_renaming(5, 4, 6)) {
        let renamed = d.preimage_by_renaming(&phi).unwrap();
        prop_assert!(renamed.minimize().state_count() <= d.minimize().state_count());
    }

    #[test]
    fn every_dfa_is_a_renamed_monster(d in common::dfa(4, 4)) {
        let d = rooted(&d);
        let finals: Vec<usize> = d.finals().collect();
        let mon = monster1(d.state_count(), &finals, &Limits::default()).unwrap();
        let phi: Vec<usize> = (0..d.letter_count())
            .map(|a| Transformation::from_images(d.letter_action(a)).unwrap().rank() as usize)
            .collect();
        let renamed = mon.preimage_by_renaming(&phi).unwrap();
        prop_assert!(renamed.is_equivalent(&d).unwrap());
    }

    #[test]
    fn saturation_is_a_closure((t, u) in nested_tableaux()) {
        let st = saturate(&t);
        prop_assert!(t.is_subset(&st));
        prop_assert!(!has_right_triangle(&st));
        prop_assert_eq!(saturate(&st), st);
        prop_assert!(st.is_subset(&saturate(&u)));
    }

    #[test]
    fn star_is_1_uniform((d, phi) in common::dfa_and_renaming(4, 4, 5)) {
        prop_assert!(check_1_uniformity(&Star, &[&d], &phi, &Limits::default()).unwrap());
    }

    #[test]
    fn xor_is_1_uniform((a, b, phi) in common::dfa_pair_and_renaming(4, 4, 5)) {
        prop_assert!(check_1_uniformity(&Xor, &[&a, &b], &phi, &Limits::default()).unwrap());
    }

    #[test]
    fn stx_is_1_uniform((a, b, phi) in common::dfa_pair_and_renaming(4, 4, 5)) {
        prop_assert!(check_1_uniformity(&Stx, &[&a, &b], &phi, &Limits::default()).unwrap());
    }
}

#[test]
fn enumeration_is_complete_and_distinct() {
    for n in 1..=5usize {
        let all = Transformation::enumerate_all(n, &Limits::default()).unwrap();
        assert_eq!(all.len(), n.pow(n as u32));
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len(), "already sorted and duplicate-free");
    }
}

#[test]
fn monsters_with_proper_final_sets_are_minimal() {
    for n in 1..=4usize {
        for mask in 0u32..(1 << n) {
            let finals: Vec<usize> = (0..n).filter(|&q| mask >> q & 1 == 1).collect();
            let m = monster1(n, &finals, &Limits::default()).unwrap();
            let expected = if finals.is_empty() || finals.len() == n {
                1
            } else {
                n
            };
            assert_eq!(m.minimize().state_count(), expected, "n={n} F={finals:?}");
        }
    }
}

#[test]
fn right_triangles_iff_rows_overlap_exhaustively() {
    for n1 in 1..=12usize {
        for n2 in 1..=12usize {
            if n1 * n2 > 12 {
                continue;
            }
            for bits in 0u64..(1 << (n1 * n2)) {
                let t = Tableau::from_bits(n1, n2, bits).unwrap();
                assert_eq!(
                    has_right_triangle(&t),
                    !rows_equal_or_disjoint(&t),
                    "{n1}x{n2} {bits:#b}"
                );
            }
        }
    }
}
