mod common;

use common::{brute_is_law, small_group, word};
use nslen::corpus::{alternating, cyclic, dihedral, symmetric};
use nslen::freeword::{enumerate_words, FreeWord, Symmetry};
use nslen::laws::{is_law, non_law_witness, nu, nu_with_symmetry, LawStatus, NuValue};
use nslen::{Caps, PermGroup, Permutation};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn witnesses_are_sound(g in small_group(720), w in word(6, 3), seed in any::<u64>()) {
        let r = non_law_witness(&g, &w, 200, seed);
        if let Some(t) = &r.witness {
            prop_assert_eq!(r.status, LawStatus::NonLawWitness);
            prop_assert!(t.iter().all(|x| g.contains(x).unwrap()));
            prop_assert!(!w.evaluate(t).unwrap().is_identity());
        } else {
            prop_assert_ne!(r.status, LawStatus::NonLawWitness);
        }
    }

    #[test]
    fn exact_check_matches_brute_force(g in small_group(24), w in word(4, 3), workers in 1usize..=3) {
        let elements = g.elements(100).unwrap();
        let r = is_law(&g, &w, &Caps::default(), workers);
        let expected = if brute_is_law(&elements, &w) {
            LawStatus::LawProved
        } else {
            LawStatus::NonLawWitness
        };
        prop_assert_eq!(r.status, expected);
        if let Some(t) = &r.witness {
            prop_assert!(!w.evaluate(t).unwrap().is_identity());
        }
    }

    #[test]
    fn laws_pass_to_subgroups(g in small_group(120), w in word(4, 2), pick in any::<prop::sample::Index>()) {
        let elements = g.elements(1000).unwrap();
        let x = elements[pick.index(elements.len())].clone();
        let h = g.subgroup(vec![x]).unwrap();
        if is_law(&g, &w, &Caps::default(), 1).status == LawStatus::LawProved {
            prop_assert_eq!(is_law(&h, &w, &Caps::default(), 1).status, LawStatus::LawProved);
        }
    }
}

fn groups_up_to_12() -> Vec<PermGroup> {
    let mut v: Vec<PermGroup> = (1..=12).map(|m| cyclic(m).unwrap()).collect();
    v.extend((3..=6).map(|n| dihedral(n).unwrap()));
    v.push(alternating(4).unwrap());
    v
}

#[test]
fn full_and_rename_invert_give_the_same_nu() {
    let caps = Caps::default();
    for g in groups_up_to_12() {
        let a = nu_with_symmetry(&g, 4, Symmetry::Full, &caps, 1, 1);
        let b = nu_with_symmetry(&g, 4, Symmetry::RenameInvert, &caps, 1, 1);
        assert_eq!(a.value, b.value, "{:?}", g.name());
    }
}

#[test]
fn cyclic_exponent_bound() {
    let caps = Caps::default();
    for m in 1..=12usize {
        let g = cyclic(m).unwrap();
        let w = FreeWord::power(1, m as i32);
        assert_eq!(is_law(&g, &w, &caps, 1).status, LawStatus::LawProved);
        let r = nu(&g, m.min(4), &caps, 1, 1);
        match r.value {
            NuValue::Exact(n) => assert!(n <= m),
            NuValue::GreaterThan(n) => assert!(n < m),
        }
    }
}

#[test]
fn laws_of_sym4_hold_in_its_subgroups() {
    let caps = Caps::default();
    let s4 = symmetric(4).unwrap();
    let d4 = s4
        .subgroup(vec![
            Permutation::parse_cycles(4, "(0 1 2 3)").unwrap(),
            Permutation::parse_cycles(4, "(0 2)").unwrap(),
        ])
        .unwrap();
    for h in [alternating(4).unwrap(), d4] {
        for len in 1..=4 {
            for w in enumerate_words(len, Symmetry::Full) {
                if is_law(&s4, &w, &caps, 1).status == LawStatus::LawProved {
                    assert_eq!(is_law(&h, &w, &caps, 1).status, LawStatus::LawProved, "{w}");
                }
            }
        }
    }
}
