mod common;

use common::{brute_is_law, perm, raw_word, small_group, word};
use nslen::corpus::{alternating, symmetric};
use nslen::freeword::{FreeWord, Symmetry};
use nslen::Permutation;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tuple(degree: usize, k: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(degree), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_is_idempotent(w in raw_word(12, 3)) {
        let r = w.reduce();
        prop_assert!(r.is_reduced());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.reduce(), r.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in raw_word(8, 3), v in raw_word(8, 3), g in tuple(5, 3)) {
        let mut letters = u.letters().to_vec();
        letters.extend_from_slice(v.letters());
        let uv = FreeWord::from_letters(letters);
        let product = u.evaluate(&g).unwrap().mul(&v.evaluate(&g).unwrap());
        prop_assert_eq!(uv.evaluate(&g).unwrap(), product.clone());
        prop_assert_eq!(u.concat(&v).evaluate(&g).unwrap(), product);
    }

    #[test]
    fn partial_words_step_by_one_letter(w in word(10, 3), g in tuple(6, 3)) {
        let parts = w.partial_words();
        prop_assert_eq!(parts.len(), w.len() + 1);
        prop_assert!(parts[0].evaluate(&g).unwrap().is_identity());
        for i in 1..parts.len() {
            let letter = FreeWord::from_letters(vec![w.letters()[i - 1]]);
            let step = parts[i - 1].evaluate(&g).unwrap().mul(&letter.evaluate(&g).unwrap());
            prop_assert_eq!(parts[i].evaluate(&g).unwrap(), step);
        }
    }

    #[test]
    fn canonical_form_is_orbit_constant(
        w in word(7, 3),
        rename in Just(vec![1u32, 2, 3]).prop_shuffle(),
        flip in 1u32..=3,
        shift in 0usize..7,
    ) {
        let ri = Symmetry::RenameInvert;
        let c = w.canonical_form(ri);
        prop_assert!(c.is_canonical(ri));
        prop_assert_eq!(w.rename(&rename).canonical_form(ri), c.clone());
        prop_assert_eq!(w.invert_variable(flip).canonical_form(ri), c);

        let full = Symmetry::Full;
        let c = w.canonical_form(full);
        let cyc = w.cyclically_reduce();
        prop_assert_eq!(w.rename(&rename).canonical_form(full), c.clone());
        prop_assert_eq!(w.invert_variable(flip).canonical_form(full), c.clone());
        prop_assert_eq!(cyc.rotate(shift).canonical_form(full), c.clone());
        prop_assert_eq!(w.inverse().canonical_form(full), c);
    }

    #[test]
    fn law_status_is_full_orbit_invariant(
        g in small_group(24),
        w in word(4, 2),
        shift in 0usize..4,
    ) {
        let elements = g.elements(100).unwrap();
        let base = brute_is_law(&elements, &w);
        let cyc = w.cyclically_reduce();
        for image in [
            w.canonical_form(Symmetry::Full),
            w.rename(&[2, 1]),
            w.invert_variable(1),
            cyc.rotate(shift),
            w.inverse(),
        ] {
            prop_assert_eq!(brute_is_law(&elements, &image), base, "{} vs {}", w, image);
        }
    }
}

#[test]
fn conjugator_identity_on_sym6() {
    use rand::Rng;
    let s6 = symmetric(6).unwrap();
    let a6 = alternating(6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let len = rng.gen_range(1..=8);
        let letters = (0..len)
            .map(|_| {
                let v = rng.gen_range(1..=3);
                if rng.gen_bool(0.5) {
                    nslen::freeword::Letter::pos(v)
                } else {
                    nslen::freeword::Letter::neg(v)
                }
            })
            .collect();
        let w = FreeWord::new(letters);
        let g: Vec<Permutation> = (0..3).map(|_| s6.random_element(&mut rng)).collect();
        let b: Vec<Permutation> = (0..3).map(|_| a6.random_element(&mut rng)).collect();
        let a = w.conjugator_decomposition(&g, &b).unwrap();
        assert_eq!(a.len(), w.len());
        assert!(a.iter().all(|x| a6.contains(x).unwrap()));
    }
}
