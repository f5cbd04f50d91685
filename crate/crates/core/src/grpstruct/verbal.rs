//! Verbal subgroups `w(G)`.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::freeword::FreeWord;
use crate::laws::scan::TupleScan;
use crate::permgroup::{PermGroup, Permutation};

/// Number of random tuples used when exhaustion is out of reach.
pub const VERBAL_SAMPLES: usize = 2000;

#[derive(Clone, Debug)]
pub struct VerbalSubgroup {
    pub group: PermGroup,
    /// False when `group` is only a sampled lower bound.
    pub exhaustive: bool,
}

/// The subgroup generated by all values of `w`. It is normal, and the value set is
/// closed under conjugation, so it is the normal closure of the values with the
/// first variable restricted to class representatives.
pub fn verbal_subgroup(g: &PermGroup, w: &FreeWord, caps: &Caps, seed: u64) -> VerbalSubgroup {
    if w.num_vars() == 0 || g.is_trivial() {
        return VerbalSubgroup {
            group: PermGroup::trivial(g.degree()),
            exhaustive: true,
        };
    }
    let mut values: Vec<Permutation> = Vec::new();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut keep = |x: &Permutation| {
        if !x.is_identity() && seen.insert(x.clone()) {
            values.push(x.clone());
        }
    };
    let small = g.order() <= caps.element_cap;
    let listed = small
        .then(|| {
            Some((
                g.elements(caps.element_cap).ok()?,
                g.conjugacy_class_reps(caps.element_cap).ok()?,
            ))
        })
        .flatten();
    if let Some((elements, reps)) = listed {
        let scan = TupleScan::new(w, g.degree(), &reps, &elements);
        if scan.size().is_some_and(|n| n <= caps.tuple_cap) {
            let _ = scan.run(&mut |_, value| {
                keep(value);
                ControlFlow::Continue(())
            });
            return VerbalSubgroup {
                group: g.normal_closure_unchecked(&values),
                exhaustive: true,
            };
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..VERBAL_SAMPLES {
        let tuple: Vec<Permutation> = (0..w.num_vars())
            .map(|_| g.random_element(&mut rng))
            .collect();
        keep(&w.evaluate(&tuple).expect("tuple in one degree"));
    }
    VerbalSubgroup {
        group: g.normal_closure_unchecked(&values),
        exhaustive: false,
    }
}
