//! Conjugacy classes of dihedral subgroups of order `2p` in a simple group.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::is_nonabelian_simple;
use crate::arith::prime_divisors;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};

#[derive(Clone, Debug, Serialize)]
pub struct DihedralPrimeReport {
    pub p: u64,
    /// Number of dihedral subgroups of order `2p`.
    pub subgroups: usize,
    /// Size of each conjugacy class, largest first.
    pub class_sizes: Vec<usize>,
    /// Per class: mapped onto itself by every supplied automorphism.
    pub invariant: Vec<bool>,
}

impl DihedralPrimeReport {
    /// Exactly one class, and it is invariant.
    pub fn single_invariant_class(&self) -> bool {
        self.class_sizes.len() == 1 && self.invariant[0]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralClassReport {
    pub primes: Vec<DihedralPrimeReport>,
}

impl DihedralClassReport {
    /// Primes whose dihedral subgroups form a single invariant class.
    pub fn single_class_primes(&self) -> Vec<u64> {
        self.primes
            .iter()
            .filter(|r| r.single_invariant_class())
            .map(|r| r.p)
            .collect()
    }
}

type Subgroup = BTreeSet<u32>;

struct Indexed {
    elements: Vec<Permutation>,
    index: HashMap<Vec<u32>, u32>,
}

impl Indexed {
    fn id(&self, x: &Permutation) -> Option<u32> {
        self.index.get(x.images()).copied()
    }

    /// `{ a⁻¹ x a : x ∈ sub }`, or `None` when it leaves the group.
    fn conjugate(&self, sub: &Subgroup, a: &Permutation) -> Option<Subgroup> {
        sub.iter()
            .map(|&i| self.id(&self.elements[i as usize].conjugate_by(a)))
            .collect()
    }
}

/// Enumerates, for each odd prime `p` with `2p` dividing `|S|`, the dihedral
/// subgroups of order `2p` and their `S`-classes, and tests each class for
/// invariance under conjugation by `extra_auts`.
pub fn dihedral_class_check(
    s: &PermGroup,
    extra_auts: &[Permutation],
    caps: &Caps,
) -> Result<DihedralClassReport> {
    if !is_nonabelian_simple(s, caps)? {
        return Err(Error::NotSimple(s.name().unwrap_or("group").to_string()));
    }
    for a in extra_auts {
        if a.degree() != s.degree() {
            return Err(Error::DegreeMismatch {
                expected: s.degree(),
                found: a.degree(),
            });
        }
    }
    let elements = s.elements(caps.element_cap)?;
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x.images().to_vec(), i as u32))
        .collect();
    let ix = Indexed { elements, index };
    let involutions: Vec<&Permutation> =
        ix.elements.iter().filter(|x| x.order() == 2).collect();

    let mut primes = Vec::new();
    for p in prime_divisors(s.order()) {
        if p == 2 || !s.order().is_multiple_of(2 * p as u128) {
            continue;
        }
        let mut cyclics: BTreeSet<Subgroup> = BTreeSet::new();
        let mut dihedral: BTreeSet<Subgroup> = BTreeSet::new();
        for c in ix.elements.iter().filter(|x| x.order() == p) {
            let powers: Vec<Permutation> = (0..p as i64).map(|k| c.pow(k)).collect();
            let key: Subgroup = powers.iter().map(|x| ix.id(x).unwrap()).collect();
            if !cyclics.insert(key.clone()) {
                continue;
            }
            let c_inv = c.inverse();
            for t in &involutions {
                if c.conjugate_by(t) != c_inv {
                    continue;
                }
                let mut d = key.clone();
                d.extend(powers.iter().map(|x| ix.id(&x.mul(t)).unwrap()));
                dihedral.insert(d);
            }
        }

        let mut remaining = dihedral.clone();
        let mut classes: Vec<BTreeSet<Subgroup>> = Vec::new();
        while let Some(first) = remaining.pop_first() {
            let mut class = BTreeSet::from([first.clone()]);
            let mut frontier = vec![first];
            while let Some(d) = frontier.pop() {
                for g in s.generators() {
                    let e = ix.conjugate(&d, g).expect("subgroup of S");
                    if class.insert(e.clone()) {
                        remaining.remove(&e);
                        frontier.push(e);
                    }
                }
            }
            classes.push(class);
        }
        classes.sort_by_key(|c| std::cmp::Reverse(c.len()));
        let invariant = classes
            .iter()
            .map(|class| {
                extra_auts.iter().all(|a| {
                    class
                        .iter()
                        .all(|d| ix.conjugate(d, a).is_some_and(|e| class.contains(&e)))
                })
            })
            .collect();
        primes.push(DihedralPrimeReport {
            p,
            subgroups: dihedral.len(),
            class_sizes: classes.iter().map(|c| c.len()).collect(),
            invariant,
        });
    }
    debug_assert!(!primes.is_empty(), "simple groups have an odd prime p with 2p | order");
    Ok(DihedralClassReport { primes })
}
