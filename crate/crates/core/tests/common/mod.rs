//! Strategies and brute-force oracles shared by the property suites.
#![allow(dead_code)]

use std::collections::HashSet;

use nslen::freeword::{FreeWord, Letter};
use nslen::{PermGroup, Permutation};
use proptest::prelude::*;

pub fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Subgroups of `Sym(degree)` generated by one to `max_gens` random permutations.
pub fn group(degree: usize, max_gens: usize) -> impl Strategy<Value = PermGroup> {
    prop::collection::vec(perm(degree), 1..=max_gens)
        .prop_map(move |gens| PermGroup::new(degree, gens).unwrap())
}

/// Groups with at most `max_order` elements on up to six points.
pub fn small_group(max_order: u128) -> impl Strategy<Value = PermGroup> {
    (2usize..=6)
        .prop_flat_map(|d| group(d, 2))
        .prop_filter("order bound", move |g| g.order() <= max_order)
}

pub fn letter(vars: u32) -> impl Strategy<Value = Letter> {
    (1..=vars, any::<bool>()).prop_map(|(v, inv)| if inv { Letter::neg(v) } else { Letter::pos(v) })
}

/// Unreduced letter strings of length up to `max_len`.
pub fn raw_word(max_len: usize, vars: u32) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(letter(vars), 0..=max_len).prop_map(FreeWord::from_letters)
}

/// Non-empty reduced words of length up to `max_len`.
pub fn word(max_len: usize, vars: u32) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(letter(vars), 1..=max_len)
        .prop_map(FreeWord::new)
        .prop_filter("non-empty", |w| !w.is_empty())
}

/// Every tuple of elements, with no pruning or symmetry.
pub fn brute_is_law(elements: &[Permutation], w: &FreeWord) -> bool {
    let k = w.num_vars();
    if k == 0 {
        return true;
    }
    let n = elements.len();
    let mut idx = vec![0usize; k];
    loop {
        let tuple: Vec<Permutation> = idx.iter().map(|&i| elements[i].clone()).collect();
        if !w.evaluate(&tuple).unwrap().is_identity() {
            return false;
        }
        let mut v = k;
        loop {
            if v == 0 {
                return true;
            }
            v -= 1;
            idx[v] += 1;
            if idx[v] < n {
                break;
            }
            idx[v] = 0;
        }
    }
}

/// Closure under right multiplication by the generators.
pub fn naive_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut set = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = x.mul(s);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// A finite group is nilpotent when each Sylow subgroup is normal, i.e. the
/// number of elements of p-power order equals the p-part of the order.
pub fn is_nilpotent(g: &PermGroup) -> bool {
    let elements = g.elements(100_000).unwrap();
    let mut n = g.order();
    let mut p = 2u128;
    while n > 1 {
        if n.is_multiple_of(p) {
            let mut part = 1;
            while n.is_multiple_of(p) {
                n /= p;
                part *= p;
            }
            let count = elements
                .iter()
                .filter(|x| {
                    let mut o = x.order() as u128;
                    while o.is_multiple_of(p) {
                        o /= p;
                    }
                    o == 1
                })
                .count() as u128;
            if count != part {
                return false;
            }
        }
        p += 1;
    }
    true
}
