//! Subgroup lattice by cyclic extension, and the Frattini subgroup.
//!
//! Every subgroup is generated by its elements of prime-power order, so starting
//! from the cyclic subgroups of prime-power order and repeatedly adjoining one more
//! of them reaches every subgroup. Elements are numbered and multiplied through a
//! table; subgroups are bitsets over that numbering.

use std::collections::{HashMap, HashSet};

use crate::arith::prime_power;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};

struct Table {
    elements: Vec<Permutation>,
    mul: Vec<u32>,
    words: usize,
}

#[derive(Clone)]
struct Sub {
    bits: Vec<u64>,
    gens: Vec<usize>,
}

impl Table {
    fn new(g: &PermGroup, caps: &Caps) -> Result<Table> {
        if g.order() > caps.frattini_cap {
            return Err(Error::CapExceeded {
                what: "frattini",
                needed: g.order(),
                cap: caps.frattini_cap,
            });
        }
        let elements = g.elements(caps.frattini_cap)?;
        let index: HashMap<&[u32], u32> = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.images(), i as u32))
            .collect();
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(index[a.mul(b).images()]);
            }
        }
        Ok(Table {
            elements,
            mul,
            words: n.div_ceil(64),
        })
    }

    fn closure(&self, gens: &[usize]) -> Sub {
        let n = self.elements.len();
        let id = self.elements.iter().position(|x| x.is_identity()).unwrap();
        let mut bits = vec![0u64; self.words];
        bits[id / 64] |= 1 << (id % 64);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul[x * n + s] as usize;
                if bits[y / 64] >> (y % 64) & 1 == 0 {
                    bits[y / 64] |= 1 << (y % 64);
                    queue.push(y);
                }
            }
        }
        Sub {
            bits,
            gens: gens.to_vec(),
        }
    }

    fn to_group(&self, degree: usize, bits: &[u64]) -> PermGroup {
        let members: Vec<Permutation> = (0..self.elements.len())
            .filter(|&i| has(bits, i))
            .map(|i| self.elements[i].clone())
            .collect();
        PermGroup::trivial(degree).extended(&members)
    }
}

fn has(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn popcount(a: &[u64]) -> u32 {
    a.iter().map(|w| w.count_ones()).sum()
}

fn lattice(table: &Table) -> Vec<Sub> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut cyclics: Vec<Sub> = Vec::new();
    for (i, x) in table.elements.iter().enumerate() {
        if x.is_identity() || prime_power(x.order()).is_none() {
            continue;
        }
        let c = table.closure(&[i]);
        if seen.insert(c.bits.clone()) {
            cyclics.push(c);
        }
    }
    let mut all = vec![table.closure(&[])];
    seen.insert(all[0].bits.clone());
    all.extend(cyclics.iter().cloned());
    let mut next = 1;
    while next < all.len() {
        let h = all[next].clone();
        next += 1;
        for c in &cyclics {
            if subset(&c.bits, &h.bits) {
                continue;
            }
            let mut gens = h.gens.clone();
            gens.push(c.gens[0]);
            let k = table.closure(&gens);
            if seen.insert(k.bits.clone()) {
                all.push(k);
            }
        }
    }
    all
}

/// All subgroups of `g`, which must have order at most the Frattini cap.
pub fn subgroup_lattice(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    let table = Table::new(g, caps)?;
    Ok(lattice(&table)
        .iter()
        .map(|s| table.to_group(g.degree(), &s.bits))
        .collect())
}

/// Intersection of the maximal subgroups; `Φ(1) = 1`.
pub fn frattini(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    if g.is_trivial() {
        return Ok(g.clone());
    }
    let table = Table::new(g, caps)?;
    let n = table.elements.len() as u32;
    let subs = lattice(&table);
    let proper: Vec<&Sub> = subs.iter().filter(|s| popcount(&s.bits) < n).collect();
    let mut meet = vec![u64::MAX; table.words];
    for m in &proper {
        let maximal = !proper
            .iter()
            .any(|o| popcount(&o.bits) > popcount(&m.bits) && subset(&m.bits, &o.bits));
        if maximal {
            for (w, b) in meet.iter_mut().zip(&m.bits) {
                *w &= b;
            }
        }
    }
    Ok(table.to_group(g.degree(), &meet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{alternating, cyclic, symmetric};

    fn q8() -> PermGroup {
        // Regular action of the quaternion group on 8 points.
        let i = Permutation::parse_cycles(8, "(0 2 1 3)(4 6 5 7)").unwrap();
        let j = Permutation::parse_cycles(8, "(0 4 1 5)(2 7 3 6)").unwrap();
        PermGroup::new(8, vec![i, j]).unwrap()
    }

    #[test]
    fn frattini_examples() {
        let caps = Caps::default();
        let q = q8();
        assert_eq!(q.order(), 8);
        assert_eq!(frattini(&q, &caps).unwrap().order(), 2);
        assert!(frattini(&symmetric(4).unwrap(), &caps).unwrap().is_trivial());
        assert_eq!(frattini(&cyclic(4).unwrap(), &caps).unwrap().order(), 2);
        assert!(frattini(&alternating(5).unwrap(), &caps).unwrap().is_trivial());
        assert_eq!(frattini(&cyclic(8).unwrap(), &caps).unwrap().order(), 4);
    }

    #[test]
    fn lattice_sizes() {
        let caps = Caps::default();
        assert_eq!(subgroup_lattice(&symmetric(3).unwrap(), &caps).unwrap().len(), 6);
        assert_eq!(subgroup_lattice(&symmetric(4).unwrap(), &caps).unwrap().len(), 30);
        assert_eq!(subgroup_lattice(&alternating(5).unwrap(), &caps).unwrap().len(), 59);
        assert_eq!(subgroup_lattice(&q8(), &caps).unwrap().len(), 6);
    }

    #[test]
    fn cap() {
        let caps = Caps {
            frattini_cap: 100,
            ..Caps::default()
        };
        let err = frattini(&symmetric(5).unwrap(), &caps).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { what: "frattini", .. }));
    }
}
