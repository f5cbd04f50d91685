//! Deterministic Schreier–Sims.
//!
//! A chain may act on a prefix `0..act_degree` of the points only. Permutations
//! of larger degree then carry a passenger part that rides along through every
//! product. Orbits, base points and sifting look only at the acting prefix, so
//! the chain describes the image of the group on the prefix while each
//! transversal element remembers a preimage. Residues that act trivially on the
//! prefix are collected as kernel generators.

use rand::Rng;

use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    pub orbit: Vec<usize>,
    /// `reps[p]` maps `base` to `p`; `inv_reps[p]` is its inverse.
    reps: Vec<Option<Permutation>>,
    inv_reps: Vec<Option<Permutation>>,
    /// Number of (orbit point, generator) Schreier pairs already verified.
    checked: usize,
}

impl Level {
    fn new(base: usize, act_degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            reps: vec![None; act_degree],
            inv_reps: vec![None; act_degree],
            checked: 0,
        }
    }

    pub fn rep(&self, point: usize) -> Option<&Permutation> {
        self.reps.get(point).and_then(|r| r.as_ref())
    }

    pub fn inv_rep(&self, point: usize) -> Option<&Permutation> {
        self.inv_reps.get(point).and_then(|r| r.as_ref())
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        for r in self.reps.iter_mut() {
            *r = None;
        }
        for r in self.inv_reps.iter_mut() {
            *r = None;
        }
        let id = Permutation::identity(degree);
        self.reps[self.base] = Some(id.clone());
        self.inv_reps[self.base] = Some(id);
        self.orbit = vec![self.base];
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if self.reps[q].is_none() {
                    let rep = self.reps[p].as_ref().unwrap().mul(g);
                    self.inv_reps[q] = Some(rep.inverse());
                    self.reps[q] = Some(rep);
                    self.orbit.push(q);
                }
            }
        }
        self.checked = 0;
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    act_degree: usize,
    pub levels: Vec<Level>,
    pub kernel: Vec<Permutation>,
}

impl StabChain {
    /// Chain of `⟨gens⟩` acting on all points.
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        StabChain::with_action(degree, degree, gens)
    }

    /// Chain of the action of `⟨gens⟩` on the prefix `0..act_degree`.
    pub fn with_action(degree: usize, act_degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            act_degree,
            levels: Vec::new(),
            kernel: Vec::new(),
        };
        for g in gens {
            chain.add_generator(g.clone());
        }
        chain
    }

    fn acts_trivially(&self, g: &Permutation) -> bool {
        (0..self.act_degree).all(|i| g.apply(i) == i)
    }

    fn first_moved(&self, g: &Permutation) -> Option<usize> {
        (0..self.act_degree).find(|&i| g.apply(i) != i)
    }

    /// Sifts `g` from level `start`; returns the residue and the level where sifting
    /// stopped (`levels.len()` when every level was passed).
    pub fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let p = g.apply(level.base);
            match level.inv_rep(p) {
                Some(inv) => g = g.mul(inv),
                None => return (g, l),
            }
        }
        let depth = self.levels.len();
        (g, depth)
    }

    /// True when `g` acts on the prefix like some element of the group.
    pub fn contains(&self, g: &Permutation) -> bool {
        let (r, _) = self.sift_from(g.clone(), 0);
        self.acts_trivially(&r)
    }

    /// Adds a generator and restores completeness. Returns false if `g` was already
    /// a member.
    pub fn add_generator(&mut self, g: Permutation) -> bool {
        let (r, j) = self.sift_from(g, 0);
        if self.acts_trivially(&r) {
            if !r.is_identity() {
                self.kernel.push(r);
            }
            return false;
        }
        // A residue fixes the base points of levels 0..j, so it can be a strong
        // generator of all of them.
        self.insert_strong(r, 0, j);
        self.close(j);
        true
    }

    fn insert_strong(&mut self, r: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = self.first_moved(&r).expect("residue moves a point");
            self.levels.push(Level::new(base, self.act_degree));
        }
        for l in from..=to {
            self.levels[l].gens.push(r.clone());
            self.levels[l].rebuild_orbit(self.degree);
        }
    }

    fn close(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let l = i as usize;
            match self.find_bad_schreier(l) {
                Some((residue, j)) => {
                    self.insert_strong(residue, l + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_bad_schreier(&mut self, l: usize) -> Option<(Permutation, usize)> {
        loop {
            let level = &self.levels[l];
            let ngens = level.gens.len();
            let total = level.orbit.len() * ngens;
            if level.checked >= total {
                return None;
            }
            let idx = level.checked;
            let p = level.orbit[idx / ngens];
            let x = &level.gens[idx % ngens];
            let q = x.apply(p);
            let s = level
                .rep(p)
                .unwrap()
                .mul(x)
                .mul(level.inv_rep(q).unwrap());
            self.levels[l].checked += 1;
            let (r, j) = self.sift_from(s, l + 1);
            if !self.acts_trivially(&r) {
                return Some((r, j));
            }
            if !r.is_identity() {
                self.kernel.push(r);
            }
        }
    }

    pub fn order(&self) -> Result<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .ok_or(Error::OrderOverflow)
        })
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators, deduplicated, in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Element with the given mixed-radix coordinates (one orbit index per level).
    pub fn element_at(&self, coords: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (l, level) in self.levels.iter().enumerate().rev() {
            g = g.mul(level.rep(level.orbit[coords[l]]).unwrap());
        }
        g
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let coords: Vec<usize> = self
            .levels
            .iter()
            .map(|l| rng.gen_range(0..l.orbit.len()))
            .collect();
        self.element_at(&coords)
    }

    pub fn radices(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Expresses an element of the prefix image as a product of transversal
    /// elements, returning the carried full-degree element. `g` need only be
    /// meaningful on the prefix; its passenger part is ignored.
    pub fn lift(&self, image: &[u32]) -> Option<Permutation> {
        // Track the prefix image of the remaining residue separately.
        let mut residue: Vec<u32> = image.to_vec();
        let mut lifted = Permutation::identity(self.degree);
        let mut factors: Vec<&Permutation> = Vec::new();
        for level in &self.levels {
            let p = residue[level.base] as usize;
            let inv = level.inv_rep(p)?;
            for x in residue.iter_mut() {
                *x = inv.apply(*x as usize) as u32;
            }
            factors.push(level.rep(p).unwrap());
        }
        if residue.iter().enumerate().any(|(i, &x)| i != x as usize) {
            return None;
        }
        for f in factors.into_iter().rev() {
            lifted = lifted.mul(f);
        }
        Some(lifted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        let a5 = StabChain::new(5, &[p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")]);
        assert_eq!(a5.order().unwrap(), 60);
        assert_eq!(a5.base()[0], 0);
        let s4 = StabChain::new(4, &[p(4, "(0 1)"), p(4, "(0 1 2 3)")]);
        assert_eq!(s4.order().unwrap(), 24);
        let triv = StabChain::new(3, &[]);
        assert_eq!(triv.order().unwrap(), 1);
    }

    #[test]
    fn membership() {
        let a5 = StabChain::new(5, &[p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")]);
        assert!(a5.contains(&p(5, "(0 1)(2 3)")));
        assert!(!a5.contains(&p(5, "(0 1)")));
    }

    #[test]
    fn tracked_chain_lifts_and_collects_kernel() {
        // S4 acting on {0,1,2} through S4 -> S3 (degree 3 image carried with degree 4
        // original). Encode pairs as degree 7: image on 0..3, original on 3..7.
        let s4_gens = [p(4, "(0 1)"), p(4, "(0 1 2 3)")];
        // The action of S4 on the three pair-partitions {01|23, 02|13, 03|12}.
        let partitions = [[0usize, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
        let image_of = |g: &Permutation| -> Vec<u32> {
            partitions
                .iter()
                .map(|part| {
                    let a = [g.apply(part[0]), g.apply(part[1])];
                    partitions
                        .iter()
                        .position(|q| {
                            let pairs = [[q[0], q[1]], [q[2], q[3]]];
                            pairs.iter().any(|pr| {
                                (pr[0] == a[0] && pr[1] == a[1]) || (pr[0] == a[1] && pr[1] == a[0])
                            })
                        })
                        .unwrap() as u32
                })
                .collect()
        };
        let pairs: Vec<Permutation> = s4_gens
            .iter()
            .map(|g| {
                let mut v = image_of(g);
                v.extend(g.images().iter().map(|x| x + 3));
                Permutation::from_images(v).unwrap()
            })
            .collect();
        let chain = StabChain::with_action(7, 3, &pairs);
        assert_eq!(chain.order().unwrap(), 6);
        let k = StabChain::new(7, &chain.kernel);
        assert_eq!(k.order().unwrap(), 4);
        let lifted = chain.lift(&[1, 0, 2]).unwrap();
        let orig: Vec<u32> = lifted.images()[3..].iter().map(|x| x - 3).collect();
        let orig = Permutation::from_images(orig).unwrap();
        assert_eq!(image_of(&orig), vec![1, 0, 2]);
    }
}
