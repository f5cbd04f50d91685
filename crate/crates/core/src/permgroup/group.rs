use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::cert::StructureCertificate;
use super::chain::StabChain;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A permutation group given by generators, with a complete stabilizer chain.
///
/// Cloning is cheap; the group is immutable once built.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
    certificate: Option<StructureCertificate>,
}

/// One conjugacy class: its representative (the first class member in element
/// order) and its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
}

impl PermGroup {
    /// Group generated by `gens` acting on `0..degree`.
    ///
    /// Identity generators are dropped. The stabilizer chain uses the smallest
    /// moved point as each new base point.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = StabChain::new(degree, &gens);
        Self::from_parts(None, degree, gens, chain, None)
    }

    /// Builds a group from raw image lists, checking each is a bijection.
    pub fn from_image_lists(degree: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    fn from_parts(
        name: Option<String>,
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabChain,
        certificate: Option<StructureCertificate>,
    ) -> Result<Self> {
        let order = chain.order()?;
        Ok(PermGroup {
            inner: Arc::new(Inner {
                name,
                degree,
                generators,
                chain,
                order,
                certificate,
            }),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("trivial group")
    }

    /// Same group with a display name.
    pub fn named(&self, name: impl Into<String>) -> PermGroup {
        PermGroup {
            inner: Arc::new(Inner {
                name: Some(name.into()),
                degree: self.inner.degree,
                generators: self.inner.generators.clone(),
                chain: self.inner.chain.clone(),
                order: self.inner.order,
                certificate: self.inner.certificate.clone(),
            }),
        }
    }

    /// Attaches a structure certificate after re-verifying it against this group.
    pub fn with_certificate(&self, cert: StructureCertificate) -> Result<PermGroup> {
        cert.verify(self)?;
        Ok(PermGroup {
            inner: Arc::new(Inner {
                name: self.inner.name.clone(),
                degree: self.inner.degree,
                generators: self.inner.generators.clone(),
                chain: self.inner.chain.clone(),
                order: self.inner.order,
                certificate: Some(cert),
            }),
        })
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn certificate(&self) -> Option<&StructureCertificate> {
        self.inner.certificate.as_ref()
    }

    pub(crate) fn chain(&self) -> &StabChain {
        &self.inner.chain
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.inner.chain.strong_generators()
    }

    fn check_degree(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: g.degree(),
            });
        }
        Ok(())
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        self.check_degree(g)?;
        Ok(self.inner.chain.contains(g))
    }

    /// Membership for permutations already known to have the right degree.
    pub(crate) fn has(&self, g: &Permutation) -> bool {
        self.inner.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.has(g))
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn same_subgroup(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// True when every generator of `self` conjugates `sub` into itself.
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        self.generators()
            .iter()
            .all(|g| sub.generators().iter().all(|x| sub.has(&x.conjugate_by(g))))
    }

    /// `self ⊴ parent`.
    pub fn is_normal_in(&self, parent: &PermGroup) -> bool {
        self.is_subgroup_of(parent) && parent.normalizes(self)
    }

    /// Uniformly random element (product of random transversal elements).
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.inner.chain.random_element(rng)
    }

    /// All elements in the order fixed by the chain's mixed-radix coordinates.
    /// Unlike [`elements`](Self::elements) this needs no memory and no cap.
    pub fn chain_elements(&self) -> ChainElements<'_> {
        ChainElements {
            chain: &self.inner.chain,
            coords: vec![0; self.inner.chain.levels.len()],
            radices: self.inner.chain.radices(),
            done: false,
        }
    }

    /// All elements, breadth first over the generators with each layer sorted
    /// lexicographically by image sequence.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        if self.order() > cap {
            return Err(Error::CapExceeded {
                what: "element",
                needed: self.order(),
                cap,
            });
        }
        let id = self.identity();
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(self.order() as usize);
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut start = 0;
        while start < out.len() {
            let end = out.len();
            let mut layer: Vec<Permutation> = Vec::new();
            for e in &out[start..end] {
                for g in self.generators() {
                    let x = e.mul(g);
                    if seen.insert(x.clone()) {
                        layer.push(x);
                    }
                }
            }
            layer.sort();
            out.extend(layer);
            start = end;
        }
        debug_assert_eq!(out.len() as u128, self.order());
        Ok(out)
    }

    /// Conjugacy classes as orbits of the conjugation action on [`elements`](Self::elements).
    pub fn conjugacy_classes(&self, cap: u128) -> Result<Vec<ConjugacyClass>> {
        let elems = self.elements(cap)?;
        let index: HashMap<&Permutation, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut class_of = vec![usize::MAX; elems.len()];
        let mut classes = Vec::new();
        for i in 0..elems.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[i] = c;
            let mut queue = VecDeque::from([i]);
            let mut size = 0;
            while let Some(j) = queue.pop_front() {
                size += 1;
                for g in self.generators() {
                    let k = index[&elems[j].conjugate_by(g)];
                    if class_of[k] == usize::MAX {
                        class_of[k] = c;
                        queue.push_back(k);
                    }
                }
            }
            classes.push(ConjugacyClass {
                representative: elems[i].clone(),
                size,
            });
        }
        Ok(classes)
    }

    pub fn conjugacy_class_reps(&self, cap: u128) -> Result<Vec<Permutation>> {
        Ok(self
            .conjugacy_classes(cap)?
            .into_iter()
            .map(|c| c.representative)
            .collect())
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g)? {
                return Err(Error::NotInGroup);
            }
        }
        PermGroup::new(self.degree(), gens)
    }

    /// Smallest normal subgroup containing `xs`.
    pub fn normal_closure(&self, xs: &[Permutation]) -> Result<PermGroup> {
        for x in xs {
            if !self.contains(x)? {
                return Err(Error::NotInGroup);
            }
        }
        Ok(self.normal_closure_unchecked(xs))
    }

    pub(crate) fn normal_closure_unchecked(&self, xs: &[Permutation]) -> PermGroup {
        let mut chain = StabChain::new(self.degree(), &[]);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut queue: VecDeque<Permutation> = VecDeque::new();
        for x in xs {
            if chain.add_generator(x.clone()) {
                gens.push(x.clone());
                queue.push_back(x.clone());
            }
        }
        while let Some(n) = queue.pop_front() {
            for g in self.generators() {
                let c = n.conjugate_by(g);
                if chain.add_generator(c.clone()) {
                    gens.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
        PermGroup::from_parts(None, self.degree(), gens, chain, None)
            .expect("subgroup order bounded by parent order")
    }

    /// Join of two subgroups.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.generators().to_vec();
        let mut chain = self.inner.chain.clone();
        for g in other.generators() {
            if chain.add_generator(g.clone()) {
                gens.push(g.clone());
            }
        }
        PermGroup::from_parts(None, self.degree(), gens, chain, None)
            .expect("join order bounded")
    }

    /// Adds generators to this group, keeping the chain incremental.
    pub fn extended(&self, extra: &[Permutation]) -> PermGroup {
        let mut gens = self.generators().to_vec();
        let mut chain = self.inner.chain.clone();
        for g in extra {
            if chain.add_generator(g.clone()) {
                gens.push(g.clone());
            }
        }
        PermGroup::from_parts(None, self.degree(), gens, chain, None).expect("order bounded")
    }

    /// Commutator subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_unchecked(&comms)
    }

    /// `[G, G', G'', ...]`, stopping at the trivial group or at the first term
    /// equal to its predecessor (which is then listed twice).
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                return series;
            }
            let next = last.derived_subgroup();
            let stable = next.order() == last.order();
            series.push(next);
            if stable {
                return series;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Orbit partition of the points, each orbit sorted, orbits ordered by
    /// smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for g in self.generators() {
                    let q = g.apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        self.orbits()
            .into_iter()
            .find(|o| o.binary_search(&point).is_ok())
            .unwrap_or_default()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree() <= 1 || self.orbits().len() == 1
    }

    /// Conjugate subgroup `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let gens = self.generators().iter().map(|x| x.conjugate_by(g)).collect();
        PermGroup::new(self.degree(), gens).expect("conjugate has the same order")
    }

    /// Exact simplicity test through conjugacy classes: every non-identity class
    /// has normal closure equal to the whole group.
    pub fn is_simple_small(&self, cap: u128) -> Result<bool> {
        if self.order() == 1 {
            return Ok(false);
        }
        for x in self.conjugacy_class_reps(cap)? {
            if x.is_identity() {
                continue;
            }
            if self.normal_closure_unchecked(&[x]).order() != self.order() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.inner.name)
            .field("degree", &self.inner.degree)
            .field("order", &self.inner.order)
            .field("generators", &self.inner.generators)
            .finish()
    }
}

/// Iterator over the group elements in chain coordinate order.
pub struct ChainElements<'a> {
    chain: &'a StabChain,
    coords: Vec<usize>,
    radices: Vec<usize>,
    done: bool,
}

impl Iterator for ChainElements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let item = self.chain.element_at(&self.coords);
        // Advance the deepest level fastest.
        let mut l = self.coords.len();
        loop {
            if l == 0 {
                self.done = true;
                break;
            }
            l -= 1;
            self.coords[l] += 1;
            if self.coords[l] < self.radices[l] {
                break;
            }
            self.coords[l] = 0;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(d, s).unwrap()
    }

    fn a5() -> PermGroup {
        PermGroup::new(5, vec![p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")]).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![p(4, "(0 1)"), p(4, "(0 1 2 3)")]).unwrap()
    }

    /// Closure of the generators by repeated right multiplication.
    fn brute_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut set = HashSet::from([Permutation::identity(degree)]);
        let mut frontier = vec![Permutation::identity(degree)];
        while let Some(e) = frontier.pop() {
            for g in gens {
                let x = e.mul(g);
                if set.insert(x.clone()) {
                    frontier.push(x);
                }
            }
        }
        set
    }

    #[test]
    fn orders_match_brute_force() {
        assert_eq!(a5().order(), 60);
        assert_eq!(
            brute_closure(5, a5().generators()).len(),
            60,
            "closure oracle"
        );
        assert_eq!(PermGroup::new(2, vec![p(2, "(0 1)")]).unwrap().order(), 2);
        assert_eq!(s4().order(), 24);
        assert_eq!(PermGroup::trivial(3).order(), 1);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = PermGroup::new(4, vec![p(5, "(0 1)")]).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { expected: 4, found: 5 });
        assert!(a5().contains(&p(4, "(0 1)")).is_err());
        assert!(PermGroup::from_image_lists(3, vec![vec![0, 0, 2]]).is_err());
    }

    #[test]
    fn membership() {
        let g = a5();
        assert!(g.contains(&p(5, "(0 1)(2 3)")).unwrap());
        assert!(!g.contains(&p(5, "(0 1)")).unwrap());
        assert!(g.contains(&g.identity()).unwrap());
    }

    #[test]
    fn element_lists() {
        let s3 = PermGroup::new(3, vec![p(3, "(0 1)"), p(3, "(0 1 2)")]).unwrap();
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        assert_eq!(s3.elements(100).unwrap().len(), 6);
        assert_eq!(c4.elements(100).unwrap().len(), 4);
        let e = a5().elements(100).unwrap();
        assert_eq!(e.len(), 60);
        assert!(e[0].is_identity());
        assert!(matches!(
            a5().elements(59),
            Err(Error::CapExceeded { what: "element", .. })
        ));
        let set: HashSet<_> = a5().chain_elements().collect();
        assert_eq!(set.len(), 60);
    }

    #[test]
    fn class_counts() {
        let s3 = PermGroup::new(3, vec![p(3, "(0 1)"), p(3, "(0 1 2)")]).unwrap();
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        assert_eq!(s3.conjugacy_classes(100).unwrap().len(), 3);
        assert_eq!(c4.conjugacy_classes(100).unwrap().len(), 4);
        let classes = a5().conjugacy_classes(100).unwrap();
        assert_eq!(classes.len(), 5);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn normal_closures() {
        let g = s4();
        assert_eq!(g.normal_closure(&[p(4, "(0 1)(2 3)")]).unwrap().order(), 4);
        assert_eq!(g.normal_closure(&[p(4, "(0 1 2)")]).unwrap().order(), 12);
        for x in a5().elements(100).unwrap().into_iter().skip(1) {
            assert_eq!(a5().normal_closure(&[x]).unwrap().order(), 60);
        }
        assert_eq!(
            a5().normal_closure(&[p(5, "(0 1)")]).unwrap_err(),
            Error::NotInGroup
        );
    }

    #[test]
    fn derived_series_orders() {
        let orders = |g: &PermGroup| g.derived_series().iter().map(|h| h.order()).collect::<Vec<_>>();
        assert_eq!(orders(&s4()), vec![24, 12, 4, 1]);
        assert_eq!(orders(&a5()), vec![60, 60]);
        let c2 = PermGroup::new(2, vec![p(2, "(0 1)")]).unwrap();
        assert_eq!(orders(&c2), vec![2, 1]);
        assert!(s4().is_solvable());
        assert!(!a5().is_solvable());
    }

    #[test]
    fn orbit_partitions() {
        assert!(a5().is_transitive());
        let g = PermGroup::new(4, vec![p(4, "(0 1)")]).unwrap();
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2], vec![3]]);
        assert!(!g.is_transitive());
    }

    #[test]
    fn simplicity() {
        assert!(a5().is_simple_small(1000).unwrap());
        assert!(!s4().is_simple_small(1000).unwrap());
    }
}
