//! Action on right cosets of a subgroup.

use std::collections::HashMap;

use super::chain::StabChain;
use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// The permutation action of a group `G` on the right cosets `Hg` of a subgroup `H`.
///
/// Cosets are numbered in breadth-first discovery order from `H` itself (point 0).
/// When `H` is normal the image is the quotient `G/H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    parent: PermGroup,
    sub: PermGroup,
    /// Canonical representative of each coset.
    reps: Vec<Permutation>,
    keys: HashMap<Vec<u32>, usize>,
    /// Image of each parent generator, in generator order.
    gen_images: Vec<Permutation>,
    image: PermGroup,
    lifter: StabChain,
    normal: bool,
}

/// Lexicographically least element of the right coset `H g`, determined by
/// minimizing the images of the base points of `H` one level at a time.
pub(crate) fn canonical_coset_element(sub: &PermGroup, g: &Permutation) -> Permutation {
    let mut c = g.clone();
    for level in &sub.chain().levels {
        let best = level
            .orbit
            .iter()
            .copied()
            .min_by_key(|&q| c.apply(q))
            .expect("orbit contains the base point");
        if best != level.base {
            c = level.rep(best).unwrap().mul(&c);
        }
    }
    c
}

impl CosetAction {
    pub fn new(parent: &PermGroup, sub: &PermGroup, index_cap: u128) -> Result<Self> {
        if !sub.is_subgroup_of(parent) {
            return Err(Error::NotASubgroup);
        }
        let index = parent.order() / sub.order();
        if index > index_cap {
            return Err(Error::CapExceeded {
                what: "index",
                needed: index,
                cap: index_cap,
            });
        }
        let index = index as usize;
        let id = parent.identity();
        let first = canonical_coset_element(sub, &id);
        let mut keys: HashMap<Vec<u32>, usize> = HashMap::with_capacity(index);
        keys.insert(first.images().to_vec(), 0);
        let mut reps = vec![first];
        let mut tables: Vec<Vec<u32>> = vec![Vec::with_capacity(index); parent.generators().len()];
        let mut head = 0;
        while head < reps.len() {
            for (gi, g) in parent.generators().iter().enumerate() {
                let c = canonical_coset_element(sub, &reps[head].mul(g));
                let next = reps.len();
                let j = *keys.entry(c.images().to_vec()).or_insert(next);
                if j == next {
                    reps.push(c);
                }
                tables[gi].push(j as u32);
            }
            head += 1;
        }
        debug_assert_eq!(reps.len(), index);
        let gen_images: Vec<Permutation> = tables
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<_>>()?;
        let image = PermGroup::new(index, gen_images.clone())?;
        let n = parent.degree();
        let paired: Vec<Permutation> = gen_images
            .iter()
            .zip(parent.generators())
            .map(|(img, g)| {
                let mut v = img.images().to_vec();
                v.extend(g.images().iter().map(|&x| x + index as u32));
                Permutation::from_images_unchecked(v)
            })
            .collect();
        let lifter = StabChain::with_action(index + n, index, &paired);
        let normal = parent.normalizes(sub);
        Ok(CosetAction {
            parent: parent.clone(),
            sub: sub.clone(),
            reps,
            keys,
            gen_images,
            image,
            lifter,
            normal,
        })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.sub
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Generator-wise action table: row `i` is the image of parent generator `i`.
    pub fn generator_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    pub fn coset_representatives(&self) -> &[Permutation] {
        &self.reps
    }

    /// Number of the coset containing `g`.
    pub fn coset_of(&self, g: &Permutation) -> usize {
        let c = canonical_coset_element(&self.sub, g);
        self.keys[c.images()]
    }

    /// Image of a parent element in the coset action.
    pub fn image_of(&self, g: &Permutation) -> Result<Permutation> {
        if !self.parent.contains(g)? {
            return Err(Error::NotInGroup);
        }
        let images = self
            .reps
            .iter()
            .map(|r| self.coset_of(&r.mul(g)) as u32)
            .collect();
        Permutation::from_images(images)
    }

    /// Some parent element mapping onto `x`.
    pub fn lift(&self, x: &Permutation) -> Result<Permutation> {
        if x.degree() != self.index() {
            return Err(Error::DegreeMismatch {
                expected: self.index(),
                found: x.degree(),
            });
        }
        let paired = self.lifter.lift(x.images()).ok_or(Error::NotInGroup)?;
        let k = self.index() as u32;
        Ok(Permutation::from_images_unchecked(
            paired.images()[self.index()..].iter().map(|&v| v - k).collect(),
        ))
    }

    /// Kernel of the action: the core of the subgroup.
    pub fn kernel(&self) -> PermGroup {
        if self.normal {
            return self.sub.clone();
        }
        let k = self.index() as u32;
        let gens: Vec<Permutation> = self
            .lifter
            .kernel
            .iter()
            .map(|r| {
                Permutation::from_images_unchecked(
                    r.images()[self.index()..].iter().map(|&v| v - k).collect(),
                )
            })
            .collect();
        self.parent.normal_closure_unchecked(&gens)
    }

    /// Kernel generators as produced by the lifting chain, before normal closure.
    pub fn kernel_generators(&self) -> Vec<Permutation> {
        let k = self.index() as u32;
        self.lifter
            .kernel
            .iter()
            .map(|r| {
                Permutation::from_images_unchecked(
                    r.images()[self.index()..].iter().map(|&v| v - k).collect(),
                )
            })
            .collect()
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, sub_image: &PermGroup) -> Result<PermGroup> {
        let mut lifts = Vec::with_capacity(sub_image.generators().len());
        for x in sub_image.generators() {
            lifts.push(self.lift(x)?);
        }
        Ok(self.kernel().extended(&lifts))
    }
}

impl PermGroup {
    /// See [`CosetAction`].
    pub fn coset_action(&self, sub: &PermGroup, index_cap: u128) -> Result<CosetAction> {
        CosetAction::new(self, sub, index_cap)
    }
}
