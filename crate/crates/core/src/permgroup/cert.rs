//! Structure certificates for groups too large to enumerate.
//!
//! A certificate records how a group was assembled (a direct product of two groups
//! on disjoint points, or an imprimitive wreath product `A ≀ B`) so that radical,
//! socle and Sylow computations can use the product structure. Certificates are
//! never trusted as given: [`StructureCertificate::verify`] re-derives the claimed
//! structure from the group's own stabilizer chain.
//!
//! Point layout for `A ≀ B` with `A` of degree `d` and `B` of degree `b`: point
//! `j * d + i` is point `i` of block `j`. A base element acts inside one block;
//! a top element `σ` sends `j * d + i` to `σ(j) * d + i`.

use serde::{Deserialize, Serialize};

use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    SimpleNonabelian,
    DirectProduct,
    ImprimitiveWreath,
}

#[derive(Clone, Debug)]
pub struct StructureCertificate {
    pub kind: CertificateKind,
    /// Direct product: the two factors. Wreath: `[A, B]` with `B` the top group.
    pub parts: Vec<PermGroup>,
    /// Generators of the base subgroup `A^b` (wreath only).
    pub base_generators: Vec<Permutation>,
}

/// Copy of `a` acting on block `block` of a wreath product with `blocks` blocks.
pub fn wreath_base_embed(a: &Permutation, block: usize, blocks: usize) -> Permutation {
    a.shifted(block * a.degree(), a.degree() * blocks)
}

/// Block permutation induced by a top element `sigma` on blocks of size `d`.
pub fn wreath_top_embed(sigma: &Permutation, d: usize) -> Permutation {
    let b = sigma.degree();
    let mut images = vec![0u32; b * d];
    for j in 0..b {
        for i in 0..d {
            images[j * d + i] = (sigma.apply(j) * d + i) as u32;
        }
    }
    Permutation::from_images_unchecked(images)
}

/// `a` on the first `a.degree()` points of a direct product of degree `total`.
pub fn direct_left_embed(a: &Permutation, total: usize) -> Permutation {
    a.shifted(0, total)
}

/// `b` on the last `b.degree()` points of a direct product of degree `total`.
pub fn direct_right_embed(b: &Permutation, total: usize) -> Permutation {
    b.shifted(total - b.degree(), total)
}

impl StructureCertificate {
    pub fn simple_nonabelian() -> Self {
        StructureCertificate {
            kind: CertificateKind::SimpleNonabelian,
            parts: Vec::new(),
            base_generators: Vec::new(),
        }
    }

    pub fn direct_product(a: PermGroup, b: PermGroup) -> Self {
        StructureCertificate {
            kind: CertificateKind::DirectProduct,
            parts: vec![a, b],
            base_generators: Vec::new(),
        }
    }

    /// Wreath certificate with the canonical base generators (every generator of
    /// `a` copied into every block).
    pub fn wreath(a: PermGroup, top: PermGroup) -> Self {
        let blocks = top.degree();
        let base_generators = (0..blocks)
            .flat_map(|j| a.generators().iter().map(move |g| wreath_base_embed(g, j, blocks)))
            .collect();
        StructureCertificate {
            kind: CertificateKind::ImprimitiveWreath,
            parts: vec![a, top],
            base_generators,
        }
    }

    pub fn top(&self) -> Option<&PermGroup> {
        match self.kind {
            CertificateKind::ImprimitiveWreath => self.parts.get(1),
            _ => None,
        }
    }

    /// Base subgroup of a wreath certificate.
    pub fn base_group(&self, degree: usize) -> Option<PermGroup> {
        (self.kind == CertificateKind::ImprimitiveWreath)
            .then(|| PermGroup::new(degree, self.base_generators.clone()).ok())
            .flatten()
    }

    /// Checks the certificate against `g`.
    pub fn verify(&self, g: &PermGroup) -> Result<()> {
        let fail = |msg: String| Err(Error::Certificate(msg));
        match self.kind {
            CertificateKind::SimpleNonabelian => {
                if g.is_abelian() {
                    return fail("group is abelian".into());
                }
                match g.is_simple_small(crate::Caps::default().element_cap) {
                    Ok(true) => Ok(()),
                    Ok(false) => fail("group has a proper non-trivial normal subgroup".into()),
                    Err(e) => fail(format!("simplicity cannot be checked: {e}")),
                }
            }
            CertificateKind::DirectProduct => {
                let [a, b] = self.parts.as_slice() else {
                    return fail("direct product needs exactly two parts".into());
                };
                let total = a.degree() + b.degree();
                if total != g.degree() {
                    return fail(format!(
                        "factor degrees {} + {} do not add up to {}",
                        a.degree(),
                        b.degree(),
                        g.degree()
                    ));
                }
                let embedded = a
                    .generators()
                    .iter()
                    .map(|x| direct_left_embed(x, total))
                    .chain(b.generators().iter().map(|x| direct_right_embed(x, total)));
                for x in embedded {
                    if !g.has(&x) {
                        return fail(format!("factor generator {x} not in the group"));
                    }
                }
                if a.order().checked_mul(b.order()) != Some(g.order()) {
                    return fail("order is not the product of the factor orders".into());
                }
                Ok(())
            }
            CertificateKind::ImprimitiveWreath => {
                let [a, top] = self.parts.as_slice() else {
                    return fail("wreath product needs exactly two parts".into());
                };
                let d = a.degree();
                let blocks = top.degree();
                if d * blocks != g.degree() {
                    return fail(format!(
                        "base degree {d} times top degree {blocks} is not {}",
                        g.degree()
                    ));
                }
                let canonical: Vec<Permutation> = (0..blocks)
                    .flat_map(|j| a.generators().iter().map(move |x| wreath_base_embed(x, j, blocks)))
                    .collect();
                let full_base = PermGroup::new(g.degree(), canonical)?;
                let base = PermGroup::new(g.degree(), self.base_generators.clone())?;
                if !base.is_subgroup_of(&full_base) {
                    return fail("base generators do not preserve the blocks".into());
                }
                if !base.is_subgroup_of(g) {
                    return fail("base generators not in the group".into());
                }
                if !g.normalizes(&base) {
                    return fail("base is not normal".into());
                }
                let base_order = (0..blocks).try_fold(1u128, |acc, _| acc.checked_mul(a.order()));
                if Some(base.order()) != base_order {
                    return fail("base is not the full direct power of the component".into());
                }
                for s in top.generators() {
                    if !g.has(&wreath_top_embed(s, d)) {
                        return fail(format!("top generator {s} not in the group"));
                    }
                }
                if base_order.and_then(|o| o.checked_mul(top.order())) != Some(g.order()) {
                    return fail("order is not |A|^b |B|".into());
                }
                let quotient = g.coset_action(&base, crate::Caps::default().index_cap)?;
                let image = quotient.image();
                if image.order() != top.order() || image.is_solvable() != top.is_solvable() {
                    return fail("quotient by the base does not match the top group".into());
                }
                Ok(())
            }
        }
    }
}
