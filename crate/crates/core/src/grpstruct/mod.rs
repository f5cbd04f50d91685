//! Solvable radical, non-abelian socle, RS-series and related structure.
//!
//! The small path works through conjugacy classes. Every minimal normal subgroup is
//! the normal closure `⟨x^G⟩` of each of its non-identity elements, and `x` lies in
//! the solvable radical exactly when `⟨x^G⟩` is solvable. So:
//!
//! * `R(G)` is generated by the class representatives whose normal closure is solvable;
//! * the minimal normal subgroups are the inclusion-minimal closures `⟨x^G⟩`, and
//!   `S(G)` is the join of the non-abelian ones.
//!
//! Groups carrying a [`StructureCertificate`](crate::permgroup::StructureCertificate)
//! take a shortcut instead:
//!
//! * simple non-abelian: `R = 1`, `S = G`;
//! * `A × B`: radical and socle are computed factorwise;
//! * `A ≀ B` with `A` non-abelian simple and `B` transitive: `R = 1` and `S` is the
//!   base `A^b`. A normal subgroup meeting the base trivially would centralize it,
//!   and the centralizer of the base is trivial because `A` has trivial centre and
//!   any element moving a block fails to commute with the copy on that block. So
//!   every non-trivial normal subgroup meets the base, and the base is minimal
//!   normal because `B` permutes its simple factors transitively.

mod dihedral;
mod frattini;
mod lclass;
mod rarefied;
mod series;
mod verbal;

pub use dihedral::{dihedral_class_check, DihedralClassReport, DihedralPrimeReport};
pub use frattini::{frattini, subgroup_lattice};
pub use lclass::{l_class_candidates, LCandidate, LFamily};
pub use rarefied::{is_rarefied, Membership, RarefiedReport};
pub use series::{nonsolvable_length, rs_series, rs_series_partial, LayerKind, RSSeries, RsLayer};
pub use verbal::{verbal_subgroup, VerbalSubgroup};

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::permgroup::cert::{direct_left_embed, direct_right_embed};
use crate::permgroup::{CertificateKind, PermGroup};

/// Simple factors of a minimal normal subgroup `T^k`: `count = k`, `order = |T|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub count: usize,
    pub order: u128,
}

/// Non-abelian socle together with its minimal normal factors.
#[derive(Clone, Debug)]
pub struct Socle {
    pub group: PermGroup,
    pub minimal_normal: Vec<PermGroup>,
    /// One entry per minimal normal factor; `None` when its simple components could
    /// not be computed under the caps.
    pub components: Vec<Option<Components>>,
}

/// True when `g` is non-abelian simple, by certificate or by the class test.
pub fn is_nonabelian_simple(g: &PermGroup, caps: &Caps) -> Result<bool> {
    if let Some(c) = g.certificate() {
        if c.kind == CertificateKind::SimpleNonabelian {
            return Ok(true);
        }
    }
    if g.is_abelian() {
        return Ok(false);
    }
    if g.order() > caps.element_cap {
        return Err(Error::CapExceeded {
            what: "element",
            needed: g.order(),
            cap: caps.element_cap,
        });
    }
    g.is_simple_small(caps.element_cap)
}

/// The wreath shortcut applies: non-abelian simple component, transitive top.
fn wreath_simple_base(g: &PermGroup, caps: &Caps) -> Result<Option<PermGroup>> {
    let Some(cert) = g.certificate() else {
        return Ok(None);
    };
    if cert.kind != CertificateKind::ImprimitiveWreath {
        return Ok(None);
    }
    let (a, top) = (&cert.parts[0], &cert.parts[1]);
    if top.is_transitive() && is_nonabelian_simple(a, caps)? {
        return Ok(cert.base_group(g.degree()));
    }
    Ok(None)
}

fn embed_direct(g: &PermGroup, left: &PermGroup, right: &PermGroup) -> PermGroup {
    let total = g.degree();
    let gens = left
        .generators()
        .iter()
        .map(|x| direct_left_embed(x, total))
        .chain(right.generators().iter().map(|x| direct_right_embed(x, total)))
        .collect();
    PermGroup::new(total, gens).expect("factor embedding")
}

fn no_path(g: &PermGroup, caps: &Caps) -> Error {
    Error::CapExceeded {
        what: "element",
        needed: g.order(),
        cap: caps.element_cap,
    }
}

/// Largest normal solvable subgroup `R(G)`.
pub fn solvable_radical(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    if g.is_trivial() {
        return Ok(g.clone());
    }
    match g.certificate().map(|c| c.kind) {
        Some(CertificateKind::SimpleNonabelian) => return Ok(PermGroup::trivial(g.degree())),
        Some(CertificateKind::DirectProduct) => {
            let cert = g.certificate().unwrap();
            let ra = solvable_radical(&cert.parts[0], caps)?;
            let rb = solvable_radical(&cert.parts[1], caps)?;
            return Ok(embed_direct(g, &ra, &rb));
        }
        Some(CertificateKind::ImprimitiveWreath) if wreath_simple_base(g, caps)?.is_some() => {
            return Ok(PermGroup::trivial(g.degree()));
        }
        _ => {}
    }
    if g.order() > caps.element_cap {
        return Err(no_path(g, caps));
    }
    radical_small(g, caps)
}

fn radical_small(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    if g.is_solvable() {
        return Ok(g.clone());
    }
    let mut radical = PermGroup::trivial(g.degree());
    for x in g.conjugacy_class_reps(caps.element_cap)? {
        if x.is_identity() || radical.has(&x) {
            continue;
        }
        let closure = g.normal_closure_unchecked(std::slice::from_ref(&x));
        if closure.is_solvable() {
            radical = radical.join(&closure);
        }
    }
    Ok(radical)
}

/// Minimal normal subgroups of `g` (abelian and non-abelian), small path only.
pub fn minimal_normal_subgroups(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    if g.order() > caps.element_cap {
        return Err(no_path(g, caps));
    }
    let mut closures: Vec<PermGroup> = Vec::new();
    for x in g.conjugacy_class_reps(caps.element_cap)? {
        if x.is_identity() {
            continue;
        }
        let n = g.normal_closure_unchecked(&[x]);
        if !closures.iter().any(|m| m.same_subgroup(&n)) {
            closures.push(n);
        }
    }
    let minimal = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// Simple components of a minimal normal subgroup `m ≅ T^k`.
fn components_of(m: &PermGroup, caps: &Caps) -> Option<Components> {
    if m.order() > caps.element_cap {
        return None;
    }
    let factors = minimal_normal_subgroups(m, caps).ok()?;
    let order = factors.first()?.order();
    Some(Components {
        count: factors.len(),
        order,
    })
}

/// Join of the minimal normal non-abelian subgroups `S(G)`.
pub fn nonabelian_socle(g: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    Ok(socle_with_factors(g, caps)?.group)
}

/// [`nonabelian_socle`] with its minimal normal factors and their components.
pub fn socle_with_factors(g: &PermGroup, caps: &Caps) -> Result<Socle> {
    let trivial = || Socle {
        group: PermGroup::trivial(g.degree()),
        minimal_normal: Vec::new(),
        components: Vec::new(),
    };
    if g.is_trivial() {
        return Ok(trivial());
    }
    match g.certificate().map(|c| c.kind) {
        Some(CertificateKind::SimpleNonabelian) => {
            return Ok(Socle {
                group: g.clone(),
                minimal_normal: vec![g.clone()],
                components: vec![Some(Components {
                    count: 1,
                    order: g.order(),
                })],
            })
        }
        Some(CertificateKind::DirectProduct) => {
            let cert = g.certificate().unwrap();
            let sa = socle_with_factors(&cert.parts[0], caps)?;
            let sb = socle_with_factors(&cert.parts[1], caps)?;
            let empty = PermGroup::trivial(0);
            let mut minimal_normal = Vec::new();
            for m in &sa.minimal_normal {
                minimal_normal.push(embed_direct(g, m, &empty_like(&cert.parts[1], &empty)));
            }
            for m in &sb.minimal_normal {
                minimal_normal.push(embed_direct(g, &empty_like(&cert.parts[0], &empty), m));
            }
            let mut components = sa.components;
            components.extend(sb.components);
            return Ok(Socle {
                group: embed_direct(g, &sa.group, &sb.group),
                minimal_normal,
                components,
            });
        }
        Some(CertificateKind::ImprimitiveWreath) => {
            if let Some(base) = wreath_simple_base(g, caps)? {
                let cert = g.certificate().unwrap();
                return Ok(Socle {
                    group: base.clone(),
                    minimal_normal: vec![base],
                    components: vec![Some(Components {
                        count: cert.parts[1].degree(),
                        order: cert.parts[0].order(),
                    })],
                });
            }
        }
        None => {}
    }
    if g.order() > caps.element_cap {
        return Err(no_path(g, caps));
    }
    let minimal: Vec<PermGroup> = minimal_normal_subgroups(g, caps)?
        .into_iter()
        .filter(|m| !m.is_abelian())
        .collect();
    if minimal.is_empty() {
        return Ok(trivial());
    }
    let mut socle = PermGroup::trivial(g.degree());
    for m in &minimal {
        socle = socle.join(m);
    }
    let components = minimal.iter().map(|m| components_of(m, caps)).collect();
    Ok(Socle {
        group: socle,
        minimal_normal: minimal,
        components,
    })
}

/// Trivial group of the same degree as `like`.
fn empty_like(like: &PermGroup, _: &PermGroup) -> PermGroup {
    PermGroup::trivial(like.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{alternating, cyclic, direct_product, symmetric};

    #[test]
    fn radicals() {
        let caps = Caps::default();
        let s4 = symmetric(4).unwrap();
        assert!(solvable_radical(&s4, &caps).unwrap().same_subgroup(&s4));
        assert!(solvable_radical(&alternating(5).unwrap(), &caps).unwrap().is_trivial());
        let g = direct_product(&cyclic(6).unwrap(), &alternating(5).unwrap()).unwrap();
        let r = solvable_radical(&g, &caps).unwrap();
        assert_eq!(r.order(), 6);
        // Small path on the same group without its certificate.
        let plain = PermGroup::new(g.degree(), g.generators().to_vec()).unwrap();
        let r2 = solvable_radical(&plain, &caps).unwrap();
        assert!(r2.same_subgroup(&r));
    }

    #[test]
    fn socles() {
        let caps = Caps::default();
        let s5 = symmetric(5).unwrap();
        let s = nonabelian_socle(&s5, &caps).unwrap();
        assert!(s.same_subgroup(&alternating(5).unwrap()));
        assert!(nonabelian_socle(&symmetric(4).unwrap(), &caps).unwrap().is_trivial());
        let a5 = alternating(5).unwrap();
        let aa = direct_product(&a5, &a5).unwrap();
        let plain = PermGroup::new(10, aa.generators().to_vec()).unwrap();
        let soc = socle_with_factors(&plain, &caps).unwrap();
        assert_eq!(soc.group.order(), 3600);
        assert_eq!(soc.minimal_normal.len(), 2);
        assert_eq!(
            soc.components,
            vec![Some(Components { count: 1, order: 60 }); 2]
        );
        let cert_soc = socle_with_factors(&aa, &caps).unwrap();
        assert!(cert_soc.group.same_subgroup(&soc.group));
    }
}
