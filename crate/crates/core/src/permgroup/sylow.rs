//! Sylow subgroups.
//!
//! Small groups: start from the trivial p-subgroup `P` and repeatedly adjoin the
//! first element (in element order) of p-power order that normalizes `P` and lies
//! outside it. Such an element exists until `P` is Sylow, because then `p` divides
//! `|N(P)/P|`.
//!
//! Certified groups: a Sylow subgroup of `A ≀ B` is `Syl(A)^b ⋊ Syl(B)`, and of
//! `A × B` is `Syl(A) × Syl(B)`. Either way the result is re-checked: generators
//! must lie in the group and the order must be the full p-part.

use super::cert::{
    direct_left_embed, direct_right_embed, wreath_base_embed, wreath_top_embed, CertificateKind,
};
use super::group::PermGroup;
use crate::arith::{is_power_of, is_prime, p_part};
use crate::caps::Caps;
use crate::error::{Error, Result};

impl PermGroup {
    /// A Sylow `p`-subgroup.
    pub fn sylow(&self, p: u64, caps: &Caps) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !self.order().is_multiple_of(p as u128) {
            return Err(Error::PrimeDoesNotDivide { p });
        }
        let target = p_part(self.order(), p);
        let candidate = match self.certificate().map(|c| c.kind) {
            Some(CertificateKind::ImprimitiveWreath) => self.sylow_wreath(p, caps)?,
            Some(CertificateKind::DirectProduct) => self.sylow_direct(p, caps)?,
            _ if self.order() <= caps.element_cap => self.sylow_small(p, caps)?,
            _ => {
                return Err(Error::NoApplicablePath(format!(
                    "Sylow {p}-subgroup of an uncertified group of order {}",
                    self.order()
                )))
            }
        };
        if candidate.order() != target || !candidate.is_subgroup_of(self) {
            return Err(Error::NoApplicablePath(
                "assembled Sylow subgroup failed verification".into(),
            ));
        }
        Ok(candidate)
    }

    fn sylow_small(&self, p: u64, caps: &Caps) -> Result<PermGroup> {
        let target = p_part(self.order(), p);
        let elements = self.elements(caps.element_cap)?;
        let mut sylow = PermGroup::trivial(self.degree());
        while sylow.order() < target {
            let next = elements
                .iter()
                .find(|g| {
                    is_power_of(g.order(), p)
                        && !sylow.has(g)
                        && sylow
                            .generators()
                            .iter()
                            .all(|x| sylow.has(&x.conjugate_by(g)))
                })
                .expect("a p-element normalizing a non-Sylow p-subgroup exists");
            sylow = sylow.extended(std::slice::from_ref(next));
        }
        Ok(sylow)
    }

    fn sylow_wreath(&self, p: u64, caps: &Caps) -> Result<PermGroup> {
        let cert = self.certificate().unwrap();
        let (a, top) = (&cert.parts[0], &cert.parts[1]);
        let blocks = top.degree();
        let mut gens = Vec::new();
        if a.order() % p as u128 == 0 {
            let pa = a.sylow(p, caps)?;
            for j in 0..blocks {
                gens.extend(pa.generators().iter().map(|x| wreath_base_embed(x, j, blocks)));
            }
        }
        if top.order() % p as u128 == 0 {
            let pb = top.sylow(p, caps)?;
            gens.extend(pb.generators().iter().map(|s| wreath_top_embed(s, a.degree())));
        }
        PermGroup::new(self.degree(), gens)
    }

    fn sylow_direct(&self, p: u64, caps: &Caps) -> Result<PermGroup> {
        let cert = self.certificate().unwrap();
        let total = self.degree();
        let mut gens = Vec::new();
        let (a, b) = (&cert.parts[0], &cert.parts[1]);
        if a.order() % p as u128 == 0 {
            let pa = a.sylow(p, caps)?;
            gens.extend(pa.generators().iter().map(|x| direct_left_embed(x, total)));
        }
        if b.order() % p as u128 == 0 {
            let pb = b.sylow(p, caps)?;
            gens.extend(pb.generators().iter().map(|x| direct_right_embed(x, total)));
        }
        PermGroup::new(total, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn small_sylows() {
        let caps = Caps::default();
        let a5 = PermGroup::new(5, vec![p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")]).unwrap();
        let s4 = PermGroup::new(4, vec![p(4, "(0 1)"), p(4, "(0 1 2 3)")]).unwrap();
        assert_eq!(a5.sylow(2, &caps).unwrap().order(), 4);
        assert_eq!(a5.sylow(5, &caps).unwrap().order(), 5);
        assert_eq!(s4.sylow(2, &caps).unwrap().order(), 8);
        for g in s4.sylow(2, &caps).unwrap().generators() {
            assert!(is_power_of(g.order(), 2));
        }
    }

    #[test]
    fn errors() {
        let caps = Caps::default();
        let s4 = PermGroup::new(4, vec![p(4, "(0 1)"), p(4, "(0 1 2 3)")]).unwrap();
        assert_eq!(s4.sylow(5, &caps).unwrap_err(), Error::PrimeDoesNotDivide { p: 5 });
        assert_eq!(s4.sylow(4, &caps).unwrap_err(), Error::NotPrime(4));
        let tiny = Caps {
            element_cap: 10,
            ..Caps::default()
        };
        assert!(matches!(s4.sylow(2, &tiny), Err(Error::NoApplicablePath(_))));
    }
}
