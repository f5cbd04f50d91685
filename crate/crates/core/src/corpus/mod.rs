//! Constructors for the standard test groups and the JSON group file format.

mod field;
mod file;

use std::collections::HashMap;

pub use field::FiniteField;
pub use file::{load, save, GroupFile};

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::permgroup::cert::{direct_left_embed, direct_right_embed, wreath_base_embed, wreath_top_embed};
use crate::permgroup::{PermGroup, Permutation, StructureCertificate};

/// Description of a group to build.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Dihedral group of order `2n` on `n` points.
    Dihedral(usize),
    Psl2(u64),
    Psl3_3,
    Direct(Box<GroupSpec>, Box<GroupSpec>),
    /// `Wreath(A, B)`: `A ≀ B` with `B` acting on blocks.
    Wreath(Box<GroupSpec>, Box<GroupSpec>),
    File(std::path::PathBuf),
}

pub const MAX_FIELD_SIZE: u64 = 512;
pub const MAX_WREATH_DEGREE: usize = 1000;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn check_order(g: &PermGroup, expected: u128, what: &str) -> Result<()> {
    if g.order() != expected {
        return Err(Error::InvalidParameters(format!(
            "{what}: constructed order {} differs from {expected}",
            g.order()
        )));
    }
    Ok(())
}

/// `Sym(n)` on `0..n`.
pub fn symmetric(n: usize) -> Result<PermGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
    }
    if n >= 3 {
        let cycle: Vec<u32> = (0..n as u32).collect();
        gens.push(Permutation::from_cycles(n, &[&cycle])?);
    }
    let g = PermGroup::new(n, gens)?.named(format!("S{n}"));
    check_order(&g, factorial(n), "symmetric")?;
    Ok(g)
}

/// `Alt(n)` on `0..n`, generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Result<PermGroup> {
    let gens = (2..n as u32)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(n, gens)?.named(format!("A{n}"));
    check_order(&g, (factorial(n) / 2).max(1), "alternating")?;
    Ok(g)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameters("cyclic group needs n >= 1".into()));
    }
    let cycle: Vec<u32> = (0..n as u32).collect();
    let gens = if n >= 2 {
        vec![Permutation::from_cycles(n, &[&cycle])?]
    } else {
        Vec::new()
    };
    let g = PermGroup::new(n, gens)?.named(format!("C{n}"));
    check_order(&g, n as u128, "cyclic")?;
    Ok(g)
}

/// Symmetries of the `n`-gon, order `2n`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidParameters("dihedral group needs n >= 3".into()));
    }
    let rot = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())?;
    let refl = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    let g = PermGroup::new(n, vec![rot, refl])?.named(format!("D{}", 2 * n));
    check_order(&g, 2 * n as u128, "dihedral")?;
    Ok(g)
}

fn check_field_size(q: u64) -> Result<()> {
    if prime_power(q).is_none() || q > MAX_FIELD_SIZE {
        return Err(Error::InvalidParameters(format!(
            "q = {q} must be a prime power at most {MAX_FIELD_SIZE}"
        )));
    }
    Ok(())
}

/// Map on the projective line `GF(q) ∪ {∞}`; point `q` is `∞`.
fn projective_map(field: &FiniteField, f: impl Fn(Option<u32>) -> Option<u32>) -> Permutation {
    let q = field.size();
    let images = (0..=q)
        .map(|x| {
            let arg = (x < q).then_some(x);
            f(arg).unwrap_or(q)
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `|PSL2(q)| = q(q² - 1) / gcd(2, q - 1)`.
pub fn psl2_order(q: u64) -> u128 {
    let q = q as u128;
    q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 }
}

/// `PSL2(q)` on the `q + 1` points of the projective line, generated by
/// `x ↦ x + 1`, `x ↦ μx` and `x ↦ -1/x`. Here `μ` is the primitive element for even
/// `q` and its square for odd `q` (the primitive element itself is not a square
/// there, and would generate `PGL2(q)`).
pub fn psl2(q: u64) -> Result<PermGroup> {
    check_field_size(q)?;
    if q < 2 {
        return Err(Error::InvalidParameters("q must be at least 2".into()));
    }
    let field = FiniteField::new(q)?;
    let lambda = field.primitive_element();
    let mu = if q % 2 == 1 { field.mul(lambda, lambda) } else { lambda };
    let translate = projective_map(&field, |x| x.map(|x| field.add(x, 1)));
    let scale = projective_map(&field, |x| x.map(|x| field.mul(mu, x)));
    let invert = projective_map(&field, |x| match x {
        None => Some(0),
        Some(0) => None,
        Some(x) => Some(field.neg(field.inv(x))),
    });
    let g = PermGroup::new(q as usize + 1, vec![translate, scale, invert])?
        .named(format!("PSL2({q})"));
    check_order(&g, psl2_order(q), "psl2")?;
    Ok(g)
}

/// Permutations of the projective line normalizing `PSL2(q)` but (for suitable
/// `q`) lying outside it: `x ↦ λx` for odd `q` (diagonal `PGL2` element) and the
/// Frobenius `x ↦ x^p` when `q` is not prime.
pub fn psl2_outer_automorphisms(q: u64) -> Result<Vec<Permutation>> {
    check_field_size(q)?;
    let field = FiniteField::new(q)?;
    let mut out = Vec::new();
    if q % 2 == 1 {
        let lambda = field.primitive_element();
        out.push(projective_map(&field, |x| x.map(|x| field.mul(lambda, x))));
    }
    if field.degree() > 1 {
        out.push(projective_map(&field, |x| x.map(|x| field.frobenius(x))));
    }
    Ok(out)
}

/// Points of the projective plane over `GF(3)` as normalized vectors (first
/// non-zero coordinate 1), in lexicographic order.
fn pg2_3_points() -> Vec<[u32; 3]> {
    let mut pts = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

/// `PSL3(3) = SL3(3)` on the 13 points of the projective plane, generated by the
/// elementary matrices `I + E_ij`; vectors are rows acted on from the right.
pub fn psl3_3() -> Result<PermGroup> {
    let pts = pg2_3_points();
    let index: HashMap<[u32; 3], u32> = pts.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
    let normalize = |v: [u32; 3]| -> [u32; 3] {
        let lead = *v.iter().find(|&&x| x != 0).unwrap();
        // Inverse of 1 is 1 and of 2 is 2 in GF(3).
        v.map(|x| (x * lead) % 3)
    };
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let images = pts
                .iter()
                .map(|v| {
                    let mut w = *v;
                    w[j] = (w[j] + v[i]) % 3;
                    index[&normalize(w)]
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
    }
    let g = PermGroup::new(13, gens)?.named("PSL3(3)");
    check_order(&g, 5616, "psl3_3")?;
    Ok(g)
}

/// `A × B` on disjoint points (`A` first), with a direct-product certificate.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let total = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|x| direct_left_embed(x, total))
        .chain(b.generators().iter().map(|x| direct_right_embed(x, total)))
        .collect();
    let name = format!("{}x{}", a.name().unwrap_or("?"), b.name().unwrap_or("?"));
    let g = PermGroup::new(total, gens)?.named(name);
    g.with_certificate(StructureCertificate::direct_product(a.clone(), b.clone()))
}

/// Imprimitive wreath product `A ≀ B` on `deg(A) · deg(B)` points, with a
/// wreath certificate.
pub fn wreath_product(a: &PermGroup, top: &PermGroup) -> Result<PermGroup> {
    let d = a.degree();
    let blocks = top.degree();
    if d * blocks > MAX_WREATH_DEGREE {
        return Err(Error::InvalidParameters(format!(
            "wreath degree {} exceeds {MAX_WREATH_DEGREE}",
            d * blocks
        )));
    }
    let mut gens: Vec<Permutation> = (0..blocks)
        .flat_map(|j| a.generators().iter().map(move |x| wreath_base_embed(x, j, blocks)))
        .collect();
    gens.extend(top.generators().iter().map(|s| wreath_top_embed(s, d)));
    let name = format!("{}wr{}", a.name().unwrap_or("?"), top.name().unwrap_or("?"));
    let g = PermGroup::new(d * blocks, gens)?.named(name);
    g.with_certificate(StructureCertificate::wreath(a.clone(), top.clone()))
}

/// Builds a group from its description.
pub fn make(spec: &GroupSpec) -> Result<PermGroup> {
    match spec {
        GroupSpec::Symmetric(n) => symmetric(*n),
        GroupSpec::Alternating(n) => alternating(*n),
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Psl2(q) => psl2(*q),
        GroupSpec::Psl3_3 => psl3_3(),
        GroupSpec::Direct(a, b) => direct_product(&make(a)?, &make(b)?),
        GroupSpec::Wreath(a, b) => wreath_product(&make(a)?, &make(b)?),
        GroupSpec::File(path) => load(path),
    }
}
