//! Order-based identification within the restricted family of simple groups
//! `PSL2(2^r)`, `PSL2(3^r)`, `PSL2(p^(2^a))`, `PSL3(3)` and `Sz(2^r)`, where `p` and
//! `r` are odd primes.
//!
//! Whether `a = 0` is allowed is left open; candidates relying on it (the groups
//! `PSL2(p)` for odd primes `p ≥ 5`) are returned with `conditional = true`.

use std::fmt;

use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::corpus::psl2_order;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LFamily {
    /// `PSL2(2^r)`, `r` an odd prime.
    Psl2Even,
    /// `PSL2(3^r)`, `r` an odd prime.
    Psl2Three,
    /// `PSL2(p^(2^a))`, `p` an odd prime.
    Psl2OddSquare,
    Psl3Three,
    /// `Sz(2^r)`, `r` an odd prime.
    Suzuki,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LCandidate {
    pub family: LFamily,
    /// Field size; 3 for `PSL3(3)`.
    pub q: u64,
    pub p: u64,
    pub r: Option<u32>,
    pub a: Option<u32>,
    pub conditional: bool,
}

impl LCandidate {
    pub fn order(&self) -> u128 {
        let q = self.q as u128;
        match self.family {
            LFamily::Psl3Three => 5616,
            LFamily::Suzuki => q * q * (q * q + 1) * (q - 1),
            _ => psl2_order(self.q),
        }
    }
}

impl fmt::Display for LCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            LFamily::Psl3Three => write!(f, "PSL3(3)"),
            LFamily::Suzuki => write!(f, "Sz({})", self.q),
            _ => write!(f, "PSL2({})", self.q),
        }?;
        if self.conditional {
            write!(f, " (conditional)")?;
        }
        Ok(())
    }
}

fn icbrt(n: u128) -> u128 {
    let mut x = (n as f64).cbrt() as u128;
    while x > 0 && x * x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Membership of `PSL2(q)`, `q ≥ 4`, in the family.
fn psl2_candidate(q: u64) -> Option<LCandidate> {
    let (p, e) = prime_power(q)?;
    let cand = |family, r, a, conditional| LCandidate {
        family,
        q,
        p,
        r,
        a,
        conditional,
    };
    if p == 2 {
        return (e % 2 == 1 && is_prime(e as u64))
            .then(|| cand(LFamily::Psl2Even, Some(e), None, false));
    }
    if p == 3 && e % 2 == 1 && is_prime(e as u64) {
        return Some(cand(LFamily::Psl2Three, Some(e), None, false));
    }
    if e.is_power_of_two() {
        let a = e.trailing_zeros();
        return Some(cand(LFamily::Psl2OddSquare, None, Some(a), a == 0));
    }
    None
}

/// All family members of the given order.
pub fn l_class_candidates(order: u128) -> Vec<LCandidate> {
    let mut out = Vec::new();
    if order < 60 {
        return out;
    }
    // |PSL2(q)| is q(q²−1) or half of it, so q is within one of a cube root.
    let mut qs: Vec<u128> = Vec::new();
    for target in [order, order.saturating_mul(2)] {
        let c = icbrt(target);
        qs.extend(c.saturating_sub(1)..=c + 2);
    }
    qs.sort_unstable();
    qs.dedup();
    for q in qs {
        if !(4..=u64::MAX as u128).contains(&q) || prime_power(q as u64).is_none() {
            continue;
        }
        if psl2_order(q as u64) != order {
            continue;
        }
        if let Some(c) = psl2_candidate(q as u64) {
            out.push(c);
        }
    }
    if order == 5616 {
        out.push(LCandidate {
            family: LFamily::Psl3Three,
            q: 3,
            p: 3,
            r: None,
            a: None,
            conditional: false,
        });
    }
    let mut r = 3u32;
    while r < 32 {
        let q = 1u128 << r;
        let sz = q * q * (q * q + 1) * (q - 1);
        if sz > order {
            break;
        }
        if sz == order && is_prime(r as u64) {
            out.push(LCandidate {
                family: LFamily::Suzuki,
                q: q as u64,
                p: 2,
                r: Some(r),
                a: None,
                conditional: false,
            });
        }
        r += 2;
    }
    out
}
