//! Trajectory certificates, their file format and an independent validator.

use serde::{Deserialize, Serialize};

use crate::arith::p_part;
use crate::error::{Error, Result};
use crate::freeword::FreeWord;
use crate::laws::Phase;
use crate::permgroup::{PermGroup, Permutation};

/// A point `ω` and a tuple `ḡ` whose trajectory `ω·w_0(ḡ), ..., ω·w_n(ḡ)` under the
/// partial words of `w` consists of `n + 1` distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnCertificate {
    pub word: FreeWord,
    pub omega: usize,
    pub tuple: Vec<Permutation>,
    pub trajectory: Vec<usize>,
    /// Generators of a Sylow 2-subgroup containing every tuple entry.
    pub sylow_witness: Option<Vec<Permutation>>,
    pub phase: Phase,
}

/// On-disk form: permutations in cycle notation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    word: String,
    degree: usize,
    omega: usize,
    tuple: Vec<String>,
    trajectory: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sylow_generators: Option<Vec<String>>,
    phase: Phase,
}

impl PnCertificate {
    pub fn degree(&self) -> usize {
        self.tuple.first().map_or(0, |g| g.degree())
    }

    pub fn to_json(&self) -> String {
        let cycles = |xs: &[Permutation]| xs.iter().map(|x| x.to_string()).collect();
        let file = CertificateFile {
            word: self.word.to_string(),
            degree: self.degree(),
            omega: self.omega,
            tuple: cycles(&self.tuple),
            trajectory: self.trajectory.clone(),
            sylow_generators: self.sylow_witness.as_deref().map(cycles),
            phase: self.phase,
        };
        serde_json::to_string_pretty(&file).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<PnCertificate> {
        let file: CertificateFile = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        let perms = |xs: &[String]| -> Result<Vec<Permutation>> {
            xs.iter()
                .map(|x| Permutation::parse_cycles(file.degree, x))
                .collect()
        };
        Ok(PnCertificate {
            word: file.word.parse()?,
            omega: file.omega,
            tuple: perms(&file.tuple)?,
            trajectory: file.trajectory.clone(),
            sylow_witness: file.sylow_generators.as_deref().map(perms).transpose()?,
            phase: file.phase,
        })
    }
}

/// Re-checks a certificate against `g` from scratch. Partial words are evaluated
/// in full rather than incrementally, and the Sylow witness is rebuilt from its
/// generators.
pub fn validate_certificate(cert: &PnCertificate, g: &PermGroup) -> Result<()> {
    let fail = |m: String| Err(Error::Certificate(m));
    let w = &cert.word;
    if !w.is_reduced() || w.is_empty() {
        return fail(format!("word {w} is not a non-trivial reduced word"));
    }
    if cert.omega >= g.degree() {
        return Err(Error::PointOutOfRange {
            point: cert.omega,
            degree: g.degree(),
        });
    }
    if cert.tuple.len() < w.num_vars() {
        return Err(Error::TupleTooShort {
            needed: w.num_vars(),
            found: cert.tuple.len(),
        });
    }
    for (i, x) in cert.tuple.iter().enumerate() {
        if !g.contains(x)? {
            return fail(format!("tuple entry {i} is not in the group"));
        }
    }
    if cert.trajectory.len() != w.len() + 1 {
        return fail(format!(
            "trajectory has {} points, expected {}",
            cert.trajectory.len(),
            w.len() + 1
        ));
    }
    for i in 0..=w.len() {
        let value = w.prefix(i).evaluate(&cert.tuple)?;
        let point = if i == 0 { cert.omega } else { value.apply(cert.omega) };
        if point != cert.trajectory[i] {
            return fail(format!(
                "trajectory point {i} is {}, recomputed {point}",
                cert.trajectory[i]
            ));
        }
    }
    for i in 0..cert.trajectory.len() {
        for j in 0..i {
            if cert.trajectory[i] == cert.trajectory[j] {
                return fail(format!("trajectory points {j} and {i} coincide"));
            }
        }
    }
    if let Some(gens) = &cert.sylow_witness {
        for (i, x) in gens.iter().enumerate() {
            if !g.contains(x)? {
                return fail(format!("Sylow generator {i} is not in the group"));
            }
        }
        let p = PermGroup::new(g.degree(), gens.clone())?;
        let want = p_part(g.order(), 2);
        if p.order() != want {
            return fail(format!(
                "Sylow witness has order {}, the 2-part of the group order is {want}",
                p.order()
            ));
        }
        for (i, x) in cert.tuple.iter().enumerate() {
            if !p.contains(x)? {
                return fail(format!("tuple entry {i} is not in the Sylow witness"));
            }
        }
    }
    Ok(())
}
