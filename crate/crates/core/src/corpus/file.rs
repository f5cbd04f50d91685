//! JSON group files.
//!
//! ```json
//! {
//!   "name": "A5",
//!   "degree": 5,
//!   "generators": [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]],
//!   "certificate": {
//!     "kind": "imprimitive-wreath",
//!     "parts": ["w.part0.json", "w.part1.json"],
//!     "base_generators": [[...]]
//!   }
//! }
//! ```
//!
//! Generators are 0-based image lists. Certificate parts name other group files,
//! resolved relative to the referencing file. Loading re-verifies certificates.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::{CertificateKind, PermGroup, Permutation, StructureCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub kind: CertificateKind,
    #[serde(default)]
    pub parts: Vec<String>,
    #[serde(default)]
    pub base_generators: Vec<Vec<u32>>,
}

fn parse_perms(field: &str, degree: usize, lists: &[Vec<u32>]) -> Result<Vec<Permutation>> {
    lists
        .iter()
        .enumerate()
        .map(|(i, images)| {
            if images.len() != degree {
                return Err(Error::Parse(format!(
                    "{field}[{i}]: has {} images, degree is {degree}",
                    images.len()
                )));
            }
            Permutation::from_images(images.clone())
                .map_err(|e| Error::Parse(format!("{field}[{i}]: {e}")))
        })
        .collect()
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
        })
    }

    /// Builds the group; `dir` resolves certificate part files.
    pub fn to_group(&self, dir: &Path) -> Result<PermGroup> {
        let gens = parse_perms("generators", self.degree, &self.generators)?;
        let g = PermGroup::new(self.degree, gens)?.named(self.name.clone());
        let Some(cert) = &self.certificate else {
            return Ok(g);
        };
        let parts = cert
            .parts
            .iter()
            .map(|p| load(&dir.join(p)))
            .collect::<Result<Vec<_>>>()?;
        let base_generators = parse_perms("certificate.base_generators", self.degree, &cert.base_generators)?;
        g.with_certificate(StructureCertificate {
            kind: cert.kind,
            parts,
            base_generators,
        })
    }
}

/// Reads a group file, re-verifying any certificate.
pub fn load(path: &Path) -> Result<PermGroup> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let file = GroupFile::parse(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    file.to_group(dir)
}

fn part_path(path: &Path, i: usize) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("group");
    path.with_file_name(format!("{stem}.part{i}.json"))
}

/// Writes a group file. Certificate parts are written next to it as
/// `<stem>.part<i>.json`.
pub fn save(g: &PermGroup, path: &Path) -> Result<()> {
    let certificate = match g.certificate() {
        None => None,
        Some(cert) => {
            let mut parts = Vec::new();
            for (i, part) in cert.parts.iter().enumerate() {
                let pp = part_path(path, i);
                save(part, &pp)?;
                parts.push(pp.file_name().unwrap().to_string_lossy().into_owned());
            }
            Some(CertificateFile {
                kind: cert.kind,
                parts,
                base_generators: cert.base_generators.iter().map(|p| p.images().to_vec()).collect(),
            })
        }
    };
    let file = GroupFile {
        name: g.name().unwrap_or("G").to_string(),
        degree: g.degree(),
        generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
        certificate,
    };
    let text = serde_json::to_string_pretty(&file).expect("group file serializes");
    fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
