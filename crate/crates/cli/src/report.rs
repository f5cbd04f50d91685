//! Persisted campaign results.

use std::fs;
use std::path::{Path, PathBuf};

use nslen::laws::TheoremStatus;
use nslen::pncheck::PnCertificate;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CampaignResult {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_a: Option<TheoremStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_b: Option<TheoremStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_c: Option<TheoremStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<PathBuf>,
    pub seed: u64,
    pub version: &'static str,
    pub elapsed_seconds: f64,
    pub report: serde_json::Value,
}

impl CampaignResult {
    pub fn new(group: &str, seed: u64) -> CampaignResult {
        CampaignResult {
            group: group.to_string(),
            lambda: None,
            theorem_a: None,
            theorem_b: None,
            theorem_c: None,
            certificates: None,
            seed,
            version: env!("CARGO_PKG_VERSION"),
            elapsed_seconds: 0.0,
            report: serde_json::Value::Null,
        }
    }
}

pub fn write_json(path: &Path, value: &impl Serialize) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut text = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
    text.push('\n');
    fs::write(path, text)
}

/// Writes `cert-<k>.json` files into `dir`.
pub fn write_certificates<'a>(
    dir: &Path,
    certs: impl Iterator<Item = &'a PnCertificate>,
) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for (k, c) in certs.enumerate() {
        let mut text = c.to_json();
        text.push('\n');
        fs::write(dir.join(format!("cert-{k:04}.json")), text)?;
    }
    Ok(())
}
