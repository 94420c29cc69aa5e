//! Recorded responses keyed by prompt hash and run index.
//!
//! On disk: a JSON object mapping hex SHA-256 of the prompt to an array of
//! responses, where element `i` holds run `i + 1` (or `null` if unrecorded).

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CassetteMode {
    Record,
    Replay,
    #[serde(alias = "off")]
    Passthrough,
}

impl std::str::FromStr for CassetteMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "record" => Ok(Self::Record),
            "replay" => Ok(Self::Replay),
            "off" | "passthrough" => Ok(Self::Passthrough),
            other => Err(format!("unknown cassette mode '{other}' (expected record, replay or off)")),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CassetteError {
    #[error("cassette {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cassette {path} is not valid JSON: {source}")]
    Format { path: PathBuf, source: serde_json::Error },
}

/// Hex SHA-256 of the UTF-8 prompt bytes.
pub fn prompt_hash(prompt: &str) -> String {
    hex::encode(Sha256::digest(prompt.as_bytes()))
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cassette {
    entries: BTreeMap<String, Vec<Option<String>>>,
}

impl Cassette {
    /// Load from `path`; a missing file is an empty cassette.
    pub fn load(path: &Path) -> Result<Self, CassetteError> {
        match fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text).map_err(|source| CassetteError::Format { path: path.into(), source }),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::default()),
            Err(source) => Err(CassetteError::Io { path: path.into(), source }),
        }
    }

    pub fn get(&self, hash: &str, run_index: u32) -> Option<&str> {
        let slot = usize::try_from(run_index).ok()?.checked_sub(1)?;
        self.entries.get(hash)?.get(slot)?.as_deref()
    }

    pub fn put(&mut self, hash: &str, run_index: u32, text: &str) {
        assert!(run_index >= 1, "run indices are 1-based");
        let runs = self.entries.entry(hash.to_owned()).or_default();
        let slot = run_index as usize - 1;
        if runs.len() <= slot {
            runs.resize(slot + 1, None);
        }
        runs[slot] = Some(text.to_owned());
    }

    /// Number of recorded (prompt, run) responses.
    pub fn len(&self) -> usize {
        self.entries.values().map(|runs| runs.iter().flatten().count()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Write to a temporary sibling and rename over `path`.
    pub fn save(&self, path: &Path) -> Result<(), CassetteError> {
        let io = |source| CassetteError::Io { path: path.into(), source };
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        fs::create_dir_all(dir).map_err(io)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
        let text = serde_json::to_string_pretty(self).expect("cassette serializes");
        tmp.write_all(text.as_bytes()).map_err(io)?;
        tmp.write_all(b"\n").map_err(io)?;
        tmp.persist(path).map_err(|e| io(e.error))?;
        Ok(())
    }
}
