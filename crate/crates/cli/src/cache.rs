//! On-disk result cache, keyed by the semantic parameters of a command.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CachedResult {
    pub key: String,
    pub version: String,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
    pub command: String,
    pub payload: Report,
}

/// Hash of `{command, params, version}` in canonical JSON. `params` must
/// only hold the options that affect the result, so flag order, `--jobs`
/// and `--format` all map to the same key.
pub fn cache_key(command: &str, params: &serde_json::Value) -> String {
    let body = serde_json::json!({
        "command": command,
        "params": params,
        "version": zsl_core::VERSION,
    });
    let digest = Sha256::digest(body.to_string().as_bytes());
    hex::encode(digest)
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Returns the cached report, or `None` when missing, unreadable,
    /// from another version, or not matching the report schema.
    pub fn load(&self, key: &str) -> Option<Report> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CachedResult = serde_json::from_str(&text).ok()?;
        (entry.key == key && entry.version == zsl_core::VERSION).then_some(entry.payload)
    }

    /// Writes through a temp file and rename so readers never see a partial entry.
    pub fn store(&self, key: &str, command: &str, report: &Report) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = CachedResult {
            key: key.to_string(),
            version: zsl_core::VERSION.to_string(),
            created_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            command: command.to_string(),
            payload: report.clone(),
        };
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        fs::rename(tmp, self.path(key))
    }
}
