//! On-disk cache of JSON reports, keyed by a hash of everything that
//! determines the result.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Bumped whenever the layout or meaning of a cached report changes.
pub const ARTIFACT_VERSION: &str = concat!("1/", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheKey {
    pub command: &'static str,
    pub signature: String,
    pub euler: Option<i64>,
    pub bound: Option<usize>,
}

impl CacheKey {
    pub fn digest(&self) -> String {
        let field = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let text = format!(
            "{}\n{}\n{}\n{}\n{}",
            self.command,
            self.signature,
            field(self.euler.map(|e| e.to_string())),
            field(self.bound.map(|m| m.to_string())),
            ARTIFACT_VERSION
        );
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    /// A cached report, or `None` on a miss. Unreadable entries count as misses.
    pub fn get(&self, key: &CacheKey) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn put(&self, key: &CacheKey, value: &Value) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let path = self.path(key);
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        write_atomic(&path, text.as_bytes())?;
        Ok(path)
    }
}

/// Writes through a temporary file in the same directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos()).unwrap_or(0);
    let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.{}.{nanos}.tmp", std::process::id()));
    let mut file = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
    file.write_all(bytes).with_context(|| format!("writing {}", tmp.display()))?;
    file.sync_all().ok();
    drop(file);
    fs::rename(&tmp, path).with_context(|| format!("renaming {} to {}", tmp.display(), path.display()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(e: Option<i64>) -> CacheKey {
        CacheKey { command: "homology-inf", signature: "io".into(), euler: e, bound: Some(8) }
    }

    #[test]
    fn keys_separate_every_field() {
        assert_ne!(key(Some(0)).digest(), key(Some(2)).digest());
        assert_ne!(key(Some(0)).digest(), key(None).digest());
        assert_eq!(key(Some(0)).digest(), key(Some(0)).digest());
        assert_eq!(key(None).digest().len(), 64);
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested"));
        assert!(cache.get(&key(None)).is_none());
        let v = serde_json::json!({"a": [1, 2]});
        cache.put(&key(None), &v).unwrap();
        assert_eq!(cache.get(&key(None)), Some(v));
        let leftovers = fs::read_dir(dir.path().join("nested")).unwrap().count();
        assert_eq!(leftovers, 1);
    }
}
