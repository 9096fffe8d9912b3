//! On-disk result cache keyed by (document hash, operation, parameters).
//!
//! Entries are JSON files named by a SHA-256 key that also folds in the
//! format version, so a version bump invalidates everything. Writes go
//! through a temporary file and a rename so concurrent writers never expose
//! a partial entry.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

use super::format::FORMAT_VERSION;

pub const CACHE_DIR_ENV: &str = "GROUPROD_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct ResultCache {
    dir: Option<PathBuf>,
}

impl ResultCache {
    pub fn disabled() -> ResultCache {
        ResultCache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> ResultCache {
        ResultCache { dir: Some(dir.into()) }
    }

    /// `$GROUPROD_CACHE_DIR`, else `$XDG_CACHE_HOME/grouprod`, else
    /// `$HOME/.cache/grouprod`. Disabled if none is set.
    pub fn from_env() -> ResultCache {
        let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        let dir = var(CACHE_DIR_ENV)
            .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("grouprod")))
            .or_else(|| var("HOME").map(|d| d.join(".cache").join("grouprod")));
        ResultCache { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(document: &str, operation: &str, parameters: &str) -> String {
        let mut h = Sha256::new();
        for part in [&FORMAT_VERSION.to_string(), document, operation, parameters] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Unreadable or corrupt entries count as misses.
    pub fn get(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort; failures are logged and otherwise ignored.
    pub fn put(&self, key: &str, value: &Value) {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path(key)) else {
            return;
        };
        let attempt = || -> std::io::Result<()> {
            fs::create_dir_all(dir)?;
            let tmp = dir.join(format!("{key}.{}.tmp", std::process::id()));
            fs::write(&tmp, value.to_string())?;
            fs::rename(&tmp, &path)
        };
        if let Err(e) = attempt() {
            log::warn!("cache write to {} failed: {e}", path.display());
        }
    }

    /// Cached value for `key`, computing and storing it on a miss.
    pub fn get_or_compute<E>(&self, key: &str, compute: impl FnOnce() -> Result<Value, E>) -> Result<Value, E> {
        if let Some(v) = self.get(key) {
            log::debug!("cache hit {key}");
            return Ok(v);
        }
        let v = compute()?;
        self.put(key, &v);
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn stores_and_reloads() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::at(dir.path());
        let key = ResultCache::key("doc", "residual", "u");
        assert!(cache.get(&key).is_none());
        let mut calls = 0;
        for _ in 0..2 {
            let v = cache
                .get_or_compute::<()>(&key, || {
                    calls += 1;
                    Ok(json!({"order": 3}))
                })
                .unwrap();
            assert_eq!(v["order"], 3);
        }
        assert_eq!(calls, 1);
    }

    #[test]
    fn keys_separate_fields() {
        assert_ne!(ResultCache::key("ab", "c", ""), ResultCache::key("a", "bc", ""));
        assert_ne!(ResultCache::key("d", "residual", "u"), ResultCache::key("d", "residual", "wu"));
    }

    #[test]
    fn disabled_never_hits() {
        let cache = ResultCache::disabled();
        cache.put("k", &json!(1));
        assert!(cache.get("k").is_none());
    }
}
