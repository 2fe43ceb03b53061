//! Content-addressed on-disk cache for command outcomes.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "ALBANESE_CACHE_DIR";

/// `$ALBANESE_CACHE_DIR`, else `$XDG_CACHE_HOME/albanese`, else
/// `$HOME/.cache/albanese`, else `.albanese-cache` in the working directory.
pub fn default_cache_dir() -> PathBuf {
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    env(CACHE_DIR_ENV)
        .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("albanese")))
        .or_else(|| env("HOME").map(|d| d.join(".cache").join("albanese")))
        .unwrap_or_else(|| PathBuf::from(".albanese-cache"))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    /// SHA-256 of the operation name, the canonical argument JSON and the
    /// library version.
    pub fn key(op: &str, args: &impl Serialize) -> String {
        let mut h = Sha256::new();
        h.update(op.as_bytes());
        h.update([0]);
        h.update(serde_json::to_vec(args).expect("arguments serialize"));
        h.update([0]);
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// A stored value; unreadable or stale entries count as misses.
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let bytes = std::fs::read(self.path(key)?).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    /// Writes to a temporary file in the cache directory, then renames it into
    /// place, so concurrent writers never expose a partial entry.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> std::io::Result<()> {
        let (Some(dir), Some(path)) = (self.dir.as_deref(), self.path(key)) else {
            return Ok(());
        };
        std::fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(&serde_json::to_vec(value).map_err(std::io::Error::other)?)?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }

    /// Returns the cached value or computes and stores it. The flag reports a hit.
    pub fn get_or_compute<T, E>(
        &self,
        op: &str,
        args: &impl Serialize,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> Result<(T, bool), E>
    where
        T: Serialize + DeserializeOwned,
    {
        if !self.is_enabled() {
            return compute().map(|v| (v, false));
        }
        let key = Self::key(op, args);
        if let Some(v) = self.get(&key) {
            return Ok((v, true));
        }
        let v = compute()?;
        if let Err(e) = self.put(&key, &v) {
            eprintln!("warning: cache write failed in {}: {e}", self.dir_display());
        }
        Ok((v, false))
    }

    fn dir_display(&self) -> String {
        self.dir.as_deref().map(Path::display).map(|d| d.to_string()).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_depend_on_op_and_args() {
        let a = Cache::key("w", &serde_json::json!({"degree": 1}));
        assert_eq!(a, Cache::key("w", &serde_json::json!({"degree": 1})));
        assert_ne!(a, Cache::key("w", &serde_json::json!({"degree": 2})));
        assert_ne!(a, Cache::key("dims", &serde_json::json!({"degree": 1})));
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn round_trip_and_hits() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let mut calls = 0;
        let mut run = || {
            cache
                .get_or_compute::<u32, ()>("op", &1, || {
                    calls += 1;
                    Ok(7)
                })
                .unwrap()
        };
        assert_eq!(run(), (7, false));
        assert_eq!(run(), (7, true));
        assert_eq!(calls, 1);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
