//! On-disk result cache: one checksummed JSON file per key, written by
//! atomic rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumped whenever the stored layout changes.
const CACHE_FORMAT: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedOutput {
    pub json: serde_json::Value,
    pub text: String,
    pub exit: i32,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    checksum: String,
    payload: CachedOutput,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn checksum(payload: &CachedOutput) -> String {
    let bytes = serde_json::to_vec(payload).expect("plain data");
    sha256_hex(&bytes)
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Key from the subcommand, its canonical parameters and the crate version.
    pub fn key(subcommand: &str, params: &str) -> String {
        format!(
            "{subcommand}|{params}|{}|{CACHE_FORMAT}",
            env!("CARGO_PKG_VERSION")
        )
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", sha256_hex(key.as_bytes())))
    }

    /// A stored result, or `None` when absent, unreadable or corrupted.
    pub fn load(&self, key: &str) -> Option<CachedOutput> {
        let bytes = fs::read(self.path(key)).ok()?;
        let entry: Entry = serde_json::from_slice(&bytes).ok()?;
        if entry.key != key || entry.checksum != checksum(&entry.payload) {
            return None;
        }
        Some(entry.payload)
    }

    pub fn store(&self, key: &str, payload: &CachedOutput) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            key: key.to_string(),
            checksum: checksum(payload),
            payload: payload.clone(),
        };
        let target = self.path(key);
        let tmp = temp_path(&self.dir, &target);
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&serde_json::to_vec_pretty(&entry).map_err(std::io::Error::other)?)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)
    }
}

fn temp_path(dir: &Path, target: &Path) -> PathBuf {
    let stem = target.file_name().and_then(|s| s.to_str()).unwrap_or("entry");
    let nanos = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_nanos());
    dir.join(format!(".{stem}.{}.{nanos}.tmp", std::process::id()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = Cache::key("partitions", "n=3");
        assert!(cache.load(&key).is_none());
        let out = CachedOutput {
            json: serde_json::json!({"a": 1}),
            text: "hello\n".into(),
            exit: 0,
        };
        cache.store(&key, &out).unwrap();
        assert_eq!(cache.load(&key), Some(out));
        let path = cache.path(&key);
        let tampered = fs::read_to_string(&path).unwrap().replace("hello", "jello");
        fs::write(&path, tampered).unwrap();
        assert!(cache.load(&key).is_none());
        fs::write(&path, "not json").unwrap();
        assert!(cache.load(&key).is_none());
    }
}
