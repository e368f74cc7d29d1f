//! Content-addressed on-disk cache for rendered `irrep` output.
//!
//! Each entry is two files in the cache directory: `<key>.out` holds the
//! exact bytes printed on a miss, `<key>.json` holds the metadata.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Bumped whenever the rendered output changes shape.
pub const FORMAT_VERSION: u32 = 1;

pub const CACHE_ENV: &str = "SCHWINGER_CACHE";

#[derive(Serialize)]
struct Metadata<'a> {
    key: &'a str,
    request: &'a str,
    format_version: u32,
    created_unix: u64,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// `canonical` must already include method and output format.
    pub fn key(canonical: &str) -> String {
        let mut h = Sha256::new();
        h.update(format!("v{FORMAT_VERSION}\n").as_bytes());
        h.update(canonical.as_bytes());
        hex::encode(h.finalize())
    }

    fn body_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.out"))
    }

    pub fn get(&self, key: &str) -> Option<Vec<u8>> {
        fs::read(self.body_path(key)).ok()
    }

    pub fn put(&self, key: &str, canonical: &str, body: &[u8]) -> io::Result<()> {
        let created_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let meta = Metadata {
            key,
            request: canonical,
            format_version: FORMAT_VERSION,
            created_unix,
        };
        let meta = serde_json::to_vec_pretty(&meta).map_err(io::Error::other)?;
        write_atomic(&self.dir.join(format!("{key}.json")), &meta)?;
        // body last: a present body implies complete metadata
        write_atomic(&self.body_path(key), body)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}
