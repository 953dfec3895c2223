//! Append-only JSON-lines store of search results keyed by `(ell, n, method)`.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use pathdeg_core::{Method, SearchRecord};
use serde::{Deserialize, Serialize};

/// Bumped whenever the entry or record layout changes; older lines become misses.
pub const SCHEMA_VERSION: u32 = 1;
pub const PRODUCER_VERSION: &str = concat!("pathdeg ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub ell: usize,
    pub n: usize,
    pub method: Method,
}

impl CacheKey {
    pub fn of(record: &SearchRecord) -> Self {
        CacheKey {
            ell: record.ell,
            n: record.n,
            method: record.method,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub schema_version: u32,
    pub producer_version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub record: SearchRecord,
}

impl CacheEntry {
    pub fn new(record: SearchRecord) -> Self {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        CacheEntry {
            key: CacheKey::of(&record),
            schema_version: SCHEMA_VERSION,
            producer_version: PRODUCER_VERSION.to_string(),
            timestamp,
            record,
        }
    }
}

/// Cache contents in memory, mirrored to a file when one is usable. Problems
/// with the file never fail an operation; they are collected as warnings.
#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: HashMap<CacheKey, CacheEntry>,
    warnings: Vec<String>,
}

impl Cache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads every readable entry of `path`, creating the file if needed.
    /// Later lines override earlier ones for the same key.
    pub fn open(path: &Path) -> Self {
        let mut cache = Cache::default();
        if path.exists() {
            match fs::read_to_string(path) {
                Ok(text) => cache.load(path, &text),
                Err(e) => cache.warn(format!("cannot read cache {}: {e}", path.display())),
            }
        }
        match OpenOptions::new().create(true).append(true).open(path) {
            Ok(_) => cache.path = Some(path.to_path_buf()),
            Err(e) => cache.warn(format!(
                "cache {} is not writable ({e}); results are kept in memory only",
                path.display()
            )),
        }
        cache
    }

    fn load(&mut self, path: &Path, text: &str) {
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheEntry>(line) {
                Ok(entry) if entry.key != CacheKey::of(&entry.record) => {
                    self.warn(format!("{}:{}: key does not match record, skipped", path.display(), i + 1))
                }
                Ok(entry) if entry.schema_version == SCHEMA_VERSION => {
                    self.entries.insert(entry.key, entry);
                }
                Ok(_) => {}
                Err(e) => self.warn(format!("{}:{}: unreadable entry skipped ({e})", path.display(), i + 1)),
            }
        }
    }

    fn warn(&mut self, msg: String) {
        self.warnings.push(msg);
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &CacheKey) -> Option<&CacheEntry> {
        self.entries.get(key)
    }

    /// Stores `entry` and appends it to the file. A write failure switches the
    /// cache to memory-only operation.
    pub fn insert(&mut self, entry: CacheEntry) {
        if let Some(path) = self.path.clone() {
            if let Err(e) = append_line(&path, &entry) {
                self.warn(format!(
                    "cannot append to cache {} ({e}); continuing in memory only",
                    path.display()
                ));
                self.path = None;
            }
        }
        self.entries.insert(entry.key, entry);
    }

    pub fn take_warnings(&mut self) -> Vec<String> {
        std::mem::take(&mut self.warnings)
    }
}

fn append_line(path: &Path, entry: &CacheEntry) -> std::io::Result<()> {
    let mut file = OpenOptions::new().create(true).read(true).append(true).open(path)?;
    let mut line = serde_json::to_string(entry)?;
    line.push('\n');
    // a truncated last line must not swallow the new entry
    let len = file.seek(SeekFrom::End(0))?;
    if len > 0 {
        file.seek(SeekFrom::Start(len - 1))?;
        let mut last = [0u8];
        file.read_exact(&mut last)?;
        if last[0] != b'\n' {
            line.insert(0, '\n');
        }
    }
    file.write_all(line.as_bytes())?;
    file.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use pathdeg_core::{p_canonical, SearchOptions};

    fn record(n: usize, ell: usize) -> SearchRecord {
        p_canonical(n, ell, SearchOptions::default()).unwrap()
    }

    #[test]
    fn write_then_read() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let entry = CacheEntry::new(record(7, 3));
        let mut cache = Cache::open(&path);
        cache.insert(entry.clone());
        let reopened = Cache::open(&path);
        assert_eq!(reopened.get(&entry.key), Some(&entry));
        assert!(cache.take_warnings().is_empty());
    }

    #[test]
    fn schema_mismatch_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let mut entry = CacheEntry::new(record(6, 3));
        entry.schema_version = SCHEMA_VERSION + 1;
        fs::write(&path, serde_json::to_string(&entry).unwrap() + "\n").unwrap();
        let mut cache = Cache::open(&path);
        assert!(cache.get(&entry.key).is_none());
        assert!(cache.take_warnings().is_empty());
    }

    #[test]
    fn truncated_line_is_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let good = CacheEntry::new(record(6, 2));
        let cut = serde_json::to_string(&CacheEntry::new(record(6, 3))).unwrap();
        let text = format!("{}\n{}", serde_json::to_string(&good).unwrap(), &cut[..cut.len() / 2]);
        fs::write(&path, text).unwrap();
        let mut cache = Cache::open(&path);
        assert_eq!(cache.get(&good.key), Some(&good));
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.take_warnings().len(), 1);

        let next = CacheEntry::new(record(5, 3));
        cache.insert(next.clone());
        let mut again = Cache::open(&path);
        assert_eq!(again.len(), 2);
        assert_eq!(again.get(&next.key), Some(&next));
        assert_eq!(again.take_warnings().len(), 1);
    }

    #[test]
    fn unwritable_path_falls_back_to_memory() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("missing").join("c.jsonl");
        let mut cache = Cache::open(&path);
        assert!(cache.path().is_none());
        assert_eq!(cache.take_warnings().len(), 1);
        let entry = CacheEntry::new(record(5, 2));
        cache.insert(entry.clone());
        assert_eq!(cache.get(&entry.key), Some(&entry));
    }
}
