//! Append-only JSONL result cache. One record per line keyed by
//! (n, k, d, degree, method); replaying the file resumes a sweep, and a
//! corrupt trailing line (an interrupted append) is tolerated and
//! truncated with a warning.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub degree: u32,
    pub method: String,
    /// Exact decimal value.
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees_with: Option<Vec<String>>,
    /// UTC seconds since the epoch.
    pub timestamp: u64,
    pub tool_version: String,
}

pub type Key = (u32, u32, u32, u32, String);

impl VerificationRecord {
    pub fn key(&self) -> Key {
        (self.n, self.k, self.d, self.degree, self.method.clone())
    }
}

#[derive(Debug, Default)]
pub struct Cache {
    pub records: HashMap<Key, String>,
    /// Byte length of the valid prefix of the file; appends continue here.
    pub valid_len: u64,
    pub truncated_line: bool,
}

/// Load a cache file. A missing file is an empty cache. A line that fails
/// to parse is tolerated only at the very end of the file.
pub fn load(path: &Path) -> Result<Cache, String> {
    let mut cache = Cache::default();
    let mut raw = String::new();
    match std::fs::File::open(path) {
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
        Err(e) => return Err(format!("cannot open cache {}: {e}", path.display())),
        Ok(mut f) => {
            f.read_to_string(&mut raw).map_err(|e| format!("cannot read cache {}: {e}", path.display()))?;
        }
    }
    let mut offset = 0u64;
    let mut pending: Option<(u64, String)> = None;
    for line in raw.split_inclusive('\n') {
        let start = offset;
        offset += line.len() as u64;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some((bad_at, bad)) = pending.take() {
            return Err(format!(
                "corrupt cache record at byte {bad_at} of {} (not the trailing line): {bad}",
                path.display()
            ));
        }
        match serde_json::from_str::<VerificationRecord>(trimmed) {
            Ok(rec) => {
                cache.records.insert(rec.key(), rec.value);
                cache.valid_len = offset;
            }
            Err(_) => pending = Some((start, trimmed.to_string())),
        }
    }
    if let Some((bad_at, _)) = pending {
        eprintln!(
            "warning: dropping corrupt trailing cache line at byte {bad_at} of {}",
            path.display()
        );
        cache.truncated_line = true;
        cache.valid_len = bad_at;
    }
    Ok(cache)
}

/// Append records after the valid prefix, truncating a corrupt tail first.
pub fn append(path: &Path, cache: &Cache, records: &[VerificationRecord]) -> Result<(), String> {
    if records.is_empty() && !cache.truncated_line {
        return Ok(());
    }
    let mut file = OpenOptions::new()
        .create(true)
        .write(true)
        .open(path)
        .map_err(|e| format!("cannot open cache {}: {e}", path.display()))?;
    file.set_len(cache.valid_len)
        .map_err(|e| format!("cannot truncate cache {}: {e}", path.display()))?;
    file.seek(SeekFrom::End(0)).map_err(|e| e.to_string())?;
    let mut buf = String::new();
    for rec in records {
        buf.push_str(&serde_json::to_string(rec).expect("record serialization cannot fail"));
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())
        .map_err(|e| format!("cannot append to cache {}: {e}", path.display()))?;
    file.flush().map_err(|e| e.to_string())?;
    Ok(())
}

pub fn now_utc_seconds() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(n: u32, degree: u32, method: &str, value: &str) -> VerificationRecord {
        VerificationRecord {
            n,
            k: 2,
            d: 3,
            degree,
            method: method.into(),
            value: value.into(),
            agrees_with: None,
            timestamp: 1,
            tool_version: "test".into(),
        }
    }

    #[test]
    fn round_trip_and_resume() {
        let dir = std::env::temp_dir().join(format!("powideal-cache-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        let _ = std::fs::remove_file(&path);

        let empty = load(&path).unwrap();
        assert!(empty.records.is_empty());
        append(&path, &empty, &[rec(1, 2, "comp", "3"), rec(1, 3, "comp", "0")]).unwrap();

        let loaded = load(&path).unwrap();
        assert_eq!(loaded.records.len(), 2);
        assert_eq!(loaded.records[&(1, 2, 3, 2, "comp".into())], "3");

        // corrupt trailing line is dropped and overwritten by the next append
        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        f.write_all(b"{\"n\": 9, truncated").unwrap();
        drop(f);
        let damaged = load(&path).unwrap();
        assert!(damaged.truncated_line);
        assert_eq!(damaged.records.len(), 2);
        append(&path, &damaged, &[rec(2, 4, "duality", "7")]).unwrap();
        let healed = load(&path).unwrap();
        assert!(!healed.truncated_line);
        assert_eq!(healed.records.len(), 3);

        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn corrupt_middle_line_is_rejected() {
        let dir = std::env::temp_dir().join(format!("powideal-cache-mid-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        std::fs::write(&path, "garbage\n{\"also\": \"not a record\"}\n").unwrap();
        assert!(load(&path).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
