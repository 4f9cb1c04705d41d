//! Append-only verdict cache keyed by canonical graph6 keys. The file
//! starts with a version header; files written by other toolkit versions
//! are ignored wholesale. Caching never changes a verdict: only booleans
//! are stored, and witnesses are recomputed when a record needs one.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

const VERSION: &str = env!("CARGO_PKG_VERSION");

pub struct VerdictCache {
    path: PathBuf,
    entries: HashMap<(String, String), bool>,
    dirty: Vec<((String, String), bool)>,
}

impl VerdictCache {
    /// Opens (or prepares) the cache file inside `dir`.
    pub fn open(dir: &Path) -> std::io::Result<VerdictCache> {
        fs::create_dir_all(dir)?;
        let path = dir.join("verdicts.cache");
        let mut entries = HashMap::new();
        if let Ok(text) = fs::read_to_string(&path) {
            let mut lines = text.lines();
            if lines.next() == Some(&format!("minorkit-cache {VERSION}")) {
                for line in lines {
                    let mut parts = line.split_whitespace();
                    if let (Some(key), Some(kind), Some(bit)) =
                        (parts.next(), parts.next(), parts.next())
                    {
                        if let Ok(b) = bit.parse::<u8>() {
                            entries.insert((key.to_string(), kind.to_string()), b != 0);
                        }
                    }
                }
            }
        }
        Ok(VerdictCache {
            path,
            entries,
            dirty: Vec::new(),
        })
    }

    pub fn get(&self, key: &str, kind: &str) -> Option<bool> {
        self.entries.get(&(key.to_string(), kind.to_string())).copied()
    }

    pub fn put(&mut self, key: String, kind: String, verdict: bool) {
        if self
            .entries
            .insert((key.clone(), kind.clone()), verdict)
            .is_none()
        {
            self.dirty.push((((key), (kind)), verdict));
        }
    }

    /// Appends new entries, writing the header first when the file is fresh
    /// or carries a stale version.
    pub fn flush(&mut self) -> std::io::Result<()> {
        if self.dirty.is_empty() {
            return Ok(());
        }
        let header = format!("minorkit-cache {VERSION}");
        let valid = fs::read_to_string(&self.path)
            .map(|t| t.lines().next() == Some(header.as_str()))
            .unwrap_or(false);
        let mut file = if valid {
            fs::OpenOptions::new().append(true).open(&self.path)?
        } else {
            let mut f = fs::File::create(&self.path)?;
            writeln!(f, "{header}")?;
            f
        };
        for ((key, kind), verdict) in self.dirty.drain(..) {
            writeln!(file, "{key} {kind} {}", verdict as u8)?;
        }
        Ok(())
    }
}
