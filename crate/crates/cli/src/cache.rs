//! Persistent cache for computed counts. The file is JSON with a version
//! tag; values travel as decimal strings so arbitrary precision survives
//! serialization.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::path::Path;
use tautilt_core::{CountEngine, Family};

pub const CACHE_VERSION: &str = "tautilt-cache-v1";

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: String,
    pub entries: Vec<CacheEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub family: String,
    pub r: u32,
    pub n: i64,
    pub value: String,
}

/// What happened on a load attempt. Corrupt or mismatched files are never
/// trusted silently; the caller is expected to surface the notice.
#[derive(Debug, PartialEq, Eq)]
pub enum LoadOutcome {
    Missing,
    Loaded { entries: usize },
    IgnoredCorrupt { reason: String },
    IgnoredVersion { found: String },
}

pub fn load_into(path: &Path, engine: &CountEngine) -> LoadOutcome {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(err) if err.kind() == std::io::ErrorKind::NotFound => return LoadOutcome::Missing,
        Err(err) => return LoadOutcome::IgnoredCorrupt { reason: err.to_string() },
    };
    let file: CacheFile = match serde_json::from_str(&text) {
        Ok(file) => file,
        Err(err) => return LoadOutcome::IgnoredCorrupt { reason: err.to_string() },
    };
    if file.version != CACHE_VERSION {
        return LoadOutcome::IgnoredVersion { found: file.version };
    }
    let mut loaded = 0usize;
    for entry in file.entries {
        let family = match Family::from_name(&entry.family) {
            Some(f) => f,
            None => {
                return LoadOutcome::IgnoredCorrupt {
                    reason: format!("unknown family {:?}", entry.family),
                }
            }
        };
        let value = match entry.value.parse::<BigUint>() {
            Ok(v) => v,
            Err(err) => {
                return LoadOutcome::IgnoredCorrupt {
                    reason: format!("bad value for {} r={} n={}: {err}", entry.family, entry.r, entry.n),
                }
            }
        };
        engine.preload(family, entry.r, entry.n, value);
        loaded += 1;
    }
    LoadOutcome::Loaded { entries: loaded }
}

pub fn store_from(path: &Path, engine: &CountEngine) -> std::io::Result<usize> {
    let entries: Vec<CacheEntry> = engine
        .snapshot()
        .into_iter()
        .map(|(family, r, n, value)| CacheEntry {
            family: family.name().to_owned(),
            r,
            n,
            value: value.to_string(),
        })
        .collect();
    let count = entries.len();
    let file = CacheFile { version: CACHE_VERSION.to_owned(), entries };
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_lossless() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.json");
        let engine = CountEngine::new();
        engine.t_lin(6, 200); // well beyond u64, exercises the decimal strings
        engine.s_cyc(6, 12).unwrap();
        let stored = store_from(&path, &engine).unwrap();
        assert!(stored > 0);

        let fresh = CountEngine::new();
        match load_into(&path, &fresh) {
            LoadOutcome::Loaded { entries } => assert_eq!(entries, stored),
            other => panic!("unexpected outcome {other:?}"),
        }
        assert_eq!(fresh.snapshot(), engine.snapshot());
    }

    #[test]
    fn corrupt_and_mismatched_files_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.json");
        let engine = CountEngine::new();

        std::fs::write(&path, "not json at all").unwrap();
        assert!(matches!(load_into(&path, &engine), LoadOutcome::IgnoredCorrupt { .. }));

        std::fs::write(
            &path,
            r#"{"version":"tautilt-cache-v0","entries":[]}"#,
        )
        .unwrap();
        assert!(matches!(
            load_into(&path, &engine),
            LoadOutcome::IgnoredVersion { .. }
        ));

        std::fs::write(
            &path,
            r#"{"version":"tautilt-cache-v1","entries":[{"family":"t_oct","r":1,"n":1,"value":"1"}]}"#,
        )
        .unwrap();
        assert!(matches!(load_into(&path, &engine), LoadOutcome::IgnoredCorrupt { .. }));

        std::fs::write(
            &path,
            r#"{"version":"tautilt-cache-v1","entries":[{"family":"t_lin","r":1,"n":1,"value":"x"}]}"#,
        )
        .unwrap();
        assert!(matches!(load_into(&path, &engine), LoadOutcome::IgnoredCorrupt { .. }));

        assert_eq!(load_into(&dir.path().join("absent.json"), &engine), LoadOutcome::Missing);
    }
}
