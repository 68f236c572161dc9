//! Shared memo table for Murnaghan–Nakayama evaluation.
//!
//! Keys are `(λ, μ)` pairs where `μ` is a suffix of the class being evaluated
//! (largest parts peeled off first), flattened as `λ ++ [0] ++ μ`. Readers and
//! writers may run concurrently; inserts are idempotent and an insert dropped
//! by the entry cap only costs a recomputation.
//!
//! # Snapshot format
//!
//! [`MemoCache::save_snapshot`] writes a JSON object
//!
//! ```text
//! {"format": "signpart-mn-cache", "version": 1, "fingerprint": "<hex>",
//!  "entries": [["<λ>", "<μ>", "<value>"], ...]}
//! ```
//!
//! with partitions in the text grammar and values as decimal strings. The
//! fingerprint hashes the canonical partition ordering and key layout of this
//! build; a snapshot with a different version or fingerprint is ignored on load.

use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::CharValue;
use crate::error::{Error, Result};
use crate::partitions::{parse_partition, partitions_of, Partition};

/// Largest `n` for which tables and brute-force sweeps run by default.
pub const DEFAULT_CAPACITY: usize = 25;

const SNAPSHOT_FORMAT: &str = "signpart-mn-cache";
const SNAPSHOT_VERSION: u32 = 1;

#[derive(Debug)]
pub struct MemoCache {
    map: DashMap<Vec<u32>, CharValue>,
    entries: AtomicUsize,
    entry_cap: Option<usize>,
    capacity_n: usize,
}

impl Default for MemoCache {
    fn default() -> Self {
        MemoCache::new()
    }
}

pub(crate) fn encode_key(lambda: &[usize], mu: &[usize]) -> Vec<u32> {
    let mut key = Vec::with_capacity(lambda.len() + mu.len() + 1);
    key.extend(lambda.iter().map(|&p| p as u32));
    key.push(0);
    key.extend(mu.iter().map(|&p| p as u32));
    key
}

fn decode_key(key: &[u32]) -> (Partition, Partition) {
    let sep = key.iter().position(|&v| v == 0).expect("cache key has a separator");
    let to_partition = |s: &[u32]| Partition::from_unsorted(s.iter().map(|&v| v as usize).collect());
    (to_partition(&key[..sep]), to_partition(&key[sep + 1..]))
}

/// Hash of the conventions a snapshot depends on.
pub fn ordering_fingerprint() -> &'static str {
    static FINGERPRINT: OnceLock<String> = OnceLock::new();
    FINGERPRINT.get_or_init(|| {
        let mut hasher = Sha256::new();
        hasher.update(b"key=lambda|0|mu-suffix;peel=largest-first;");
        for n in 0..=8 {
            for p in partitions_of(n) {
                hasher.update(p.to_string().as_bytes());
                hasher.update(b";");
            }
        }
        hex::encode(hasher.finalize())
    })
}

#[derive(Serialize, Deserialize)]
struct Snapshot {
    format: String,
    version: u32,
    fingerprint: String,
    entries: Vec<(String, String, String)>,
}

impl MemoCache {
    /// Unbounded cache with the default capacity.
    pub fn new() -> Self {
        MemoCache {
            map: DashMap::new(),
            entries: AtomicUsize::new(0),
            entry_cap: None,
            capacity_n: DEFAULT_CAPACITY,
        }
    }

    /// Sets the largest `n` accepted by table construction and brute-force sweeps.
    pub fn with_capacity_n(mut self, n: usize) -> Self {
        self.capacity_n = n;
        self
    }

    /// Stops inserting once `cap` entries are stored.
    pub fn with_entry_cap(mut self, cap: usize) -> Self {
        self.entry_cap = Some(cap);
        self
    }

    pub fn capacity_n(&self) -> usize {
        self.capacity_n
    }

    pub fn check_capacity(&self, n: usize) -> Result<()> {
        if n > self.capacity_n {
            Err(Error::CapacityExceeded {
                n,
                capacity: self.capacity_n,
            })
        } else {
            Ok(())
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn clear(&self) {
        self.map.clear();
        self.entries.store(0, Ordering::Relaxed);
    }

    pub(crate) fn get(&self, key: &[u32]) -> Option<CharValue> {
        self.map.get(key).map(|v| v.clone())
    }

    pub(crate) fn insert(&self, key: Vec<u32>, value: CharValue) {
        if let Some(cap) = self.entry_cap {
            if self.entries.load(Ordering::Relaxed) >= cap {
                return;
            }
        }
        if let Some(old) = self.map.insert(key, value.clone()) {
            debug_assert_eq!(old, value, "memo inserts must be idempotent");
        } else {
            self.entries.fetch_add(1, Ordering::Relaxed);
        }
    }

    /// The cached value of `χ^λ_μ` (μ a full class or suffix), if present.
    pub fn lookup(&self, lambda: &Partition, mu: &Partition) -> Option<CharValue> {
        self.get(&encode_key(lambda.parts(), mu.parts()))
    }

    pub fn save_snapshot(&self, path: &Path) -> Result<()> {
        let mut entries: Vec<(String, String, String)> = self
            .map
            .iter()
            .map(|e| {
                let (l, m) = decode_key(e.key());
                (l.to_string(), m.to_string(), e.value().to_string())
            })
            .collect();
        entries.sort();
        let snap = Snapshot {
            format: SNAPSHOT_FORMAT.to_string(),
            version: SNAPSHOT_VERSION,
            fingerprint: ordering_fingerprint().to_string(),
            entries,
        };
        let text = serde_json::to_string(&snap).map_err(|e| Error::Snapshot(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::Snapshot(format!("{}: {e}", path.display())))
    }

    /// Merges a snapshot into the cache. Returns the number of entries loaded;
    /// 0 if the snapshot was written by an incompatible build and discarded.
    pub fn load_snapshot(&self, path: &Path) -> Result<usize> {
        let text =
            fs::read_to_string(path).map_err(|e| Error::Snapshot(format!("{}: {e}", path.display())))?;
        let snap: Snapshot = serde_json::from_str(&text).map_err(|e| Error::Snapshot(e.to_string()))?;
        if snap.format != SNAPSHOT_FORMAT
            || snap.version != SNAPSHOT_VERSION
            || snap.fingerprint != ordering_fingerprint()
        {
            return Ok(0);
        }
        let mut loaded = 0;
        for (l, m, v) in snap.entries {
            let bad = |e: Error| Error::Snapshot(e.to_string());
            let lambda = parse_partition(&l).map_err(bad)?;
            let mu = parse_partition(&m).map_err(bad)?;
            let value: CharValue = v.parse().map_err(bad)?;
            if lambda.size() != mu.size() {
                return Err(Error::Snapshot(format!("entry {l} / {m} has mismatched sizes")));
            }
            self.insert(encode_key(lambda.parts(), mu.parts()), value);
            loaded += 1;
        }
        Ok(loaded)
    }
}
