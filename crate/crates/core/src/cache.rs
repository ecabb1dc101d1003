//! Fundamental characters, memoized in memory and optionally on disk.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use crate::cartan::DynkinDiagram;
use crate::error::{Error, Result};
use crate::format::{character_from_value, character_value};
use crate::qchar::QCharacter;
use crate::ymonomial::{DominantMonomial, Spectral};

/// Bumped whenever the on-disk layout or the computation changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;

pub const CACHE_DIR_ENV: &str = "TQCHAR_CACHE_DIR";

/// `$TQCHAR_CACHE_DIR`, else `$XDG_CACHE_HOME/tqchar`, else `~/.cache/tqchar`.
pub fn default_cache_dir() -> Option<PathBuf> {
    let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    var(CACHE_DIR_ENV)
        .or_else(|| var("XDG_CACHE_HOME").map(|p| p.join("tqchar")))
        .or_else(|| var("HOME").map(|p| p.join(".cache").join("tqchar")))
}

/// One JSON file per `(diagram, node)`, holding the character at point
/// `s_0 * eps^0`. Files are replaced by atomic rename, so readers never see a
/// partial write.
#[derive(Debug, Clone)]
pub struct DiskStore {
    dir: PathBuf,
}

impl DiskStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, d: &DynkinDiagram, node: usize) -> PathBuf {
        self.dir
            .join(format!("{d}-{node}.v{CACHE_FORMAT_VERSION}.json"))
    }

    /// A stored character, or `None` when the file is missing, stale or fails
    /// validation.
    pub fn load(&self, d: &DynkinDiagram, node: usize) -> Option<QCharacter> {
        let raw = std::fs::read(self.path(d, node)).ok()?;
        let v: serde_json::Value = serde_json::from_slice(&raw).ok()?;
        if v.get("version")?.as_u64()? != u64::from(CACHE_FORMAT_VERSION)
            || v.get("diagram")?.as_str()? != d.to_string()
            || v.get("node")?.as_u64()? != node as u64
        {
            return None;
        }
        let chi = character_from_value(v.get("character")?.clone()).ok()?;
        let expected = DominantMonomial::fundamental(node, Spectral::new(0, 0));
        if chi.diagram() != d || chi.highest() != &expected || chi.validate().is_err() {
            return None;
        }
        Some(chi)
    }

    pub fn store(&self, d: &DynkinDiagram, node: usize, chi: &QCharacter) -> Result<()> {
        let cache_err = |e: std::io::Error| Error::Cache(format!("{}: {e}", self.dir.display()));
        std::fs::create_dir_all(&self.dir).map_err(cache_err)?;
        let entry = serde_json::json!({
            "version": CACHE_FORMAT_VERSION,
            "diagram": d.to_string(),
            "node": node,
            "character": character_value(chi),
        });
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(cache_err)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush().map_err(cache_err)?;
        tmp.persist(self.path(d, node))
            .map_err(|e| cache_err(e.error))?;
        Ok(())
    }
}

/// Read-mostly table of fundamental characters at the base point.
#[derive(Debug, Default)]
pub struct FundamentalCache {
    mem: RwLock<HashMap<usize, Arc<QCharacter>>>,
    store: Option<DiskStore>,
}

impl FundamentalCache {
    pub fn new(store: Option<DiskStore>) -> Self {
        Self {
            mem: RwLock::default(),
            store,
        }
    }

    pub fn store(&self) -> Option<&DiskStore> {
        self.store.as_ref()
    }

    /// Cached value for `node`, computing and recording it on a miss. Two
    /// threads missing at once may both compute; the results are identical.
    pub fn get_or_compute(
        &self,
        d: &DynkinDiagram,
        node: usize,
        compute: impl FnOnce() -> Result<QCharacter>,
    ) -> Result<Arc<QCharacter>> {
        if let Some(c) = self.mem.read().expect("cache lock").get(&node) {
            return Ok(Arc::clone(c));
        }
        let chi = match self.store.as_ref().and_then(|s| s.load(d, node)) {
            Some(c) => c,
            None => {
                let c = compute()?;
                if let Some(s) = &self.store {
                    s.store(d, node, &c)?;
                }
                c
            }
        };
        let mut mem = self.mem.write().expect("cache lock");
        Ok(Arc::clone(mem.entry(node).or_insert_with(|| Arc::new(chi))))
    }

    pub fn len(&self) -> usize {
        self.mem.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
