use std::path::PathBuf;

use crate::cache::{DiskStore, FundamentalCache};
use crate::cartan::DynkinDiagram;
use crate::error::Result;
use crate::fm::{fm_expand, DEFAULT_MAX_MONOMIALS};
use crate::qchar::QCharacter;
use crate::tensor::standard_qchar;
use crate::ymonomial::{DominantMonomial, Spectral};

/// Entry point for one diagram. Shares fundamental characters between
/// requests; safe to use from several threads.
#[derive(Debug)]
pub struct Engine {
    diagram: DynkinDiagram,
    max_monomials: usize,
    cache: FundamentalCache,
}

impl Engine {
    pub fn new(diagram: DynkinDiagram) -> Self {
        Self {
            diagram,
            max_monomials: DEFAULT_MAX_MONOMIALS,
            cache: FundamentalCache::new(None),
        }
    }

    /// Also persists fundamentals as JSON files under `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache = FundamentalCache::new(Some(DiskStore::new(dir)));
        self
    }

    pub fn with_max_monomials(mut self, limit: usize) -> Self {
        self.max_monomials = limit;
        self
    }

    pub fn set_max_monomials(&mut self, limit: usize) {
        self.max_monomials = limit;
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn max_monomials(&self) -> usize {
        self.max_monomials
    }

    pub fn cache(&self) -> &FundamentalCache {
        &self.cache
    }

    /// `chi_{q,t}` of the l-fundamental module `L(Lambda_node)_at`.
    pub fn fundamental(&self, node: usize, at: Spectral) -> Result<QCharacter> {
        self.diagram.check_vertex(node)?;
        let base = self.cache.get_or_compute(&self.diagram, node, || {
            fm_expand(
                &self.diagram,
                &DominantMonomial::fundamental(node, Spectral::new(0, 0)),
                self.max_monomials,
            )
        })?;
        Ok(base.shift(at.step).into_orbit(at.orbit))
    }

    /// `chi_{q,t}` of the standard module `M_P`.
    pub fn standard(&self, p: &DominantMonomial) -> Result<QCharacter> {
        standard_qchar(self, p)
    }
}
