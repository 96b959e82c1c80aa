//! Isomorphism-free generation of trees and cacti.

mod brute;
mod cacti;
mod trees;

pub use brute::{brute_force_cacti, BRUTE_FORCE_MAX_N};
pub use cacti::cacti;
pub use trees::{trees, FreeTrees};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("brute force refused for n = {0} (limit {BRUTE_FORCE_MAX_N})")]
    RefusedTooLarge(usize),
    #[error("infeasible family: n = {n}, k = {k}")]
    Infeasible { n: usize, k: usize },
}

/// The class of connected cacti with `n` vertices and `k` cycles (trees for
/// `k = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumSpec {
    pub n: usize,
    pub k: usize,
    pub max_results: Option<usize>,
}

impl EnumSpec {
    pub fn new(n: usize, k: usize) -> Self {
        EnumSpec {
            n,
            k,
            max_results: None,
        }
    }

    pub fn trees(n: usize) -> Self {
        Self::new(n, 0)
    }

    /// A cactus with `k` cycles needs at least `2k + 1` vertices.
    pub fn is_feasible(&self) -> bool {
        self.n >= 1 && 2 * self.k < self.n
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.is_feasible() {
            Ok(())
        } else {
            Err(EnumError::Infeasible {
                n: self.n,
                k: self.k,
            })
        }
    }

    /// Trees come from the level-sequence generator, everything else from
    /// block augmentation.
    pub fn stream(&self) -> GraphStream {
        let stream = if self.k == 0 && self.n >= 1 {
            trees(self.n)
        } else {
            cacti(self.n, self.k)
        };
        match self.max_results {
            Some(cap) => stream.take_at_most(cap),
            None => stream,
        }
    }
}

/// A deterministic, single-consumer sequence of pairwise non-isomorphic
/// graphs.
pub struct GraphStream {
    inner: Box<dyn Iterator<Item = Graph> + Send>,
    empty_domain: bool,
}

impl GraphStream {
    pub fn new(inner: impl Iterator<Item = Graph> + Send + 'static) -> Self {
        GraphStream {
            inner: Box::new(inner),
            empty_domain: false,
        }
    }

    pub fn empty_domain() -> Self {
        GraphStream {
            inner: Box::new(std::iter::empty()),
            empty_domain: true,
        }
    }

    /// Set when the requested class is infeasible.
    pub fn is_empty_domain(&self) -> bool {
        self.empty_domain
    }

    pub fn take_at_most(self, cap: usize) -> Self {
        GraphStream {
            inner: Box::new(self.inner.take(cap)),
            empty_domain: self.empty_domain,
        }
    }

    /// Pulls up to `size` graphs.
    pub fn next_batch(&mut self, size: usize) -> Vec<Graph> {
        self.inner.by_ref().take(size).collect()
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.inner.next()
    }
}

impl std::fmt::Debug for GraphStream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GraphStream")
            .field("empty_domain", &self.empty_domain)
            .finish_non_exhaustive()
    }
}
