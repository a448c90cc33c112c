//! Execution strategy for the data-parallel loops (box enumeration,
//! factorization fibers, character products).
//!
//! With the `parallel` feature disabled every strategy runs sequentially, so
//! results never depend on the feature set.

use std::ops::Range;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving filter-map over an index range.
    pub fn filter_map_range<R, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return range.into_par_iter().filter_map(f).collect();
        }
        range.filter_map(f).collect()
    }

    /// Fill `out[i] = f(i)`.
    pub fn fill<R, F>(self, out: &mut [R], f: F)
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            out.par_iter_mut().enumerate().for_each(|(i, slot)| *slot = f(i));
            return;
        }
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = f(i);
        }
    }

    /// Apply `f` to consecutive chunks of `chunk` elements.
    pub fn for_each_chunk_mut<R, F>(self, data: &mut [R], chunk: usize, f: F)
    where
        R: Send,
        F: Fn(&mut [R]) + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            data.par_chunks_mut(chunk).for_each(f);
            return;
        }
        data.chunks_mut(chunk).for_each(f);
    }
}

/// Enumeration limits. Every default keeps the reproduction suite well under
/// a minute in release builds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Candidate weights examined by the Hilbert basis box search.
    pub box_candidates: u128,
    /// Elements in a single Weyl orbit.
    pub orbit_size: usize,
    /// Largest rank accepted by the character routines.
    pub character_rank: usize,
    /// Largest module dimension accepted by the character routines.
    pub character_dim: u128,
    /// Largest n accepted by the n-sequence enumeration.
    pub sequence_rank: usize,
    /// Monomials enumerated by completeness and generation checks.
    pub monomials: usize,
    pub execution: Execution,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            box_candidates: 100_000_000,
            orbit_size: 1_000_000,
            character_rank: 4,
            character_dim: 1_000_000,
            sequence_rank: 10,
            monomials: 20_000_000,
            execution: Execution::default(),
        }
    }
}

impl Limits {
    pub fn sequential() -> Self {
        Limits { execution: Execution::Sequential, ..Limits::default() }
    }

    /// Scale every enumeration budget to `budget` (used by the CLI's
    /// `--budget` flag and `QCENTER_BUDGET`).
    pub fn with_budget(mut self, budget: u128) -> Self {
        self.box_candidates = budget;
        self.monomials = usize::try_from(budget).unwrap_or(usize::MAX);
        self.orbit_size = usize::try_from(budget).unwrap_or(usize::MAX);
        self
    }
}
