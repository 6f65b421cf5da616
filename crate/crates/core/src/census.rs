//! Brute-force censuses over a whole generation of 𝒜.
//!
//! The odometer range is cut into contiguous blocks; each block is walked
//! independently and per-block results are combined in block order. With
//! the `parallel` feature the blocks run on a rayon pool sized to the
//! requested worker count; without it they run one after another. Either
//! way the result does not depend on the worker count.

use std::ops::Range;

use crate::enumerate::{partition, Odometer, MAX_GENERATION};
use crate::error::{Error, Result};
use crate::sequence::Term;

/// Default generation cap for brute-force work (11! ≈ 39.9M sequences).
pub const DEFAULT_CAP: usize = 10;

const BLOCKS_PER_WORKER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub cap: usize,
    pub workers: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            cap: DEFAULT_CAP,
            workers: default_workers(),
        }
    }
}

impl CensusConfig {
    pub fn sequential() -> Self {
        CensusConfig {
            workers: 1,
            ..Default::default()
        }
    }

    pub fn with_workers(workers: usize) -> Self {
        CensusConfig {
            workers,
            ..Default::default()
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn check(&self, generation: usize) -> Result<()> {
        let cap = self.cap.min(MAX_GENERATION);
        if generation > cap {
            return Err(Error::CapExceeded { generation, cap });
        }
        Ok(())
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Two reusable buffers handed to census predicates.
#[derive(Debug, Default)]
pub struct Scratch {
    pub a: Vec<Term>,
    pub b: Vec<Term>,
}

/// Applies `f` to each block of 𝒜ₙ and returns the results in block order.
pub fn map_blocks<T, F>(n: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u128>) -> T + Sync,
{
    let workers = workers.max(1);
    let blocks = partition(n, workers * BLOCKS_PER_WORKER);
    map_ranges(blocks, workers, f)
}

/// Applies `f` to each of `blocks`, returning results in input order.
#[cfg(feature = "parallel")]
pub fn map_ranges<T, F>(blocks: Vec<Range<u128>>, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u128>) -> T + Sync,
{
    use rayon::prelude::*;

    if workers > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            return pool.install(|| blocks.into_par_iter().map(&f).collect());
        }
    }
    blocks.into_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_ranges<T, F>(blocks: Vec<Range<u128>>, _workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u128>) -> T + Sync,
{
    blocks.into_iter().map(f).collect()
}

/// Number of sequences in 𝒜ₙ satisfying `pred`.
pub fn count_matching<F>(n: usize, config: &CensusConfig, pred: F) -> Result<u64>
where
    F: Fn(&[Term], &mut Scratch) -> bool + Sync,
{
    config.check(n)?;
    let counts = map_blocks(n, config.workers, |block| {
        let mut scratch = Scratch::default();
        let mut odometer = Odometer::range(n, block);
        let mut hits = 0u64;
        while let Some(terms) = odometer.advance() {
            if pred(terms, &mut scratch) {
                hits += 1;
            }
        }
        hits
    });
    Ok(counts.into_iter().sum())
}

/// Checks `pred` on every sequence of 𝒜ₙ, returning the first failure in
/// lexicographic order as its terms.
pub fn find_counterexample<F>(n: usize, config: &CensusConfig, pred: F) -> Result<Option<Vec<Term>>>
where
    F: Fn(&[Term], &mut Scratch) -> bool + Sync,
{
    config.check(n)?;
    let found = map_blocks(n, config.workers, |block| {
        let mut scratch = Scratch::default();
        let mut odometer = Odometer::range(n, block);
        while let Some(terms) = odometer.advance() {
            if !pred(terms, &mut scratch) {
                return Some(terms.to_vec());
            }
        }
        None
    });
    Ok(found.into_iter().flatten().next())
}
