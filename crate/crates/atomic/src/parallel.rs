//! Thread-level companions of the sequential traversals in `atomic-core`.
//!
//! Work is split into contiguous shards whose results are concatenated in
//! shard order, so every output is independent of the thread count.

use std::num::NonZeroUsize;
use std::thread;

use atomic_core::affine::{affine_image_probe_with, AffineSystem, AffineWeight, ProbeReport};
use atomic_core::atomiclen::{image_set_with, ImageReport};
use atomic_core::orbit::{expand_bucket, OrbitConfig, State};
use atomic_core::perms::{stats, PermStats, Permutations};
use atomic_core::{Result, RootSystem, WeightVec};

/// Buckets smaller than this are expanded on the calling thread.
const MIN_SHARD: usize = 2048;

pub fn default_threads() -> usize {
    thread::available_parallelism().map(NonZeroUsize::get).unwrap_or(1)
}

/// Expands `bucket` on up to `threads` scoped threads.
pub fn expand_bucket_sharded(
    cartan: &[Vec<i64>],
    depth: u64,
    bucket: &[State],
    max_depth: Option<u64>,
    threads: usize,
) -> Vec<(u64, State)> {
    expand_with_min_shard(cartan, depth, bucket, max_depth, threads, MIN_SHARD)
}

fn expand_with_min_shard(
    cartan: &[Vec<i64>],
    depth: u64,
    bucket: &[State],
    max_depth: Option<u64>,
    threads: usize,
    min_shard: usize,
) -> Vec<(u64, State)> {
    if threads <= 1 || bucket.len() < 2 * min_shard {
        return expand_bucket(cartan, depth, bucket, max_depth);
    }
    let chunk = bucket.len().div_ceil(threads).max(min_shard);
    thread::scope(|s| {
        let handles: Vec<_> = bucket
            .chunks(chunk)
            .map(|c| s.spawn(move || expand_bucket(cartan, depth, c, max_depth)))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("orbit worker panicked")).collect()
    })
}

pub fn image_set_parallel(
    sys: &RootSystem,
    lambda: &WeightVec,
    config: OrbitConfig,
    threads: usize,
) -> Result<ImageReport> {
    let cartan = sys.cartan();
    image_set_with(sys, lambda, config, |d, bucket| {
        expand_bucket_sharded(cartan, d, bucket, config.max_depth, threads)
    })
}

pub fn affine_probe_parallel(
    asys: &AffineSystem,
    lambda: &AffineWeight,
    radius: u64,
    radius_cap: u64,
    config: OrbitConfig,
    threads: usize,
) -> Result<ProbeReport> {
    let cartan = asys.cartan();
    affine_image_probe_with(asys, lambda, radius, radius_cap, config, |d, bucket| {
        expand_bucket_sharded(cartan, d, bucket, Some(radius), threads)
    })
}

/// Statistics of every permutation of `S_n` in lexicographic order, with
/// the work sharded by first entry.
pub fn perm_stats_parallel(n: usize, threads: usize) -> Vec<PermStats> {
    if n == 0 {
        return Vec::new();
    }
    let firsts: Vec<usize> = (1..=n).collect();
    let chunk = n.div_ceil(threads.max(1));
    thread::scope(|s| {
        let handles: Vec<_> = firsts
            .chunks(chunk)
            .map(|group| {
                s.spawn(move || {
                    group
                        .iter()
                        .flat_map(|&f| Permutations::starting_with(n, f).map(|w| stats(&w)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("permutation worker panicked")).collect()
    })
}
