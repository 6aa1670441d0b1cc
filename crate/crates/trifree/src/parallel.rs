//! Rayon drivers. Work is cut into fixed units (rank ranges for
//! enumeration, sample blocks for Monte Carlo) that do not depend on the
//! worker count, and merged in a fixed order, so results are identical for
//! any `--jobs`.

use std::path::Path;

use rayon::prelude::*;
use trifree_core::canon::canonical_form;
use trifree_core::montecarlo::{Estimate, Sampler};
use trifree_core::search::{enumerate_rank_range, labeled_count, ClassMap};
use trifree_core::{Graph, Rational};

use crate::error::{CliError, Result};
use crate::formats::Checkpoint;

/// Labeled graphs per enumeration shard.
pub const SHARD_RANKS: u64 = 1 << 13;

/// Shards processed between checkpoint writes.
pub const SHARDS_PER_BATCH: u64 = 64;

/// Runs `f` on a pool with `jobs` threads (`0` = one per core).
pub fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} worker threads: {e}")))?;
    Ok(pool.install(f))
}

/// Progress callback: `(labeled graphs done, total)`.
pub type Progress<'a> = &'a (dyn Fn(u64, u64) + Sync);

/// Every isomorphism class on `n` vertices with `m` edges, in canonical
/// order, enumerated in parallel and optionally resumable.
///
/// With a checkpoint path, progress is saved after every batch of shards
/// and an existing checkpoint for the same `(n, m)` is resumed.
pub fn enumerate_parallel(
    n: usize,
    m: usize,
    jobs: usize,
    checkpoint: Option<&Path>,
    progress: Progress<'_>,
) -> Result<Vec<Graph>> {
    let total = labeled_count(n, m)?;
    let mut classes = ClassMap::new();
    let mut next = 0;
    if let Some(path) = checkpoint {
        if let Some((cp, saved)) = Checkpoint::load(path)? {
            if (cp.n, cp.m) != (n, m) {
                return Err(CliError::Usage(format!(
                    "checkpoint {} is for n={} m={}, not n={n} m={m}",
                    path.display(),
                    cp.n,
                    cp.m
                )));
            }
            next = cp.next_rank.min(total);
            for g in saved {
                classes.insert(canonical_form(&g)?, g);
            }
        }
    }
    progress(next, total);
    with_pool(jobs, || {
        while next < total {
            let batch_end = total.min(next + SHARD_RANKS * SHARDS_PER_BATCH);
            let starts: Vec<u64> = (next..batch_end).step_by(SHARD_RANKS as usize).collect();
            let shards: Vec<trifree_core::Result<ClassMap>> = starts
                .par_iter()
                .map(|&s| enumerate_rank_range(n, m, s, (s + SHARD_RANKS).min(batch_end)))
                .collect();
            for shard in shards {
                classes.extend(shard?);
            }
            next = batch_end;
            if let Some(path) = checkpoint {
                let list: Vec<Graph> = classes.values().cloned().collect();
                Checkpoint { n, m, next_rank: next }.save(path, &list)?;
            }
            progress(next, total);
        }
        Ok::<_, CliError>(())
    })??;
    Ok(classes.into_values().collect())
}

/// Monte Carlo estimate of the `K_k`-free probability with sample blocks
/// spread over `jobs` workers.
pub fn estimate_parallel(g: &Graph, k: usize, p: &Rational, samples: u64, seed: u64, jobs: usize) -> Result<Estimate> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let sampler = Sampler::new(g, k, p)?;
    let successes: u64 = with_pool(jobs, || {
        (0..Sampler::blocks(samples))
            .into_par_iter()
            .map(|b| sampler.run_block(seed, b, Sampler::block_len(samples, b)))
            .sum()
    })?;
    Ok(Estimate::from_counts(successes, samples, seed, p.clone()))
}

/// Evaluates `f` over `items` in parallel, keeping input order.
pub fn par_map<T: Sync, U: Send>(jobs: usize, items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Result<Vec<U>> {
    with_pool(jobs, || items.par_iter().map(f).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use trifree_core::graph::complete;
    use trifree_core::montecarlo::estimate_clique_free;
    use trifree_core::rational::ratio;
    use trifree_core::search::enumerate_graphs;

    fn quiet(_: u64, _: u64) {}

    #[test]
    fn parallel_enumeration_matches_serial() {
        for (n, m) in [(5, 7), (6, 10), (7, 13)] {
            let serial = enumerate_graphs(n, m).unwrap();
            for jobs in [1, 3] {
                assert_eq!(enumerate_parallel(n, m, jobs, None, &quiet).unwrap(), serial, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn resume_from_checkpoint() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.ckpt");
        let full = enumerate_parallel(7, 13, 2, Some(&path), &quiet).unwrap();
        let total = labeled_count(7, 13).unwrap();
        assert_eq!(Checkpoint::load(&path).unwrap().unwrap().0.next_rank, total);
        // rewind to the middle with only the classes seen so far
        let mid = SHARD_RANKS * SHARDS_PER_BATCH;
        let partial: Vec<Graph> = enumerate_rank_range(7, 13, 0, mid).unwrap().into_values().collect();
        Checkpoint { n: 7, m: 13, next_rank: mid }.save(&path, &partial).unwrap();
        assert_eq!(enumerate_parallel(7, 13, 2, Some(&path), &quiet).unwrap(), full);
        assert!(enumerate_parallel(7, 12, 2, Some(&path), &quiet).is_err());
    }

    #[test]
    fn estimates_ignore_job_count() {
        let g = complete(5).unwrap();
        let p = ratio(2, 5);
        let serial = estimate_clique_free(&g, 3, &p, 100_000, 5).unwrap();
        for jobs in [1, 2, 7] {
            assert_eq!(estimate_parallel(&g, 3, &p, 100_000, 5, jobs).unwrap(), serial);
        }
    }
}
