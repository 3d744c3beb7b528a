//! Seeded, block-parallel Monte Carlo.
//!
//! Samples are generated in fixed-size blocks; block `b` draws from
//! `ChaCha8Rng::seed_from_u64(seed)` on stream `b`. Block statistics are merged
//! in block order, so results are bitwise identical for any worker count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Samples per block.
pub const BLOCK_SIZE: u64 = 65_536;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "AIRYSTABLE_THREADS";

/// A Monte Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MCEstimate {
    pub mean: f64,
    /// Sample standard deviation divided by √n_samples.
    pub stderr: f64,
    pub n_samples: u64,
    pub seed: u64,
}

impl MCEstimate {
    /// |mean - target| measured in standard errors.
    pub fn z_score(&self, target: f64) -> f64 {
        (self.mean - target).abs() / self.stderr
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        let mean = self.mean + d * other.n as f64 / n as f64;
        let m2 = self.m2 + other.m2 + d * d * self.n as f64 * other.n as f64 / n as f64;
        Moments { n, mean, m2 }
    }
}

/// Worker count from `AIRYSTABLE_THREADS`, defaulting to the hardware
/// parallelism.
pub fn worker_count() -> usize {
    let hw = std::thread::available_parallelism().map_or(1, |n| n.get());
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(hw)
}

/// Random stream for block `block` of a run seeded with `seed`.
pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

fn block_ranges(n: u64) -> Vec<(u64, u64)> {
    (0..n.div_ceil(BLOCK_SIZE))
        .map(|b| (b, BLOCK_SIZE.min(n - b * BLOCK_SIZE)))
        .collect()
}

fn run_in_pool<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// Mean and standard error of `f` over `n` draws.
pub fn estimate_mean<F>(n: u64, seed: u64, f: F) -> Result<MCEstimate>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    estimate_mean_with_threads(n, seed, worker_count(), f)
}

pub fn estimate_mean_with_threads<F>(n: u64, seed: u64, threads: usize, f: F) -> Result<MCEstimate>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    if n == 0 {
        return Err(Error::param("at least one sample is required"));
    }
    let blocks = block_ranges(n);
    let per_block: Vec<Moments> = run_in_pool(threads, || {
        blocks
            .par_iter()
            .map(|&(b, len)| {
                let mut rng = block_rng(seed, b);
                let mut m = Moments::default();
                for _ in 0..len {
                    m.push(f(&mut rng));
                }
                m
            })
            .collect()
    });
    let total = per_block
        .into_iter()
        .fold(Moments::default(), Moments::merge);
    // a single draw carries no variance information
    let var = if total.n > 1 {
        total.m2 / (total.n - 1) as f64
    } else {
        f64::INFINITY
    };
    Ok(MCEstimate {
        mean: total.mean,
        stderr: (var / total.n as f64).sqrt(),
        n_samples: total.n,
        seed,
    })
}

/// `n` draws of `f` in block order.
pub fn sample_batch<F>(n: u64, seed: u64, f: F) -> Vec<f64>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    let blocks = block_ranges(n);
    let chunks: Vec<Vec<f64>> = run_in_pool(worker_count(), || {
        blocks
            .par_iter()
            .map(|&(b, len)| {
                let mut rng = block_rng(seed, b);
                (0..len).map(|_| f(&mut rng)).collect()
            })
            .collect()
    });
    chunks.concat()
}
