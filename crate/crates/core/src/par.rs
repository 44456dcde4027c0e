//! Data-parallel helpers with a sequential fallback.
//!
//! Campaign code calls [`map_indexed`] with an [`Execution`] mode. With the
//! `parallel` feature (on by default) [`Execution::Parallel`] dispatches to
//! rayon; without it both modes run the same sequential loop. Results are
//! always returned in index order, so parallel and sequential runs agree
//! bit-for-bit.

/// How a batch is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Parallel when the feature is compiled in, sequential otherwise.
    pub fn available() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Applies `f` to every index in `0..len`, returning results in index order.
pub fn map_indexed<T, F>(len: usize, mode: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    match mode {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().map(f).collect()
        }
        _ => (0..len).map(f).collect(),
    }
}

/// Like [`map_indexed`] over a slice.
pub fn map_slice<I, T, F>(items: &[I], mode: Execution, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Send + Sync,
{
    map_indexed(items.len(), mode, |i| f(&items[i]))
}

/// Configures the global worker pool from `NCM_WORKERS`, if set.
///
/// Safe to call more than once; only the first successful call has an effect.
pub fn init_workers_from_env() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("NCM_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Derives an independent per-item seed from a campaign seed.
///
/// SplitMix64 finalizer over `base ^ index`-mixed state; stable across
/// platforms and independent of the execution mode.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base
        .wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
