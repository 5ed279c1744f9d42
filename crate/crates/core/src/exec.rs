//! Job-count based data parallelism with a sequential fallback.
//!
//! Every parallel site in the crate funnels through [`map_collect`] so the
//! sequential path (`jobs <= 1`, or the `parallel` feature disabled) and the
//! rayon path produce results in identical order. Merges stay deterministic
//! regardless of thread count.

/// Map `f` over `items`, preserving order.
///
/// With `jobs > 1` and the `parallel` feature enabled the work runs on a
/// dedicated rayon pool of that many threads.
pub fn map_collect<T, U, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if jobs > 1 {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("failed to build worker pool");
            return pool.install(|| items.into_par_iter().map(f).collect());
        }
    }
    let _ = jobs;
    items.into_iter().map(f).collect()
}

/// Sequential reference path, always available for benchmarks.
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
