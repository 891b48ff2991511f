//! Sequential or data-parallel evaluation of independent tasks.

/// How the engine evaluates independent root counts. Results are always
/// assembled in index order, so output does not depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses the current rayon pool; falls back to sequential when the crate
    /// is built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `f` over `0..n`, collected in index order.
    pub fn map_range<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Smallest `k` in `lo..=hi` with `pred(k)`.
    pub fn find_first<F>(self, lo: u64, hi: u64, pred: F) -> Option<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        if lo > hi {
            return None;
        }
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            // Ascending windows keep the pool busy near the answer instead of
            // spreading work over the whole range.
            let width = 2 * rayon::current_num_threads() as u64;
            let mut start = lo;
            loop {
                let end = start.saturating_add(width - 1).min(hi);
                if let Some(k) = (start..=end).into_par_iter().find_first(|&k| pred(k)) {
                    return Some(k);
                }
                if end == hi {
                    return None;
                }
                start = end + 1;
            }
        }
        (lo..=hi).find(|&k| pred(k))
    }
}
