//! Sequential / data-parallel execution switch.
//!
//! `ExecMode::Parallel` fans work out over rayon when the `parallel` feature
//! is enabled and silently runs sequentially otherwise. Results are always
//! returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

impl ExecMode {
    /// Whether work will actually be distributed across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }

    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == ExecMode::Parallel {
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Map each item to a partial result and combine them with `reduce`.
    ///
    /// `reduce` must be associative; partial results are combined in input
    /// order so the outcome does not depend on scheduling.
    pub fn map_reduce<T, R, F, G>(self, items: Vec<T>, identity: R, f: F, reduce: G) -> R
    where
        T: Send,
        R: Send + Clone + Sync,
        F: Fn(T) -> R + Sync + Send,
        G: Fn(R, R) -> R + Sync + Send,
    {
        self.map(items, f).into_iter().fold(identity, reduce)
    }
}
