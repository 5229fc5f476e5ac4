//! Sequential or data-parallel execution of independent jobs.
//!
//! Results always come back in input order, so reports do not depend on
//! scheduling. Without the `parallel` feature every strategy runs sequentially.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Exec {
    Sequential,
    /// `workers == 0` uses the global pool.
    Parallel { workers: usize },
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel { workers: 0 }
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `workers == 1` means sequential.
    pub fn with_workers(workers: usize) -> Self {
        if workers == 1 || !cfg!(feature = "parallel") {
            Exec::Sequential
        } else {
            Exec::Parallel { workers }
        }
    }

    pub fn is_parallel(&self) -> bool {
        matches!(self, Exec::Parallel { .. }) && cfg!(feature = "parallel")
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            Exec::Parallel { workers } => par_map(*workers, items, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(workers: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if workers == 0 {
        return items.par_iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(_workers: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}
