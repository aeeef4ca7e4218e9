//! Multi-threaded grid evaluation.
//!
//! Every output sample is computed by the same pure per-point routine as the
//! sequential path, so results are bit-identical for any thread count.

use rayon::prelude::*;

use maxprod_core::{MaxProductOperator, ScalarField};

use crate::error::{Error, Result};

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "MAXPROD_THREADS";

pub fn evaluate_grid_parallel(
    op: &MaxProductOperator<'_>,
    resolution: &[usize],
) -> Result<ScalarField> {
    let total: usize = resolution.iter().product();
    let values = (0..total)
        .into_par_iter()
        .map(|flat| op.evaluate_grid_point(resolution, flat))
        .collect::<maxprod_core::Result<Vec<f64>>>()?;
    Ok(ScalarField::new(
        op.grid().domain().clone(),
        resolution.to_vec(),
        values,
    )?)
}

/// Thread count from [`THREADS_ENV`], if set.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "{THREADS_ENV} must be a positive integer, got {v:?}"
                ))
            }),
        Err(_) => Ok(None),
    }
}

/// Runs `job` on a dedicated pool with `threads` workers, or on the global
/// pool when `threads` is `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::ThreadPool(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}
