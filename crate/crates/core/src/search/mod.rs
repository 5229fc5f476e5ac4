//! Verification and search drivers: CA-condition checks, weighted point
//! enumeration, counterexample and bad-prime scans, tuple regularity sweeps,
//! deformation checks and fiber scans.

mod ca;
mod points;
mod sweep;

pub use ca::{ca_check, is_pure_power, split_roots, CAReport};
pub use points::{
    bad_prime_scan, consistency_triangle, enumerate_xn_points, search_counterexamples, BadPrimeEntry,
    SearchReport, TriangleReport, WeightedPoint,
};
pub use sweep::{
    fiber_scan, jc_lower_bound, mainprop_verify, q_of_n, tuple_regularity_sweep, FiberEntry, FiberReport,
    JcReport, SweepReport, SweepVerdict, TupleOutcome, TupleResult,
};

use crate::error::{Error, Result};

/// Default cap on points or polynomials visited by a single enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 5_000_000;

/// `p^k`, or a budget error when it exceeds `budget`.
pub(crate) fn enumeration_size(p: u32, k: usize, budget: u64, what: &str) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..k {
        total = total.checked_mul(p as u64).filter(|&t| t <= budget).ok_or_else(|| Error::Budget {
            what: what.to_string(),
            limit: budget,
        })?;
    }
    Ok(total)
}

/// Base-`p` digits of `code`, least significant first.
pub(crate) fn decode(mut code: u64, p: u32, k: usize) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = (code % p as u64) as u32;
            code /= p as u64;
            d
        })
        .collect()
}

/// Chunks `[start, end)` covering `0..total`.
pub(crate) fn chunks(total: u64, size: u64) -> Vec<(u64, u64)> {
    (0..total.div_ceil(size)).map(|c| (c * size, ((c + 1) * size).min(total))).collect()
}
