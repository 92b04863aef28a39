//! Parallel drivers for the oracles. Each splits the enumeration into
//! contiguous index ranges, evaluates them on the rayon pool and merges the
//! partial counts in range order.

use rayon::prelude::*;
use ringsum_core::oracle::PowerSumPlan;
use ringsum_core::ring::{split_range, Budget, Matrix, RingSpec};
use ringsum_core::Result;

/// Ranges per worker thread; more than one keeps the pool busy when
/// ranges finish unevenly.
const RANGES_PER_THREAD: usize = 4;

/// `[S_1^d(R), ..., S_{k_max}^d(R)]`.
pub fn power_sums(spec: &RingSpec, d: usize, k_max: u32, budget: Budget) -> Result<Vec<Matrix>> {
    let plan = PowerSumPlan::new(spec, d, k_max, budget)?;
    let parts = rayon::current_num_threads() * RANGES_PER_THREAD;
    let partials: Vec<_> = split_range(plan.total(), parts)
        .into_par_iter()
        .map(|range| plan.partial(range))
        .collect();
    let mut acc = plan.empty();
    for p in &partials {
        acc.merge(p);
    }
    Ok(plan.finish(&acc))
}
