//! Colexicographic enumeration of k-subsets and a deterministic parallel
//! scan over contiguous rank ranges.
//!
//! For a fixed popcount, colex order on bitmasks is plain numeric order, so
//! "first in scan order" always means "numerically least".

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const CHUNK: u64 = 2048;

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The k-subset of colex rank `rank`.
pub fn unrank_colex(mut rank: u64, k: usize) -> u64 {
    let mut mask = 0u64;
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank
        let mut c = i - 1;
        while binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        mask |= 1u64 << c;
    }
    mask
}

/// Next mask with the same popcount (Gosper's hack). `mask` must be nonzero.
#[inline]
pub fn next_colex(mask: u64) -> u64 {
    let c = mask & mask.wrapping_neg();
    let r = mask.wrapping_add(c);
    (((r ^ mask) >> 2) / c) | r
}

/// Every k-subset of `{0..n}` in colex order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let total = binomial(n, k);
    let mut mask = if k == 0 { 0 } else { (1u64 << k) - 1 };
    (0..total).map(move |i| {
        let cur = mask;
        if i + 1 < total {
            mask = next_colex(mask);
        }
        cur
    })
}

/// Resource limits for long scans.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub max_subsets: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_subsets: None,
        max_seconds: None,
    };
}

pub(crate) struct BudgetTracker {
    used: AtomicU64,
    limit: u64,
    deadline: Option<Instant>,
    tripped: AtomicBool,
}

impl BudgetTracker {
    pub(crate) fn new(budget: Budget) -> Self {
        BudgetTracker {
            used: AtomicU64::new(0),
            limit: budget.max_subsets.unwrap_or(u64::MAX),
            deadline: budget
                .max_seconds
                .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
            tripped: AtomicBool::new(false),
        }
    }

    /// Charges `n` subsets; false once any limit is exceeded.
    fn charge(&self, n: u64) -> bool {
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        let out_of_time = self.deadline.is_some_and(|d| Instant::now() > d);
        if used > self.limit || out_of_time {
            self.tripped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn reason(&self) -> String {
        if self.used.load(Ordering::Relaxed) > self.limit {
            format!("more than {} subsets", self.limit)
        } else {
            "time limit reached".to_string()
        }
    }
}

pub(crate) struct BudgetExceeded;

/// Runs `f` on a dedicated pool of `jobs` workers.
pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

pub(crate) fn check_jobs(jobs: usize) -> Result<()> {
    if jobs == 0 {
        Err(Error::Domain("jobs must be at least 1".into()))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct FirstHit {
    pub mask: u64,
    /// In-scope subsets examined up to and including the hit, or all of
    /// them when there is no hit. Independent of scheduling.
    pub checked: u64,
    pub found: bool,
}

struct ChunkOutcome {
    hit: Option<u64>,
    checked: u64,
}

/// Finds the colex-least k-subset of `{0..n}` with `in_scope(mask)` and
/// `is_hit(mask)`. Chunks past an already-found hit are cancelled; the
/// merge takes the minimum rank, so the answer does not depend on `jobs`.
pub(crate) fn find_first<S, H>(
    n: usize,
    k: usize,
    tracker: &BudgetTracker,
    in_scope: S,
    is_hit: H,
) -> std::result::Result<FirstHit, BudgetExceeded>
where
    S: Fn(u64) -> bool + Sync,
    H: Fn(u64) -> bool + Sync,
{
    let total = binomial(n, k);
    let chunks = total.div_ceil(CHUNK);
    let best = AtomicU64::new(u64::MAX);
    let outcomes: Vec<Option<ChunkOutcome>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            if start > best.load(Ordering::Relaxed) {
                return Some(ChunkOutcome {
                    hit: None,
                    checked: 0,
                });
            }
            let len = CHUNK.min(total - start);
            if !tracker.charge(len) {
                return None;
            }
            let mut mask = unrank_colex(start, k);
            let mut checked = 0;
            for i in 0..len {
                let rank = start + i;
                if rank > best.load(Ordering::Relaxed) {
                    break;
                }
                if in_scope(mask) {
                    checked += 1;
                    if is_hit(mask) {
                        best.fetch_min(rank, Ordering::Relaxed);
                        return Some(ChunkOutcome {
                            hit: Some(mask),
                            checked,
                        });
                    }
                }
                if i + 1 < len {
                    mask = next_colex(mask);
                }
            }
            Some(ChunkOutcome { hit: None, checked })
        })
        .collect();
    let best_rank = best.load(Ordering::Relaxed);
    let mut checked = 0;
    for (c, out) in outcomes.into_iter().enumerate() {
        let start = c as u64 * CHUNK;
        if start > best_rank {
            break;
        }
        // every chunk at or before the winning one ran to completion
        let out = out.ok_or(BudgetExceeded)?;
        checked += out.checked;
        if let Some(mask) = out.hit {
            if start + CHUNK > best_rank {
                return Ok(FirstHit {
                    mask,
                    checked,
                    found: true,
                });
            }
        }
    }
    Ok(FirstHit {
        mask: 0,
        checked,
        found: false,
    })
}

/// Maps every in-scope k-subset through `f`, keeping results in colex order.
pub(crate) fn collect_all<T, F>(
    n: usize,
    k: usize,
    in_scope: impl Fn(u64) -> bool + Sync,
    f: F,
) -> (Vec<T>, u64)
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    let total = binomial(n, k);
    let chunks = total.div_ceil(CHUNK);
    let parts: Vec<(Vec<T>, u64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let len = CHUNK.min(total - start);
            let mut mask = unrank_colex(start, k);
            let mut out = Vec::new();
            let mut checked = 0;
            for i in 0..len {
                if in_scope(mask) {
                    checked += 1;
                    out.extend(f(mask));
                }
                if i + 1 < len {
                    mask = next_colex(mask);
                }
            }
            (out, checked)
        })
        .collect();
    let checked = parts.iter().map(|p| p.1).sum();
    (parts.into_iter().flat_map(|p| p.0).collect(), checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn unrank_matches_iteration() {
        for (n, k) in [(6, 3), (10, 4), (9, 1), (7, 7)] {
            let all: Vec<u64> = k_subsets(n, k).collect();
            assert_eq!(all.len() as u64, binomial(n, k));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all
                .iter()
                .all(|m| m.count_ones() as usize == k && *m < 1 << n));
            for (r, &m) in all.iter().enumerate() {
                assert_eq!(unrank_colex(r as u64, k), m);
            }
        }
    }

    #[test]
    fn find_first_is_schedule_independent() {
        let pred = |m: u64| m.count_ones() == 5 && (m >> 11 & 1 == 1) && (m & 1 == 0);
        let reference = {
            let mut checked = 0;
            let mut hit = None;
            for m in k_subsets(16, 5) {
                checked += 1;
                if pred(m) {
                    hit = Some(m);
                    break;
                }
            }
            (hit.unwrap(), checked)
        };
        for jobs in [1, 3, 8] {
            let tracker = BudgetTracker::new(Budget::UNLIMITED);
            let h = with_pool(jobs, || find_first(16, 5, &tracker, |_| true, pred))
                .ok()
                .unwrap();
            assert!(h.found);
            assert_eq!((h.mask, h.checked), reference);
        }
    }

    #[test]
    fn find_first_budget() {
        let tracker = BudgetTracker::new(Budget {
            max_subsets: Some(10),
            max_seconds: None,
        });
        assert!(find_first(20, 10, &tracker, |_| true, |_| false).is_err());
    }

    #[test]
    fn collect_all_keeps_order() {
        let (v, checked) = with_pool(4, || collect_all(14, 7, |m| m & 1 == 1, Some));
        assert_eq!(checked, binomial(13, 6));
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
