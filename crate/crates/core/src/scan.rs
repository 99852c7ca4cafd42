//! Cost caps and deterministic chunked scans over the subset lattice.
//!
//! Every operation that walks all `2^n` subsets goes through [`ScanOpts`]:
//! scans are free up to [`SOFT_SCAN_CAP`] elements, allowed up to
//! [`HARD_SCAN_CAP`] when the caller opts in with `force`, and refused beyond
//! that. Parallel scans split the mask range into contiguous chunks and merge
//! results in chunk order, so output never depends on the thread count.

use crate::error::{Error, Result};

/// Scans over more elements than this require `force`.
pub const SOFT_SCAN_CAP: u32 = 20;

/// No scan runs over more elements than this.
pub const HARD_SCAN_CAP: u32 = 24;

/// Caller-side knobs for subset scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOpts {
    /// Allow scans between the soft and hard caps.
    pub force: bool,
    /// Worker threads for scans (clamped to `1..=64`).
    pub threads: usize,
}

impl Default for ScanOpts {
    fn default() -> Self {
        Self { force: false, threads: 1 }
    }
}

impl ScanOpts {
    pub fn forced() -> Self {
        Self { force: true, ..Self::default() }
    }

    /// Checks a proposed scan over `n` elements against the caps.
    pub fn check(&self, what: &'static str, n: u32) -> Result<()> {
        if n <= SOFT_SCAN_CAP || (self.force && n <= HARD_SCAN_CAP) {
            return Ok(());
        }
        let over_hard = n > HARD_SCAN_CAP;
        Err(Error::ResourceCapExceeded {
            what,
            n,
            cap: if over_hard { HARD_SCAN_CAP } else { SOFT_SCAN_CAP },
            force_allows: !over_hard,
        })
    }

    fn worker_count(&self, total: u64) -> u64 {
        (self.threads.clamp(1, 64) as u64).min(total)
    }
}

/// Applies `f` to every mask in `0..2^n` and collects the hits in ascending
/// mask order, regardless of thread count.
pub fn scan_collect<T, F>(n: u32, opts: ScanOpts, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    assert!(n < 64);
    let total = 1u64 << n;
    let workers = opts.worker_count(total);
    if workers <= 1 {
        return (0..total).filter_map(f).collect();
    }
    let chunk = total.div_ceil(workers);
    let mut out = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                scope.spawn(move || {
                    let lo = w * chunk;
                    let hi = ((w + 1) * chunk).min(total);
                    (lo..hi).filter_map(f).collect::<Vec<T>>()
                })
            })
            .collect();
        for h in handles {
            out.extend(h.join().expect("scan worker panicked"));
        }
    });
    out
}

/// Smallest mask in `0..2^n` on which `pred` holds, or `None`.
///
/// Chunks are contiguous and ascending, so the winning chunk is the one with
/// the lowest hit; workers abandon their range once a lower hit is known.
pub fn scan_find_first<F>(n: u32, opts: ScanOpts, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    assert!(n < 64);
    let total = 1u64 << n;
    let workers = opts.worker_count(total);
    if workers <= 1 {
        return (0..total).find(|&m| pred(m));
    }
    use std::sync::atomic::{AtomicU64, Ordering};
    let best = AtomicU64::new(u64::MAX);
    let chunk = total.div_ceil(workers);
    std::thread::scope(|scope| {
        for w in 0..workers {
            let pred = &pred;
            let best = &best;
            scope.spawn(move || {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(total);
                for m in lo..hi {
                    if best.load(Ordering::Relaxed) < lo {
                        return; // a lower chunk already won
                    }
                    if pred(m) {
                        best.fetch_min(m, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    match best.into_inner() {
        u64::MAX => None,
        m => Some(m),
    }
}
