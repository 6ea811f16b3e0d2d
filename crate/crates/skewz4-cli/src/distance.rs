//! Parallel minimum-distance computation.
//!
//! The codeword space of a Z4 code in standard form is indexed by scalar
//! tuples, and the minimum weight over an index range is independent of
//! how the range is visited, so the space splits into disjoint chunks
//! whose per-thread minima combine by a plain min. Results are identical
//! to the serial path for every thread count.

use skewz4::{CodeParams, Error, Z4Code};

/// Codes smaller than this are enumerated on the calling thread; spawning
/// is not worth it below a few hundred thousand codewords.
const PARALLEL_THRESHOLD: u128 = 1 << 18;

/// Worker count: the SKEWZ4_THREADS environment variable when it holds a
/// positive integer, otherwise the machine's available parallelism.
pub fn thread_count() -> usize {
    if let Ok(text) = std::env::var("SKEWZ4_THREADS") {
        if let Ok(n) = text.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Minimum Lee distance of the code, split across `threads` workers.
pub fn min_lee_distance(code: &Z4Code, bound: u64, threads: usize) -> Result<u32, Error> {
    let count = code.codeword_count();
    if count > bound as u128 {
        return Err(Error::TooManyCodewords {
            needed: count,
            bound,
        });
    }
    if threads <= 1 || count < PARALLEL_THRESHOLD {
        return code.min_lee_distance(bound);
    }
    let count = count as u64;
    let threads = threads.min(count as usize);
    let chunk = count.div_ceil(threads as u64);
    let best = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|i| {
                let lo = chunk * i as u64;
                let hi = (lo + chunk).min(count);
                scope.spawn(move || code.min_lee_distance_range(lo, hi))
            })
            .collect();
        workers
            .into_iter()
            .filter_map(|w| w.join().expect("distance worker panicked"))
            .min()
    });
    best.ok_or(Error::ZeroCode)
}

/// Code parameters with the distance computed in parallel.
pub fn params(code: &Z4Code, bound: u64, threads: usize) -> Result<CodeParams, Error> {
    Ok(CodeParams {
        n: code.n(),
        k1: code.k1(),
        k2: code.k2(),
        d_lee: min_lee_distance(code, bound, threads)?,
    })
}
