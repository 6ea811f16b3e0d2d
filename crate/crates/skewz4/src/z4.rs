//! Z4-linear codes: standard form of type 4^k1 2^k2, exact minimum Lee
//! distance by full enumeration, Gray images, and Plotkin sums.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::cyclic::RCode;
use crate::error::Error;
use crate::ring::lee_weight;

/// Default cap on codewords visited by distance enumeration, 2^32.
pub const DEFAULT_CODEWORD_BOUND: u64 = 1 << 32;

/// Parameters [n, 4^k1 2^k2, d] of a Z4-linear code under the Lee metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_lee: u32,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, 4^{} 2^{}, {}]", self.n, self.k1, self.k2, self.d_lee)
    }
}

/// Z4-linear code, stored both as the generating rows it was built from
/// and in standard form: k1 rows of order 4 with unit pivots scaled to 1,
/// then k2 rows of order 2.
#[derive(Clone, Debug)]
pub struct Z4Code {
    n: usize,
    rows: Vec<Vec<u8>>,
    unit_rows: Vec<Vec<u8>>,
    two_rows: Vec<Vec<u8>>,
}

impl Z4Code {
    pub fn from_rows(n: usize, rows: Vec<Vec<u8>>) -> Self {
        let rows: Vec<Vec<u8>> = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), n, "generator row length mismatch");
                r.iter().map(|&x| x % 4).collect()
            })
            .collect();
        let (unit_rows, two_rows) = standard_form(n, rows.clone());
        Self {
            n,
            rows,
            unit_rows,
            two_rows,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The generating rows the code was constructed from.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn k1(&self) -> usize {
        self.unit_rows.len()
    }

    pub fn k2(&self) -> usize {
        self.two_rows.len()
    }

    /// Standard-form rows: the order-4 rows followed by the order-2 rows.
    pub fn standard_rows(&self) -> (&[Vec<u8>], &[Vec<u8>]) {
        (&self.unit_rows, &self.two_rows)
    }

    /// 4^k1 * 2^k2.
    pub fn codeword_count(&self) -> u128 {
        1u128 << (2 * self.k1() + self.k2())
    }

    /// Every codeword exactly once: all sums of scalar multiples of the
    /// standard-form rows, scalars running over Z4 for order-4 rows and
    /// {0, 1} for order-2 rows.
    pub fn codewords(&self) -> Codewords<'_> {
        Codewords {
            code: self,
            digits: vec![0; self.k1() + self.k2()],
            current: vec![0; self.n],
            done: false,
        }
    }

    /// Exact minimum Lee distance by enumerating all codewords, refusing
    /// to visit more than `bound` of them.
    pub fn min_lee_distance(&self, bound: u64) -> Result<u32, Error> {
        let count = self.codeword_count();
        if count == 1 {
            return Err(Error::ZeroCode);
        }
        if count > u128::from(bound) {
            return Err(Error::TooManyCodewords {
                needed: count,
                bound,
            });
        }
        Ok(self
            .min_lee_distance_range(1, count as u64)
            .expect("nonzero code has a nonzero codeword"))
    }

    /// Minimum Lee weight over the codewords with enumeration index in
    /// [lo, hi), skipping index 0 (the zero word). None when the range
    /// contains no nonzero codeword. Indices order the scalar tuples with
    /// the first standard-form row most significant, so disjoint ranges
    /// cover disjoint codeword sets.
    pub fn min_lee_distance_range(&self, lo: u64, hi: u64) -> Option<u32> {
        let count = self.codeword_count();
        assert!(u128::from(hi) <= count, "range beyond the codeword count");
        let lo = lo.max(1);
        if lo >= hi {
            return None;
        }
        let levels = self.scaled_rows();
        let sizes = subtree_sizes(&levels);
        let mut buf = vec![0u8; self.n];
        let mut best = u32::MAX;
        distance_rec(&levels, &sizes, 0, lo, hi, &mut buf, &mut best);
        Some(best)
    }

    /// Code parameters with the distance computed exactly.
    pub fn params(&self, bound: u64) -> Result<CodeParams, Error> {
        Ok(CodeParams {
            n: self.n,
            k1: self.k1(),
            k2: self.k2(),
            d_lee: self.min_lee_distance(bound)?,
        })
    }

    /// Per enumeration level, the scalar multiples of that row: 4 of them
    /// for order-4 rows, 2 for order-2 rows.
    fn scaled_rows(&self) -> Vec<Vec<Vec<u8>>> {
        let scale = |row: &[u8], s: u8| row.iter().map(|&x| (x * s) % 4).collect::<Vec<u8>>();
        let mut levels = Vec::with_capacity(self.k1() + self.k2());
        for row in &self.unit_rows {
            levels.push((0..4).map(|s| scale(row, s)).collect());
        }
        for row in &self.two_rows {
            levels.push((0..2).map(|s| scale(row, s)).collect());
        }
        levels
    }
}

/// Iterator over all codewords of a Z4 code in enumeration-index order.
pub struct Codewords<'a> {
    code: &'a Z4Code,
    digits: Vec<u8>,
    current: Vec<u8>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();

        // Advance the mixed-radix odometer, last digit fastest, updating
        // the running sum instead of rebuilding it.
        let k1 = self.code.k1();
        let rows: Vec<&Vec<u8>> = self
            .code
            .unit_rows
            .iter()
            .chain(self.code.two_rows.iter())
            .collect();
        let mut level = self.digits.len();
        loop {
            if level == 0 {
                self.done = true;
                return Some(out);
            }
            level -= 1;
            let radix: u8 = if level < k1 { 4 } else { 2 };
            if self.digits[level] + 1 < radix {
                self.digits[level] += 1;
                for (slot, &x) in self.current.iter_mut().zip(rows[level]) {
                    *slot = (*slot + x) % 4;
                }
                return Some(out);
            }
            // Wrap: remove the radix - 1 copies accumulated at this level
            // by adding the complementary multiple.
            self.digits[level] = 0;
            for (slot, &x) in self.current.iter_mut().zip(rows[level]) {
                *slot = (*slot + (5 - radix) * x) % 4;
            }
        }
    }
}

fn subtree_sizes(levels: &[Vec<Vec<u8>>]) -> Vec<u64> {
    let mut sizes = vec![1u64; levels.len()];
    for i in (0..levels.len().saturating_sub(1)).rev() {
        sizes[i] = sizes[i + 1] * levels[i + 1].len() as u64;
    }
    sizes
}

fn distance_rec(
    levels: &[Vec<Vec<u8>>],
    sizes: &[u64],
    base: u64,
    lo: u64,
    hi: u64,
    buf: &mut [u8],
    best: &mut u32,
) {
    let Some((multiples, rest)) = levels.split_first() else {
        debug_assert!((lo..hi).contains(&base));
        let w: u32 = buf.iter().map(|&x| lee_weight(x)).sum();
        *best = (*best).min(w);
        return;
    };
    let size = sizes[0];
    for (s, row) in multiples.iter().enumerate() {
        let child = base + s as u64 * size;
        if child >= hi || child + size <= lo {
            continue;
        }
        for (slot, &x) in buf.iter_mut().zip(row) {
            *slot = (*slot + x) % 4;
        }
        distance_rec(rest, &sizes[1..], child, lo, hi, buf, best);
        for (slot, &x) in buf.iter_mut().zip(row) {
            *slot = (*slot + 4 - x) % 4;
        }
    }
}

/// Standard form over Z4: pick unit pivots column by column, scaling each
/// to 1 and clearing its column everywhere, then do the same with 2-pivots
/// among the remaining order-2 rows. Every original row is a combination
/// of the returned rows and vice versa.
fn standard_form(n: usize, rows: Vec<Vec<u8>>) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
    let mut pool = rows;
    let mut unit_rows: Vec<Vec<u8>> = Vec::new();
    let mut two_rows: Vec<Vec<u8>> = Vec::new();

    for col in 0..n {
        let Some(idx) = pool.iter().position(|r| r[col] % 2 == 1) else {
            continue;
        };
        let mut piv = pool.swap_remove(idx);
        if piv[col] == 3 {
            for e in &mut piv {
                *e = (*e * 3) % 4;
            }
        }
        for r in pool.iter_mut().chain(unit_rows.iter_mut()) {
            let c = r[col];
            if c != 0 {
                for (e, &p) in r.iter_mut().zip(&piv) {
                    *e = (*e + (4 - c) * p) % 4;
                }
            }
        }
        unit_rows.push(piv);
    }

    for col in 0..n {
        let Some(idx) = pool.iter().position(|r| r[col] == 2) else {
            continue;
        };
        let piv = pool.swap_remove(idx);
        for r in pool
            .iter_mut()
            .chain(unit_rows.iter_mut())
            .chain(two_rows.iter_mut())
        {
            if r[col] >= 2 {
                for (e, &p) in r.iter_mut().zip(&piv) {
                    *e = (*e + 4 - p) % 4;
                }
            }
        }
        two_rows.push(piv);
    }

    debug_assert!(pool.iter().all(|r| r.iter().all(|&e| e == 0)));
    (unit_rows, two_rows)
}

/// Gray image of a module code: the Z4-linear code of length 2n spanned
/// by the images of the generators g and of v * g, since R = Z4 + vZ4 as
/// a Z4-module.
pub fn gray_image(code: &RCode) -> Z4Code {
    let mut rows = Vec::with_capacity(2 * code.generators().len());
    for g in code.generators() {
        rows.push(g.gray());
        rows.push(g.scale(crate::ring::RingElem::V).gray());
    }
    Z4Code::from_rows(2 * code.n(), rows)
}

/// Plotkin sum {(a, a + b)} of two codes of equal length.
pub fn plotkin_sum(a: &Z4Code, b: &Z4Code) -> Result<Z4Code, Error> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut rows = Vec::with_capacity(a.rows().len() + b.rows().len());
    for r in a.rows() {
        let mut row = r.clone();
        row.extend_from_slice(r);
        rows.push(row);
    }
    for r in b.rows() {
        let mut row = vec![0u8; a.n()];
        row.extend_from_slice(r);
        rows.push(row);
    }
    Ok(Z4Code::from_rows(2 * a.n(), rows))
}
