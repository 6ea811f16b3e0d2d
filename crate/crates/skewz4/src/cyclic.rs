//! Codes of length n over R closed under the theta-delta twisted shift,
//! i.e. left submodules of R[x; theta, delta] / (x^n - 1).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly::SkewPoly;
use crate::ring::{DerivationKind, RingElem};

/// Default cap on scalar tuples visited when enumerating a module span,
/// 16^6.
pub const DEFAULT_SPAN_TUPLES: u64 = 1 << 24;

/// Vector over R. Identified with a residue class polynomial by
/// (c_0, ..., c_{n-1}) <-> c_0 + c_1 x + ... + c_{n-1} x^(n-1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVector {
    entries: Vec<RingElem>,
}

impl RVector {
    pub fn new(entries: Vec<RingElem>) -> Self {
        Self { entries }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            entries: vec![RingElem::ZERO; n],
        }
    }

    /// Coefficient vector of p, which must have degree < n.
    pub fn from_poly(p: &SkewPoly, n: usize) -> Result<Self, Error> {
        if let Some(d) = p.degree() {
            if d >= n {
                return Err(Error::DegreeTooLarge {
                    degree: d,
                    length: n,
                });
            }
        }
        let entries = (0..n).map(|i| p.coeff(i)).collect();
        Ok(Self { entries })
    }

    pub fn to_poly(&self, kind: DerivationKind) -> SkewPoly {
        SkewPoly::new(self.entries.clone(), kind)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.len(), rhs.len());
        Self {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }

    pub fn scale(&self, c: RingElem) -> Self {
        Self {
            entries: self.entries.iter().map(|&x| c * x).collect(),
        }
    }

    /// Plain componentwise inner product, no twisting.
    pub fn dot(&self, rhs: &Self) -> RingElem {
        assert_eq!(self.len(), rhs.len());
        self.entries
            .iter()
            .zip(&rhs.entries)
            .fold(RingElem::ZERO, |acc, (&x, &y)| acc + x * y)
    }

    /// The twisted shift: multiplication by x modulo x^n - 1. Entry i
    /// becomes theta(c_{i-1}) + delta(c_i) with indices mod n.
    pub fn shift(&self, kind: DerivationKind) -> Self {
        let n = self.len();
        let entries = (0..n)
            .map(|i| {
                let prev = self.entries[(i + n - 1) % n];
                prev.theta() + self.entries[i].delta(kind)
            })
            .collect();
        Self { entries }
    }

    /// Plain cyclic rotation moving each entry `steps` places to the right.
    pub fn rotate(&self, steps: usize) -> Self {
        let n = self.len();
        let entries = (0..n).map(|i| self.entries[(i + n - steps % n) % n]).collect();
        Self { entries }
    }

    /// Constant parts a_i, generating the residue code.
    pub fn res_part(&self) -> Vec<u8> {
        self.entries.iter().map(|e| e.a()).collect()
    }

    /// Sums a_i + b_i mod 4, generating the torsion code.
    pub fn tor_part(&self) -> Vec<u8> {
        self.entries.iter().map(|e| (e.a() + e.b()) % 4).collect()
    }

    /// Gray image of length 2n: the a_i parts followed by the a_i + b_i
    /// parts.
    pub fn gray(&self) -> Vec<u8> {
        let mut out = self.res_part();
        out.extend(self.tor_part());
        out
    }
}

/// Matrix over R, a list of equal-length rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    rows: Vec<RVector>,
}

impl RMatrix {
    pub fn new(rows: Vec<RVector>) -> Self {
        if let Some(first) = rows.first() {
            assert!(rows.iter().all(|r| r.len() == first.len()));
        }
        Self { rows }
    }

    pub fn rows(&self) -> &[RVector] {
        &self.rows
    }
}

/// Code over R given by module generators, with the twisted shift baked
/// into how the generators were produced.
#[derive(Clone, Debug)]
pub struct RCode {
    n: usize,
    kind: DerivationKind,
    generators: Vec<RVector>,
    free_rank: Option<usize>,
}

impl RCode {
    /// The code generated by g when g right-divides x^n - 1 with a unit
    /// leading coefficient. It is a free module with basis
    /// g, xg, ..., x^(n-deg(g)-1) g.
    pub fn free_from_divisor(g: &SkewPoly, n: usize) -> Result<Self, Error> {
        assert!(n >= 1);
        let lead = g.leading_coeff().ok_or(Error::DivisionByZeroPolynomial)?;
        if !lead.is_unit() {
            return Err(Error::NonUnitLeadingCoefficient(lead));
        }
        if g.right_divides_x_pow_minus_one(n)?.is_none() {
            return Err(Error::NotARightDivisor);
        }
        let rank = n - g.degree().expect("nonzero divisor");
        let mut generators = Vec::with_capacity(rank);
        if rank > 0 {
            let mut row = RVector::from_poly(g, n)?;
            for _ in 0..rank {
                generators.push(row.clone());
                row = row.shift(g.kind());
            }
        }
        Ok(Self {
            n,
            kind: g.kind(),
            generators,
            free_rank: Some(rank),
        })
    }

    /// The module spanned by the first k twisted shifts g, xg, ...,
    /// x^(k-1) g of an arbitrary nonzero g, reduced mod x^n - 1. No
    /// divisibility is required and the result need not be free.
    pub fn from_shifts(g: &SkewPoly, n: usize, k: usize) -> Self {
        assert!(n >= 1 && (1..=n).contains(&k));
        let (_, reduced) = g
            .right_divide(&SkewPoly::x_pow_minus_one(n, g.kind()))
            .expect("x^n - 1 has unit leading coefficient");
        let mut generators = Vec::with_capacity(k);
        let mut row = RVector::from_poly(&reduced, n).expect("remainder has degree < n");
        for _ in 0..k {
            generators.push(row.clone());
            row = row.shift(g.kind());
        }
        Self {
            n,
            kind: g.kind(),
            generators,
            free_rank: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> DerivationKind {
        self.kind
    }

    pub fn generators(&self) -> &[RVector] {
        &self.generators
    }

    /// Basis size when the code was built as a free module.
    pub fn free_rank(&self) -> Option<usize> {
        self.free_rank
    }

    /// Number of scalar tuples a span enumeration must visit, 16^k.
    pub fn span_tuples(&self) -> u128 {
        16u128
            .checked_pow(self.generators.len() as u32)
            .unwrap_or(u128::MAX)
    }

    /// The generator basis as a matrix. Only free codes carry one.
    pub fn generator_matrix(&self) -> Result<RMatrix, Error> {
        if self.free_rank.is_none() {
            return Err(Error::NotFreeCode);
        }
        Ok(RMatrix::new(self.generators.clone()))
    }

    /// Z4 generators of the residue code Res(C) = { a : a + bv in C }.
    pub fn res_generators(&self) -> Vec<Vec<u8>> {
        self.generators.iter().map(|g| g.res_part()).collect()
    }

    /// Z4 generators of the torsion code Tor(C) = { b : vb in C }.
    ///
    /// For w = a + bv in C the vector v*w = v(a + b) shows a + b is in
    /// Tor(C), and every torsion element arises as a Z4 combination of
    /// these, so the a_i + b_i rows of the generators span Tor(C).
    pub fn tor_generators(&self) -> Vec<Vec<u8>> {
        self.generators.iter().map(|g| g.tor_part()).collect()
    }

    /// All R-linear combinations of the generators, at most `max_tuples`
    /// scalar tuples.
    pub fn enumerate_span(&self, max_tuples: u64) -> Result<SpanSet, Error> {
        assert!(self.n <= 32, "span packing supports length <= 32");
        let needed = self.span_tuples();
        if needed > u128::from(max_tuples) {
            return Err(Error::SpanTooLarge {
                needed,
                bound: max_tuples,
            });
        }
        let mut words = Vec::with_capacity(needed as usize);
        let mut buf = vec![RingElem::ZERO; self.n];
        span_rec(&self.generators, &mut buf, &mut words);
        words.sort_unstable();
        words.dedup();
        Ok(SpanSet { n: self.n, words })
    }

    /// Which shifts map the span into itself: the twisted shift (the
    /// defining closure), the plain cyclic shift, and rotation by two.
    pub fn closure_check(&self, max_tuples: u64) -> Result<ClosureReport, Error> {
        let span = self.enumerate_span(max_tuples)?;
        let mut report = ClosureReport {
            twisted_shift_closed: true,
            cyclic: true,
            quasicyclic_2: true,
        };
        for w in span.iter() {
            report.twisted_shift_closed &= span.contains(&w.shift(self.kind));
            report.cyclic &= span.contains(&w.rotate(1));
            report.quasicyclic_2 &= span.contains(&w.rotate(2));
            if !(report.twisted_shift_closed || report.cyclic || report.quasicyclic_2) {
                break;
            }
        }
        Ok(report)
    }
}

fn span_rec(gens: &[RVector], buf: &mut [RingElem], words: &mut Vec<u128>) {
    let Some((g, rest)) = gens.split_first() else {
        words.push(pack(buf));
        return;
    };
    for s in RingElem::all() {
        for (slot, &e) in buf.iter_mut().zip(g.entries()) {
            *slot = *slot + s * e;
        }
        span_rec(rest, buf, words);
        for (slot, &e) in buf.iter_mut().zip(g.entries()) {
            *slot = *slot - s * e;
        }
    }
}

fn pack(entries: &[RingElem]) -> u128 {
    entries.iter().enumerate().fold(0u128, |acc, (i, e)| {
        acc | (u128::from(e.a() | (e.b() << 2)) << (4 * i))
    })
}

fn unpack(word: u128, n: usize) -> RVector {
    let entries = (0..n)
        .map(|i| {
            let nib = ((word >> (4 * i)) & 0xf) as u8;
            RingElem::new(nib & 0x3, nib >> 2)
        })
        .collect();
    RVector::new(entries)
}

/// Fully enumerated module span with set-membership lookup.
#[derive(Clone, Debug)]
pub struct SpanSet {
    n: usize,
    words: Vec<u128>,
}

impl SpanSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, v: &RVector) -> bool {
        assert_eq!(v.len(), self.n);
        self.words.binary_search(&pack(v.entries())).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = RVector> + '_ {
        self.words.iter().map(|&w| unpack(w, self.n))
    }
}

/// Closure of a span under the three shift maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    /// Closed under multiplication by x, i.e. actually a module code.
    pub twisted_shift_closed: bool,
    /// Closed under the plain cyclic shift.
    pub cyclic: bool,
    /// Closed under rotation by two places.
    pub quasicyclic_2: bool,
}

/// Parity-check matrix of the free code generated by g, for even n.
///
/// With h g = x^n - 1 and k = deg h, row i checks the coefficient of
/// x^(k+i) in the unreduced product c(x) h(x): columns of even index j
/// contribute h_(k+i-j) and odd columns contribute
/// theta(h_(k+i-j)) + delta(h_(k+i-j+1)).
pub fn parity_check_matrix(g: &SkewPoly, n: usize) -> Result<RMatrix, Error> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    let lead = g.leading_coeff().ok_or(Error::DivisionByZeroPolynomial)?;
    if !lead.is_unit() {
        return Err(Error::NonUnitLeadingCoefficient(lead));
    }
    let h = g
        .right_divides_x_pow_minus_one(n)?
        .ok_or(Error::NotARightDivisor)?;
    let k = h.degree().expect("x^n - 1 is nonzero");
    let coeff = |idx: Option<usize>| idx.map_or(RingElem::ZERO, |i| h.coeff(i));
    let rows = (0..n - k)
        .map(|i| {
            let m = k + i;
            let entries = (0..n)
                .map(|j| {
                    if j % 2 == 0 {
                        coeff(m.checked_sub(j))
                    } else {
                        coeff(m.checked_sub(j)).theta()
                            + coeff((m + 1).checked_sub(j)).delta(g.kind())
                    }
                })
                .collect();
            RVector::new(entries)
        })
        .collect();
    Ok(RMatrix::new(rows))
}

/// Membership test against the check polynomial: c is in the code with
/// h g = x^n - 1 exactly when c(x) h(x) = 0 mod x^n - 1.
pub fn parity_membership(c: &RVector, h: &SkewPoly) -> bool {
    let n = c.len();
    let prod = c
        .to_poly(h.kind())
        .mul(h)
        .expect("kinds match by construction");
    let (_, r) = prod
        .right_divide(&SkewPoly::x_pow_minus_one(n, h.kind()))
        .expect("x^n - 1 has unit leading coefficient");
    r.is_zero()
}
