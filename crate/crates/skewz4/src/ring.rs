//! Arithmetic in R = Z4 + vZ4 with v^2 = v, the automorphism theta, and the
//! two inner theta-derivations.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::vec::Vec;

use crate::error::Error;

/// Element a + bv of R, both parts stored reduced mod 4.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem {
    a: u8,
    b: u8,
}

impl RingElem {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const V: Self = Self { a: 0, b: 1 };

    pub const fn new(a: u8, b: u8) -> Self {
        Self { a: a % 4, b: b % 4 }
    }

    /// Constant part a of a + bv.
    pub const fn a(self) -> u8 {
        self.a
    }

    /// Coefficient b of v in a + bv.
    pub const fn b(self) -> u8 {
        self.b
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// All 16 elements, ordered by (a, b).
    pub fn all() -> impl Iterator<Item = Self> {
        (0..4).flat_map(|a| (0..4).map(move |b| Self { a, b }))
    }

    /// The units of R are 1, 3, 1 + 2v, and 3 + 2v: odd constant part,
    /// even v part.
    pub fn is_unit(self) -> bool {
        self.a % 2 == 1 && self.b.is_multiple_of(2)
    }

    /// Multiplicative inverse. Each of the four units squares to 1, so a
    /// unit is its own inverse.
    pub fn inverse(self) -> Result<Self, Error> {
        if self.is_unit() {
            debug_assert_eq!(self * self, Self::ONE);
            Ok(self)
        } else {
            Err(Error::NotAUnit(self))
        }
    }

    /// The ring automorphism theta(a + bv) = (a + b) - bv. It fixes Z4
    /// pointwise and has order 2.
    pub fn theta(self) -> Self {
        Self {
            a: (self.a + self.b) % 4,
            b: (4 - self.b) % 4,
        }
    }

    /// The inner theta-derivation u * (theta(x) - x) for the scaling unit
    /// chosen by `kind`.
    pub fn delta(self, kind: DerivationKind) -> Self {
        kind.unit() * (self.theta() - self)
    }

    /// Gray map phi(a + bv) = (a, a + b) into Z4 x Z4.
    pub fn gray(self) -> [u8; 2] {
        [self.a, (self.a + self.b) % 4]
    }

    /// Gray weight: Lee weight of the Gray image.
    pub fn gray_weight(self) -> u32 {
        let [p, q] = self.gray();
        lee_weight(p) + lee_weight(q)
    }
}

impl Add for RingElem {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            a: (self.a + rhs.a) % 4,
            b: (self.b + rhs.b) % 4,
        }
    }
}

impl Sub for RingElem {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self {
            a: (4 + self.a - rhs.a) % 4,
            b: (4 + self.b - rhs.b) % 4,
        }
    }
}

impl Neg for RingElem {
    type Output = Self;

    fn neg(self) -> Self {
        Self::ZERO - self
    }
}

impl Mul for RingElem {
    type Output = Self;

    // (a + bv)(c + dv) = ac + (ad + bc + bd)v using v^2 = v.
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (self.a as u16, self.b as u16);
        let (c, d) = (rhs.a as u16, rhs.b as u16);
        Self {
            a: ((a * c) % 4) as u8,
            b: ((a * d + b * c + b * d) % 4) as u8,
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "v"),
            (0, b) => write!(f, "{b}v"),
            (a, 1) => write!(f, "{a}+v"),
            (a, b) => write!(f, "{a}+{b}v"),
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which of the two scaling units defines the inner derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivationKind {
    /// Derivation scaled by the unit 1 + 2v.
    OnePlus2v,
    /// Derivation scaled by the unit 3 + 2v.
    ThreePlus2v,
}

impl DerivationKind {
    pub const ALL: [Self; 2] = [Self::OnePlus2v, Self::ThreePlus2v];

    /// The scaling unit u with delta(x) = u * (theta(x) - x).
    pub fn unit(self) -> RingElem {
        match self {
            Self::OnePlus2v => RingElem::new(1, 2),
            Self::ThreePlus2v => RingElem::new(3, 2),
        }
    }
}

impl fmt::Display for DerivationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::OnePlus2v => "1+2v",
            Self::ThreePlus2v => "3+2v",
        })
    }
}

/// Lee weight on Z4: 0, 1, 2, 3 weigh 0, 1, 2, 1.
pub fn lee_weight(z: u8) -> u32 {
    const TABLE: [u32; 4] = [0, 1, 2, 1];
    TABLE[(z % 4) as usize]
}

/// A nontrivial ideal of R, listed with a canonical generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    /// Generating element with the smallest a + 4b among those that
    /// generate the ideal.
    pub generator: RingElem,
    /// Elements sorted by (a, b).
    pub elements: Vec<RingElem>,
    pub is_maximal: bool,
}

impl Ideal {
    pub fn contains(&self, e: RingElem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

/// The seven nontrivial ideals of R, sorted by cardinality and then by the
/// canonical generator's a + 4b.
pub fn nontrivial_ideals() -> Vec<Ideal> {
    fn key(g: RingElem) -> u8 {
        g.a() + 4 * g.b()
    }

    let mut ideals: Vec<(RingElem, Vec<RingElem>)> = Vec::new();
    for g in RingElem::all() {
        if g.is_zero() || g.is_unit() {
            continue;
        }
        let mut elems: Vec<RingElem> = RingElem::all().map(|r| r * g).collect();
        elems.sort_unstable();
        elems.dedup();
        match ideals.iter_mut().find(|(_, e)| *e == elems) {
            Some((gen, _)) => {
                if key(g) < key(*gen) {
                    *gen = g;
                }
            }
            None => ideals.push((g, elems)),
        }
    }
    ideals.sort_unstable_by_key(|(g, e)| (e.len(), key(*g)));

    let maximal: Vec<bool> = ideals
        .iter()
        .map(|(_, e)| {
            !ideals
                .iter()
                .any(|(_, bigger)| bigger.len() > e.len() && e.iter().all(|x| bigger.contains(x)))
        })
        .collect();

    ideals
        .into_iter()
        .zip(maximal)
        .map(|((generator, elements), is_maximal)| Ideal {
            generator,
            elements,
            is_maximal,
        })
        .collect()
}
