//! The skew polynomial ring R[x; theta, delta] and right division in it.
//!
//! Multiplication is determined by the commutation rule
//! x * a = theta(a) * x + delta(a); coefficients are written on the left.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::ring::{DerivationKind, RingElem};

/// Polynomial over R with a fixed derivation kind. Coefficients are stored
/// ascending by degree with no trailing zeros, so the zero polynomial is
/// the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    coeffs: Vec<RingElem>,
    kind: DerivationKind,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<RingElem>, kind: DerivationKind) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs, kind }
    }

    pub fn zero(kind: DerivationKind) -> Self {
        Self {
            coeffs: Vec::new(),
            kind,
        }
    }

    pub fn constant(c: RingElem, kind: DerivationKind) -> Self {
        Self::new(vec![c], kind)
    }

    pub fn monomial(c: RingElem, exp: usize, kind: DerivationKind) -> Self {
        let mut coeffs = vec![RingElem::ZERO; exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs, kind)
    }

    /// x^n - 1, the modulus of the ambient quotient ring.
    pub fn x_pow_minus_one(n: usize, kind: DerivationKind) -> Self {
        assert!(n >= 1, "x^n - 1 needs n >= 1");
        let mut coeffs = vec![RingElem::ZERO; n + 1];
        coeffs[0] = -RingElem::ONE;
        coeffs[n] = RingElem::ONE;
        Self::new(coeffs, kind)
    }

    pub fn kind(&self) -> DerivationKind {
        self.kind
    }

    /// Coefficients ascending by degree, highest one nonzero.
    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> RingElem {
        self.coeffs.get(i).copied().unwrap_or(RingElem::ZERO)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<RingElem> {
        self.coeffs.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_kind(&self, other: &Self) -> Result<(), Error> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::MixedDerivation)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_kind(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Ok(Self::new(coeffs, self.kind))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_kind(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Ok(Self::new(coeffs, self.kind))
    }

    /// Left multiplication by a constant, c * f.
    pub fn left_scale(&self, c: RingElem) -> Self {
        Self::new(self.coeffs.iter().map(|&f| c * f).collect(), self.kind)
    }

    /// x^n * c as a polynomial. Even powers of x commute with constants;
    /// for odd n the product is theta(c) x^n + delta(c) x^(n-1).
    pub fn x_pow_times(n: usize, c: RingElem, kind: DerivationKind) -> Self {
        if n.is_multiple_of(2) {
            Self::monomial(c, n, kind)
        } else {
            let mut coeffs = vec![RingElem::ZERO; n + 1];
            coeffs[n] = c.theta();
            coeffs[n - 1] = c.delta(kind);
            Self::new(coeffs, kind)
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_kind(rhs)?;
        let mut out = vec![RingElem::ZERO; self.coeffs.len() + rhs.coeffs.len()];
        for (i, &fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, &gj) in rhs.coeffs.iter().enumerate() {
                if i % 2 == 0 {
                    out[i + j] = out[i + j] + fi * gj;
                } else {
                    out[i + j] = out[i + j] + fi * gj.theta();
                    out[i + j - 1] = out[i + j - 1] + fi * gj.delta(self.kind);
                }
            }
        }
        Ok(Self::new(out, self.kind))
    }

    /// Right division: self = q * g + r with deg r < deg g. Requires the
    /// divisor's leading coefficient to be a unit.
    ///
    /// Cancelling the leading term of a remainder of degree gd + d needs
    /// the cofactor lead(r) * inverse(theta^d(lead(g))), because moving a
    /// coefficient across x^d twists it by theta^d.
    pub fn right_divide(&self, g: &Self) -> Result<(Self, Self), Error> {
        self.check_kind(g)?;
        let gd = g.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lg = g.leading_coeff().expect("nonzero divisor");
        let lg_inv = lg
            .inverse()
            .map_err(|_| Error::NonUnitLeadingCoefficient(lg))?;

        let mut q = Self::zero(self.kind);
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < gd {
                break;
            }
            let d = rd - gd;
            let twisted_inv = if d % 2 == 1 { lg_inv.theta() } else { lg_inv };
            let qc = r.leading_coeff().expect("nonzero remainder") * twisted_inv;
            let term = Self::monomial(qc, d, self.kind);
            r = r.sub(&term.mul(g)?)?;
            q = q.add(&term)?;
            debug_assert!(r.degree().is_none_or(|nd| nd < rd));
        }
        Ok((q, r))
    }

    /// Whether the polynomial commutes with everything in the quotient
    /// ring: all coefficients in Z4 (the theta-fixed subring) and only at
    /// even powers of x.
    pub fn is_central(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.b() == 0 && (i % 2 == 0 || c.is_zero()))
    }

    /// Some(h) with h * self = x^n - 1 when self right-divides x^n - 1,
    /// None otherwise.
    pub fn right_divides_x_pow_minus_one(&self, n: usize) -> Result<Option<Self>, Error> {
        let (q, r) = Self::x_pow_minus_one(n, self.kind).right_divide(self)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            // A coefficient with both parts nonzero prints as two
            // summands, so it is parenthesized to keep one token per term.
            let mixed = c.a() != 0 && c.b() != 0;
            if i == 0 {
                if mixed {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
                continue;
            }
            if c != RingElem::ONE {
                if mixed {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            }
            if i == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        Ok(())
    }
}
