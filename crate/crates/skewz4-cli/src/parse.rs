//! Text format for ring elements and skew polynomials.
//!
//! A polynomial is terms joined by `+`. A term is an element, an element
//! followed by an x power, or a bare x power: `3`, `2v`, `x`, `x^4`, `3x`,
//! `2vx^3`, `(1+3v)x^2`. Elements with both a constant and a v part must
//! be parenthesized in front of x, since `1+3vx` already means two terms.
//! Whitespace is ignored and coefficients are reduced mod 4.

use std::fmt;

use skewz4::{DerivationKind, RingElem, SkewPoly};

/// Largest accepted x exponent; keeps typos from allocating huge tables.
const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Parse a polynomial over R in the given derivation kind.
pub fn poly(text: &str, kind: DerivationKind) -> Result<SkewPoly, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty polynomial"));
    }
    let mut coeffs: Vec<RingElem> = Vec::new();
    loop {
        let (c, exp) = p.term()?;
        let exp = exp as usize;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, RingElem::ZERO);
        }
        coeffs[exp] = coeffs[exp] + c;
        p.skip_ws();
        if !p.eat(b'+') {
            break;
        }
        p.skip_ws();
    }
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(SkewPoly::new(coeffs, kind))
}

/// Parse a single ring element: `3`, `v`, `2v`, `1+3v`, with or without
/// parentheses.
pub fn element(text: &str) -> Result<RingElem, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let e = if p.eat(b'(') {
        let e = p.element_sum()?;
        if !p.eat(b')') {
            return Err(p.error("expected ')'"));
        }
        e
    } else {
        p.element_sum()?
    };
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parse a derivation kind name, `1+2v` or `3+2v`.
pub fn derivation(text: &str) -> Result<DerivationKind, ParseError> {
    match text.trim() {
        "1+2v" => Ok(DerivationKind::OnePlus2v),
        "3+2v" => Ok(DerivationKind::ThreePlus2v),
        other => Err(ParseError {
            pos: 0,
            msg: format!("unknown derivation '{other}', expected 1+2v or 3+2v"),
        }),
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// One term: coefficient and x exponent.
    fn term(&mut self) -> Result<(RingElem, u32), ParseError> {
        self.skip_ws();
        let coeff = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.element_sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                e
            }
            Some(b'x') => RingElem::ONE,
            Some(b) if b.is_ascii_digit() || b == b'v' => self.element_part()?,
            _ => return Err(self.error("expected a coefficient or x")),
        };
        self.skip_ws();
        let exp = if self.eat(b'x') {
            self.skip_ws();
            if self.eat(b'^') {
                self.skip_ws();
                self.number("exponent")?
            } else {
                1
            }
        } else {
            0
        };
        if exp > MAX_EXPONENT {
            return Err(self.error(format!("exponent larger than {MAX_EXPONENT}")));
        }
        Ok((coeff, exp))
    }

    /// Element possibly written as a sum of a constant and a v part,
    /// e.g. `1+3v` inside parentheses.
    fn element_sum(&mut self) -> Result<RingElem, ParseError> {
        self.skip_ws();
        let mut e = self.element_part()?;
        self.skip_ws();
        while self.eat(b'+') {
            self.skip_ws();
            e = e + self.element_part()?;
            self.skip_ws();
        }
        Ok(e)
    }

    /// `3`, `v`, or `3v`: an optional number with an optional v.
    fn element_part(&mut self) -> Result<RingElem, ParseError> {
        let scalar = match self.peek() {
            Some(b) if b.is_ascii_digit() => self.number("coefficient")? % 4,
            Some(b'v') => 1,
            _ => return Err(self.error("expected a digit or v")),
        };
        self.skip_ws();
        if self.eat(b'v') {
            Ok(RingElem::new(0, scalar as u8))
        } else {
            Ok(RingElem::new(scalar as u8, 0))
        }
    }

    fn number(&mut self, what: &str) -> Result<u32, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!("expected digits for {what}")));
        }
        if self.pos - start > 9 {
            return Err(ParseError {
                pos: start,
                msg: format!("{what} has too many digits"),
            });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("length-checked digits"))
    }
}
