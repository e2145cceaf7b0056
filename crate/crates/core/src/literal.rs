//! Text literals for scalars, permutations, basis labels and vectors.
//!
//! ```text
//! element  := "0" | term (("+" | "-") term)*
//! term     := scalar "*" label
//! scalar   := part [("+" | "-") part_i]         part_i carries the `i`
//! part     := ["-"] (rational ["i"] | "i")
//! label    := "c" N ":" R | perm | "xi:" label | "eta:" label
//! perm     := "perm{ground=" ground ";" cycles "}"
//! ground   := lo ".." hi | "[" int ("," int)* "]"
//! cycles   := "()" | ("(" int+ ")")+
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::ParseError;
use crate::linalg::Vector;
use crate::perm::Permutation;
use crate::scalar::{Rational, Scalar};

/// A basis label as written in a literal, before it is resolved against a
/// concrete algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LiteralLabel {
    Cyclic { modulus: u64, residue: u64 },
    Perm(Permutation),
    Xi(Box<LiteralLabel>),
    Eta(Box<LiteralLabel>),
}

impl fmt::Display for LiteralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiteralLabel::Cyclic { modulus, residue } => write!(f, "c{modulus}:{residue}"),
            LiteralLabel::Perm(p) => write!(f, "{p}"),
            LiteralLabel::Xi(l) => write!(f, "xi:{l}"),
            LiteralLabel::Eta(l) => write!(f, "eta:{l}"),
        }
    }
}

impl fmt::Debug for LiteralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LiteralLabel {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut c = Cursor::new(s);
        c.skip_ws();
        let l = c.label()?;
        c.skip_ws();
        if !c.at_end() {
            return Err(c.error("trailing input after label"));
        }
        Ok(l)
    }
}

/// Parses a vector literal such as `1*c4:1 + -1*c4:3`.
pub fn parse_element(text: &str) -> Result<Vector<LiteralLabel>, ParseError> {
    let mut c = Cursor::new(text);
    let v = c.element()?;
    c.skip_ws();
    if !c.at_end() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Canonical literal of a vector over literal labels.
pub fn format_element(v: &Vector<LiteralLabel>) -> String {
    v.display_with(|l| l.to_string())
}

/// Byte-level recursive-descent cursor over a literal.
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn offset(&self) -> usize {
        self.pos
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn skip_ws(&mut self) {
        while let Some(b) = self.peek() {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_str(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let neg = self.eat(b'-');
        let d = self.digits().ok_or_else(|| self.error("expected an integer"))?;
        let v: i64 = d.parse().map_err(|_| ParseError::new(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let d = self.digits().ok_or_else(|| self.error("expected a number"))?;
        d.parse().map_err(|_| ParseError::new(start, "number out of range"))
    }

    /// Unsigned rational `n` or `n/d`.
    fn rational(&mut self) -> Option<Result<Rational, ParseError>> {
        let start = self.pos;
        let n = self.digits()?;
        let n: BigInt = n.parse().expect("digits parse as an integer");
        let save = self.pos;
        let mut d = BigInt::from(1);
        if self.eat(b'/') {
            match self.digits() {
                Some(ds) => d = ds.parse().expect("digits parse as an integer"),
                None => {
                    self.pos = save;
                    return Some(Err(self.error("expected a denominator")));
                }
            }
        }
        if d == BigInt::from(0) {
            return Some(Err(ParseError::new(start, "zero denominator")));
        }
        Some(Ok(Rational::from_big(BigRational::new(n, d))))
    }

    /// `[-] (q [i] | i)`; returns the value and whether it was imaginary.
    fn scalar_part(&mut self) -> Result<(Rational, bool), ParseError> {
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let (value, imag) = match self.rational() {
            Some(r) => {
                let r = r?;
                let save = self.pos;
                self.skip_ws();
                if self.eat_imaginary_unit() {
                    (r, true)
                } else {
                    self.pos = save;
                    (r, false)
                }
            }
            None if self.eat_imaginary_unit() => (Rational::ONE, true),
            None => return Err(self.error("expected a scalar")),
        };
        Ok((if neg { -value } else { value }, imag))
    }

    /// Consumes `i` only when it is not the start of a longer identifier.
    fn eat_imaginary_unit(&mut self) -> bool {
        if self.peek() == Some(b'i') {
            let next = self.src.as_bytes().get(self.pos + 1).copied();
            if !matches!(next, Some(b) if b.is_ascii_alphanumeric() || b == b':') {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    /// A Gaussian rational `a/b+c/d i`; either part may be omitted.
    pub fn scalar(&mut self) -> Result<Scalar, ParseError> {
        let (first, imag) = self.scalar_part()?;
        if imag {
            return Ok(Scalar::new(Rational::ZERO, first));
        }
        // optional imaginary part; backtrack if what follows is not one
        let save = self.pos;
        self.skip_ws();
        let sign = match self.peek() {
            Some(b'+') => 1,
            Some(b'-') => -1,
            _ => {
                self.pos = save;
                return Ok(Scalar::real(first));
            }
        };
        self.pos += 1;
        match self.scalar_part() {
            Ok((second, true)) => {
                let im = if sign < 0 { -second } else { second };
                Ok(Scalar::new(first, im))
            }
            _ => {
                self.pos = save;
                Ok(Scalar::real(first))
            }
        }
    }

    fn ground(&mut self) -> Result<Vec<i64>, ParseError> {
        let start = self.pos;
        if self.eat(b'[') {
            let mut out = vec![];
            loop {
                self.skip_ws();
                out.push(self.integer()?);
                self.skip_ws();
                if self.eat(b']') {
                    break;
                }
                self.expect(",")?;
            }
            if !out.windows(2).all(|w| w[0] < w[1]) {
                return Err(ParseError::new(start, "ground list must be strictly increasing"));
            }
            Ok(out)
        } else {
            let lo = self.integer()?;
            self.expect("..")?;
            let hi = self.integer()?;
            if hi < lo {
                return Err(ParseError::new(start, "empty ground interval"));
            }
            if hi - lo > 1 << 16 {
                return Err(ParseError::new(start, "ground interval too large"));
            }
            Ok((lo..=hi).collect())
        }
    }

    pub fn permutation(&mut self) -> Result<Permutation, ParseError> {
        self.skip_ws();
        let start = self.pos;
        self.expect("perm{")?;
        self.skip_ws();
        self.expect("ground=")?;
        self.skip_ws();
        let ground = self.ground()?;
        self.skip_ws();
        self.expect(";")?;
        let mut cycles: Vec<Vec<i64>> = vec![];
        loop {
            self.skip_ws();
            if self.eat(b'}') {
                break;
            }
            self.expect("(")?;
            let mut cyc = vec![];
            loop {
                self.skip_ws();
                if self.eat(b')') {
                    break;
                }
                cyc.push(self.integer()?);
            }
            if cyc.len() >= 2 {
                cycles.push(cyc);
            } else if cyc.len() == 1 && ground.binary_search(&cyc[0]).is_err() {
                return Err(self.error(format!("point {} not in the ground set", cyc[0])));
            }
        }
        Permutation::from_cycles(ground, &cycles)
            .map_err(|e| ParseError::new(start, e.to_string()))
    }

    pub fn label(&mut self) -> Result<LiteralLabel, ParseError> {
        if self.eat_str("xi:") {
            return Ok(LiteralLabel::Xi(Box::new(self.label()?)));
        }
        if self.eat_str("eta:") {
            return Ok(LiteralLabel::Eta(Box::new(self.label()?)));
        }
        if self.src[self.pos..].starts_with("perm{") {
            return Ok(LiteralLabel::Perm(self.permutation()?));
        }
        let start = self.pos;
        if self.eat(b'c') {
            let modulus = self.unsigned()?;
            self.expect(":")?;
            let residue = self.unsigned()?;
            if modulus == 0 || residue >= modulus {
                return Err(ParseError::new(
                    start,
                    format!("residue {residue} out of range for modulus {modulus}"),
                ));
            }
            return Ok(LiteralLabel::Cyclic { modulus, residue });
        }
        Err(self.error("expected a label (`cN:R`, `perm{..}`, `xi:` or `eta:`)"))
    }

    fn term(&mut self) -> Result<(LiteralLabel, Scalar), ParseError> {
        let c = self.scalar()?;
        self.skip_ws();
        self.expect("*")?;
        self.skip_ws();
        Ok((self.label()?, c))
    }

    pub fn element(&mut self) -> Result<Vector<LiteralLabel>, ParseError> {
        self.skip_ws();
        let save = self.pos;
        if self.eat(b'0') {
            self.skip_ws();
            if self.at_end() {
                return Ok(Vector::zero());
            }
            self.pos = save;
        }
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            let neg = if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else {
                break;
            };
            let (l, c) = self.term()?;
            terms.push((l, if neg { -c } else { c }));
        }
        Ok(Vector::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_difference() {
        let v = parse_element("1*c4:1 + -1*c4:3").unwrap();
        let l1 = LiteralLabel::Cyclic { modulus: 4, residue: 1 };
        let l3 = LiteralLabel::Cyclic { modulus: 4, residue: 3 };
        assert_eq!(v.coeff(&l1), Scalar::ONE);
        assert_eq!(v.coeff(&l3), Scalar::from_integer(-1));
        assert_eq!(parse_element("1*c4:1 - 1*c4:3").unwrap(), v);
    }

    #[test]
    fn complex_coefficient_on_tagged_label() {
        let v = parse_element("1/2+1/2i * xi:c3:0").unwrap();
        let l = LiteralLabel::Xi(Box::new(LiteralLabel::Cyclic { modulus: 3, residue: 0 }));
        assert_eq!(v.coeff(&l), Scalar::new(Rational::new(1, 2), Rational::new(1, 2)));
        let printed = format_element(&v);
        assert_eq!(parse_element(&printed).unwrap(), v);
    }

    #[test]
    fn malformed_tag_reports_offset() {
        let err = parse_element("1*zeta:c3:0").unwrap_err();
        assert_eq!(err.offset, 2);
        let err = parse_element("1*c3:5").unwrap_err();
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn permutation_labels_and_zero() {
        let v = parse_element("2*eta:perm{ground=[-1,1]; (-1 1)} + i*xi:perm{ground=-1..1; ()}").unwrap();
        assert_eq!(v.support_len(), 2);
        assert_eq!(parse_element(&format_element(&v)).unwrap(), v);
        assert!(parse_element("0").unwrap().is_zero());
    }
}
