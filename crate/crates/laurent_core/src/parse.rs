//! Parser for expressions such as `s1^2*s2 - s1*s3 + 2*(s1 - s2)^3*s3^-1`.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::poly::LaurentPoly;
use crate::CoreError;

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, m: &str) -> CoreError {
        CoreError::Parse(format!("{m} at offset {}", self.i))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn int(&mut self) -> Result<BigInt, CoreError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().map_err(|_| self.err("expected integer"))
    }

    fn expr(&mut self) -> Result<LaurentPoly, CoreError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, CoreError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.i += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly, CoreError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.i += 1;
        let neg = if self.peek() == Some(b'-') {
            self.i += 1;
            true
        } else {
            false
        };
        let k: u32 = self.int()?.try_into().map_err(|_| self.err("exponent too large"))?;
        if !neg {
            return Ok(base.pow(k));
        }
        // Only monomials in s3 are invertible.
        let s3 = LaurentPoly::s3();
        if base == s3 {
            Ok(LaurentPoly::s3_pow(-(k as i32)))
        } else {
            Err(self.err("negative exponent on a non-unit"))
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly, CoreError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(b's') => {
                self.i += 1;
                match self.s.get(self.i) {
                    Some(b'1') => {
                        self.i += 1;
                        Ok(LaurentPoly::s1())
                    }
                    Some(b'2') => {
                        self.i += 1;
                        Ok(LaurentPoly::s2())
                    }
                    Some(b'3') => {
                        self.i += 1;
                        Ok(LaurentPoly::s3())
                    }
                    _ => Err(self.err("unknown variable")),
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::constant(self.int()?)),
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        let mut p = Parser { s: s.as_bytes(), i: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

/// Parses a polynomial literal, panicking on malformed input. Meant for constants and tests.
pub fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}
