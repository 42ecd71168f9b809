//! Parser for `x`-polynomials such as `x3*x5 - x2` or `(s1 - s2*s3^-1)*x1^2 + 3`.

use laurent_core::{Exponent, LaurentPoly};
use num_bigint::BigInt;

use crate::xpoly::XPoly;
use crate::HorError;

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    nvars: usize,
}

pub fn parse(nvars: usize, s: &str) -> Result<XPoly, HorError> {
    let mut p = Parser { s: s.as_bytes(), i: 0, nvars };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

impl Parser<'_> {
    fn err(&self, m: &str) -> HorError {
        HorError::Parse(format!("{m} at offset {}", self.i))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<XPoly, HorError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                self.term()?.neg()
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
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<XPoly, HorError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.i += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<XPoly, HorError> {
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
        let k = self.integer()?;
        let k: u32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
        if !neg {
            return Ok((0..k).fold(XPoly::int(self.nvars, 1), |acc, _| acc.mul(&base)));
        }
        // Only `s3` is invertible.
        let inv = match base.as_monomial() {
            Some((e, c)) if e.iter().all(|&a| a == 0) && c.len() == 1 => {
                let (ex, k0) = c.terms().next().unwrap();
                if ex.a1 != 0 || ex.a2 != 0 || !(k0 == &BigInt::from(1) || k0 == &BigInt::from(-1)) {
                    None
                } else {
                    Some(LaurentPoly::monomial(Exponent { a1: 0, a2: 0, a3: -ex.a3 }, k0.clone()))
                }
            }
            _ => None,
        };
        let inv = inv.ok_or_else(|| self.err("negative exponent on a non-unit"))?;
        Ok(XPoly::constant(self.nvars, inv.pow(k)))
    }

    fn integer(&mut self) -> Result<u64, HorError> {
        self.peek();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().map_err(|_| self.err("integer too large"))
    }

    fn atom(&mut self) -> Result<XPoly, HorError> {
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
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let v: BigInt = std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().unwrap();
                Ok(XPoly::constant(self.nvars, LaurentPoly::constant(v)))
            }
            Some(b'x') | Some(b's') => {
                let which = self.s[self.i];
                self.i += 1;
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let idx: usize = std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().map_err(|_| self.err("expected variable index"))?;
                if which == b'x' {
                    if idx == 0 || idx > self.nvars {
                        return Err(self.err("variable index out of range"));
                    }
                    Ok(XPoly::var(self.nvars, idx - 1))
                } else {
                    let c = match idx {
                        1 => LaurentPoly::s1(),
                        2 => LaurentPoly::s2(),
                        3 => LaurentPoly::s3(),
                        _ => return Err(self.err("unknown parameter")),
                    };
                    Ok(XPoly::constant(self.nvars, c))
                }
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}
