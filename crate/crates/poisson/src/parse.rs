//! Recursive-descent parser: integers, `a/b` rationals, named variables, `+ - * ^` and parentheses.

use num_bigint::BigInt;

use crate::poly::{MultiPoly, Q, Vars};
use crate::PoissonError;

struct Parser<'a> {
    vars: &'a Vars,
    s: &'a [u8],
    pos: usize,
}

fn err(msg: impl Into<String>) -> PoissonError {
    PoissonError::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn skip(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly, PoissonError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, PoissonError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(err("division by zero"));
                    }
                    acc = acc.scale(&Q::new(BigInt::from(1), d));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly, PoissonError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PoissonError> {
        self.skip();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(format!("expected a number at offset {start}")));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn atom(&mut self) -> Result<MultiPoly, PoissonError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(err("missing )"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(MultiPoly::constant(self.vars, Q::from_integer(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let i = self.vars.index(name).ok_or_else(|| err(format!("unknown variable {name}")))?;
                Ok(self.vars.var(i))
            }
            Some(c) => Err(err(format!("unexpected {:?} at offset {}", c as char, self.pos))),
            None => Err(err("unexpected end of input")),
        }
    }
}

pub fn parse(vars: &Vars, s: &str) -> Result<MultiPoly, PoissonError> {
    let mut p = Parser { vars, s: s.as_bytes(), pos: 0 };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input at offset {}", p.pos)));
    }
    Ok(out)
}
