//! Sparse multivariate polynomials with rational coefficients over a named variable list.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::PoissonError;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// An ordered list of variable names shared by all polynomials of one context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        Vars(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// `prefix1, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Vars::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(&self, i: usize) -> MultiPoly {
        let mut e = vec![0u8; self.len()];
        e[i] = 1;
        MultiPoly::monomial(self, e, q(1))
    }

    /// All variables as polynomials.
    pub fn all(&self) -> Vec<MultiPoly> {
        (0..self.len()).map(|i| self.var(i)).collect()
    }

    pub fn parse(&self, s: &str) -> Result<MultiPoly, PoissonError> {
        crate::parse::parse(self, s)
    }

    /// Parses and panics on malformed input; for built-in constant formulas.
    pub fn p(&self, s: &str) -> MultiPoly {
        self.parse(s).unwrap_or_else(|e| panic!("bad built-in polynomial {s:?}: {e}"))
    }
}

pub type Monomial = Vec<u8>;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Q) -> Self {
        MultiPoly::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, e: Monomial, c: Q) -> Self {
        assert_eq!(e.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(vars: &Vars, it: I) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u8]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, e: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &MultiPoly) {
        assert!(self.vars == other.vars, "polynomials over different variable lists");
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = MultiPoly::constant(&self.vars, q(1));
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&a| a as u32).sum()).max()
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&a| a as u32).sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * q(e[i] as i64));
            }
        }
        out
    }

    /// `self(x_1 -> images[0], ..., x_n -> images[n-1])`; images may live over other variables.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_else(|| self.vars.clone());
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::constant(&target, q(1)), p.clone()]).collect();
        let mut out = MultiPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while cache[i].len() <= a as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][a as usize];
            }
            out = out + t;
        }
        out
    }

    /// Value at a rational point.
    pub fn evaluate(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Moves this polynomial to a larger variable list whose first variables are ours.
    pub fn embed(&self, target: &Vars) -> MultiPoly {
        assert!(target.len() >= self.vars.len() && target.names()[..self.vars.len()] == *self.vars.names());
        MultiPoly::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                let mut f = e.clone();
                f.resize(target.len(), 0);
                (f, c.clone())
            }),
        )
    }

    /// Keeps only the terms whose monomial equals `x_i x_j` (or `x_i^2` when `i == j`).
    pub fn is_monomial_multiple(&self, i: usize, j: usize) -> Option<Q> {
        let mut e = vec![0u8; self.vars.len()];
        e[i] += 1;
        e[j] += 1;
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&e).cloned(),
            _ => None,
        }
    }

    /// Coefficients with respect to the variables in `outer`, the rest treated as coefficients:
    /// returns a map from the exponent pattern on `outer` to the polynomial in the other variables.
    pub fn split_by(&self, outer: &[usize]) -> BTreeMap<Vec<u8>, MultiPoly> {
        let mut out: BTreeMap<Vec<u8>, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u8> = outer.iter().map(|&i| e[i]).collect();
            let mut rest = e.clone();
            for &i in outer {
                rest[i] = 0;
            }
            out.entry(key).or_insert_with(|| MultiPoly::zero(&self.vars)).add_term(rest, c.clone());
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, o: MultiPoly) -> MultiPoly {
        self.check(&o);
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.clone() + o.clone()
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, o: MultiPoly) -> MultiPoly {
        self.check(&o);
        for (e, c) in o.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.clone() - o.clone()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&q(-1))
    }
}

impl<'a> Neg for &'a MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&q(-1))
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.check(o);
        let mut out = MultiPoly::zero(&self.vars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Monomial = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        &self * &o
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], a)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
