//! Polynomials in `x_1..x_m` with Laurent-polynomial coefficients in `s1, s2, s3`.

use std::collections::BTreeMap;
use std::fmt;

use laurent_core::{Exponent, LaurentPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::HorError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, LaurentPoly>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> Self {
        XPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: LaurentPoly) -> Self {
        let mut p = XPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        XPoly::constant(nvars, LaurentPoly::constant(c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = XPoly::zero(nvars);
        p.add_term(e, LaurentPoly::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u8>, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(LaurentPoly::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &XPoly) -> XPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> XPoly {
        XPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &LaurentPoly) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, o: &XPoly) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.iter().zip(b).map(|(u, v)| u + v).collect(), x * y);
            }
        }
        out
    }

    pub fn product<'a, I: IntoIterator<Item = &'a XPoly>>(nvars: usize, it: I) -> XPoly {
        it.into_iter().fold(XPoly::int(nvars, 1), |acc, p| acc.mul(p))
    }

    /// Total degree in the `x` variables; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&a| a as u32).sum()).max()
    }

    /// Homogeneous component of top degree.
    pub fn top(&self) -> XPoly {
        let Some(d) = self.degree() else { return self.clone() };
        XPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().map(|&a| a as u32).sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Swaps `x_{2j-1} <-> x_{2j}` and applies `*` to the coefficients.
    pub fn nu(&self) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            for j in 0..self.nvars / 2 {
                f.swap(2 * j, 2 * j + 1);
            }
            out.add_term(f, c.star());
        }
        out
    }

    /// Substitutes `x_i -> images[i]`; coefficients are untouched.
    pub fn substitute(&self, images: &[XPoly]) -> XPoly {
        assert_eq!(images.len(), self.nvars);
        let m = images[0].nvars;
        let mut powers: Vec<Vec<XPoly>> = images.iter().map(|p| vec![XPoly::int(m, 1), p.clone()]).collect();
        let mut out = XPoly::zero(m);
        for (e, c) in &self.terms {
            let mut t = XPoly::constant(m, c.clone());
            for (i, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while powers[i].len() <= a as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][a as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    pub fn derivative(&self, i: usize) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c.scale(&BigInt::from(e[i])));
            }
        }
        out
    }

    /// Value at rational `s` (with `s3 != 0`) and rational `x`.
    pub fn evaluate(&self, s: &[BigRational; 3], x: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = eval_laurent(c, s);
            for (i, &a) in e.iter().enumerate() {
                for _ in 0..a {
                    t *= &x[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// `c * x^e` if this is a single term.
    pub fn as_monomial(&self) -> Option<(&Vec<u8>, &LaurentPoly)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn parse(nvars: usize, s: &str) -> Result<XPoly, HorError> {
        crate::parse::parse(nvars, s)
    }

    /// `{"nvars": m, "terms": [{"x": [..], "coeff": <Laurent JSON>}], "text": ".."}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(e, c)| json!({"x": e, "coeff": c.to_json()})).collect();
        json!({"nvars": self.nvars, "terms": terms, "text": self.to_string()})
    }

    /// Accepts the object form of [`XPoly::to_json`] or a plain string.
    pub fn from_json(v: &Value, nvars: usize) -> Result<XPoly, HorError> {
        if let Some(s) = v.as_str() {
            return XPoly::parse(nvars, s);
        }
        if let Some(s) = v.get("text").and_then(Value::as_str) {
            if v.get("terms").is_none() {
                return XPoly::parse(nvars, s);
            }
        }
        let bad = |m: &str| HorError::Json(m.to_string());
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("polynomial needs terms or a string"))?;
        let mut p = XPoly::zero(nvars);
        for t in terms {
            let x = t.get("x").and_then(Value::as_array).ok_or_else(|| bad("term without x"))?;
            if x.len() != nvars {
                return Err(bad("exponent length must equal the number of variables"));
            }
            let e: Option<Vec<u8>> = x.iter().map(|a| a.as_u64().and_then(|a| u8::try_from(a).ok())).collect();
            let e = e.ok_or_else(|| bad("exponents must be small nonnegative integers"))?;
            let c = LaurentPoly::from_json(t.get("coeff").ok_or_else(|| bad("term without coeff"))?).map_err(|e| HorError::Json(e.to_string()))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

pub fn eval_laurent(c: &LaurentPoly, s: &[BigRational; 3]) -> BigRational {
    let mut acc = BigRational::zero();
    for (e, k) in c.terms() {
        let Exponent { a1, a2, a3 } = *e;
        let mut t = BigRational::from_integer(k.clone());
        t *= num_traits::pow(s[0].clone(), a1 as usize);
        t *= num_traits::pow(s[1].clone(), a2 as usize);
        let p3 = num_traits::pow(s[2].clone(), a3.unsigned_abs() as usize);
        if a3 >= 0 {
            t *= p3;
        } else {
            t /= p3;
        }
        acc += t;
    }
    acc
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
                .collect();
            let coeff = if c.is_one() && !mono.is_empty() {
                String::new()
            } else if (-c).is_one() && !mono.is_empty() {
                "-".to_string()
            } else if mono.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*")
            };
            parts.push(format!("{coeff}{}", mono.join("*")));
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// The rational number one, for callers building points.
pub fn one() -> BigRational {
    BigRational::one()
}
