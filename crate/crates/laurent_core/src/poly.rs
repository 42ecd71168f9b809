use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

/// Exponent of a monomial `s1^a1 s2^a2 s3^a3`. Ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub a1: u32,
    pub a2: u32,
    pub a3: i32,
}

impl Exponent {
    pub const fn new(a1: u32, a2: u32, a3: i32) -> Self {
        Exponent { a1, a2, a3 }
    }

    /// Homogeneous degree with weights (1,1,1).
    pub fn degree(&self) -> i64 {
        self.a1 as i64 + self.a2 as i64 + self.a3 as i64
    }

    /// Quasi-homogeneous degree with weights (1,2,3).
    pub fn quasi_degree(&self) -> i64 {
        self.a1 as i64 + 2 * self.a2 as i64 + 3 * self.a3 as i64
    }

    fn mul(self, o: Exponent) -> Exponent {
        Exponent::new(self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3)
    }

    /// Image under the star involution: `s1^a s2^b s3^c -> s2^a s1^b s3^-(a+b+c)`.
    pub fn star(self) -> Exponent {
        Exponent::new(self.a2, self.a1, -(self.a1 as i32 + self.a2 as i32 + self.a3))
    }
}

/// Sparse Laurent polynomial in `Z[s1, s2, s3, s3^-1]`.
///
/// Zero coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(Exponent::new(0, 0, 0), c)
    }

    pub fn monomial<T: Into<BigInt>>(e: Exponent, c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn s1() -> Self {
        Self::monomial(Exponent::new(1, 0, 0), 1)
    }

    pub fn s2() -> Self {
        Self::monomial(Exponent::new(0, 1, 0), 1)
    }

    pub fn s3() -> Self {
        Self::monomial(Exponent::new(0, 0, 1), 1)
    }

    /// `s3^k` for any integer `k`.
    pub fn s3_pow(k: i32) -> Self {
        Self::monomial(Exponent::new(0, 0, k), 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, T>(it: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, T)>,
        T: Into<BigInt>,
    {
        let mut terms: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in it {
            *terms.entry(e).or_default() += c.into();
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Exponent::new(0, 0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponent) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// All `s3` exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.a3 >= 0)
    }

    /// Minimal `s3` exponent, or `None` for the zero polynomial.
    pub fn s3_valuation(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.a3).min()
    }

    /// Multiplies by `s3^k`.
    pub fn shift_s3(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(e.a1, e.a2, e.a3 + k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f*(s1,s2,s3) = f(s2/s3, s1/s3, 1/s3)`.
    pub fn star(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e.star(), c.clone())).collect() }
    }

    /// Value at `s0 = (3,3,1)`.
    pub fn evaluate_at_s0(&self) -> BigInt {
        let three = BigInt::from(3);
        let mut pows: HashMap<u32, BigInt> = HashMap::new();
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let k = e.a1 + e.a2;
            let p = pows.entry(k).or_insert_with(|| num_traits::pow(three.clone(), k as usize));
            total += c * &*p;
        }
        total
    }

    /// Floating point value at `(s1, s2, s3)`.
    pub fn evaluate_f64(&self, s: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                c.to_f64().unwrap_or(f64::NAN)
                    * s[0].powi(e.a1 as i32)
                    * s[1].powi(e.a2 as i32)
                    * s[2].powi(e.a3)
            })
            .sum()
    }

    /// Exact division in the Laurent ring. Returns `None` when `d` does not divide `self`.
    ///
    /// Powers of `s3` are units, so the divisor is stripped of its `s3` valuation and
    /// both sides are shifted into the polynomial ring before long division.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let dv = d.s3_valuation()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nv = self.s3_valuation().unwrap_or(0);
        let d0 = d.shift_s3(-dv);
        let (lt_e, lt_c) = d0.leading_term()?;
        let lt_c = lt_c.clone();
        let mut rem = self.shift_s3(-nv);
        let mut quot = BTreeMap::new();
        while let Some((e, c)) = rem.leading_term() {
            if e.a1 < lt_e.a1 || e.a2 < lt_e.a2 || e.a3 < lt_e.a3 {
                return None;
            }
            let (q, r) = c.div_rem(&lt_c);
            if !r.is_zero() {
                return None;
            }
            let qe = Exponent::new(e.a1 - lt_e.a1, e.a2 - lt_e.a2, e.a3 - lt_e.a3);
            let step = LaurentPoly::monomial(qe, q.clone());
            rem = &rem - &(&step * &d0);
            quot.insert(qe, q);
        }
        Some(LaurentPoly { terms: quot }.shift_s3(nv - dv))
    }

    fn add_impl(&self, o: &LaurentPoly, sign: bool) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let entry = terms.entry(*e).or_default();
            if sign {
                *entry += c;
            } else {
                *entry -= c;
            }
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }

    fn mul_impl(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let bits = |p: &LaurentPoly| p.terms.values().map(|c| c.bits()).max().unwrap_or(0);
        let len_bits = 64 - (self.len().min(o.len()) as u64).leading_zeros() as u64;
        if bits(self) <= 62 && bits(o) <= 62 && bits(self) + bits(o) + len_bits <= 124 {
            return self.mul_small(o);
        }
        let limbs = ((bits(self) + bits(o) + len_bits + 1) as usize).div_ceil(64);
        let words = |p: &LaurentPoly| (bits(p) as usize).div_ceil(64);
        macro_rules! fixed {
            ($(($a:literal, $b:literal, $l:literal)),*) => {
                match (words(self), words(o)) {
                    $(($a, $b) if limbs <= $l => return self.mul_fixed::<$a, $b, $l>(o),)*
                    _ => {}
                }
            };
        }
        fixed!(
            (1, 1, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6),
            (2, 1, 4), (2, 2, 5), (2, 3, 6), (2, 4, 7),
            (3, 1, 5), (3, 2, 6), (3, 3, 7), (3, 4, 8),
            (4, 1, 6), (4, 2, 7), (4, 3, 8), (4, 4, 9)
        );
        self.mul_wide(o, limbs)
    }

    /// Product with fixed-width two's-complement accumulators of `limbs` 64-bit words,
    /// wide enough that no partial sum overflows.
    fn mul_wide(&self, o: &LaurentPoly, limbs: usize) -> LaurentPoly {
        // Magnitudes are stored flat, each padded to the widest coefficient of its factor.
        let split = |p: &LaurentPoly| -> (Vec<(Exponent, bool)>, Vec<u64>, usize) {
            let digits: Vec<Vec<u64>> = p.terms.values().map(|c| c.magnitude().to_u64_digits()).collect();
            let w = digits.iter().map(Vec::len).max().unwrap_or(1);
            let mut flat = vec![0u64; w * digits.len()];
            for (k, d) in digits.iter().enumerate() {
                flat[k * w..k * w + d.len()].copy_from_slice(d);
            }
            (p.terms.iter().map(|(e, c)| (*e, c.is_negative())).collect(), flat, w)
        };
        let ((a, da, wa), (b, db, wb)) = (split(self), split(o));
        let mut index = SlotIndex::new(self, o);
        let mut keys: Vec<Exponent> = Vec::new();
        let mut arena: Vec<u64> = Vec::new();
        let len = (wa + wb).min(limbs);
        let mut prod = vec![0u64; wa + wb];
        for (x, &(e1, n1)) in a.iter().enumerate() {
            let m1 = &da[x * wa..(x + 1) * wa];
            for (y, &(e2, n2)) in b.iter().enumerate() {
                let m2 = &db[y * wb..(y + 1) * wb];
                let e = e1.mul(e2);
                let slot = index.slot(e, || {
                    keys.push(e);
                    arena.resize(arena.len() + limbs, 0);
                    keys.len() - 1
                });
                prod.fill(0);
                for (i, &u) in m1.iter().enumerate() {
                    let mut carry = 0u128;
                    for (j, &v) in m2.iter().enumerate() {
                        let t = prod[i + j] as u128 + u as u128 * v as u128 + carry;
                        prod[i + j] = t as u64;
                        carry = t >> 64;
                    }
                    prod[i + wb] = carry as u64;
                }
                let acc = &mut arena[slot * limbs..(slot + 1) * limbs];
                if n1 ^ n2 {
                    sub_limbs(acc, &prod[..len]);
                } else {
                    add_limbs(acc, &prod[..len]);
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (k, e) in keys.into_iter().enumerate() {
            let words = &arena[k * limbs..(k + 1) * limbs];
            if words.iter().all(|&w| w == 0) {
                continue;
            }
            let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
            terms.insert(e, BigInt::from_signed_bytes_le(&bytes));
        }
        LaurentPoly { terms }
    }

    /// Product with coefficients of at most `A` and `B` words, accumulated in
    /// `L`-word two's complement.
    fn mul_fixed<const A: usize, const B: usize, const L: usize>(&self, o: &LaurentPoly) -> LaurentPoly {
        fn split<const W: usize>(p: &LaurentPoly) -> Vec<(Exponent, bool, [u64; W])> {
            p.terms
                .iter()
                .map(|(e, c)| {
                    let mut m = [0u64; W];
                    for (w, d) in m.iter_mut().zip(c.magnitude().iter_u64_digits()) {
                        *w = d;
                    }
                    (*e, c.is_negative(), m)
                })
                .collect()
        }
        let (a, b) = (split::<A>(self), split::<B>(o));
        let mut index = SlotIndex::new(self, o);
        let mut keys: Vec<Exponent> = Vec::new();
        let mut arena: Vec<[u64; L]> = Vec::new();
        for &(e1, n1, m1) in &a {
            for &(e2, n2, m2) in &b {
                let e = e1.mul(e2);
                let slot = index.slot(e, || {
                    keys.push(e);
                    arena.push([0; L]);
                    keys.len() - 1
                });
                let mut p = [0u64; L];
                for i in 0..A {
                    let mut carry = 0u64;
                    for j in 0..B {
                        let t = p[i + j] as u128 + m1[i] as u128 * m2[j] as u128 + carry as u128;
                        p[i + j] = t as u64;
                        carry = (t >> 64) as u64;
                    }
                    p[i + B] = carry;
                }
                let acc = &mut arena[slot];
                if n1 ^ n2 {
                    let mut borrow = false;
                    for (w, q) in acc.iter_mut().zip(p) {
                        let (d, b1) = w.overflowing_sub(q);
                        let (d, b2) = d.overflowing_sub(borrow as u64);
                        *w = d;
                        borrow = b1 | b2;
                    }
                } else {
                    let mut carry = false;
                    for (w, q) in acc.iter_mut().zip(p) {
                        let (t, c1) = w.overflowing_add(q);
                        let (t, c2) = t.overflowing_add(carry as u64);
                        *w = t;
                        carry = c1 | c2;
                    }
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (e, words) in keys.into_iter().zip(arena) {
            if words.iter().any(|&w| w != 0) {
                let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
                terms.insert(e, BigInt::from_signed_bytes_le(&bytes));
            }
        }
        LaurentPoly { terms }
    }

    /// Product when every partial sum fits in an `i128`.
    fn mul_small(&self, o: &LaurentPoly) -> LaurentPoly {
        let a: Vec<(Exponent, i64)> =
            self.terms.iter().map(|(e, c)| (*e, c.to_i64().unwrap())).collect();
        let b: Vec<(Exponent, i64)> =
            o.terms.iter().map(|(e, c)| (*e, c.to_i64().unwrap())).collect();
        let mut acc: FxHashMap<Exponent, i128> = FxHashMap::default();
        acc.reserve(a.len() * 2);
        for (e1, c1) in &a {
            for (e2, c2) in &b {
                *acc.entry(e1.mul(*e2)).or_insert(0) += *c1 as i128 * *c2 as i128;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (e, BigInt::from(c))).collect(),
        }
    }
}

/// `acc += x` modulo `2^(64 acc.len())`.
fn add_limbs(acc: &mut [u64], x: &[u64]) {
    let mut carry = false;
    for (i, a) in acc.iter_mut().enumerate() {
        let y = x.get(i).copied().unwrap_or(0);
        if i >= x.len() && !carry {
            break;
        }
        let (s1, c1) = a.overflowing_add(y);
        let (s2, c2) = s1.overflowing_add(carry as u64);
        *a = s2;
        carry = c1 || c2;
    }
}

/// `acc -= x` modulo `2^(64 acc.len())`.
fn sub_limbs(acc: &mut [u64], x: &[u64]) {
    let mut borrow = false;
    for (i, a) in acc.iter_mut().enumerate() {
        let y = x.get(i).copied().unwrap_or(0);
        if i >= x.len() && !borrow {
            break;
        }
        let (d1, b1) = a.overflowing_sub(y);
        let (d2, b2) = d1.overflowing_sub(borrow as u64);
        *a = d2;
        borrow = b1 || b2;
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.add_impl(o, true)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.add_impl(o, false)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(o)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$m(o)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Which ring operation [`arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Ring operation by name; `Neg` ignores `q`.
pub fn arith(kind: ArithKind, p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    match kind {
        ArithKind::Add => p + q,
        ArithKind::Sub => p - q,
        ArithKind::Mul => p * q,
        ArithKind::Neg => -p,
    }
}

impl fmt::Display for LaurentPoly {
    /// Human readable form, largest exponent first, e.g. `s1^2*s2 - s1*s3 - s2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            for (name, k) in [("s1", e.a1 as i32), ("s2", e.a2 as i32), ("s3", e.a3)] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
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

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Maps product exponents to accumulator slots. A dense table is used when the
/// exponent box of the product is small, or when both factors are
/// quasi-homogeneous so that `(a1, a2)` determines `a3`.
enum SlotIndex {
    Dense { lo: [i64; 3], dims: [usize; 3], table: Vec<u32> },
    Hash(FxHashMap<Exponent, usize>),
}

const DENSE_LIMIT: usize = 1 << 22;

impl SlotIndex {
    fn new(f: &LaurentPoly, g: &LaurentPoly) -> Self {
        let range = |p: &LaurentPoly, k: usize| {
            let v = p.terms.keys().map(move |e| [e.a1 as i64, e.a2 as i64, e.a3 as i64][k]);
            (v.clone().min().unwrap(), v.max().unwrap())
        };
        let mut lo = [0i64; 3];
        let mut dims = [1usize; 3];
        for k in 0..3 {
            let ((a, b), (c, d)) = (range(f, k), range(g, k));
            lo[k] = a + c;
            dims[k] = (b + d - a - c + 1) as usize;
        }
        let weighted = |p: &LaurentPoly| {
            let mut w = p.terms.keys().map(|e| e.a1 as i64 + 2 * e.a2 as i64 + 3 * e.a3 as i64);
            let first = w.next();
            w.all(|x| Some(x) == first)
        };
        let full = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
        if full.is_none_or(|n| n > DENSE_LIMIT) {
            if !(weighted(f) && weighted(g) && dims[0].saturating_mul(dims[1]) <= DENSE_LIMIT) {
                let mut m = FxHashMap::default();
                m.reserve(f.len() * 2);
                return SlotIndex::Hash(m);
            }
            dims[2] = 1;
            lo[2] = 0;
        }
        SlotIndex::Dense { lo, dims, table: vec![u32::MAX; dims[0] * dims[1] * dims[2]] }
    }

    fn slot(&mut self, e: Exponent, fresh: impl FnOnce() -> usize) -> usize {
        match self {
            SlotIndex::Hash(m) => *m.entry(e).or_insert_with(fresh),
            SlotIndex::Dense { lo, dims, table } => {
                let i = (e.a1 as i64 - lo[0]) as usize;
                let j = (e.a2 as i64 - lo[1]) as usize;
                let k = if dims[2] == 1 { 0 } else { (e.a3 as i64 - lo[2]) as usize };
                let cell = &mut table[(i * dims[1] + j) * dims[2] + k];
                if *cell == u32::MAX {
                    *cell = fresh() as u32;
                }
                *cell as usize
            }
        }
    }
}
