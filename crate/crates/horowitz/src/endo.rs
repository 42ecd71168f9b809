//! ν-endomorphisms of `Z[s][x1..x6]` given by the images `(P, Q, R)` of `x1, x3, x5`.

use std::fmt;

use laurent_core::LaurentPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::xpoly::XPoly;
use crate::HorError;

pub const NVARS: usize = 6;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NuEndo {
    pub p: XPoly,
    pub q: XPoly,
    pub r: XPoly,
}

pub fn x(i: usize) -> XPoly {
    XPoly::var(NVARS, i - 1)
}

/// `H = x1 x2 + x3 x4 + x5 x6 - x1 x3 x5`.
pub fn h() -> XPoly {
    x(1).mul(&x(2)).add(&x(3).mul(&x(4))).add(&x(5).mul(&x(6))).sub(&XPoly::product(NVARS, [&x(1), &x(3), &x(5)]))
}

impl NuEndo {
    pub fn new(p: XPoly, q: XPoly, r: XPoly) -> Self {
        NuEndo { p, q, r }
    }

    pub fn identity() -> Self {
        NuEndo::new(x(1), x(3), x(5))
    }

    pub fn parse(p: &str, q: &str, r: &str) -> Result<Self, HorError> {
        Ok(NuEndo::new(XPoly::parse(NVARS, p)?, XPoly::parse(NVARS, q)?, XPoly::parse(NVARS, r)?))
    }

    pub fn odd(&self) -> [&XPoly; 3] {
        [&self.p, &self.q, &self.r]
    }

    /// Images of `x1..x6`.
    pub fn images(&self) -> Vec<XPoly> {
        vec![self.p.clone(), self.p.nu(), self.q.clone(), self.q.nu(), self.r.clone(), self.r.nu()]
    }

    pub fn apply(&self, f: &XPoly) -> XPoly {
        f.substitute(&self.images())
    }

    /// Algebra composition `self ∘ other`: `x ↦ self(other(x))`.
    pub fn compose(&self, other: &NuEndo) -> NuEndo {
        let im = self.images();
        NuEndo::new(other.p.substitute(&im), other.q.substitute(&im), other.r.substitute(&im))
    }

    /// `P·νP + Q·νQ + R·νR − PQR`.
    pub fn h_image(&self) -> XPoly {
        self.apply(&h())
    }

    pub fn preserves_h(&self) -> bool {
        self.h_image() == h()
    }

    pub fn degrees(&self) -> [Option<u32>; 3] {
        [self.p.degree(), self.q.degree(), self.r.degree()]
    }

    /// Jacobian determinant of the specialized map at a rational point.
    pub fn jacobian_det_at(&self, s: &[BigRational; 3], pt: &[BigRational]) -> BigRational {
        let im = self.images();
        let m: Vec<Vec<BigRational>> = im.iter().map(|f| (0..NVARS).map(|j| f.derivative(j).evaluate(s, pt)).collect()).collect();
        det(m)
    }

    /// Monte Carlo certificate of maximal rank: a nonzero Jacobian at one of five pseudo-random points.
    pub fn max_rank(&self, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |nonzero: bool| loop {
            let v = BigRational::new(BigInt::from(rng.gen_range(-40i64..=40)), BigInt::from(rng.gen_range(1i64..=7)));
            if !nonzero || !v.is_zero() {
                return v;
            }
        };
        (0..5).any(|_| {
            let s = [draw(false), draw(false), draw(true)];
            let pt: Vec<BigRational> = (0..NVARS).map(|_| draw(false)).collect();
            !self.jacobian_det_at(&s, &pt).is_zero()
        })
    }

    /// `{"P": .., "Q": .., "R": ..}` with each entry in [`XPoly::to_json`] form.
    pub fn to_json(&self) -> Value {
        json!({"P": self.p.to_json(), "Q": self.q.to_json(), "R": self.r.to_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self, HorError> {
        let get = |k: &str| v.get(k).ok_or_else(|| HorError::Json(format!("missing field {k}"))).and_then(|p| XPoly::from_json(p, NVARS));
        Ok(NuEndo::new(get("P")?, get("Q")?, get("R")?))
    }
}

impl fmt::Display for NuEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x1 -> {}, x3 -> {}, x5 -> {}", self.p, self.q, self.r)
    }
}

pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::from_integer(1.into());
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else { return BigRational::zero() };
        if piv != c {
            m.swap(piv, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    d
}

pub(crate) fn unit(sign: bool, s3: i32) -> LaurentPoly {
    let u = LaurentPoly::s3_pow(s3);
    if sign {
        -u
    } else {
        u
    }
}
