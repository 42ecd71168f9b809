//! The generators `Λ, Σ, T, M, V` and their relations.

use std::fmt;
use std::str::FromStr;

use crate::endo::{unit, x, NuEndo};
use crate::xpoly::XPoly;
use crate::HorError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Gen {
    Lambda(u8, u8),
    Sigma1,
    Sigma2,
    T1,
    T2,
    M(i32, i32),
    V1,
    V2,
    V3,
}

fn sx(sign: bool, s3: i32, i: usize) -> XPoly {
    x(i).scale(&unit(sign, s3))
}

impl Gen {
    pub fn endo(self) -> NuEndo {
        let xx = |a: usize, b: usize| x(a).mul(&x(b));
        match self {
            Gen::Lambda(i, j) => {
                let (i, j) = (i % 2 == 1, j % 2 == 1);
                NuEndo::new(sx(i, 0, 1), sx(i ^ j, 0, 3), sx(j, 0, 5))
            }
            Gen::Sigma1 => NuEndo::new(x(3), x(1), x(5)),
            Gen::Sigma2 => NuEndo::new(x(1), x(5), x(3)),
            Gen::T1 => NuEndo::new(x(2).neg(), x(6).sub(&xx(1, 3)), x(4)),
            Gen::T2 => NuEndo::new(x(4).sub(&xx(1, 5)), x(2), x(6).neg()),
            Gen::M(i, j) => NuEndo::new(sx(false, -i, 1), sx(false, i + j, 3), sx(false, -j, 5)),
            Gen::V1 => NuEndo::new(xx(3, 5).sub(&x(2)), x(4), x(6)),
            Gen::V2 => NuEndo::new(x(2), xx(1, 5).sub(&x(4)), x(6)),
            Gen::V3 => NuEndo::new(x(2), x(4), xx(1, 3).sub(&x(6))),
        }
    }

    /// The inverse as a word.
    pub fn inverse(self) -> Vec<Gen> {
        match self {
            Gen::M(i, j) => vec![Gen::M(-i, -j)],
            Gen::T1 => vec![Gen::Sigma2, Gen::V3, Gen::Lambda(1, 1)],
            Gen::T2 => vec![Gen::V1, Gen::Lambda(1, 1), Gen::Sigma1],
            g => vec![g],
        }
    }
}

/// Composition `w[0] ∘ w[1] ∘ ...`; the empty word is the identity.
pub fn compose_word(w: &[Gen]) -> NuEndo {
    w.iter().fold(NuEndo::identity(), |acc, g| acc.compose(&g.endo()))
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Lambda(i, j) => write!(f, "Lambda({i},{j})"),
            Gen::M(i, j) => write!(f, "M({i},{j})"),
            g => write!(f, "{g:?}"),
        }
    }
}

impl FromStr for Gen {
    type Err = HorError;
    fn from_str(s: &str) -> Result<Self, HorError> {
        let s = s.trim();
        let bad = || HorError::UnknownGenerator(s.to_string());
        let args = |rest: &str| -> Result<(i32, i32), HorError> {
            let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        };
        Ok(match s {
            "Sigma1" => Gen::Sigma1,
            "Sigma2" => Gen::Sigma2,
            "T1" => Gen::T1,
            "T2" => Gen::T2,
            "V1" => Gen::V1,
            "V2" => Gen::V2,
            "V3" => Gen::V3,
            _ if s.starts_with("Lambda") => {
                let (i, j) = args(&s[6..])?;
                Gen::Lambda(i.rem_euclid(2) as u8, j.rem_euclid(2) as u8)
            }
            _ if s.starts_with('M') => {
                let (i, j) = args(&s[1..])?;
                Gen::M(i, j)
            }
            _ => return Err(bad()),
        })
    }
}

/// A named identity between two words.
pub struct Relation {
    pub name: String,
    pub lhs: Vec<Gen>,
    pub rhs: Vec<Gen>,
}

impl Relation {
    fn new(name: impl Into<String>, lhs: Vec<Gen>, rhs: Vec<Gen>) -> Self {
        Relation { name: name.into(), lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        compose_word(&self.lhs) == compose_word(&self.rhs)
    }
}

/// The relations among the generators, with `M` indices drawn from a small range.
pub fn relations() -> Vec<Relation> {
    use Gen::*;
    let mut out = vec![
        Relation::new("V1 = Lambda(1,1) Sigma1 T2", vec![V1], vec![Lambda(1, 1), Sigma1, T2]),
        Relation::new("V2 = Lambda(1,0) Sigma2 T1", vec![V2], vec![Lambda(1, 0), Sigma2, T1]),
        Relation::new("V3 = Lambda(1,1) T1 Sigma2", vec![V3], vec![Lambda(1, 1), T1, Sigma2]),
        Relation::new("T1 T2 T1 = T2 T1 T2", vec![T1, T2, T1], vec![T2, T1, T2]),
        Relation::new("Sigma1 Sigma2 Sigma1 = Sigma2 Sigma1 Sigma2", vec![Sigma1, Sigma2, Sigma1], vec![Sigma2, Sigma1, Sigma2]),
    ];
    for g in [Sigma1, Sigma2, V1, V2, V3] {
        out.push(Relation::new(format!("{g}^2 = 1"), vec![g, g], vec![]));
    }
    for (a, b, c) in [(Sigma1, V1, V2), (Sigma2, V1, V1), (Sigma1, V2, V1), (Sigma2, V2, V3), (Sigma1, V3, V3), (Sigma2, V3, V2)] {
        out.push(Relation::new(format!("{a} {b} {a} = {c}"), vec![a, b, a], vec![c]));
    }
    for i in 0..2u8 {
        for j in 0..2u8 {
            let l = Lambda(i, j);
            out.push(Relation::new(format!("{l}^2 = 1"), vec![l, l], vec![]));
            out.push(Relation::new(format!("Sigma1 {l} Sigma1 = Lambda({},{j})", (i + j) % 2), vec![Sigma1, l, Sigma1], vec![Lambda((i + j) % 2, j)]));
            out.push(Relation::new(format!("Sigma2 {l} Sigma2 = Lambda({i},{})", (i + j) % 2), vec![Sigma2, l, Sigma2], vec![Lambda(i, (i + j) % 2)]));
            for v in [V1, V2, V3] {
                out.push(Relation::new(format!("{l} {v} {l} = {v}"), vec![l, v, l], vec![v]));
            }
        }
    }
    for (i, j) in [(1, 0), (0, 1), (2, -1), (-1, 3)] {
        let m = M(i, j);
        out.push(Relation::new(format!("Sigma1 {m} Sigma1 = M({},{j})", -i - j), vec![Sigma1, m, Sigma1], vec![M(-i - j, j)]));
        out.push(Relation::new(format!("Sigma2 {m} Sigma2 = M({i},{})", -i - j), vec![Sigma2, m, Sigma2], vec![M(i, -i - j)]));
        out.push(Relation::new(format!("{m} M(1,1) = M({},{})", i + 1, j + 1), vec![m, M(1, 1)], vec![M(i + 1, j + 1)]));
        for v in [V1, V2, V3] {
            out.push(Relation::new(format!("{v} {m} {v} = M({},{})", -i, -j), vec![v, m, v], vec![M(-i, -j)]));
        }
        for l in [Lambda(1, 0), Lambda(1, 1)] {
            out.push(Relation::new(format!("{l} {m} {l} = {m}"), vec![l, m, l], vec![m]));
        }
    }
    out
}

/// All generators with `M` indices in `-1..=1`.
pub fn sample_generators() -> Vec<Gen> {
    let mut g = vec![Gen::Sigma1, Gen::Sigma2, Gen::T1, Gen::T2, Gen::V1, Gen::V2, Gen::V3];
    for i in 0..2 {
        for j in 0..2 {
            g.push(Gen::Lambda(i, j));
        }
    }
    for i in -1..=1 {
        for j in -1..=1 {
            g.push(Gen::M(i, j));
        }
    }
    g
}
