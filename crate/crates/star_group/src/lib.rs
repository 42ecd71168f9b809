//! Triples of Laurent polynomials solving `aa* + bb* + cc* - abc = (3 s1 s2 - s1^3)/s3`
//! and the group generated by sign changes, permutations, braid moves, `s3`-rescalings
//! and the star-Viete involutions.

use std::fmt;

use laurent_core::{markov_rhs, lp, LaurentPoly};
use markov_classical::{reduce_to_root, MarkovError, MarkovTriple, Viete};

pub use markov_classical::Viete as VieteIndex;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StarTriple(pub [LaurentPoly; 3]);

impl StarTriple {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> Self {
        StarTriple([a, b, c])
    }

    /// The initial solution `I = (s1, s1/s3, s1)`.
    pub fn initial() -> Self {
        StarTriple([lp("s1"), lp("s1*s3^-1"), lp("s1")])
    }

    pub fn star_each(&self) -> Self {
        StarTriple(self.0.clone().map(|f| f.star()))
    }

    pub fn evaluate(&self) -> MarkovTriple {
        MarkovTriple(self.0.clone().map(|f| f.evaluate_at_s0()))
    }

    /// Reorders entries: result entry `k` is entry `perm[k]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        StarTriple(perm.map(|i| self.0[i].clone()))
    }
}

impl fmt::Display for StarTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Generators of the star-Markov group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarGen {
    /// `((-1)^i a, (-1)^(i+j) b, (-1)^j c)`.
    Lambda(u8, u8),
    Sigma1,
    Sigma2,
    /// `(-a*, c*, b* - ac)`.
    Tau1,
    /// `(b*, a* - bc, -c*)`.
    Tau2,
    /// `(s3^i a, s3^(-i-j) b, s3^j c)`.
    Mu(i32, i32),
    /// Star-Viete involution.
    V(Viete),
}

impl StarGen {
    pub fn apply(self, t: &StarTriple) -> StarTriple {
        let [a, b, c] = &t.0;
        let sgn = |k: u8, x: &LaurentPoly| if k % 2 == 1 { -x } else { x.clone() };
        match self {
            StarGen::Lambda(i, j) => StarTriple([sgn(i, a), sgn(i + j, b), sgn(j, c)]),
            StarGen::Sigma1 => StarTriple([b.clone(), a.clone(), c.clone()]),
            StarGen::Sigma2 => StarTriple([a.clone(), c.clone(), b.clone()]),
            StarGen::Tau1 => StarTriple([-a.star(), c.star(), b.star() - a * c]),
            StarGen::Tau2 => StarTriple([b.star(), a.star() - b * c, -c.star()]),
            StarGen::Mu(i, j) => StarTriple([a.shift_s3(i), b.shift_s3(-i - j), c.shift_s3(j)]),
            StarGen::V(Viete::V1) => StarTriple([b * c - a.star(), b.star(), c.star()]),
            StarGen::V(Viete::V2) => StarTriple([a.star(), a * c - b.star(), c.star()]),
            StarGen::V(Viete::V3) => StarTriple([a.star(), b.star(), a * b - c.star()]),
        }
    }

    /// Image in the classical group; `Mu` maps to the identity.
    pub fn classical(self) -> Option<markov_classical::ClassicalGen> {
        use markov_classical::ClassicalGen as C;
        Some(match self {
            StarGen::Lambda(i, j) => C::Lambda(i, j),
            StarGen::Sigma1 => C::Sigma1,
            StarGen::Sigma2 => C::Sigma2,
            StarGen::Tau1 => C::Tau1,
            StarGen::Tau2 => C::Tau2,
            StarGen::Mu(..) => return None,
            StarGen::V(v) => C::V(v),
        })
    }
}

/// Applies the composition `g_1 g_2 ... g_k`; the rightmost generator acts first.
pub fn apply_composition(gens: &[StarGen], t: &StarTriple) -> StarTriple {
    gens.iter().rev().fold(t.clone(), |acc, g| g.apply(&acc))
}

/// Which of the three equivalent forms of the equation to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquationForm {
    /// `aa* + bb* + cc* - abc`.
    Standard,
    /// `aa* + bb* + cc* - ab*c`.
    StarredMiddle,
    /// `aa* + bb* + cc* - a*bc*`.
    StarredOuter,
}

pub fn check_star_markov(t: &StarTriple) -> bool {
    check_star_markov_form(t, EquationForm::Standard)
}

pub fn check_star_markov_form(t: &StarTriple, form: EquationForm) -> bool {
    let [a, b, c] = &t.0;
    let norm = &(&(a * &a.star()) + &(b * &b.star())) + &(c * &c.star());
    let cubic = match form {
        EquationForm::Standard => &(a * b) * c,
        EquationForm::StarredMiddle => &(a * &b.star()) * c,
        EquationForm::StarredOuter => &(&a.star() * b) * &c.star(),
    };
    norm - cubic == markov_rhs()
}

pub fn evaluate_triple(t: &StarTriple) -> MarkovTriple {
    t.evaluate()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error(transparent)]
    Markov(#[from] MarkovError),
}

/// `v^p I`, where `v^p` is the Viete word carrying `(3,3,3)` to `p`.
pub fn distinguished_element(p: &MarkovTriple) -> Result<StarTriple, GroupError> {
    let down = reduce_to_root(p)?;
    // `down` carries p to the root; replaying it backwards carries the root to p.
    Ok(down.0.iter().rev().fold(StarTriple::initial(), |acc, v| StarGen::V(*v).apply(&acc)))
}

/// The `(i, j)` with `t2 = Mu(i, j) t1`, if one exists.
pub fn g4_relation(t1: &StarTriple, t2: &StarTriple) -> Option<(i32, i32)> {
    let shift = |x: &LaurentPoly, y: &LaurentPoly| -> Option<i32> {
        let k = y.s3_valuation()? - x.s3_valuation()?;
        (x.shift_s3(k) == *y).then_some(k)
    };
    let i = shift(&t1.0[0], &t2.0[0])?;
    let j = shift(&t1.0[2], &t2.0[2])?;
    (t1.0[1].shift_s3(-i - j) == t2.0[1]).then_some((i, j))
}

/// Representative of the `Mu`-orbit whose first and last entries have `s3`-valuation 0.
pub fn g4_normalize(t: &StarTriple) -> StarTriple {
    let i = -t.0[0].s3_valuation().unwrap_or(0);
    let j = -t.0[2].s3_valuation().unwrap_or(0);
    StarGen::Mu(i, j).apply(t)
}

pub use markov_classical::Relation;

/// The classical relations lifted to the star group, plus the relations involving the
/// rescalings `Mu(i, j)` for `|i|, |j| <= 2`.
pub fn star_relations() -> Vec<Relation<StarGen>> {
    use StarGen::*;
    let lift = |g: markov_classical::ClassicalGen| -> StarGen {
        use markov_classical::ClassicalGen as C;
        match g {
            C::Lambda(i, j) => Lambda(i, j),
            C::Sigma1 => Sigma1,
            C::Sigma2 => Sigma2,
            C::Tau1 => Tau1,
            C::Tau2 => Tau2,
            C::V(v) => V(v),
        }
    };
    let mut out: Vec<Relation<StarGen>> = markov_classical::classical_relations()
        .into_iter()
        .map(|r| Relation::new(r.name, r.lhs.into_iter().map(lift).collect(), r.rhs.into_iter().map(lift).collect()))
        .collect();
    for i in -2..=2 {
        for j in -2..=2 {
            for k in 0..2u8 {
                for l in 0..2u8 {
                    out.push(Relation::new(
                        format!("l{k}{l} m({i},{j}) l{k}{l} = m({i},{j})"),
                        vec![Lambda(k, l), Mu(i, j), Lambda(k, l)],
                        vec![Mu(i, j)],
                    ));
                }
            }
            out.push(Relation::new(format!("s1 m({i},{j}) s1 = m({},{j})", -i - j), vec![Sigma1, Mu(i, j), Sigma1], vec![Mu(-i - j, j)]));
            out.push(Relation::new(format!("s2 m({i},{j}) s2 = m({i},{})", -i - j), vec![Sigma2, Mu(i, j), Sigma2], vec![Mu(i, -i - j)]));
            for v in Viete::ALL {
                out.push(Relation::new(format!("{v} m({i},{j}) {v} = m({},{})", -i, -j), vec![V(v), Mu(i, j), V(v)], vec![Mu(-i, -j)]));
            }
        }
    }
    out
}

/// Seeded pseudo-random Laurent polynomial triples with small support, for identity checks.
pub fn random_triples(seed: u64, n: usize) -> Vec<StarTriple> {
    use laurent_core::Exponent;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let poly = |rng: &mut rand_chacha::ChaCha8Rng| {
        let k = rng.gen_range(1..=4);
        LaurentPoly::from_terms((0..k).map(|_| {
            let e = Exponent::new(rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(-2..3));
            (e, rng.gen_range(-5i64..=5))
        }))
    };
    (0..n).map(|_| StarTriple([poly(&mut rng), poly(&mut rng), poly(&mut rng)])).collect()
}

/// Checks every relation on every sample; returns the names of failing relations.
pub fn failing_relations<G: Copy>(
    relations: &[Relation<G>],
    samples: &[StarTriple],
    apply: impl Fn(&[G], &StarTriple) -> StarTriple,
) -> Vec<String> {
    relations
        .iter()
        .filter(|r| samples.iter().any(|t| apply(&r.lhs, t) != apply(&r.rhs, t)))
        .map(|r| r.name.clone())
        .collect()
}
