//! Polynomial presentations `(f1*, f2, f3*)` of Markov triples, grown from the seed
//! `(s2, s2(s1^2 - s2) - s3 s1, s1^2 - s2)` by the left and right transforms.

use laurent_core::{lp, BiDegree, BigInt, CoreError, DegreeMatrix, LaurentPoly};
use markov_classical::{
    enumerate_tree, is_markov, tree_path, MarkovError, MarkovTriple, TreeVertex, Turn, VertexKind,
};
use rayon::prelude::*;
use star_group::StarTriple;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("entry {index} is constant")]
    Constant { index: usize },
    #[error("entry {index}: {source}")]
    Entry { index: usize, source: CoreError },
    #[error("bi-degrees are not additive: {0} + {2} != {1}")]
    NotAdditive(BiDegree, BiDegree, BiDegree),
    #[error("transform produced bi-degree {got} where {expected} was predicted")]
    DegreeDrift { expected: BiDegree, got: BiDegree },
    #[error("{0} does not satisfy 0 < a < b, 0 < c < b, 6 <= b")]
    OutOfRange(MarkovTriple),
    #[error(transparent)]
    Markov(#[from] MarkovError),
}

/// Polynomial triple with additive bi-degrees `(d1,q1) + (d3,q3) = (d2,q2)`, each entry
/// nonconstant, quasi-homogeneous and coprime to `s3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleTriple {
    f: [LaurentPoly; 3],
    bd: [BiDegree; 3],
}

impl AdmissibleTriple {
    pub fn new(f1: LaurentPoly, f2: LaurentPoly, f3: LaurentPoly) -> Result<Self, PresentationError> {
        let f = [f1, f2, f3];
        let mut bd = [BiDegree::new(0, 0); 3];
        for (index, p) in f.iter().enumerate() {
            let b = p.bidegree().map_err(|source| PresentationError::Entry { index, source })?;
            if b.d == 0 {
                return Err(PresentationError::Constant { index });
            }
            if p.s3_valuation() != Some(0) {
                return Err(PresentationError::Entry { index, source: CoreError::DivisibleByS3 });
            }
            bd[index] = b;
        }
        if bd[0] + bd[2] != bd[1] {
            return Err(PresentationError::NotAdditive(bd[0], bd[1], bd[2]));
        }
        Ok(AdmissibleTriple { f, bd })
    }

    /// `(s2, s2(s1^2 - s2) - s3 s1, s1^2 - s2)`, which presents `(3,15,6)`.
    pub fn seed() -> Self {
        Self::new(lp("s2"), lp("s2*(s1^2 - s2) - s3*s1"), lp("s1^2 - s2")).expect("seed is admissible")
    }

    pub fn entries(&self) -> &[LaurentPoly; 3] {
        &self.f
    }

    pub fn bidegrees(&self) -> [BiDegree; 3] {
        self.bd
    }

    pub fn degree_matrices(&self) -> [DegreeMatrix; 3] {
        self.bd.map(|b| b.matrix())
    }

    pub fn deviations(&self) -> [i64; 3] {
        self.bd.map(|b| b.deviation())
    }

    /// The solution `(f1*, f2, f3*)`.
    pub fn solution(&self) -> StarTriple {
        StarTriple::new(self.f[0].star(), self.f[1].clone(), self.f[2].star())
    }

    pub fn reversed(&self) -> Self {
        AdmissibleTriple { f: [self.f[2].clone(), self.f[1].clone(), self.f[0].clone()], bd: [self.bd[2], self.bd[1], self.bd[0]] }
    }
}

/// `L f = (mu f1, mu(f1) f2 - s3^d1 f3, f2)`, `R f = (f2, f2 mu(f3) - s3^d3 f1, mu f3)`.
///
/// The bi-degrees of the result are predicted from those of `t` and checked against
/// the recomputed ones.
pub fn transform(kind: Turn, t: &AdmissibleTriple) -> Result<AdmissibleTriple, PresentationError> {
    let [f1, f2, f3] = &t.f;
    let [b1, b2, b3] = t.bd;
    let entry = |index: usize| move |source: CoreError| PresentationError::Entry { index, source };
    let (out, predicted) = match kind {
        Turn::L => {
            let m1 = f1.mu_dual().map_err(entry(0))?;
            let mid = &(&m1 * f2) - &f3.shift_s3(b1.d as i32);
            ([m1, mid, f2.clone()], [b1.dual(), b1.dual() + b2, b2])
        }
        Turn::R => {
            let m3 = f3.mu_dual().map_err(entry(2))?;
            let mid = &(f2 * &m3) - &f1.shift_s3(b3.d as i32);
            ([f2.clone(), mid, m3], [b2, b2 + b3.dual(), b3.dual()])
        }
    };
    let [a, b, c] = out;
    let next = AdmissibleTriple::new(a, b, c)?;
    for (expected, got) in predicted.into_iter().zip(next.bd) {
        if expected != got {
            return Err(PresentationError::DegreeDrift { expected, got });
        }
    }
    Ok(next)
}

/// A presentation of a Markov triple as `(f1*, f2, f3*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSolution {
    pub markov: MarkovTriple,
    /// `(f1, f2, f3)`.
    pub factors: [LaurentPoly; 3],
    /// Present for every triple except the root `(3,3,3)`, whose middle entry is not a polynomial.
    pub admissible: Option<AdmissibleTriple>,
}

impl ReducedSolution {
    pub fn solution(&self) -> StarTriple {
        StarTriple::new(self.factors[0].star(), self.factors[1].clone(), self.factors[2].star())
    }

    fn from_admissible(markov: MarkovTriple, t: AdmissibleTriple) -> Self {
        ReducedSolution { markov, factors: t.f.clone(), admissible: Some(t) }
    }

    /// `I = (s1, s1/s3, s1)`.
    pub fn base_root() -> Self {
        let f = lp("s2*s3^-1");
        ReducedSolution { markov: MarkovTriple::root(), factors: [f.clone(), lp("s1*s3^-1"), f], admissible: None }
    }

    /// `(s1*, s1^2 - s2, s1*)`.
    pub fn base_stem() -> Self {
        let t = AdmissibleTriple::new(lp("s1"), lp("s1^2 - s2"), lp("s1")).expect("stem is admissible");
        ReducedSolution::from_admissible(MarkovTriple::new(3, 6, 3), t)
    }
}

/// The reduced presentation of a positive Markov triple with largest middle entry.
///
/// Triples of the binary tree are reached by replaying their turn sequence from the
/// seed. A triple whose reversal is in the tree gets the reversed presentation.
pub fn reduced_presentation(p: &MarkovTriple) -> Result<ReducedSolution, PresentationError> {
    if !is_markov(p) {
        return Err(MarkovError::NotASolution(p.clone()).into());
    }
    if *p == MarkovTriple::root() {
        return Ok(ReducedSolution::base_root());
    }
    if *p == MarkovTriple::new(3, 6, 3) {
        return Ok(ReducedSolution::base_stem());
    }
    let [a, b, c] = &p.0;
    let zero = BigInt::from(0);
    if !(&zero < a && a < b && &zero < c && c < b && *b >= BigInt::from(6)) {
        return Err(PresentationError::OutOfRange(p.clone()));
    }
    let (path, flip) = match tree_path(p) {
        Ok(path) => (path, false),
        Err(MarkovError::NotInTree(_)) => (tree_path(&p.reversed())?, true),
        Err(e) => return Err(e.into()),
    };
    let mut t = AdmissibleTriple::seed();
    for turn in path {
        t = transform(turn, &t)?;
    }
    if flip {
        t = t.reversed();
    }
    Ok(ReducedSolution::from_admissible(p.clone(), t))
}

/// Presentations of every vertex of the Markov tree up to `depth`, in the order of
/// [`enumerate_tree`]. Each level is computed from the previous one in parallel.
pub fn presentation_tree(depth: usize) -> Result<Vec<(TreeVertex, ReducedSolution)>, PresentationError> {
    let vertices = enumerate_tree(depth);
    let mut out = Vec::with_capacity(vertices.len());
    let mut level = vec![AdmissibleTriple::seed()];
    let mut pending = level.clone().into_iter();
    let mut current_depth = 1;
    for v in vertices {
        let sol = match v.kind {
            VertexKind::Root => ReducedSolution::base_root(),
            VertexKind::Stem => ReducedSolution::base_stem(),
            VertexKind::Binary => {
                if v.depth != current_depth {
                    // enumerate_tree lists children of each parent as L then R, matching this order.
                    level = level
                        .par_iter()
                        .flat_map_iter(|t| [transform(Turn::L, t), transform(Turn::R, t)])
                        .collect::<Result<Vec<_>, _>>()?;
                    pending = level.clone().into_iter();
                    current_depth = v.depth;
                }
                ReducedSolution::from_admissible(v.triple.clone(), pending.next().expect("level sizes agree"))
            }
        };
        out.push((v, sol));
    }
    Ok(out)
}

/// The six deviation triples that occur at tree vertices.
pub const DEVIATION_TRIPLES: [[i64; 3]; 6] =
    [[1, -1, -2], [-1, 1, 2], [-2, -1, 1], [2, 1, -1], [1, 2, 1], [-1, -2, -1]];

/// `2q - 3d` of a quasi-homogeneous polynomial.
pub fn deviation(f: &LaurentPoly) -> Result<i64, CoreError> {
    f.deviation()
}
