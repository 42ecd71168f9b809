//! Integer solutions of `a^2 + b^2 + c^2 = abc`, the classical Viete and braid
//! generators acting on them, the Markov tree and greedy descent to `(3,3,3)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MarkovError {
    #[error("{0} is not a solution of a^2+b^2+c^2=abc")]
    NotASolution(MarkovTriple),
    #[error("{0} is not a positive solution")]
    NotPositive(MarkovTriple),
    #[error("{0} is not a vertex of the Markov tree")]
    NotInTree(MarkovTriple),
}

/// An integer triple, not necessarily a solution.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkovTriple(pub [BigInt; 3]);

impl MarkovTriple {
    pub fn new<A: Into<BigInt>, B: Into<BigInt>, C: Into<BigInt>>(a: A, b: B, c: C) -> Self {
        MarkovTriple([a.into(), b.into(), c.into()])
    }

    pub fn root() -> Self {
        Self::new(3, 3, 3)
    }

    pub fn a(&self) -> &BigInt {
        &self.0[0]
    }

    pub fn b(&self) -> &BigInt {
        &self.0[1]
    }

    pub fn c(&self) -> &BigInt {
        &self.0[2]
    }

    /// Entries sorted ascending; equal for triples that differ by a permutation.
    pub fn sorted(&self) -> [BigInt; 3] {
        let mut v = self.0.clone();
        v.sort();
        v
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|x| x.is_positive())
    }

    pub fn reversed(&self) -> Self {
        let [a, b, c] = self.0.clone();
        MarkovTriple([c, b, a])
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

pub fn is_markov(t: &MarkovTriple) -> bool {
    let [a, b, c] = &t.0;
    a * a + b * b + c * c == a * b * c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    L,
    R,
}

impl Turn {
    pub fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
        }
    }
}

/// `L(x,y,z) = (x, xy-z, y)`, `R(x,y,z) = (y, yz-x, z)`.
pub fn tree_step(kind: Turn, t: &MarkovTriple) -> MarkovTriple {
    let [x, y, z] = &t.0;
    match kind {
        Turn::L => MarkovTriple([x.clone(), x * y - z, y.clone()]),
        Turn::R => MarkovTriple([y.clone(), y * z - x, z.clone()]),
    }
}

/// Classical Viete involution `v_i`, replacing entry `i` by the other root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Viete {
    V1,
    V2,
    V3,
}

impl Viete {
    pub const ALL: [Viete; 3] = [Viete::V1, Viete::V2, Viete::V3];

    pub fn index(self) -> usize {
        match self {
            Viete::V1 => 0,
            Viete::V2 => 1,
            Viete::V3 => 2,
        }
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn apply(self, t: &MarkovTriple) -> MarkovTriple {
        let [a, b, c] = &t.0;
        match self {
            Viete::V1 => MarkovTriple([b * c - a, b.clone(), c.clone()]),
            Viete::V2 => MarkovTriple([a.clone(), a * c - b, c.clone()]),
            Viete::V3 => MarkovTriple([a.clone(), b.clone(), a * b - c]),
        }
    }
}

impl fmt::Display for Viete {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.index() + 1)
    }
}

/// Word of Viete involutions, applied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VieteWord(pub Vec<Viete>);

impl VieteWord {
    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn reversed(&self) -> Self {
        VieteWord(self.0.iter().rev().copied().collect())
    }

    /// Applies the letters in order, first letter first.
    pub fn apply(&self, t: &MarkovTriple) -> MarkovTriple {
        self.0.iter().fold(t.clone(), |acc, v| v.apply(&acc))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Greedy descent: apply `v_i` at the position of the largest entry until `(3,3,3)`.
///
/// Apart from the root, the largest entry of a positive solution is unique, so the
/// rule is unambiguous. The returned letters are in application order.
pub fn reduce_to_root(t: &MarkovTriple) -> Result<VieteWord, MarkovError> {
    if !is_markov(t) {
        return Err(MarkovError::NotASolution(t.clone()));
    }
    if !t.is_positive() {
        return Err(MarkovError::NotPositive(t.clone()));
    }
    let root = MarkovTriple::root();
    let mut cur = t.clone();
    let mut word = Vec::new();
    while cur != root {
        let i = (0..3).max_by(|&i, &j| cur.0[i].cmp(&cur.0[j])).unwrap();
        let v = Viete::from_index(i);
        let next = v.apply(&cur);
        debug_assert!(next.0[i] < cur.0[i]);
        cur = next;
        word.push(v);
    }
    Ok(VieteWord(word))
}

/// Where a vertex sits in the displayed tree: the root `(3,3,3)`, the stem vertex
/// `(3,6,3)`, or a node of the binary tree hanging from `(3,15,6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Root,
    Stem,
    Binary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeVertex {
    pub kind: VertexKind,
    /// Depth: 0 for the root, 1 for `(3,6,3)` and `(3,15,6)`, then one more per turn.
    pub depth: usize,
    /// Turns from `(3,15,6)`; empty for the root and stem.
    pub path: Vec<Turn>,
    pub triple: MarkovTriple,
}

impl TreeVertex {
    pub fn path_string(&self) -> String {
        self.path.iter().map(|t| t.as_char()).collect()
    }
}

/// First vertex of the binary part of the tree.
pub fn binary_root() -> MarkovTriple {
    MarkovTriple::new(3, 15, 6)
}

/// All tree vertices up to `depth`, level by level, left to right within a level.
pub fn enumerate_tree(depth: usize) -> Vec<TreeVertex> {
    let mut out = vec![TreeVertex { kind: VertexKind::Root, depth: 0, path: vec![], triple: MarkovTriple::root() }];
    if depth == 0 {
        return out;
    }
    out.push(TreeVertex { kind: VertexKind::Stem, depth: 1, path: vec![], triple: MarkovTriple::new(3, 6, 3) });
    let mut level = vec![TreeVertex { kind: VertexKind::Binary, depth: 1, path: vec![], triple: binary_root() }];
    for d in 1..=depth {
        let mut next = Vec::with_capacity(level.len() * 2);
        if d < depth {
            for v in &level {
                for turn in [Turn::L, Turn::R] {
                    let mut path = v.path.clone();
                    path.push(turn);
                    next.push(TreeVertex {
                        kind: VertexKind::Binary,
                        depth: d + 1,
                        path,
                        triple: tree_step(turn, &v.triple),
                    });
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    out
}

/// Turn sequence from `(3,15,6)` to `t`, found by walking parent links.
///
/// An L-child `(x, xy-z, y)` has first entry smaller than its last, an R-child
/// `(y, yz-x, z)` the opposite, which identifies the last turn.
pub fn tree_path(t: &MarkovTriple) -> Result<Vec<Turn>, MarkovError> {
    if !is_markov(t) {
        return Err(MarkovError::NotASolution(t.clone()));
    }
    if !t.is_positive() {
        return Err(MarkovError::NotPositive(t.clone()));
    }
    let start = binary_root();
    let mut cur = t.clone();
    let mut turns = Vec::new();
    while cur != start {
        let [a, b, c] = &cur.0;
        if !(a < b && c < b) || a == c {
            return Err(MarkovError::NotInTree(t.clone()));
        }
        cur = if a < c {
            turns.push(Turn::L);
            MarkovTriple([a.clone(), c.clone(), a * c - b])
        } else {
            turns.push(Turn::R);
            MarkovTriple([a * c - b, a.clone(), c.clone()])
        };
    }
    turns.reverse();
    Ok(turns)
}

/// Generators of the classical Markov group acting on integer triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalGen {
    /// Sign change `((-1)^i a, (-1)^(i+j) b, (-1)^j c)`.
    Lambda(u8, u8),
    Sigma1,
    Sigma2,
    Tau1,
    Tau2,
    V(Viete),
}

impl ClassicalGen {
    pub fn apply(self, t: &MarkovTriple) -> MarkovTriple {
        let [a, b, c] = &t.0;
        let sgn = |k: u8, x: &BigInt| if k % 2 == 1 { -x } else { x.clone() };
        match self {
            ClassicalGen::Lambda(i, j) => MarkovTriple([sgn(i, a), sgn(i + j, b), sgn(j, c)]),
            ClassicalGen::Sigma1 => MarkovTriple([b.clone(), a.clone(), c.clone()]),
            ClassicalGen::Sigma2 => MarkovTriple([a.clone(), c.clone(), b.clone()]),
            ClassicalGen::Tau1 => MarkovTriple([-a, c.clone(), b - a * c]),
            ClassicalGen::Tau2 => MarkovTriple([b.clone(), a - b * c, -c]),
            ClassicalGen::V(v) => v.apply(t),
        }
    }
}

/// Applies a composition `g_1 g_2 ... g_k`; the rightmost generator acts first.
pub fn apply_composition(gens: &[ClassicalGen], t: &MarkovTriple) -> MarkovTriple {
    gens.iter().rev().fold(t.clone(), |acc, g| g.apply(&acc))
}

/// A relation `lhs = rhs` between compositions of generators.
#[derive(Clone, Debug)]
pub struct Relation<G> {
    pub name: String,
    pub lhs: Vec<G>,
    pub rhs: Vec<G>,
}

impl<G> Relation<G> {
    pub fn new(name: impl Into<String>, lhs: Vec<G>, rhs: Vec<G>) -> Self {
        Relation { name: name.into(), lhs, rhs }
    }
}

/// Conjugation relations among sign changes, permutations and Viete involutions,
/// the braid relation, and the expressions of `v_i` through `lambda`, `sigma`, `tau`.
pub fn classical_relations() -> Vec<Relation<ClassicalGen>> {
    use ClassicalGen::*;
    let mut out = Vec::new();
    for k in 0..2u8 {
        for l in 0..2u8 {
            out.push(Relation::new(
                format!("s1 l{k}{l} s1 = l{}{l}", (k + l) % 2),
                vec![Sigma1, Lambda(k, l), Sigma1],
                vec![Lambda((k + l) % 2, l)],
            ));
            out.push(Relation::new(
                format!("s2 l{k}{l} s2 = l{k}{}", (k + l) % 2),
                vec![Sigma2, Lambda(k, l), Sigma2],
                vec![Lambda(k, (k + l) % 2)],
            ));
            for v in Viete::ALL {
                out.push(Relation::new(format!("l{k}{l} {v} l{k}{l} = {v}"), vec![Lambda(k, l), V(v), Lambda(k, l)], vec![V(v)]));
            }
        }
    }
    let conj = [
        (Sigma1, Viete::V1, Viete::V2),
        (Sigma2, Viete::V1, Viete::V1),
        (Sigma1, Viete::V2, Viete::V1),
        (Sigma2, Viete::V2, Viete::V3),
        (Sigma1, Viete::V3, Viete::V3),
        (Sigma2, Viete::V3, Viete::V2),
    ];
    for (s, v, w) in conj {
        let sn = if s == Sigma1 { "s1" } else { "s2" };
        out.push(Relation::new(format!("{sn} {v} {sn} = {w}"), vec![s, V(v), s], vec![V(w)]));
    }
    out.push(Relation::new("t1 t2 t1 = t2 t1 t2", vec![Tau1, Tau2, Tau1], vec![Tau2, Tau1, Tau2]));
    out.push(Relation::new("v1 = l11 s1 t2", vec![V(Viete::V1)], vec![Lambda(1, 1), Sigma1, Tau2]));
    out.push(Relation::new("v2 = l10 s2 t1", vec![V(Viete::V2)], vec![Lambda(1, 0), Sigma2, Tau1]));
    out.push(Relation::new("v3 = l11 t1 s2", vec![V(Viete::V3)], vec![Lambda(1, 1), Tau1, Sigma2]));
    out
}
