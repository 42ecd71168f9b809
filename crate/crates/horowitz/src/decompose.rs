//! Degree descent: write an `H`-preserving ν-endomorphism of maximal rank as a generator word.

use serde_json::{json, Value};

use crate::endo::{x, NuEndo};
use crate::gens::{compose_word, Gen};
use crate::HorError;

/// One descent step: the sorted degrees before composing with `V3` and the new third degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub permutation: Vec<Gen>,
    pub degrees: [u32; 3],
    pub new_degree: u32,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `e = word[0] ∘ word[1] ∘ ...`
    pub word: Vec<Gen>,
    pub steps: Vec<Step>,
}

impl Decomposition {
    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| json!({"permutation": s.permutation.iter().map(Gen::to_string).collect::<Vec<_>>(), "degrees": s.degrees, "new_degree": s.new_degree}))
            .collect();
        json!({"word": self.word.iter().map(Gen::to_string).collect::<Vec<_>>(), "steps": steps})
    }
}

fn permutations() -> [Vec<Gen>; 6] {
    use Gen::{Sigma1 as S1, Sigma2 as S2};
    [vec![], vec![S1], vec![S2], vec![S1, S2], vec![S2, S1], vec![S1, S2, S1]]
}

fn degrees(e: &NuEndo) -> Result<[u32; 3], HorError> {
    let d = e.degrees();
    match d {
        [Some(a), Some(b), Some(c)] if a > 0 && b > 0 && c > 0 => Ok([a, b, c]),
        _ => Err(HorError::NotInGroup("a component is constant".into())),
    }
}

/// Requires `e` to preserve `H` and to pass the maximal-rank test with the given seed.
pub fn decompose(e: &NuEndo, seed: u64) -> Result<Decomposition, HorError> {
    if !e.preserves_h() {
        return Err(HorError::NotPreserving);
    }
    if !e.max_rank(seed) {
        return Err(HorError::NotMaxRank);
    }
    let perms = permutations();
    let mut cur = e.clone();
    // e ∘ tail[0] ∘ tail[1] ∘ ... = cur; every tail letter is an involution.
    let mut tail: Vec<Gen> = Vec::new();
    let mut steps = Vec::new();
    loop {
        let d = degrees(&cur)?;
        if d.iter().all(|&k| k == 1) {
            break;
        }
        let (w, next) = perms
            .iter()
            .map(|w| (w, cur.compose(&compose_word(w))))
            .find(|(_, n)| {
                let d = n.degrees();
                d[0] <= d[1] && d[1] <= d[2]
            })
            .unwrap();
        let [p, q, r] = degrees(&next)?;
        if r != p + q || next.r.top().nu() != next.p.top().mul(&next.q.top()) {
            return Err(HorError::NotInGroup(format!("top-degree cancellation fails at degrees ({p},{q},{r})")));
        }
        cur = next.compose(&Gen::V3.endo());
        tail.extend(w.iter().copied());
        tail.push(Gen::V3);
        let new_degree = cur.r.degree().unwrap_or(0);
        if new_degree >= r {
            return Err(HorError::NotInGroup("degree did not drop".into()));
        }
        steps.push(Step { permutation: w.clone(), degrees: [p, q, r], new_degree });
    }
    // Linear case: a permutation of (γ1 x1, γ3 x3, γ5 x5) with γ = ±s3^k.
    let (w, base) = perms
        .iter()
        .map(|w| (w, cur.compose(&compose_word(w))))
        .find(|(_, n)| [(&n.p, 1), (&n.q, 3), (&n.r, 5)].iter().all(|(f, i)| single(f, *i).is_some()))
        .ok_or_else(|| HorError::NotInGroup("linear part is not a signed monomial permutation".into()))?;
    tail.extend(w.iter().copied());
    let (e1, k1) = single(&base.p, 1).unwrap();
    let (e5, k5) = single(&base.r, 5).unwrap();
    let mut word = Vec::new();
    if e1 || e5 {
        word.push(Gen::Lambda(e1 as u8, e5 as u8));
    }
    if k1 != 0 || k5 != 0 {
        word.push(Gen::M(-k1, -k5));
    }
    if compose_word(&word) != base {
        return Err(HorError::NotInGroup("linear part is not of the form Lambda M".into()));
    }
    word.extend(tail.iter().rev().copied());
    if compose_word(&word) != *e {
        return Err(HorError::NotInGroup("recomposed word differs from the input".into()));
    }
    Ok(Decomposition { word, steps })
}

/// `(negative, k)` when `f = ±s3^k x_i`.
fn single(f: &crate::xpoly::XPoly, i: usize) -> Option<(bool, i32)> {
    let (e, c) = f.as_monomial()?;
    if e != x(i).as_monomial()?.0 || c.len() != 1 {
        return None;
    }
    let (ex, k) = c.terms().next()?;
    if ex.a1 != 0 || ex.a2 != 0 {
        return None;
    }
    let one = num_bigint::BigInt::from(1);
    if k == &one {
        Some((false, ex.a3))
    } else if k == &-one {
        Some((true, ex.a3))
    } else {
        None
    }
}
