//! ν-endomorphisms preserving `H = x1x2 + x3x4 + x5x6 − x1x3x5`, the generators acting on them,
//! and the descent writing such an endomorphism as a generator word.

pub mod c5;
pub mod decompose;
pub mod endo;
pub mod general;
pub mod gens;
mod parse;
pub mod xpoly;

pub use decompose::{decompose, Decomposition, Step};
pub use endo::{h, NuEndo};
pub use general::{Claim, GeneralH, Setting};
pub use gens::{compose_word, relations, Gen, Relation};
pub use xpoly::XPoly;

use laurent_core::LaurentPoly;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum HorError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Json(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("endomorphism does not preserve H")]
    NotPreserving,
    #[error("no invertible Jacobian found at sampled points")]
    NotMaxRank,
    #[error("not in Γ^max: {0}")]
    NotInGroup(String),
    #[error("invalid weights: {0}")]
    Weights(String),
}

/// A uniformly random word of length `len` over V1, V2, V3, Σ1, Σ2, Λ and M with `|i|, |j| <= 1`.
pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> Vec<Gen> {
    let pool: Vec<Gen> = gens::sample_generators().into_iter().filter(|g| !matches!(g, Gen::T1 | Gen::T2)).collect();
    (0..len).map(|_| *pool.choose(rng).unwrap()).collect()
}

/// Report for one endomorphism: `H`-preservation, maximal rank and the image of `H`.
pub fn check(e: &NuEndo, seed: u64) -> Value {
    let preserves = e.preserves_h();
    json!({
        "preserves_H": preserves,
        "max_rank": e.max_rank(seed),
        "H_image": e.h_image().to_string(),
        "degrees": e.degrees(),
    })
}

/// Generator preservation, the relation list, `words` seeded decomposition round trips,
/// `weight_tuples` random weight tuples in the classical and star settings with `n <= 5`, and the `C^5` claims.
pub fn suite(seed: u64, words: usize, weight_tuples: usize) -> Vec<Claim> {
    let mut out = Vec::new();
    for g in gens::sample_generators() {
        out.push(Claim { name: format!("{g} preserves H"), pass: g.endo().preserves_h() });
    }
    for r in relations() {
        out.push(Claim { name: r.name.clone(), pass: r.holds() });
    }
    out.push(Claim { name: "V3 = (x2, x4, x1*x3 - x6)".into(), pass: Gen::V3.endo() == NuEndo::parse("x2", "x4", "x1*x3 - x6").unwrap() });
    out.push(Claim { name: "identity preserves H".into(), pass: NuEndo::identity().preserves_h() });
    out.push(Claim { name: "(x1+1, x3, x5) does not preserve H".into(), pass: !NuEndo::parse("x1 + 1", "x3", "x5").unwrap().preserves_h() });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for k in 0..words {
        let len = rng.gen_range(0..=8);
        let w = random_word(&mut rng, len);
        let e = compose_word(&w);
        let ok = match decompose(&e, seed) {
            Ok(d) => compose_word(&d.word) == e && d.steps.iter().all(|s| s.new_degree < s.degrees[2]),
            Err(_) => false,
        };
        if !ok {
            failures.push(k);
        }
    }
    out.push(Claim { name: format!("decompose round-trips {words} random words of length <= 8"), pass: failures.is_empty() });
    let classical: Vec<GeneralH> = (0..weight_tuples).map(|_| general::random_classical(&mut rng, 5)).collect();
    let star: Vec<GeneralH> = (0..weight_tuples).map(|_| general::random_star(&mut rng, 5)).collect();
    out.push(Claim { name: format!("classical Viète maps for {weight_tuples} random weight tuples"), pass: classical.iter().all(GeneralH::check) });
    out.push(Claim { name: format!("star Viète maps for {weight_tuples} random weight tuples"), pass: star.iter().all(GeneralH::check) });
    let one = LaurentPoly::one();
    let unit = GeneralH::star(one.clone(), vec![one; 3]).expect("valid weights");
    out.push(Claim { name: "star Viète maps with unit weights reproduce H".into(), pass: unit.check() && unit.h() == h() });
    let markov = GeneralH::classical(1, &[1, 1, 1]).expect("valid weights");
    out.push(Claim { name: "classical weights (1;1,1,1) give the Markov cubic".into(), pass: markov.check() });
    out.extend(c5::claims());
    out
}
