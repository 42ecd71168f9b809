//! Seeded random rational points and sparse polynomials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{qf, Monomial, MultiPoly, Q, Vars};

/// Nonzero rationals `p/q` with `|p| <= 9`, `1 <= q <= 5`.
pub fn rational_points(n: usize, count: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let mut p = 0;
                    while p == 0 {
                        p = rng.gen_range(-9i64..=9);
                    }
                    qf(p, rng.gen_range(1i64..=5))
                })
                .collect()
        })
        .collect()
}

/// A polynomial of degree at most `deg` in the first `n` variables with `terms` random terms.
pub fn sparse_poly(vars: &Vars, n: usize, deg: u32, terms: usize, rng: &mut ChaCha8Rng) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for _ in 0..terms {
        let mut e: Monomial = vec![0; vars.len()];
        let d = rng.gen_range(1..=deg);
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-5i64..=5);
        }
        p.add_term(e, qf(c, 1));
    }
    p
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
