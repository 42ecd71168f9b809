//! Fundamental identity checks for the canonical and subordinated Nambu brackets on C^6.

use rayon::prelude::*;

use crate::bracket::{fundamental_identity, nambu_canonical};
use crate::c6;
use crate::poly::{MultiPoly, Vars};
use crate::report::Check;
use crate::sample;

fn increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn pick(xs: &[MultiPoly], idx: &[usize]) -> Vec<MultiPoly> {
    idx.iter().map(|&i| xs[i].clone()).collect()
}

/// FI for the 4-bracket `{,,,}_{H1,H2}` on all increasing coordinate tuples and `random`
/// seeded tuples of sparse quadratics.
pub fn bracket4_fi(random: usize, seed: u64) -> Check {
    let v = c6::vars();
    let xs = v.all();
    let br = |args: &[MultiPoly]| c6::bracket4(&v, args);
    let mut cases: Vec<(Vec<MultiPoly>, Vec<MultiPoly>)> = Vec::new();
    for f in increasing(6, 3) {
        for g in increasing(6, 4) {
            cases.push((pick(&xs, &f), pick(&xs, &g)));
        }
    }
    let mut rng = sample::rng(seed);
    for _ in 0..random {
        let f: Vec<MultiPoly> = (0..3).map(|_| sample::sparse_poly(&v, 6, 2, 2, &mut rng)).collect();
        let g: Vec<MultiPoly> = (0..4).map(|_| sample::sparse_poly(&v, 6, 2, 2, &mut rng)).collect();
        cases.push((f, g));
    }
    run("fundamental identity for {,,,}_H1,H2", &v, cases, &br)
}

/// FI for the canonical order-6 bracket.
pub fn canonical6_fi(random: usize, seed: u64) -> Check {
    let v = c6::vars();
    let xs = v.all();
    let idx: Vec<usize> = (0..6).collect();
    let br = |args: &[MultiPoly]| nambu_canonical(args, &idx).expect("six arguments");
    let mut cases = Vec::new();
    for f in increasing(6, 5) {
        cases.push((pick(&xs, &f), xs.clone()));
    }
    let mut rng = sample::rng(seed);
    for _ in 0..random {
        let f: Vec<MultiPoly> = (0..5).map(|_| sample::sparse_poly(&v, 6, 2, 2, &mut rng)).collect();
        let g: Vec<MultiPoly> = (0..6).map(|_| sample::sparse_poly(&v, 6, 2, 2, &mut rng)).collect();
        cases.push((f, g));
    }
    run("fundamental identity for the canonical 6-bracket", &v, cases, &br)
}

fn run(name: &str, _v: &Vars, cases: Vec<(Vec<MultiPoly>, Vec<MultiPoly>)>, br: &(dyn Fn(&[MultiPoly]) -> MultiPoly + Sync)) -> Check {
    let bad = cases.par_iter().enumerate().find_map_first(|(k, (f, g))| {
        let r = fundamental_identity(br, f, g);
        (!r.is_zero()).then(|| format!("case {k}: {r}"))
    });
    Check::with_residual(format!("{name} ({} tuples)", cases.len()), bad)
}
