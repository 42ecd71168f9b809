//! C^12 with the B_4 action and the three-parameter family of log-canonical brackets.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::bracket::BracketTable;
use crate::map::PolyMap;
use crate::poly::{q, Monomial, MultiPoly, Q, Vars};
use crate::report::{diff, Check};

/// `x1..x12` followed by the parameters `b1, b2, b3`.
pub fn vars() -> Vars {
    Vars::new((1..=12).map(|i| format!("x{i}")).chain((1..=3).map(|i| format!("b{i}"))))
}

pub fn hamiltonians(v: &Vars) -> [MultiPoly; 3] {
    [
        v.p("x1*x2 + x3*x4 + x5*x6 + x7*x8 + x9*x10 + x11*x12 - x2*x3*x8 - x2*x5*x10 - x4*x5*x12 - x8*x9*x12 + x2*x5*x8*x12"),
        v.p("-2*x1*x2 - 2*x3*x4 - 2*x5*x6 - 2*x7*x8 - 2*x9*x10 - 2*x11*x12 \
             + x3*x8*x2 + x5*x10*x2 + x1*x4*x7 + x1*x6*x9 + x3*x6*x11 \
             + x7*x10*x11 + x4*x5*x12 + x8*x9*x12 - x3*x10*x11*x2 + x1*x11*x12*x2 \
             + x5*x6*x7*x8 - x3*x6*x8*x9 - x4*x5*x7*x10 + x3*x4*x9*x10 - x1*x4*x9*x12"),
        v.p("x1*x2 + x3*x4 + x5*x6 + x7*x8 + x9*x10 + x11*x12 - x1*x4*x7 - x1*x6*x9 - x3*x6*x11 - x7*x10*x11 + x1*x6*x7*x11"),
    ]
}

pub fn nu(v: &Vars) -> PolyMap {
    let comps: Vec<String> = (0..12).map(|i| format!("x{}", (i ^ 1) + 1)).collect();
    let refs: Vec<&str> = comps.iter().map(String::as_str).collect();
    PolyMap::parse("nu", v, &refs)
}

pub fn tau(v: &Vars, i: usize) -> PolyMap {
    let comps: [&str; 12] = match i {
        1 => ["-x2", "-x1", "-x2*x3 + x7", "-x1*x4 + x8", "-x2*x5 + x9", "-x1*x6 + x10", "x3", "x4", "x5", "x6", "x11", "x12"],
        2 => ["x3 - x1*x7", "x4 - x2*x8", "x1", "x2", "x5", "x6", "-x8", "-x7", "-x8*x9 + x11", "-x7*x10 + x12", "x9", "x10"],
        3 => ["x1", "x2", "x5 - x3*x11", "x6 - x4*x12", "x3", "x4", "x9 - x7*x11", "x10 - x8*x12", "x7", "x8", "-x12", "-x11"],
        _ => panic!("tau index must be 1, 2 or 3"),
    };
    PolyMap::parse(&format!("tau{i}"), v, &comps)
}

/// `rho(tau_i)` on the parameters, as images of `(b1, b2, b3)`.
pub fn rho(i: usize) -> [&'static str; 3] {
    match i {
        1 => ["b1 - b2", "-b2", "-b3"],
        2 => ["-b1", "-b1 + b2 - b3", "-b3"],
        3 => ["-b1", "-b2", "-b2 + b3"],
        _ => panic!("tau index must be 1, 2 or 3"),
    }
}

/// Coefficients `k` for the coordinate pairs `{x_{2a-1}, x_{2a}}`, `{x_{2c-1}, x_{2c}}`, a < c:
/// `{x_{2a-1}, x_{2c-1}} = -k`, `{x_{2a-1}, x_{2c}} = k`, `{x_{2a}, x_{2c-1}} = k`, `{x_{2a}, x_{2c}} = -k`
/// (times `x_i x_j`).
const BLOCKS: [[&str; 6]; 6] = [
    ["0", "b3", "b3 - b2", "b3", "b3 - b2", "-b2"],
    ["", "0", "b1 - b2", "b3", "b1 - b2 + b3", "b1 - b2"],
    ["", "", "0", "b3 - b1", "b3 - b2", "b1 - b2"],
    ["", "", "", "0", "b1", "b1"],
    ["", "", "", "", "0", "b1"],
    ["", "", "", "", "", "0"],
];

/// The family `{,}_b` with symbolic `b`.
pub fn family(v: &Vars) -> BracketTable {
    BracketTable::from_upper(v, 12, |i, j| {
        let (a, c) = (i / 2, j / 2);
        if a == c {
            return MultiPoly::zero(v);
        }
        let sign = if (i % 2) == (j % 2) { -1 } else { 1 };
        (&v.p(BLOCKS[a][c]) * &(&v.var(i) * &v.var(j))).scale(&q(sign))
    })
}

/// The family at a numeric parameter `b`.
pub fn family_at(v: &Vars, b: [i64; 3]) -> BracketTable {
    let fam = family(v);
    let mut images = v.all();
    for k in 0..3 {
        images[12 + k] = MultiPoly::constant(v, q(b[k]));
    }
    BracketTable::from_upper(v, 12, |i, j| fam.get(i, j).substitute(&images))
}

/// The Casimir monomials `m1..m20`.
pub fn casimir_monomials(v: &Vars) -> Vec<MultiPoly> {
    [
        "x1*x2", "x3*x4", "x5*x6", "x7*x8", "x9*x10", "x11*x12", "x2*x3*x8", "x2*x5*x10", "x4*x5*x12", "x8*x9*x12",
        "x1*x4*x7", "x1*x6*x9", "x3*x6*x11", "x7*x10*x11", "x2*x5*x8*x12", "x2*x3*x10*x11", "x3*x6*x8*x9",
        "x4*x5*x7*x10", "x1*x4*x9*x12", "x1*x6*x7*x11",
    ]
    .iter()
    .map(|s| v.p(s))
    .collect()
}

fn single_exponent(p: &MultiPoly) -> Monomial {
    p.terms().next().expect("monomial").0.clone()
}

/// Whether an exponent vector is a sum of generator exponents (with repetition).
fn in_monoid(e: &[u8], gens: &[Monomial]) -> bool {
    fn rec(e: &mut Vec<u8>, gens: &[Monomial], start: usize) -> bool {
        if e.iter().all(|&a| a == 0) {
            return true;
        }
        // the first nonzero coordinate must be covered by some generator
        let first = e.iter().position(|&a| a > 0).unwrap();
        for g in gens.iter().skip(start) {
            if g[first] == 0 || g.iter().zip(e.iter()).any(|(a, b)| a > b) {
                continue;
            }
            for (a, b) in e.iter_mut().zip(g) {
                *a -= b;
            }
            let ok = rec(e, gens, 0);
            for (a, b) in e.iter_mut().zip(g) {
                *a += b;
            }
            if ok {
                return true;
            }
        }
        false
    }
    rec(&mut e.to_vec(), gens, 0)
}

/// Whether `p` lies in the subalgebra generated by the monomials.
pub fn in_subalgebra(p: &MultiPoly, gens: &[MultiPoly]) -> bool {
    let ge: Vec<Monomial> = gens.iter().map(single_exponent).collect();
    p.terms().all(|(e, _)| in_monoid(e, &ge))
}

/// Weight lattice vectors `n1 w1 + n2 w2 + n3 w3` with `|n_i| <= r`, as `(n, squared length)`.
pub fn weight_vectors(r: i64) -> Vec<([i64; 3], Q)> {
    let w = [[3, -1, -1, -1], [2, 2, -2, -2], [1, 1, 1, -3]];
    let mut out = Vec::new();
    for n1 in -r..=r {
        for n2 in -r..=r {
            for n3 in -r..=r {
                let t: Vec<i64> = (0..4).map(|k| n1 * w[0][k] + n2 * w[1][k] + n3 * w[2][k]).collect();
                let len: i64 = t.iter().map(|x| x * x).sum();
                out.push(([n1, n2, n3], crate::poly::qf(len, 16)));
            }
        }
    }
    out
}

pub fn checks() -> Vec<Check> {
    let v = vars();
    let hs = hamiltonians(&v);
    let fam = family(&v);
    let nu_map = nu(&v);
    let taus: Vec<PolyMap> = (1..=3).map(|i| tau(&v, i)).collect();
    let ms = casimir_monomials(&v);
    let mut out = Vec::new();

    out.push(Check::with_residual("nu*H1 = H3", diff(&nu_map.pullback(&hs[0]), &hs[2])));
    out.push(Check::with_residual("nu*H2 = H2", diff(&nu_map.pullback(&hs[1]), &hs[1])));
    out.push(Check::with_residual("nu*H3 = H1", diff(&nu_map.pullback(&hs[2]), &hs[0])));
    let braid = |a: &PolyMap, b: &PolyMap| a.after(b).after(a).comps() == b.after(a).after(b).comps();
    out.push(Check::new("tau1 tau2 tau1 = tau2 tau1 tau2", braid(&taus[0], &taus[1])));
    out.push(Check::new("tau2 tau3 tau2 = tau3 tau2 tau3", braid(&taus[1], &taus[2])));
    out.push(Check::new("tau1 tau3 = tau3 tau1", taus[0].after(&taus[2]).comps() == taus[2].after(&taus[0]).comps()));

    let pairs_zero = (0..6).all(|a| fam.get(2 * a, 2 * a + 1).is_zero());
    out.push(Check::new("{x_{2j-1}, x_{2j}}_b = 0", pairs_zero));
    out.push(Check::new("family is log-canonical", fam.log_canonical_matrix().is_some()));
    out.push(Check::with_residual("family satisfies Jacobi for symbolic b", fam.jacobi_check().err().map(|(i, j, k, r)| format!("({},{},{}): {r}", i + 1, j + 1, k + 1))));
    for (k, h) in hs.iter().enumerate() {
        out.push(Check::new(format!("H{} is a Casimir for symbolic b", k + 1), fam.is_casimir(h)));
    }
    out.push(Check::with_residual("family is nu-invariant", fam.transported_residual(&nu_map, 1, &fam).map(|(i, j, r)| format!("({},{}): {r}", i + 1, j + 1))));

    // B_4 action on the parameters
    for (i, t) in taus.iter().enumerate() {
        let img: Vec<MultiPoly> = rho(i + 1).iter().map(|s| v.p(s)).collect();
        let mut sub = v.all();
        sub[12..15].clone_from_slice(&img);
        let moved = BracketTable::from_upper(&v, 12, |a, c| fam.get(a, c).substitute(&sub));
        // {tau*x_a, tau*x_c}_{rho b} = tau*{x_a, x_c}_b
        out.push(Check::with_residual(
            format!("tau{} maps the family at b to the family at rho(tau{})b", i + 1, i + 1),
            moved.transported_residual(t, 1, &fam).map(|(a, c, r)| format!("({},{}): {r}", a + 1, c + 1)),
        ));
        let twice: Vec<MultiPoly> = img.iter().map(|p| p.substitute(&sub)).collect();
        out.push(Check::new(format!("rho(tau{})^2 = id", i + 1), twice == v.all()[12..15].to_vec()));
        // rho(tau_i) swaps coordinates i, i+1 of b1 v1 + b2 v2 + b3 v3 in C^4 and negates
        let t4 = |b: &[MultiPoly]| -> Vec<MultiPoly> {
            vec![b[0].clone(), &b[1] - &b[0], &b[2] - &b[1], -&b[2]]
        };
        let before = t4(&v.all()[12..15]);
        let after = t4(&img);
        let mut want: Vec<MultiPoly> = before.iter().map(|p| -p).collect();
        want.swap(i, i + 1);
        out.push(Check::new(format!("rho(tau{}) permutes coordinates {} and {} and negates", i + 1, i + 1, i + 2), after == want));
    }
    // rank 2 at random points with b != 0
    let pts = crate::sample::rational_points(15, 20, 12);
    let ranks: Vec<usize> = pts.iter().map(|p| fam.rank_at(p)).collect();
    out.push(Check::with_residual("family has rank 2 at 20 random points", ranks.iter().any(|&r| r != 2).then(|| format!("{ranks:?}"))));

    // weight lattice
    let forms = coefficient_forms(&fam);
    let mut from_weights: BTreeSet<[i64; 3]> = BTreeSet::new();
    let short: Vec<([i64; 3], Q)> = weight_vectors(3).into_iter().filter(|(n, l)| *n != [0, 0, 0] && *l <= q(1)).collect();
    let n12 = short.iter().filter(|(_, l)| *l == crate::poly::qf(12, 16)).count();
    let n16 = short.iter().filter(|(_, l)| *l == q(1)).count();
    out.push(Check::new("8 weight vectors of square length 12/16 and 6 of length 1, none shorter", n12 == 8 && n16 == 6 && short.len() == 14));
    for (n, _) in &short {
        from_weights.insert(*n);
    }
    out.push(Check::with_residual(
        "coefficient forms are the pairings with the 14 short weight vectors",
        (forms != from_weights).then(|| format!("table {forms:?} vs weights {from_weights:?}")),
    ));

    // Casimir subalgebra
    for (k, m) in ms.iter().enumerate() {
        out.push(Check::new(format!("m{} is a Casimir for symbolic b", k + 1), fam.is_casimir(m)));
    }
    for (k, h) in hs.iter().enumerate() {
        out.push(Check::new(format!("H{} lies in the Casimir subalgebra", k + 1), in_subalgebra(h, &ms)));
    }
    let mut all_maps = taus.clone();
    all_maps.push(nu_map.clone());
    for g in &all_maps {
        let ok = ms.iter().all(|m| in_subalgebra(&g.pullback(m), &ms));
        out.push(Check::new(format!("Casimir subalgebra is {}-invariant", g.name()), ok));
    }
    let mv = Vars::numbered("m", 20);
    let id1 = mv.p("-m11 + m1*m2 + m4 - m7").substitute(&ms);
    out.push(Check::with_residual("tau1*m2 = -m11 + m1 m2 + m4 - m7", diff(&taus[0].pullback(&ms[1]), &id1)));
    let id2 = mv.p("m17 - m10*m2 - m13*m4 + m2*m4*m6").substitute(&ms);
    out.push(Check::with_residual("tau3*m18 = m17 - m10 m2 - m13 m4 + m2 m4 m6", diff(&taus[2].pullback(&ms[17]), &id2)));

    // the logarithmic Casimir C_b
    let k = fam.log_canonical_matrix().expect("log-canonical");
    let cb: Vec<MultiPoly> = {
        let mut c = vec![MultiPoly::zero(&v); 12];
        c[0] = v.p("b1 - b2");
        c[2] = v.p("b2 - b3");
        c[4] = v.p("b3");
        c
    };
    let log_casimir = (0..12).all(|i| (0..12).fold(MultiPoly::zero(&v), |acc, j| acc + &k[i][j] * &cb[j]).is_zero());
    out.push(Check::new("C_b is a Casimir for symbolic b", log_casimir));
    let exps: Vec<Vec<Q>> = ms.iter().map(|m| single_exponent(m)[..12].iter().map(|&a| q(a as i64)).collect()).collect();
    let r9 = crate::linalg::rank(exps.clone());
    let b_sample = [q(2), q(-3), q(7)];
    let mut with_c = exps;
    with_c.push(cb.iter().map(|p| p.evaluate(&[vec![Q::zero(); 12], b_sample.to_vec()].concat())).collect());
    let r10 = crate::linalg::rank(with_c);
    out.push(Check::with_residual("span of log m_i is 9-dimensional, 10 with C_b", (r9 != 9 || r10 != 10).then(|| format!("{r9}, {r10}"))));
    out
}

/// The coefficient linear forms of the family, as integer vectors in `(b1, b2, b3)`.
pub fn coefficient_forms(fam: &BracketTable) -> BTreeSet<[i64; 3]> {
    let mut out = BTreeSet::new();
    let k = fam.log_canonical_matrix().expect("log-canonical");
    for row in &k {
        for c in row {
            if c.is_zero() {
                continue;
            }
            let mut f = [0i64; 3];
            for (e, x) in c.terms() {
                let idx = (12..15).find(|&i| e[i] == 1).expect("linear in b");
                f[idx - 12] = x.to_integer().try_into().expect("small");
            }
            out.insert(f);
        }
    }
    out
}

pub fn solve_quadratic() -> crate::solver::CasimirSystem {
    let v = Vars::numbered("x", 12);
    let hs: Vec<MultiPoly> = hamiltonians(&vars()).iter().map(|h| restrict(h, &v)).collect();
    crate::solver::quadratic_casimir_solver(&v, 12, &hs)
}

/// Drops the parameter variables from a polynomial free of them.
pub fn restrict(p: &MultiPoly, target: &Vars) -> MultiPoly {
    MultiPoly::from_terms(target, p.terms().map(|(e, c)| (e[..target.len()].to_vec(), c.clone())))
}

pub fn solver_checks() -> Vec<Check> {
    let sys = solve_quadratic();
    let v = vars();
    let xv = sys.vars.clone();
    let mut out = vec![Check::with_residual(
        "quadratic brackets with Casimirs H1, H2, H3 form a 3-dimensional space",
        (sys.basis.len() != 3).then(|| format!("dimension {}", sys.basis.len())),
    )];
    let tables: Vec<BracketTable> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        .iter()
        .map(|b| {
            let t = family_at(&v, *b);
            BracketTable::from_upper(&xv, 12, |i, j| restrict(t.get(i, j), &xv))
        })
        .collect();
    let expressed: Vec<Option<Vec<Q>>> = tables.iter().map(|t| sys.express(t)).collect();
    let all_in = expressed.iter().all(Option::is_some);
    let independent = all_in && crate::linalg::rank(expressed.iter().flatten().cloned().collect()) == 3;
    out.push(Check::new("the family at b = e1, e2, e3 is a basis of that space", independent && sys.basis.len() == 3));
    out.push(Check::new("every solution is log-canonical", sys.basis_tables().iter().all(|t| t.log_canonical_matrix().is_some())));
    let hs: Vec<MultiPoly> = hamiltonians(&v).iter().map(|h| restrict(h, &xv)).collect();
    let (_, low) = crate::solver::low_order_probe(&xv, 12, &hs);
    out.push(Check::with_residual("constant and linear parts are forced to vanish", (low != 0).then(|| format!("{low} free low-order directions"))));
    let closure = log_canonical_closure();
    let mut rows: Vec<Vec<Q>> = closure.iter().map(|t| log_vector(t)).collect();
    rows.extend(tables.iter().map(log_vector));
    let r = crate::linalg::rank(rows);
    out.push(Check::with_residual(
        "log-canonical brackets closed under tau1, tau2, tau3 are exactly the family",
        (closure.len() != 3 || r != 3).then(|| format!("closure dimension {}, joint rank {r}", closure.len())),
    ));
    out
}

/// Upper-triangle coefficients of a log-canonical table with numeric entries.
fn log_vector(t: &BracketTable) -> Vec<Q> {
    let k = t.log_canonical_matrix().expect("log-canonical");
    let zero = vec![0u8; t.vars().len()];
    (0..t.dim()).flat_map(|i| (i + 1..t.dim()).map(move |j| (i, j))).map(|(i, j)| k[i][j].coeff(&zero)).collect()
}

/// Log-canonical brackets that stay log-canonical under tau1, tau2, tau3 and their inverses.
pub fn log_canonical_closure() -> Vec<BracketTable> {
    let v = Vars::numbered("x", 12);
    let full = vars();
    let maps: Vec<(PolyMap, PolyMap)> = (1..=3)
        .flat_map(|i| {
            let t = tau(&full, i);
            let t = PolyMap::new(t.name(), t.comps()[..12].iter().map(|c| restrict(c, &v)).collect());
            let inv = t.inverse(12).expect("tau is invertible");
            [(t.clone(), inv.clone()), (inv, t)]
        })
        .collect();
    crate::solver::log_canonical_closure(&v, 12, &maps)
}
