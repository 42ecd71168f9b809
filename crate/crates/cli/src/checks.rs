//! Check batteries behind `verify`. Each returns named pass/fail records in a fixed order.

use std::collections::HashSet;

use fibonacci_pell as fp;
use laurent_core::{lp, BiDegree, BigInt, DegreeMatrix, LaurentPoly};
use markov_classical::{classical_relations, MarkovTriple, TreeVertex, VertexKind};
use num_traits::{ToPrimitive, Zero};
use poisson::{Check, Space};
use presentations::{presentation_tree, reduced_presentation, ReducedSolution, DEVIATION_TRIPLES};
use rayon::prelude::*;
use star_group::{apply_composition, check_star_markov, failing_relations, random_triples, star_relations, StarGen, StarTriple};
use trees::{
    check_reconstruction, generate, hausdorff_to_segment, morphism_check, BivectorSystem, ConvexSystem, DecorationSystem, DeviationSystem,
    EuclidSystem, MarkovSystem, MatrixSystem, PolynomialSystem, TreeError,
};

fn check(name: impl Into<String>, pass: bool) -> Check {
    Check::new(name, pass)
}

fn check_with(name: impl Into<String>, failure: Option<String>) -> Check {
    Check::with_residual(name, failure)
}

/// Ring properties of `*`, the `s0` evaluation and the `μ`-dual.
pub fn core(seed: u64) -> Vec<Check> {
    let samples: Vec<LaurentPoly> = random_triples(seed, 50).into_iter().flat_map(|t| t.0).collect();
    let pairs: Vec<(&LaurentPoly, &LaurentPoly)> = samples.iter().zip(samples.iter().skip(1)).collect();
    let mut out = vec![
        check("star is an involution", samples.iter().all(|f| f.star().star() == *f)),
        check("star is multiplicative", pairs.iter().all(|(f, g)| (*f * *g).star() == &f.star() * &g.star())),
        check("star is additive", pairs.iter().all(|(f, g)| (*f + *g).star() == &f.star() + &g.star())),
        check("evaluation at s0 is multiplicative", pairs.iter().all(|(f, g)| (*f * *g).evaluate_at_s0() == f.evaluate_at_s0() * g.evaluate_at_s0())),
        check("display parses back", samples.iter().all(|f| f.to_string().parse::<LaurentPoly>().ok().as_ref() == Some(f))),
        check("JSON round trip", samples.iter().all(|f| LaurentPoly::from_json(&f.to_json()).ok().as_ref() == Some(f))),
        check("s1* = s2/s3", lp("s1").star() == lp("s2*s3^-1")),
    ];
    let seedt = [lp("s2"), lp("s2*(s1^2 - s2) - s3*s1"), lp("s1^2 - s2")];
    let bd: Vec<Option<BiDegree>> = seedt.iter().map(|f| f.bidegree().ok()).collect();
    out.push(check("bi-degrees of the seed triple", bd == [Some(BiDegree::new(1, 2)), Some(BiDegree::new(3, 4)), Some(BiDegree::new(2, 2))]));
    let tree = generate(&PolynomialSystem, 5).expect("polynomial tree");
    let entries: Vec<&LaurentPoly> = tree.vertices.iter().flat_map(|v| v.triple.iter()).collect();
    out.push(check("mu-dual is an involution on tree polynomials", entries.iter().all(|f| f.mu_dual().and_then(|g| g.mu_dual()).ok().as_ref() == Some(*f))));
    out.push(check(
        "mu-dual maps (d,q) to (d,3d-q)",
        entries.iter().all(|f| match (f.bidegree(), f.mu_dual().and_then(|g| g.bidegree())) {
            (Ok(a), Ok(b)) => b == a.dual(),
            _ => false,
        }),
    ));
    out
}

fn classical_apply(gens: &[markov_classical::ClassicalGen], t: &MarkovTriple) -> MarkovTriple {
    markov_classical::apply_composition(gens, t)
}

/// Group identities in both versions and the braid relation on `count` random triples.
pub fn group(seed: u64, count: usize) -> Vec<Check> {
    use StarGen::*;
    let samples = random_triples(seed, count);
    let failing = failing_relations(&star_relations(), &samples, apply_composition);
    let classical_samples: Vec<MarkovTriple> = samples.iter().map(StarTriple::evaluate).collect();
    let classical_failing: Vec<String> = classical_relations()
        .into_iter()
        .filter(|r| classical_samples.iter().any(|t| classical_apply(&r.lhs, t) != classical_apply(&r.rhs, t)))
        .map(|r| r.name)
        .collect();
    let braid = samples.iter().all(|t| apply_composition(&[Tau1, Tau2, Tau1], t) == apply_composition(&[Tau2, Tau1, Tau2], t));
    let none_or = |v: Vec<String>| if v.is_empty() { None } else { Some(v.join("; ")) };
    let words: Vec<Vec<StarGen>> = (0..count)
        .map(|k| {
            let gens = [Tau1, Tau2, Sigma1, Sigma2, V(star_group::VieteIndex::from_index(k % 3)), Lambda(1, 0), Mu(1, -1)];
            (0..6).map(|i| gens[(k * 7 + i * (k + 3)) % gens.len()]).collect()
        })
        .collect();
    let stays = words.iter().all(|w| check_star_markov(&apply_composition(w, &StarTriple::initial())));
    vec![
        check_with(format!("star identities on {count} random triples"), none_or(failing)),
        check_with(format!("classical identities on {count} evaluated triples"), none_or(classical_failing)),
        check(format!("braid relation t1 t2 t1 = t2 t1 t2 on {count} random triples"), braid),
        check(format!("{count} words applied to I give solutions"), stays),
    ]
}

fn star_triple(a: &str, b: &str, c: &str) -> StarTriple {
    StarTriple::new(lp(a).star(), lp(b), lp(c).star())
}

/// Reduced presentations of every vertex to `depth` and the bi-degree law.
pub fn presentations(depth: usize) -> Vec<Check> {
    let mut out = displayed_presentations();
    match presentation_tree(depth) {
        Ok(tree) => {
            out.extend(presentation_solutions(&tree));
            out.extend(bidegree_laws(&tree));
        }
        Err(e) => out.push(check_with("presentation tree", Some(e.to_string()))),
    }
    out
}

/// The four presentations written out explicitly, compared verbatim.
pub fn displayed_presentations() -> Vec<Check> {
    let displayed = [
        (MarkovTriple::new(3, 6, 3), star_triple("s1", "s1^2 - s2", "s1")),
        (MarkovTriple::new(3, 15, 6), star_triple("s2", "s1^2*s2 - s1*s3 - s2^2", "s1^2 - s2")),
        (MarkovTriple::new(3, 39, 15), star_triple("s1", "s1^3*s2 - 2*s1^2*s3 - s1*s2^2 + s2*s3", "s1^2*s2 - s1*s3 - s2^2")),
        (MarkovTriple::new(15, 87, 6), star_triple("s1^2*s2 - s1*s3 - s2^2", "s1^2*s2^3 - s1^3*s2*s3 - s2*s3^2 + s1^2*s3^2 - s2^4", "s2^2 - s1*s3")),
    ];
    displayed
        .iter()
        .map(|(p, want)| check(format!("displayed presentation of {p}"), reduced_presentation(p).map(|r| r.solution() == *want).unwrap_or(false)))
        .collect()
}

/// Every vertex presentation solves the equation and evaluates to its triple; replay agrees to depth 6.
pub fn presentation_solutions(tree: &[(TreeVertex, ReducedSolution)]) -> Vec<Check> {
    let mut out = Vec::new();
    let binary = tree.iter().filter(|(v, _)| v.kind == VertexKind::Binary).count();
    let bad: Vec<String> = tree
        .par_iter()
        .filter(|(v, r)| {
            let sol = r.solution();
            !(r.markov == v.triple && check_star_markov(&sol) && sol.evaluate() == v.triple)
        })
        .map(|(v, _)| v.triple.to_string())
        .collect();
    out.push(check_with(format!("{} presentations (binary vertices: {binary}) solve the equation and evaluate to their triple", tree.len()), if bad.is_empty() { None } else { Some(bad.join(" ")) }));
    let replay: Vec<String> = tree
        .par_iter()
        .filter(|(v, r)| v.kind == VertexKind::Binary && v.depth <= 6 && reduced_presentation(&v.triple).ok().as_ref() != Some(r))
        .map(|(v, _)| v.triple.to_string())
        .collect();
    out.push(check_with("replaying the tree path reproduces each presentation to depth 6", if replay.is_empty() { None } else { Some(replay.join(" ")) }));
    out
}

/// Bi-degree additivity, degree matrices, deviation triples and the parity rule at binary vertices.
pub fn bidegree_laws(tree: &[(TreeVertex, ReducedSolution)]) -> Vec<Check> {
    let mut out = Vec::new();
    let mut law = Vec::new();
    let mut matrices = Vec::new();
    let mut devs = Vec::new();
    let mut parity = Vec::new();
    for (v, r) in tree.iter().filter(|(v, _)| v.kind == VertexKind::Binary) {
        let t = r.admissible.as_ref().expect("binary vertices carry admissible triples");
        let [b1, b2, b3] = t.bidegrees();
        if b1 + b3 != b2 {
            law.push(v.triple.to_string());
        }
        let [m1, m2, m3]: [DegreeMatrix; 3] = t.degree_matrices();
        if m1 + m3 != m2 {
            matrices.push(v.triple.to_string());
        }
        if !DEVIATION_TRIPLES.contains(&t.deviations()) {
            devs.push(v.triple.to_string());
        }
        if b2.deviation().abs() != if b2.d % 2 == 1 { 1 } else { 2 } {
            parity.push(v.triple.to_string());
        }
    }
    let none_or = |v: Vec<String>| if v.is_empty() { None } else { Some(v.join(" ")) };
    out.push(check_with("(d1,q1) + (d3,q3) = (d2,q2) at every binary vertex", none_or(law)));
    out.push(check_with("degree matrices add at every binary vertex", none_or(matrices)));
    out.push(check_with("deviation triples lie in the six-element set", none_or(devs)));
    out.push(check_with("|2q - 3d| is 1 for odd d and 2 for even d in the middle entry", none_or(parity)));
    out
}

fn carrier<E: std::fmt::Display>(e: E) -> TreeError {
    TreeError::Carrier(e.to_string())
}

/// Tree rows, reconstruction from domain labels, and the morphisms between decoration systems.
pub fn trees(depth: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let rows = generate(&MarkovSystem, 3).map(|t| {
        t.vertices.iter().filter(|v| v.depth == 3).map(|v| v.triple.iter().map(|x| x.to_i64().unwrap_or(-1)).collect::<Vec<_>>()).collect::<Vec<_>>()
    });
    let want = vec![vec![3, 102, 39], vec![39, 582, 15], vec![15, 1299, 87], vec![87, 507, 6]];
    out.push(check("depth-3 row of the Markov tree", rows.ok() == Some(want)));
    let euclid_rows = generate(&EuclidSystem, 3).map(|t| t.vertices.iter().filter(|v| v.depth == 3).map(|v| v.triple.to_vec()).collect::<Vec<_>>());
    let poly_rows = generate(&PolynomialSystem, 3).map(|t| {
        t.vertices.iter().filter(|v| v.depth == 3).map(|v| v.triple.iter().map(|f| f.degree().unwrap_or(-1)).collect::<Vec<i64>>()).collect::<Vec<_>>()
    });
    out.push(check("Euclid tree carries the degrees of the polynomial tree at depth 3", euclid_rows.ok() == poly_rows.ok()));
    fn recon<S: DecorationSystem>(s: &S, depth: usize) -> Check {
        let r = generate(s, depth).map_err(|e| e.to_string()).and_then(|t| check_reconstruction(s, &t));
        Check::with_residual(format!("{} tree is rebuilt from its domain labels", s.name()), r.err())
    }
    let d = depth.min(8);
    out.push(recon(&MarkovSystem, d));
    out.push(recon(&EuclidSystem, d));
    out.push(recon(&PolynomialSystem, d.min(7)));
    out.push(recon(&BivectorSystem, d));
    out.push(recon(&MatrixSystem, d));
    out.push(recon(&DeviationSystem, d));
    let morphisms: Vec<(&str, Result<(), String>)> = vec![
        ("polynomial -> bivector", morphism_check(&PolynomialSystem, &BivectorSystem, |f: &LaurentPoly| f.bidegree().map_err(carrier), depth)),
        ("polynomial -> matrix", morphism_check(&PolynomialSystem, &MatrixSystem, |f: &LaurentPoly| f.degree_matrix().map_err(carrier), depth)),
        ("matrix -> deviation", morphism_check(&MatrixSystem, &DeviationSystem, |m: &DegreeMatrix| Ok(m.deviation()), depth)),
        ("polynomial -> deviation", morphism_check(&PolynomialSystem, &DeviationSystem, |f: &LaurentPoly| f.deviation().map_err(carrier), depth)),
        ("polynomial -> markov", morphism_check(&PolynomialSystem, &MarkovSystem, |f: &LaurentPoly| Ok(f.evaluate_at_s0()), depth)),
        ("polynomial -> euclid", morphism_check(&PolynomialSystem, &EuclidSystem, |f: &LaurentPoly| f.degree().ok_or_else(|| carrier("zero")), depth)),
        ("bivector -> euclid", morphism_check(&BivectorSystem, &EuclidSystem, |b: &BiDegree| Ok(b.d), depth)),
    ];
    for (name, r) in morphisms {
        out.push(check_with(format!("morphism {name} commutes with the tree to depth {depth}"), r.err()));
    }
    let convex = generate(&ConvexSystem, depth.min(6));
    let poly = generate(&PolynomialSystem, depth.min(6));
    let bounded = match (convex, poly) {
        (Ok(c), Ok(p)) => c.vertices.iter().zip(&p.vertices).all(|(cv, pv)| {
            cv.triple.iter().zip(&pv.triple).all(|(set, f)| trees::ConvexSet::from_newton(f).map(|np| set.contains_set(&np)).unwrap_or(false))
        }),
        _ => false,
    };
    out.push(check("convex tree contains the Newton polygons of the polynomial tree", bounded));
    out
}

fn fib_numbers(m: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(), BigInt::from(1)];
    while v.len() <= m {
        let k = v.len();
        v.push(&v[k - 1] + &v[k - 2]);
    }
    v
}

fn pell_numbers(m: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(), BigInt::from(1)];
    while v.len() <= m {
        let k = v.len();
        v.push(BigInt::from(2) * &v[k - 1] + &v[k - 2]);
    }
    v
}

fn none_if_empty(v: Vec<String>) -> Option<String> {
    if v.is_empty() {
        None
    } else {
        Some(v.join(" "))
    }
}

fn to_f64_points(np: &laurent_core::NewtonPolygon) -> Vec<[f64; 2]> {
    np.projected.iter().map(|p| [p[0].to_f64().unwrap_or(f64::NAN), p[1].to_f64().unwrap_or(f64::NAN)]).collect()
}

/// Hausdorff distance from the projected Newton polygon of `F_{4n+1}` to the segment `[(0,0),(1/2,1/2)]`.
pub fn fibonacci_hausdorff(n: i64) -> f64 {
    let np = fp::star_fibonacci(2 * n).newton_polygon().expect("quasi-homogeneous");
    hausdorff_to_segment(&to_f64_points(&np), [0.0, 0.0], [0.5, 0.5])
}

/// Smallest distances from the projected Newton polygon of `P_{4n+1}` to `(3/4,0)`, `(0,3/4)`, `(1/2,1/2)`.
pub fn pell_corner_distances(n: u32) -> [f64; 3] {
    let np = fp::star_pell(2 * n).newton_polygon().expect("quasi-homogeneous");
    let pts = to_f64_points(&np);
    [[0.75, 0.0], [0.0, 0.75], [0.5, 0.5]].map(|t: [f64; 2]| pts.iter().map(|p| ((p[0] - t[0]).powi(2) + (p[1] - t[1]).powi(2)).sqrt()).fold(f64::INFINITY, f64::min))
}

/// Recurrence, closed form, generating function, Cassini, continued fractions, values at `s0`,
/// negative indices and Newton polygons for the `*`-Fibonacci polynomials.
pub fn fibonacci() -> Vec<Check> {
    let mut out = fibonacci_battery();
    out.extend(fibonacci_newton());
    out
}

pub fn fibonacci_battery() -> Vec<Check> {
    let seq = fp::fibonacci_sequence(81);
    let mut out = Vec::new();
    let rec: Vec<String> = (1..81).filter(|&n| seq[n + 1] != &(&fp::g(n as i64) * &seq[n]) - &seq[n - 1].shift_s3(1)).map(|n| n.to_string()).collect();
    out.push(check_with("F_{2n+3} = g_n F_{2n+1} - s3 F_{2n-1} for 2n+3 <= 163", none_if_empty(rec)));
    let closed: Vec<String> = (0..=81usize).filter(|&k| fp::star_fibonacci_closed(2 * k as i64 + 1).ok().as_ref() != Some(&seq[k])).map(|k| (2 * k + 1).to_string()).collect();
    out.push(check_with("closed form equals the recurrence for indices <= 163", none_if_empty(closed)));
    let (num, den) = fp::fib_genfun();
    let coeffs = fp::series_coefficients(&num, &den, 41);
    let gf: Vec<String> = (0..=41usize).filter(|&k| if k % 2 == 0 { !coeffs[k].is_zero() } else { coeffs[k] != seq[k / 2] }).map(|k| k.to_string()).collect();
    out.push(check_with("generating function coefficients equal the recurrence for k <= 41", none_if_empty(gf)));
    let c = fp::fib_cassini_constant();
    let cass: Vec<String> = (1..=25i64)
        .filter(|&n| {
            let n_ = n as usize;
            let lhs = &(&fp::g(n) * &seq[n_].pow(2)) - &(&(&fp::g(n - 1) * &seq[n_ + 1]) * &seq[n_ - 1]);
            lhs != c.shift_s3(n as i32 - 1)
        })
        .map(|n| n.to_string())
        .collect();
    out.push(check_with("Cassini identity for n <= 25", none_if_empty(cass)));
    let cf: Vec<String> = (1..=10i64)
        .filter(|&n| !fp::cf_convergent_fib(n).map(|cf| cf.equals_ratio(&seq[n as usize + 1], &seq[n as usize])).unwrap_or(false))
        .map(|n| n.to_string())
        .collect();
    out.push(check_with("continued fraction convergents equal F_{2n+3}/F_{2n+1} for n <= 10", none_if_empty(cf)));
    let phi = fib_numbers(81);
    let ev: Vec<String> = (0..=40usize).filter(|&n| seq[n].evaluate_at_s0() != BigInt::from(3) * &phi[2 * n + 1]).map(|n| n.to_string()).collect();
    out.push(check_with("F_{2n+1}(s0) = 3 phi_{2n+1} for n <= 40", none_if_empty(ev)));
    let neg: Vec<String> = (0..=20i64).filter(|&n| fp::star_fibonacci(-n - 1) != fp::star_fibonacci(n).star()).map(|n| n.to_string()).collect();
    out.push(check_with("F_{-2n-1} = F_{2n+1}* for n <= 20", none_if_empty(neg)));
    out
}

/// Hull formulas for `F_{4n+1}`, `F_{4n+3}` and the distance of the projected polygons to the diagonal.
pub fn fibonacci_newton() -> Vec<Check> {
    let mut out = Vec::new();
    let hull: Vec<String> = (1..=15i64)
        .filter(|&n| {
            [(fp::star_fibonacci(2 * n), fp::fib_newton_points_4n1(n)), (fp::star_fibonacci(2 * n + 1), fp::fib_newton_points_4n3(n))].iter().any(|(f, pts)| {
                let want = laurent_core::convex_hull_i64(pts.iter().map(|e| (e.a1 as i64, e.a2 as i64)).collect());
                let got: Option<Vec<(i64, i64)>> = f.newton_polygon().ok().map(|np| np.vertices.iter().map(|e| (e.a1 as i64, e.a2 as i64)).collect());
                got != Some(want) || pts.iter().any(|e| f.coeff(*e).is_zero())
            })
        })
        .map(|n| n.to_string())
        .collect();
    out.push(check_with("Newton polygons of F_{4n+1}, F_{4n+3} are the four-vertex hulls for n <= 15", none_if_empty(hull)));
    let dist: Vec<f64> = (1..=15).map(fibonacci_hausdorff).collect();
    let decreasing = dist.windows(2).all(|w| w[1] < w[0]);
    let at15 = dist[14];
    out.push(check_with(
        format!("projected F_61 polygon is within {at15:.4} < 0.08 of the diagonal segment, decreasing in n"),
        if at15 < 0.08 && decreasing { None } else { Some(format!("{dist:?}")) },
    ));
    out
}

/// The same battery for the `*`-Pell polynomials.
pub fn pell() -> Vec<Check> {
    let mut out = pell_battery();
    out.extend(pell_newton());
    out
}

pub fn pell_battery() -> Vec<Check> {
    let seq = fp::pell_sequence(81);
    let mut out = Vec::new();
    let rec: Vec<String> = (1..81).filter(|&n| seq[n + 1] != &(&fp::h(n as i64) * &seq[n]) - &seq[n - 1].shift_s3(2)).map(|n| n.to_string()).collect();
    out.push(check_with("P_{2n+3} = h_n P_{2n+1} - s3^2 P_{2n-1} for 2n+3 <= 163", none_if_empty(rec)));
    let closed: Vec<String> = (0..=81usize).filter(|&k| fp::pell_closed(2 * k as i64 + 1).ok().as_ref() != Some(&seq[k])).map(|k| (2 * k + 1).to_string()).collect();
    out.push(check_with("closed form equals the recurrence for indices <= 163", none_if_empty(closed)));
    let (num, den) = fp::pell_genfun();
    let coeffs = fp::series_coefficients(&num, &den, 41);
    let gf: Vec<String> = (0..=41usize).filter(|&k| if k % 2 == 0 { !coeffs[k].is_zero() } else { coeffs[k] != seq[k / 2] }).map(|k| k.to_string()).collect();
    out.push(check_with("generating function coefficients equal the recurrence for k <= 41", none_if_empty(gf)));
    let c = fp::pell_cassini_constant();
    let cass: Vec<String> = (1..=25i64)
        .filter(|&n| {
            let n_ = n as usize;
            let lhs = &(&fp::h(n) * &seq[n_].pow(2)) - &(&(&fp::h(n - 1) * &seq[n_ + 1]) * &seq[n_ - 1]);
            lhs != c.shift_s3(2 * n as i32 - 1)
        })
        .map(|n| n.to_string())
        .collect();
    out.push(check_with("Cassini identity for n <= 25", none_if_empty(cass)));
    let cf: Vec<String> = (1..=10i64)
        .filter(|&n| !fp::cf_convergent_pell(n).map(|cf| cf.equals_ratio(&seq[n as usize + 1], &seq[n as usize])).unwrap_or(false))
        .map(|n| n.to_string())
        .collect();
    out.push(check_with("continued fraction convergents equal P_{2n+3}/P_{2n+1} for n <= 10", none_if_empty(cf)));
    let psi = pell_numbers(81);
    let ev: Vec<String> = (0..=40usize).filter(|&n| seq[n].evaluate_at_s0() != BigInt::from(3) * &psi[2 * n + 1]).map(|n| n.to_string()).collect();
    out.push(check_with("P_{2n+1}(s0) = 3 psi_{2n+1} for n <= 40", none_if_empty(ev)));
    out
}

/// Support points of `P_{4n+1}` and the corners of its projected polygon.
pub fn pell_newton() -> Vec<Check> {
    let mut out = Vec::new();
    let support: Vec<String> = (1..=12i64).filter(|&n| fp::pell_support_points_4n1(n).iter().any(|e| fp::star_pell(2 * n as u32).coeff(*e).is_zero())).map(|n| n.to_string()).collect();
    out.push(check_with("the four support points of P_{4n+1} occur for n <= 12", none_if_empty(support)));
    let d = pell_corner_distances(12);
    out.push(check_with(
        format!("projected P_49 polygon has points within {:.4}, {:.4}, {:.4} < 0.05 of (3/4,0), (0,3/4), (1/2,1/2)", d[0], d[1], d[2]),
        if d.iter().all(|&x| x < 0.05) { None } else { Some(format!("{d:?}")) },
    ));
    out
}

/// Structure checks for one Poisson space plus its solver checks where a solver exists.
pub fn poisson_space(space: Space) -> Vec<Check> {
    let mut out = poisson::check_space(space);
    if let Ok(more) = poisson::solver_checks(space) {
        out.extend(more);
    }
    out
}

pub fn poisson_all(seed: u64) -> Vec<Check> {
    let mut out: Vec<Check> = [Space::C6, Space::C5, Space::C3, Space::C12].into_par_iter().flat_map_iter(poisson_space).collect();
    out.push(poisson::fi::bracket4_fi(100, seed));
    out.push(poisson::fi::canonical6_fi(100, seed));
    out
}

pub fn horowitz(seed: u64, words: usize, weight_tuples: usize) -> Vec<Check> {
    horowitz::suite(seed, words, weight_tuples).into_iter().map(|c| Check::new(c.name, c.pass)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Core,
    Group,
    Presentations,
    Trees,
    Fibonacci,
    Pell,
    Poisson,
    Horowitz,
}

impl Suite {
    pub const EACH: [Suite; 8] = [Suite::Core, Suite::Group, Suite::Presentations, Suite::Trees, Suite::Fibonacci, Suite::Pell, Suite::Poisson, Suite::Horowitz];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Group => "group",
            Suite::Presentations => "presentations",
            Suite::Trees => "trees",
            Suite::Fibonacci => "fibonacci",
            Suite::Pell => "pell",
            Suite::Poisson => "poisson",
            Suite::Horowitz => "horowitz",
        }
    }

    /// `(suite name, checks)` for this suite, or for every suite when `All`.
    pub fn run(self, depth: Option<usize>, seed: u64) -> Vec<(&'static str, Vec<Check>)> {
        if self == Suite::All {
            return Suite::EACH.into_par_iter().flat_map_iter(|s| s.run(depth, seed)).collect();
        }
        let checks = match self {
            Suite::Core => core(seed),
            Suite::Group => group(seed, 50),
            Suite::Presentations => presentations(depth.unwrap_or(10)),
            Suite::Trees => trees(depth.unwrap_or(6)),
            Suite::Fibonacci => fibonacci(),
            Suite::Pell => pell(),
            Suite::Poisson => poisson_all(seed),
            Suite::Horowitz => horowitz(seed, 200, 20),
            Suite::All => unreachable!(),
        };
        vec![(self.name(), checks)]
    }
}

/// Names of duplicated checks, which would make reports ambiguous.
pub fn duplicate_names(checks: &[Check]) -> Vec<String> {
    let mut seen = HashSet::new();
    checks.iter().filter(|c| !seen.insert(c.name.clone())).map(|c| c.name.clone()).collect()
}
