use laurent_core::{lp, BiDegree, BigInt, DegreeMatrix, LaurentPoly};
use num_bigint::BigInt as Int;
use num_rational::BigRational;
use trees::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(Int::from(n), Int::from(d))
}

fn pt(a: (i64, i64), b: (i64, i64)) -> Point {
    [q(a.0, a.1), q(b.0, b.1)]
}

fn vertex<'a, E>(tree: &'a DecoratedTree<E>, path: &str) -> &'a DecoratedVertex<E> {
    tree.vertices.iter().find(|v| path_string(&v.path) == path).unwrap()
}

#[test]
fn euclid_children() {
    let t = generate(&EuclidSystem, 2).unwrap();
    assert_eq!(t.vertices.len(), 3);
    assert_eq!(vertex(&t, "L").triple, [1, 4, 3]);
    assert_eq!(vertex(&t, "R").triple, [3, 5, 2]);
}

#[test]
fn deviation_left_child() {
    let t = generate(&DeviationSystem, 2).unwrap();
    assert_eq!(vertex(&t, "L").triple, [-1, -2, -1]);
}

#[test]
fn depth_zero_has_only_outer_domains() {
    let t = generate(&EuclidSystem, 0).unwrap();
    assert!(t.vertices.is_empty());
    assert_eq!(t.domains.iter().map(|d| d.label).collect::<Vec<_>>(), vec![1, 2]);
}

#[test]
fn polynomial_domain_labels_at_depth_three() {
    let t = generate(&PolynomialSystem, 3).unwrap();
    assert_eq!(t.vertices.len(), 7);
    assert_eq!(t.domains.len(), 9);
    let label = |owner: Option<&str>, outer: usize| -> LaurentPoly {
        match owner {
            Some(p) => t.domains.iter().find(|d| d.owner.as_ref().map(|o| path_string(o)).as_deref() == Some(p)).unwrap().label.clone(),
            None => t.domains[outer].label.clone(),
        }
    };
    let a = [
        "s2",
        "s2*(s1^2 - s2) - s1*s3",
        "s1^2 - s2",
        "s1^3*s2 - 2*s1^2*s3 - s1*s2^2 + s2*s3",
        "s1^2*s2^3 - s2^4 - s1^3*s2*s3 + s1^2*s3^2 - s2*s3^2",
        "s1^3*s2^2 - s1*s2^3 - 3*s1^2*s2*s3 + 2*s2^2*s3 + s1*s3^2",
        "s1^4*s2^3 - 2*s1^2*s2^4 + s2^5 - s1^5*s2*s3 + s1^3*s2^2*s3 + s1^4*s3^2 - 3*s1^2*s2*s3^2 + 2*s2^2*s3^2 + s1*s3^3",
        "s1^4*s2^3 - s1^2*s2^4 - s1^5*s2*s3 - 2*s1^3*s2^2*s3 + 2*s1*s2^3*s3 + 2*s1^4*s3^2 + s1^2*s2*s3^2 - s2^2*s3^2 - s1*s3^3",
        "s1^3*s2^5 - s1*s2^6 - 2*s1^4*s2^3*s3 + s2^5*s3 + s1^5*s2*s3^2 + 2*s1^3*s2^2*s3^2 - s1*s2^3*s3^2 - s1^4*s3^3 + s1*s3^4",
    ];
    let a: Vec<LaurentPoly> = a.iter().map(|s| lp(s)).collect();
    assert_eq!(label(None, 0), a[0]);
    assert_eq!(label(Some(""), 0), a[1]);
    assert_eq!(label(None, 1), a[2]);
    assert_eq!(label(Some("L"), 0), a[3]);
    assert_eq!(label(Some("LL"), 0), a[5]);
    assert_eq!(label(Some("R"), 0), a[4]);
    assert_eq!(label(Some("LR"), 0), a[7]);
    assert_eq!(label(Some("RL"), 0), a[8]);
    assert_eq!(label(Some("RR"), 0), a[6]);
    let mut got: Vec<LaurentPoly> = t.domains.iter().map(|d| d.label.clone()).collect();
    let mut want = a.clone();
    got.sort_by_key(|f| f.to_string());
    want.sort_by_key(|f| f.to_string());
    assert_eq!(got, want);
}

#[test]
fn reconstruction_round_trips() {
    let e = generate(&EuclidSystem, 4).unwrap();
    check_reconstruction(&EuclidSystem, &e).unwrap();
    let d = generate(&DeviationSystem, 6).unwrap();
    assert_eq!(vertex_from_domains(&DeviationSystem, [&1, &-1, &-2], (1, 1)).unwrap(), [1, -1, -2]);
    check_reconstruction(&DeviationSystem, &d).unwrap();
    check_reconstruction(&PolynomialSystem, &generate(&PolynomialSystem, 6).unwrap()).unwrap();
    check_reconstruction(&MatrixSystem, &generate(&MatrixSystem, 8).unwrap()).unwrap();
    check_reconstruction(&ConvexSystem, &generate(&ConvexSystem, 6).unwrap()).unwrap();
    assert_eq!(vertex_from_domains(&EuclidSystem, [&1, &3, &2], (0, 1)), Err(TreeError::BadEdge(0, 1)));
}

#[test]
fn corrupted_labels_fail_reconstruction() {
    let mut e = generate(&EuclidSystem, 4).unwrap();
    e.domains[5].label += 1;
    assert!(check_reconstruction(&EuclidSystem, &e).is_err());
}

#[test]
fn matrix_vertex_with_a_two_swaps_columns() {
    let t = generate(&MatrixSystem, 3).unwrap();
    let v = vertex(&t, "LL");
    assert_eq!(v.edge, (3, 1));
    let u = vertex(&t, "L");
    assert_eq!(u.edge.0, 2);
    let c1 = &t.domains[u.domains[0]].label;
    assert_eq!(u.triple[0], c1.swap_columns());
    assert_eq!(*c1, DegreeMatrix([[1, 1], [2, 1]]));
}

#[test]
fn morphisms_commute_to_depth_six() {
    let d = 6;
    morphism_check(&PolynomialSystem, &BivectorSystem, |f: &LaurentPoly| f.bidegree().map_err(|e| TreeError::Carrier(e.to_string())), d).unwrap();
    morphism_check(&PolynomialSystem, &MatrixSystem, |f: &LaurentPoly| f.degree_matrix().map_err(|e| TreeError::Carrier(e.to_string())), d).unwrap();
    morphism_check(&MatrixSystem, &DeviationSystem, |m: &DegreeMatrix| Ok(m.deviation()), d).unwrap();
    morphism_check(&PolynomialSystem, &DeviationSystem, |f: &LaurentPoly| f.deviation().map_err(|e| TreeError::Carrier(e.to_string())), d).unwrap();
    morphism_check(&PolynomialSystem, &MarkovSystem, |f: &LaurentPoly| Ok(f.evaluate_at_s0()), d).unwrap();
    morphism_check(&PolynomialSystem, &EuclidSystem, |f: &LaurentPoly| Ok(f.degree().unwrap()), d).unwrap();
    morphism_check(&BivectorSystem, &EuclidSystem, |b: &BiDegree| Ok(b.d), d).unwrap();
}

#[test]
fn wrong_map_reports_counterexample() {
    let r = morphism_check(&PolynomialSystem, &EuclidSystem, |f: &LaurentPoly| Ok(f.len() as i64), 3);
    assert!(r.unwrap_err().contains("polynomial -> euclid"));
}

#[test]
fn markov_tree_matches_classical_enumeration() {
    let t = generate(&MarkovSystem, 6).unwrap();
    let classical = markov_classical::enumerate_tree(6);
    for v in &t.vertices {
        let c = classical
            .iter()
            .find(|c| c.kind == markov_classical::VertexKind::Binary && c.path == v.path)
            .unwrap();
        assert_eq!(c.triple.0, v.triple);
    }
    assert!(t.vertices.iter().all(|v| v.triple.iter().all(|x| *x > BigInt::from(0))));
}

#[test]
fn convex_seed_and_first_step() {
    let seed = ConvexSystem.seed();
    assert_eq!(seed[0], ConvexSet::new(vec![pt((0, 1), (1, 1))], q(1, 1)));
    assert_eq!(seed[2], ConvexSet::new(vec![pt((1, 1), (0, 1)), pt((0, 1), (1, 2))], q(2, 1)));
    assert_eq!(seed[1], ConvexSet::new(vec![pt((1, 3), (0, 1)), pt((2, 3), (1, 3)), pt((0, 1), (2, 3))], q(3, 1)));
    let l = convex_step(Turn::L, &seed).unwrap();
    assert_eq!(l.clone().map(|c| c.d), [q(1, 1), q(4, 1), q(3, 1)]);
    let poly = PolynomialSystem.step(Turn::L, &PolynomialSystem.seed()).unwrap();
    assert_eq!(l, poly.map(|f| ConvexSet::from_newton(&f).unwrap()));
    let bad = [seed[0].clone(), seed[0].clone(), seed[2].clone()];
    assert!(matches!(convex_step(Turn::R, &bad), Err(TreeError::WeightMismatch { .. })));
}

/// Support of `mu(f1) f2` together with `s3^d1 f3` (or the R analogue), before the
/// subtraction can cancel anything.
fn uncancelled_hull(kind: Turn, t: &[LaurentPoly; 3]) -> ConvexSet {
    let sys = PolynomialSystem;
    let (prod, other, d) = match kind {
        Turn::L => (&sys.tau(&t[0]).unwrap() * &t[1], &t[2], t[0].degree().unwrap() + t[1].degree().unwrap()),
        Turn::R => (&t[1] * &sys.tau(&t[2]).unwrap(), &t[0], t[1].degree().unwrap() + t[2].degree().unwrap()),
    };
    let w = q(d, 1);
    let pts = prod.terms().chain(other.terms()).map(|(e, _)| [q(e.a1 as i64, d), q(e.a2 as i64, d)]).collect();
    ConvexSet::new(pts, w)
}

#[test]
fn convex_tree_bounds_newton_polygons_to_depth_six() {
    let c = generate(&ConvexSystem, 6).unwrap();
    let p = generate(&PolynomialSystem, 6).unwrap();
    let mut strict = vec![];
    for (vc, vp) in c.vertices.iter().zip(&p.vertices) {
        let np = vp.triple.clone().map(|f| ConvexSet::from_newton(&f).unwrap());
        for k in 0..3 {
            assert_eq!(vc.triple[k].d, np[k].d);
            assert!(vc.triple[k].contains_set(&np[k]), "at {}", path_string(&vc.path));
        }
        if vc.triple != np {
            strict.push(path_string(&vc.path));
        }
        // one step from the exact Newton polygons equals the hull of the uncancelled support
        let newton = vp.triple.clone().map(|f| ConvexSet::from_newton(&f).unwrap());
        for kind in [Turn::L, Turn::R] {
            let step = convex_step(kind, &newton).unwrap();
            assert_eq!(step[1], uncancelled_hull(kind, &vp.triple), "at {}{}", path_string(&vc.path), kind.as_char());
        }
    }
    // cancellation in the middle entry first shrinks the Newton polygon at RL
    assert!(strict.iter().all(|s| s.len() >= 2));
    assert_eq!(strict.first().map(String::as_str), Some("RL"));
    assert_eq!(strict.len(), 24);
    for s in c.vertices.iter().flat_map(|v| v.triple.iter()) {
        assert_eq!(&s.mu().mu(), s);
    }
}

#[test]
fn convex_and_newton_agree_along_outer_paths() {
    for kind in [Turn::L, Turn::R] {
        let mut c = ConvexSystem.seed();
        let mut f = PolynomialSystem.seed();
        for _ in 0..12 {
            c = convex_step(kind, &c).unwrap();
            f = PolynomialSystem.step(kind, &f).unwrap();
            assert_eq!(c, f.clone().map(|x| ConvexSet::from_newton(&x).unwrap()));
        }
    }
}

fn path_polygons(kind: Turn, n: usize) -> Vec<ConvexSet> {
    let mut t = ConvexSystem.seed();
    let mut out = vec![t[1].clone()];
    for _ in 0..n {
        t = convex_step(kind, &t).unwrap();
        out.push(t[1].clone());
    }
    out
}

#[test]
fn leftmost_path_shrinks_to_diagonal_segment() {
    let polys = path_polygons(Turn::L, 30);
    let dists: Vec<f64> = polys.iter().map(|c| hausdorff_to_segment(&c.to_f64(), [0.0, 0.0], [0.5, 0.5])).collect();
    for w in dists.windows(2) {
        assert!(w[1] <= w[0] + 1e-12, "{dists:?}");
    }
    assert!(dists[30] < 0.045, "{}", dists[30]);
    assert!(polys.iter().all(|c| polygon_width(&c.to_f64()) >= 0.0));
}

#[test]
fn rightmost_path_approaches_quadrilateral() {
    let quad = [[0.0, 0.0], [0.75, 0.0], [0.5, 0.5], [0.0, 0.75]];
    let polys = path_polygons(Turn::R, 24);
    let dists: Vec<f64> = polys.iter().map(|c| hausdorff(&c.to_f64(), &quad)).collect();
    assert!(dists[24] < 0.02, "{dists:?}");
    assert!(dists[24] < dists[4]);
    let w = polygon_width(&polys[24].to_f64());
    assert!((w - 0.75 * std::f64::consts::SQRT_2).abs() < 0.05, "{w}");
}

#[test]
fn emitters() {
    let t = generate(&EuclidSystem, 3).unwrap();
    let dot = to_dot(&EuclidSystem, &t);
    assert!(dot.contains("v -> v_L [label=\"l2|r1\"]"));
    assert!(dot.contains("cluster_domains"));
    let j = to_json(&EuclidSystem, &t);
    assert_eq!(j["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(j["vertices"][1]["triple"], serde_json::json!([1, 4, 3]));
    let csv = to_csv(&EuclidSystem, &t);
    assert_eq!(csv.lines().count(), 8);
    let c = generate(&ConvexSystem, 2).unwrap();
    let pc = polygons_csv(&c);
    assert!(pc.lines().nth(1).unwrap().starts_with("1,,1,1,0,0,1"));
    let pj = to_json(&PolynomialSystem, &generate(&PolynomialSystem, 2).unwrap());
    assert!(pj["domains"][2]["label"].is_object() || pj["domains"][2]["label"].is_array());
}
