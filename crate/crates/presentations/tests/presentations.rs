use std::collections::HashSet;

use laurent_core::{lp, BiDegree, LaurentPoly};
use markov_classical::{MarkovTriple, Turn, VertexKind};
use presentations::*;
use star_group::{check_star_markov, StarTriple};

const F5: &str = "s1^2*s2 - s1*s3 - s2^2";
const F7: &str = "s1^3*s2 - 2*s1^2*s3 - s1*s2^2 + s2*s3";
const P5: &str = "s1^2*s2^3 - s1^3*s2*s3 - s2*s3^2 + s1^2*s3^2 - s2^4";

fn m(a: i64, b: i64, c: i64) -> MarkovTriple {
    MarkovTriple::new(a, b, c)
}

fn star_triple(a: &str, b: &str, c: &str) -> StarTriple {
    StarTriple::new(lp(a).star(), lp(b), lp(c).star())
}

#[test]
fn transform_examples() {
    let t0 = AdmissibleTriple::seed();
    assert_eq!(t0.entries()[1], lp(F5));
    let l = transform(Turn::L, &t0).unwrap();
    assert_eq!(l.entries(), &[lp("s1"), lp(F7), lp(F5)]);
    assert_eq!(lp(F7), lp("s1") * lp(F5) - lp("s3") * lp("s1^2 - s2"));
    let r = transform(Turn::R, &t0).unwrap();
    assert_eq!(r.entries(), &[lp(F5), lp(P5), lp("s2^2 - s1*s3")]);
    assert_eq!(t0.bidegrees(), [BiDegree::new(1, 2), BiDegree::new(3, 4), BiDegree::new(2, 2)]);
    assert_eq!(l.bidegrees(), [BiDegree::new(1, 1), BiDegree::new(4, 5), BiDegree::new(3, 4)]);
}

#[test]
fn transform_rejects_non_admissible() {
    assert!(AdmissibleTriple::new(lp("s1"), lp("s1^2 - s2"), lp("s1")).is_ok());
    assert!(AdmissibleTriple::new(lp("s1"), lp("s1^2 - s2"), lp("s2")).is_err());
    assert!(AdmissibleTriple::new(lp("s1 + s2"), lp("s2"), lp("s1")).is_err());
    assert!(AdmissibleTriple::new(lp("s3*s1"), lp("s1*s2*s3"), lp("s2")).is_err());
}

#[test]
fn displayed_presentations() {
    let cases = [
        (m(3, 6, 3), star_triple("s1", "s1^2 - s2", "s1")),
        (m(3, 15, 6), star_triple("s2", "s2*(s1^2 - s2) - s3*s1", "s1^2 - s2")),
        (m(3, 39, 15), star_triple("s1", F7, F5)),
        (m(15, 87, 6), star_triple(F5, P5, "s2^2 - s1*s3")),
    ];
    for (p, want) in cases {
        let r = reduced_presentation(&p).unwrap();
        assert_eq!(r.solution(), want, "{p}");
        assert!(check_star_markov(&want));
        assert_eq!(want.evaluate(), p);
    }
    assert_eq!(reduced_presentation(&MarkovTriple::root()).unwrap().solution(), StarTriple::initial());
}

#[test]
fn reversed_and_invalid_triples() {
    let r = reduced_presentation(&m(6, 15, 3)).unwrap();
    assert!(check_star_markov(&r.solution()));
    assert_eq!(r.solution().evaluate(), m(6, 15, 3));
    assert!(matches!(reduced_presentation(&m(15, 6, 3)), Err(PresentationError::OutOfRange(_))));
    assert!(reduced_presentation(&m(1, 2, 3)).is_err());
}

#[test]
fn deviation_examples() {
    assert_eq!(deviation(&lp("s2")), Ok(1));
    assert_eq!(deviation(&lp("s2*(s1^2 - s2) - s3*s1")), Ok(-1));
    assert_eq!(deviation(&lp("s1^2 - s2")), Ok(-2));
}

#[test]
fn tree_invariants_to_depth_8() {
    let tree = presentation_tree(8).unwrap();
    let mut shallower: HashSet<LaurentPoly> = [lp("s1"), lp("s1^2 - s2")].into_iter().collect();
    let mut depth = 0;
    let mut this_level = vec![];
    for (v, r) in &tree {
        if v.depth != depth {
            shallower.extend(this_level.drain(..));
            depth = v.depth;
        }
        assert_eq!(r.markov, v.triple);
        let sol = r.solution();
        assert!(check_star_markov(&sol), "{}", v.triple);
        assert_eq!(sol.evaluate(), v.triple);
        if v.kind != VertexKind::Binary {
            continue;
        }
        let t = r.admissible.as_ref().unwrap();
        let [b1, b2, b3] = t.bidegrees();
        assert_eq!(b1 + b3, b2);
        let [m1, m2, m3] = t.degree_matrices();
        assert_eq!(m1 + m3, m2);
        assert!(DEVIATION_TRIPLES.contains(&t.deviations()));
        let dev = b2.deviation().abs();
        assert_eq!(dev, if b2.d % 2 == 1 { 1 } else { 2 });
        for f in [&t.entries()[0], &t.entries()[2]] {
            let dual = f.mu_dual().unwrap();
            assert!(shallower.contains(f) || shallower.contains(&dual), "flank {f} at {}", v.triple);
        }
        this_level.push(t.entries()[1].clone());
        // replaying the path from scratch gives the same triple
        if v.depth <= 5 {
            assert_eq!(&reduced_presentation(&v.triple).unwrap(), r);
        }
    }
}
