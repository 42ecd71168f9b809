use laurent_core::{lp, LaurentPoly};
use markov_classical::{apply_composition as classical_apply, classical_relations, enumerate_tree, MarkovTriple};
use proptest::prelude::*;
use star_group::*;

fn xe(a: &str, b: &str, c: &str) -> StarTriple {
    StarTriple::new(lp(a).star(), lp(b), lp(c).star())
}

fn xe1() -> StarTriple {
    xe("s1", "s1^2 - s2", "s1")
}

fn xe11() -> StarTriple {
    xe("s2", "s2*(s1^2 - s2) - s3*s1", "s1^2 - s2")
}

fn xe3() -> StarTriple {
    xe(
        "s1^2*s2 - s1*s3 - s2^2",
        "s1^2*s2^3 - s1^3*s2*s3 - s2*s3^2 + s1^2*s3^2 - s2^4",
        "s2^2 - s1*s3",
    )
}

#[test]
fn apply_examples() {
    let i = StarTriple::initial();
    let t = StarGen::Tau1.apply(&i);
    assert_eq!(t, StarTriple::new(lp("-s2*s3^-1"), lp("s2*s3^-1"), lp("s2 - s1^2")));
    assert_eq!(t.evaluate(), MarkovTriple::new(-3, 3, -6));
    assert_eq!(StarGen::V(VieteIndex::V2).apply(&i), xe1());
    assert_eq!(StarGen::Mu(1, 0).apply(&i), StarTriple::new(lp("s3*s1"), lp("s1*s3^-2"), lp("s1")));
}

#[test]
fn check_examples() {
    assert!(check_star_markov(&StarTriple::initial()));
    assert!(check_star_markov(&xe11()));
    assert!(check_star_markov(&xe3()));
    assert!(!check_star_markov(&StarTriple::new(lp("s1"), lp("s1"), lp("s1"))));
}

#[test]
fn equation_forms() {
    let t = xe11();
    let outer = t.star_each().permuted([0, 1, 2]);
    let outer = StarTriple::new(outer.0[0].clone(), t.0[1].clone(), outer.0[2].clone());
    assert!(check_star_markov_form(&outer, EquationForm::StarredOuter));
    assert!(!check_star_markov_form(&t, EquationForm::StarredOuter));
    let mid = StarTriple::new(t.0[0].clone(), t.0[1].star(), t.0[2].clone());
    assert!(check_star_markov_form(&mid, EquationForm::StarredMiddle));
}

#[test]
fn evaluation_examples() {
    assert_eq!(evaluate_triple(&StarTriple::initial()), MarkovTriple::root());
    assert_eq!(evaluate_triple(&xe11()), MarkovTriple::new(3, 15, 6));
    assert_eq!(evaluate_triple(&xe3()), MarkovTriple::new(15, 87, 6));
}

#[test]
fn distinguished_examples() {
    assert_eq!(distinguished_element(&MarkovTriple::root()).unwrap(), StarTriple::initial());
    let f = distinguished_element(&MarkovTriple::new(3, 6, 3)).unwrap();
    assert_eq!(f.evaluate(), MarkovTriple::new(3, 6, 3));
    assert_eq!(f, xe1());
    let f = distinguished_element(&MarkovTriple::new(3, 15, 6)).unwrap();
    assert_eq!(f.evaluate(), MarkovTriple::new(3, 15, 6));
    assert!(check_star_markov(&f));
    assert!(distinguished_element(&MarkovTriple::new(1, 2, 3)).is_err());
}

#[test]
fn distinguished_elements_along_tree() {
    for v in enumerate_tree(5) {
        let f = distinguished_element(&v.triple).unwrap();
        assert!(check_star_markov(&f));
        assert_eq!(f.evaluate(), v.triple);
    }
}

#[test]
fn permuted_triples_differ_by_rescaling() {
    let perms = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    for v in enumerate_tree(4) {
        let f = distinguished_element(&v.triple).unwrap();
        for p in perms {
            let q = MarkovTriple(p.map(|i| v.triple.0[i].clone()));
            let g = distinguished_element(&q).unwrap();
            assert!(g4_relation(&f.permuted(p), &g).is_some(), "{} under {p:?}", v.triple);
        }
    }
}

#[test]
fn g4_normal_form() {
    let t = StarGen::Mu(3, -1).apply(&xe3());
    let n = g4_normalize(&t);
    assert_eq!(n.0[0].s3_valuation(), Some(0));
    assert_eq!(n.0[2].s3_valuation(), Some(0));
    assert_eq!(g4_normalize(&xe3()), n);
    assert_eq!(g4_relation(&xe3(), &t), Some((3, -1)));
}

#[test]
fn star_relations_hold() {
    let samples = random_triples(7, 50);
    assert!(failing_relations(&star_relations(), &samples, apply_composition).is_empty());
}

#[test]
fn classical_relations_hold() {
    let samples: Vec<MarkovTriple> = random_triples(11, 50).iter().map(|t| t.evaluate()).collect();
    for r in classical_relations() {
        for s in &samples {
            assert_eq!(classical_apply(&r.lhs, s), classical_apply(&r.rhs, s), "{}", r.name);
        }
    }
}

#[test]
fn sigma2_conjugate_of_lambda10_is_lambda11() {
    // s2 l10 s2 is l11, not l01
    use StarGen::*;
    let t = &random_triples(3, 1)[0];
    assert_ne!(apply_composition(&[Sigma2, Lambda(1, 0), Sigma2], t), Lambda(0, 1).apply(t));
}

fn arb_gen() -> impl Strategy<Value = StarGen> {
    use StarGen::*;
    prop_oneof![
        (0u8..2, 0u8..2).prop_map(|(i, j)| Lambda(i, j)),
        Just(Sigma1),
        Just(Sigma2),
        Just(Tau1),
        Just(Tau2),
        (-2i32..3, -2i32..3).prop_map(|(i, j)| Mu(i, j)),
        (0usize..3).prop_map(|i| V(VieteIndex::from_index(i))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solutions_stay_solutions(word in prop::collection::vec(arb_gen(), 0..=6)) {
        let t = apply_composition(&word, &StarTriple::initial());
        prop_assert!(check_star_markov(&t));
    }

    #[test]
    fn evaluation_is_equivariant(word in prop::collection::vec(arb_gen(), 0..=6), seed in 0u64..1000) {
        let t = random_triples(seed, 1).pop().unwrap();
        let lhs = apply_composition(&word, &t).evaluate();
        let classical: Vec<_> = word.iter().filter_map(|g| g.classical()).collect();
        prop_assert_eq!(lhs, classical_apply(&classical, &t.evaluate()));
    }

    #[test]
    fn braid_relation(seed in 0u64..10_000) {
        use StarGen::*;
        let t = random_triples(seed, 1).pop().unwrap();
        prop_assert_eq!(apply_composition(&[Tau1, Tau2, Tau1], &t), apply_composition(&[Tau2, Tau1, Tau2], &t));
    }
}

#[test]
fn zero_triple_is_fixed_by_tau1() {
    let z = StarTriple::new(LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero());
    assert_eq!(StarGen::Tau1.apply(&z), z);
}
