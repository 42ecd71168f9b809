use markov_classical::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn t(a: i64, b: i64, c: i64) -> MarkovTriple {
    MarkovTriple::new(a, b, c)
}

/// Independent descent: among the three Viete moves take the one that lowers the sum.
fn descent_oracle(p: &MarkovTriple) -> Vec<Viete> {
    let sum = |x: &MarkovTriple| x.0.iter().sum::<BigInt>();
    let mut cur = p.clone();
    let mut word = vec![];
    while cur != MarkovTriple::root() {
        let (v, next) = Viete::ALL
            .iter()
            .map(|v| (*v, v.apply(&cur)))
            .filter(|(_, n)| sum(n) < sum(&cur))
            .min_by_key(|(_, n)| sum(n))
            .expect("a lowering move exists");
        word.push(v);
        cur = next;
    }
    word
}

#[test]
fn is_markov_examples() {
    assert!(is_markov(&t(3, 3, 3)));
    assert!(is_markov(&t(3, 15, 6)));
    assert!(!is_markov(&t(1, 1, 1)));
}

#[test]
fn tree_step_examples() {
    assert_eq!(tree_step(Turn::L, &t(3, 15, 6)), t(3, 39, 15));
    assert_eq!(tree_step(Turn::R, &t(3, 15, 6)), t(15, 87, 6));
    assert_eq!(tree_step(Turn::L, &t(3, 6, 3)), t(3, 15, 6));
}

#[test]
fn reduce_examples() {
    assert!(reduce_to_root(&t(3, 3, 3)).unwrap().is_empty());
    assert_eq!(reduce_to_root(&t(15, 87, 6)).unwrap().0, vec![Viete::V2, Viete::V1, Viete::V3]);
    assert_eq!(reduce_to_root(&t(3, 39, 15)).unwrap().0, descent_oracle(&t(3, 39, 15)));
    assert_eq!(reduce_to_root(&t(3, 6, 3)).unwrap().0, vec![Viete::V2]);
    assert!(matches!(reduce_to_root(&t(1, 1, 1)), Err(MarkovError::NotASolution(_))));
    assert!(matches!(reduce_to_root(&t(-3, -3, 3)), Err(MarkovError::NotPositive(_))));
}

#[test]
fn tree_rows() {
    let tree = enumerate_tree(3);
    let row: Vec<MarkovTriple> = tree.iter().filter(|v| v.depth == 3).map(|v| v.triple.clone()).collect();
    assert_eq!(row, vec![t(3, 102, 39), t(39, 582, 15), t(15, 1299, 87), t(87, 507, 6)]);
    let row2: Vec<MarkovTriple> = tree.iter().filter(|v| v.depth == 2).map(|v| v.triple.clone()).collect();
    assert_eq!(row2, vec![t(3, 39, 15), t(15, 87, 6)]);
    let zero = enumerate_tree(0);
    assert_eq!(zero.len(), 1);
    assert_eq!(zero[0].triple, t(3, 3, 3));
}

#[test]
fn tree_vertices_distinct_up_to_permutation() {
    let tree = enumerate_tree(8);
    let mut seen = std::collections::HashSet::new();
    for v in &tree {
        assert!(is_markov(&v.triple));
        assert!(seen.insert(v.triple.sorted()), "repeated {}", v.triple);
        let s = v.triple.sorted();
        let repeated = s[0] == s[1] || s[1] == s[2];
        assert_eq!(repeated, v.kind != VertexKind::Binary, "{}", v.triple);
    }
    assert_eq!(tree.iter().filter(|v| v.kind == VertexKind::Binary).count(), 255);
}

#[test]
fn tree_path_inverts_enumeration() {
    for v in enumerate_tree(9).into_iter().filter(|v| v.kind == VertexKind::Binary) {
        assert_eq!(tree_path(&v.triple).unwrap(), v.path);
        // descent length is one more than the binary depth
        assert_eq!(reduce_to_root(&v.triple).unwrap().len(), v.depth + 1);
        assert_eq!(reduce_to_root(&v.triple).unwrap().0, descent_oracle(&v.triple));
    }
    assert!(matches!(tree_path(&t(6, 15, 3)), Err(MarkovError::NotInTree(_))));
}

#[test]
fn classical_viete_as_compositions() {
    use ClassicalGen::*;
    let samples = [t(3, 15, 6), t(2, -7, 11), t(0, 5, -4), t(13, 1, 9)];
    for s in &samples {
        assert_eq!(apply_composition(&[Lambda(1, 1), Sigma1, Tau2], s), Viete::V1.apply(s));
        assert_eq!(apply_composition(&[Lambda(1, 0), Sigma2, Tau1], s), Viete::V2.apply(s));
        assert_eq!(apply_composition(&[Lambda(1, 1), Tau1, Sigma2], s), Viete::V3.apply(s));
    }
}

fn arb_reduced_word() -> impl Strategy<Value = VieteWord> {
    prop::collection::vec(0usize..3, 0..=10).prop_map(|raw| {
        let mut w: Vec<Viete> = vec![];
        for i in raw {
            let v = Viete::from_index(i);
            if w.last() == Some(&v) {
                w.push(Viete::from_index((i + 1) % 3));
            } else {
                w.push(v);
            }
        }
        VieteWord(w)
    })
}

proptest! {
    #[test]
    fn descent_round_trip(w in arb_reduced_word()) {
        prop_assert!(w.is_reduced());
        let p = w.apply(&MarkovTriple::root());
        prop_assert!(is_markov(&p));
        prop_assert_eq!(reduce_to_root(&p).unwrap(), w.reversed());
    }

    #[test]
    fn descent_lowers_maximum(w in arb_reduced_word()) {
        let mut cur = w.apply(&MarkovTriple::root());
        for v in reduce_to_root(&cur).unwrap().0 {
            let next = v.apply(&cur);
            prop_assert!(next.0.iter().max() < cur.0.iter().max());
            cur = next;
        }
    }

    #[test]
    fn tree_steps_preserve_solutions(turns in prop::collection::vec(prop::bool::ANY, 0..20)) {
        let mut cur = binary_root();
        for l in turns {
            cur = tree_step(if l { Turn::L } else { Turn::R }, &cur);
            prop_assert!(is_markov(&cur));
        }
    }
}
