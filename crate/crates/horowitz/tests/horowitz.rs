use horowitz::endo::x;
use horowitz::*;
use laurent_core::{lp, LaurentPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn e(p: &str, q: &str, r: &str) -> NuEndo {
    NuEndo::parse(p, q, r).unwrap()
}

#[test]
fn suite_claims_hold() {
    let claims = suite(7, 40, 5);
    let failing: Vec<&str> = claims.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    assert!(failing.is_empty(), "{failing:?}");
}

#[test]
fn v3_matches_its_display() {
    assert_eq!(Gen::V3.endo(), e("x2", "x4", "x1*x3 - x6"));
    assert_eq!(Gen::V3.endo().to_string(), "x1 -> x2, x3 -> x4, x5 -> x1*x3 - x6");
}

#[test]
fn braid_relation_and_v1_factorization() {
    use Gen::*;
    assert_eq!(compose_word(&[T1, T2, T1]), compose_word(&[T2, T1, T2]));
    assert_eq!(V1.endo(), compose_word(&[Lambda(1, 1), Sigma1, T2]));
    // Hand expansion of Λ11 ∘ Σ1 ∘ T2 on x1: x4 − x1x5 → x2 − x3x5 → −x2 + x3x5.
    assert_eq!(compose_word(&[Lambda(1, 1), Sigma1, T2]).p, x(3).mul(&x(5)).sub(&x(2)));
}

#[test]
fn t_generators_have_infinite_order() {
    let mut acc = Gen::T1.endo();
    for _ in 0..12 {
        acc = acc.compose(&Gen::T1.endo());
        assert_ne!(acc, NuEndo::identity());
    }
}

#[test]
fn inverses() {
    for g in gens::sample_generators() {
        let mut w = vec![g];
        w.extend(g.inverse());
        assert_eq!(compose_word(&w), NuEndo::identity(), "{g}");
    }
}

#[test]
fn preservation_examples() {
    assert!(NuEndo::identity().preserves_h());
    assert!(Gen::V2.endo().preserves_h());
    let bad = e("x1 + 1", "x3", "x5");
    assert!(!bad.preserves_h());
    // Expanding by hand: the image of H gains x2 + x4 x6 − x3 x5 + 1 − ... ; at least the x2 term.
    assert!(bad.h_image().sub(&h()).terms().any(|(m, _)| m == &vec![0, 1, 0, 0, 0, 0]));
}

#[test]
fn h_matches_the_star_setting() {
    assert_eq!(h().sub(&h().nu()), XPoly::parse(6, "x2*x4*x6 - x1*x3*x5").unwrap());
    let one = LaurentPoly::one();
    let g = GeneralH::star(one.clone(), vec![one; 3]).unwrap();
    assert_eq!(g.h(), h());
    // The star Viète maps at unit weights are V1, V2, V3 up to the ordering of the pair.
    for (i, v) in [Gen::V1, Gen::V2, Gen::V3].iter().enumerate() {
        let im = g.viete(i);
        assert_eq!(im, v.endo().images());
    }
}

#[test]
fn decompose_identity_and_short_words() {
    let d = decompose(&NuEndo::identity(), 1).unwrap();
    assert!(d.word.is_empty() && d.steps.is_empty());
    let e = compose_word(&[Gen::V1, Gen::V3]);
    let d = decompose(&e, 1).unwrap();
    assert_eq!(compose_word(&d.word), e);
    assert_eq!(d.word.iter().filter(|g| matches!(g, Gen::V1 | Gen::V2 | Gen::V3)).count(), 2);
    let m = compose_word(&[Gen::Lambda(1, 0), Gen::M(2, -3), Gen::Sigma1]);
    assert_eq!(compose_word(&decompose(&m, 1).unwrap().word), m);
}

#[test]
fn decompose_rejects_bad_input() {
    assert!(matches!(decompose(&e("x1 + 1", "x3", "x5"), 1), Err(HorError::NotPreserving)));
    let deg = e("x1", "x3", "x5").compose(&e("0", "0", "0"));
    assert!(decompose(&deg, 1).is_err());
}

#[test]
fn decompose_round_trips_200_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let len = rng.gen_range(0..=8);
        let w = random_word(&mut rng, len);
        let e = compose_word(&w);
        let d = decompose(&e, 3).unwrap_or_else(|err| panic!("{w:?}: {err}"));
        assert_eq!(compose_word(&d.word), e, "{w:?}");
        for s in &d.steps {
            assert!(s.new_degree < s.degrees[2]);
            assert_eq!(s.degrees[2], s.degrees[0] + s.degrees[1]);
        }
    }
}

#[test]
fn max_rank_detects_degenerate_maps() {
    assert!(compose_word(&[Gen::V1, Gen::T2, Gen::M(1, 2)]).max_rank(5));
    assert!(!e("x1", "x1", "x5").max_rank(5));
}

#[test]
fn json_round_trip() {
    let e0 = compose_word(&[Gen::V2, Gen::M(1, -1), Gen::V3]);
    let j = e0.to_json();
    assert_eq!(NuEndo::from_json(&j).unwrap(), e0);
    let s = serde_json::json!({"P": "x2", "Q": "x4", "R": "x1*x3 - x6"});
    assert_eq!(NuEndo::from_json(&s).unwrap(), Gen::V3.endo());
    assert!(NuEndo::from_json(&serde_json::json!({"P": "x2"})).is_err());
    assert!(NuEndo::from_json(&serde_json::json!({"P": "x9", "Q": "x1", "R": "x1"})).is_err());
}

#[test]
fn parser_handles_parameters() {
    let p = XPoly::parse(6, "(s1 - s2*s3^-1)*x1^2 + 3").unwrap();
    assert_eq!(p.nu(), XPoly::parse(6, "(s2*s3^-1 - s1*s3^-1*s3^-0*s3)*x2^2 + 3").unwrap().nu().nu());
    assert!(XPoly::parse(6, "s1^-1").is_err());
    assert!(XPoly::parse(6, "x1 +").is_err());
    let q = XPoly::parse(6, "s3^-2*x1*x3 - x6").unwrap();
    assert_eq!(XPoly::parse(6, &q.to_string()).unwrap(), q);
}

#[test]
fn classical_viete_examples() {
    assert!(GeneralH::classical(1, &[1, 1, 1]).unwrap().check());
    assert!(GeneralH::classical(6, &[1, 2, 3, 6]).unwrap().check());
    assert!(matches!(GeneralH::classical(6, &[1, 4, 3]), Err(HorError::Weights(_))));
    // n = 3, a = (1,1,1,1): H = x1² + x2² + x3² − x1x2x3 and v1 is the Markov flip.
    let g = GeneralH::classical(1, &[1, 1, 1]).unwrap();
    assert_eq!(g.h(), XPoly::parse(3, "x1^2 + x2^2 + x3^2 - x1*x2*x3").unwrap());
    assert_eq!(g.viete(0)[0], XPoly::parse(3, "-x1 + x2*x3").unwrap());
}

#[test]
fn star_weights_are_validated() {
    assert!(matches!(GeneralH::star(lp("s1"), vec![LaurentPoly::one()]), Err(HorError::Weights(_))));
    assert!(matches!(GeneralH::star(lp("s1 + s2*s3^-1"), vec![lp("2")]), Err(HorError::Weights(_))));
}

fn self_star_pool() -> Vec<LaurentPoly> {
    let mut pool = vec![lp("1"), lp("-1"), lp("2"), lp("3")];
    for m in ["s1", "s1^2", "s1*s2", "s1^3", "s1*s3", "s2^2*s3^-1"] {
        let f = lp(m);
        pool.push(&f + &f.star());
    }
    pool
}

#[test]
fn random_weight_tuples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pool = self_star_pool();
    for f in &pool {
        assert_eq!(&f.star(), f);
    }
    for _ in 0..20 {
        let n = rng.gen_range(1..=5);
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=6) * if rng.gen_bool(0.3) { -1 } else { 1 }).collect();
        let l = a.iter().fold(1i64, |acc, &k| num_integer::lcm(acc, k.abs()));
        let a0 = l * rng.gen_range(1..=3) * if rng.gen_bool(0.5) { -1 } else { 1 };
        assert!(GeneralH::classical(a0, &a).unwrap().check(), "a0={a0} a={a:?}");
    }
    for _ in 0..20 {
        let n = rng.gen_range(1..=5);
        let a: Vec<LaurentPoly> = (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
        let extra = pool[rng.gen_range(0..pool.len())].clone();
        let a0 = a.iter().fold(extra, |acc, c| &acc * c);
        let g = GeneralH::star(a0, a).unwrap();
        let failing: Vec<String> = g.claims().into_iter().filter(|c| !c.pass).map(|c| c.name).collect();
        assert!(failing.is_empty(), "{failing:?}");
    }
}

#[test]
fn c5_involutions_and_linear_case() {
    let failing: Vec<String> = c5::claims().into_iter().filter(|c| !c.pass).map(|c| c.name).collect();
    assert!(failing.is_empty(), "{failing:?}");
    assert_eq!(c5::linear_solutions(), 6);
}

fn gen_strategy() -> impl Strategy<Value = Gen> {
    prop_oneof![
        Just(Gen::V1),
        Just(Gen::V2),
        Just(Gen::V3),
        Just(Gen::Sigma1),
        Just(Gen::Sigma2),
        Just(Gen::T1),
        Just(Gen::T2),
        (0u8..2, 0u8..2).prop_map(|(i, j)| Gen::Lambda(i, j)),
        (-2i32..=2, -2i32..=2).prop_map(|(i, j)| Gen::M(i, j)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn words_preserve_h_and_commute_with_nu(w in proptest::collection::vec(gen_strategy(), 0..6)) {
        let e = compose_word(&w);
        prop_assert!(e.preserves_h());
        let im = e.images();
        for k in 0..3 {
            prop_assert_eq!(&im[2 * k].nu(), &im[2 * k + 1]);
        }
    }

    #[test]
    fn composition_is_associative(a in gen_strategy(), b in gen_strategy(), c in gen_strategy()) {
        let (a, b, c) = (a.endo(), b.endo(), c.endo());
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn decompose_recomposes(w in proptest::collection::vec(gen_strategy(), 0..6)) {
        let e = compose_word(&w);
        let d = decompose(&e, 9).unwrap();
        prop_assert_eq!(compose_word(&d.word), e);
    }
}
