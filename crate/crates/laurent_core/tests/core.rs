use laurent_core::{arith, lp, ArithKind, BiDegree, BigInt, CoreError, Exponent, LaurentPoly};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Exact evaluation at a rational point, used as an independent oracle for substitutions.
fn eval_q(f: &LaurentPoly, s: [&BigRational; 3]) -> BigRational {
    let mut acc = BigRational::zero();
    for (e, c) in f.terms() {
        let mut t = BigRational::from_integer(c.clone());
        t *= num_traits::pow(s[0].clone(), e.a1 as usize);
        t *= num_traits::pow(s[1].clone(), e.a2 as usize);
        let p3 = num_traits::pow(s[2].clone(), e.a3.unsigned_abs() as usize);
        if e.a3 >= 0 {
            t *= p3
        } else {
            t /= p3
        }
        acc += t;
    }
    acc
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn arith_examples() {
    assert!(arith(ArithKind::Add, &lp("s1"), &lp("-s1")).is_zero());
    assert_eq!(arith(ArithKind::Mul, &lp("s1"), &lp("s1")), lp("s1^2"));
    let m = arith(ArithKind::Mul, &lp("s2"), &lp("s1^2 - s2"));
    let m = arith(ArithKind::Sub, &m, &lp("s3*s1"));
    assert_eq!(m, lp("s1^2*s2 - s2^2 - s1*s3"));
    assert_eq!(arith(ArithKind::Neg, &lp("s1 - s3^-2"), &LaurentPoly::zero()), lp("s3^-2 - s1"));
}

#[test]
fn star_examples() {
    assert_eq!(lp("s1").star(), lp("s2*s3^-1"));
    let f = lp("s1^2 - s2");
    assert_eq!(f.star().star(), f);
    assert_eq!(f.star(), (lp("s2^2 - s1*s3") * lp("s3^-2")));
}

#[test]
fn evaluation_examples() {
    assert_eq!(lp("s1^2*s2 - s1*s3 - s2^2").evaluate_at_s0(), BigInt::from(15));
    assert_eq!(laurent_core::markov_rhs().evaluate_at_s0(), BigInt::zero());
    let f = lp("s1^3 - 7*s2*s3");
    assert_eq!(f.shift_s3(-5).evaluate_at_s0(), f.evaluate_at_s0());
}

#[test]
fn bidegree_examples() {
    assert_eq!(lp("s2").bidegree(), Ok(BiDegree::new(1, 2)));
    assert_eq!(lp("s2*(s1^2 - s2) - s3*s1").bidegree(), Ok(BiDegree::new(3, 4)));
    assert_eq!(lp("s1").bidegree(), Ok(BiDegree::new(1, 1)));
    assert_eq!(lp("s1 + s2").bidegree(), Err(CoreError::NotQuasiHomogeneous(vec![1, 2])));
    assert_eq!(lp("s3^-1*s1^2").bidegree(), Err(CoreError::NotPolynomial));
}

#[test]
fn mu_dual_examples() {
    assert_eq!(lp("s1^2 - s2").mu_dual(), Ok(lp("s2^2 - s1*s3")));
    assert_eq!(lp("s2").mu_dual(), Ok(lp("s1")));
    let f = lp("s2*(s1^2 - s2) - s3*s1");
    assert_eq!(f.mu_dual().unwrap().mu_dual(), Ok(f));
    assert_eq!(lp("s3*s1").mu_dual(), Err(CoreError::DivisibleByS3));
    assert_eq!(lp("s1*s3^-1").mu_dual(), Err(CoreError::NotPolynomial));
}

#[test]
fn newton_examples() {
    let f5 = lp("s1^2*s2 - s1*s3 - s2^2");
    let np = f5.newton_polygon().unwrap();
    let mut want = vec![Exponent::new(2, 1, 0), Exponent::new(1, 0, 1), Exponent::new(0, 2, 0)];
    want.sort();
    assert_eq!(np.vertex_set(), want);
    assert_eq!(np.projected.len(), 3);
    assert!(np.projected.contains(&[q(2, 3), q(1, 3)]));

    assert_eq!(lp("s1").newton_polygon().unwrap().vertices, vec![Exponent::new(1, 0, 0)]);
    assert_eq!(LaurentPoly::zero().newton_polygon(), Err(CoreError::ZeroPolynomial));
}

#[test]
fn exact_division() {
    let a = lp("s1^2 - s2*s3");
    let b = lp("s1*s2 + 3*s3^2 - s2^3");
    let p = (&a * &b).shift_s3(-3);
    assert_eq!(p.div_exact(&a), Some(b.shift_s3(-3)));
    assert_eq!(p.div_exact(&b.shift_s3(2)), Some(a.shift_s3(-5)));
    assert_eq!(lp("s1^2 + 1").div_exact(&lp("s1 + 1")), None);
    assert_eq!(lp("2*s1").div_exact(&lp("4")), None);
}

#[test]
fn json_round_trip() {
    let f = lp("123456789012345678901234567890*s1^3*s3^-4 - s2 + 7");
    let v = f.to_json();
    assert_eq!(v["vars"], serde_json::json!(["s1", "s2", "s3"]));
    assert_eq!(v["terms"][0]["e"], serde_json::json!([0, 0, 0]));
    assert_eq!(LaurentPoly::from_json(&v), Ok(f));
}

#[test]
fn display_round_trip() {
    let f = lp("s1^2*s2 - 3*s1*s3^-2 + 12 - s2^5");
    assert_eq!(f.to_string().parse::<LaurentPoly>(), Ok(f));
}

fn arb_poly(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((0u32..4, 0u32..4, -3i32..4), -20i64..20), 0..max_terms).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|((a, b, c), k)| (Exponent::new(a, b, c), k)))
    })
}

fn arb_quasi_homogeneous() -> impl Strategy<Value = LaurentPoly> {
    (1i64..10, prop::collection::vec((0i64..10, 0i64..6, -9i64..9), 1..8)).prop_filter_map(
        "needs a term off the s3 axis",
        |(q, raw)| {
            // Pick (a1, a2) and solve a3 from a1 + 2a2 + 3a3 = q.
            let terms: Vec<(Exponent, i64)> = raw
                .into_iter()
                .filter_map(|(a1, a2, c)| {
                    let r = q - a1 - 2 * a2;
                    (r >= 0 && r % 3 == 0 && c != 0).then(|| (Exponent::new(a1 as u32, a2 as u32, (r / 3) as i32), c))
                })
                .collect();
            let f = LaurentPoly::from_terms(terms);
            (!f.is_zero() && f.s3_valuation() == Some(0)).then_some(f)
        },
    )
}

fn arb_wide_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0u32..5, 0u32..4, -3i32..4, any::<i64>(), 0u32..320), 1..14).prop_map(|raw| {
        LaurentPoly::from_terms(
            raw.into_iter().map(|(a1, a2, a3, c, sh)| (Exponent::new(a1, a2, a3), BigInt::from(c) << sh)),
        )
    })
}

fn naive_product(f: &LaurentPoly, g: &LaurentPoly) -> Vec<(Exponent, BigInt)> {
    let mut acc: std::collections::BTreeMap<Exponent, BigInt> = Default::default();
    for (e, c) in f.terms() {
        for (d, b) in g.terms() {
            let k = Exponent::new(e.a1 + d.a1, e.a2 + d.a2, e.a3 + d.a3);
            *acc.entry(k).or_insert_with(BigInt::zero) += c * b;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

proptest! {
    #[test]
    fn wide_multiplication_matches_schoolbook(f in arb_wide_poly(), g in arb_wide_poly()) {
        let got: Vec<(Exponent, BigInt)> = (&f * &g).terms().map(|(e, c)| (*e, c.clone())).collect();
        prop_assert_eq!(got, naive_product(&f, &g));
        prop_assert!((&f * &(-&f)).terms().all(|(_, c)| !c.is_zero()));
    }
}

proptest! {
    #[test]
    fn canonical_form(f in arb_poly(8), g in arb_poly(8)) {
        for h in [&f + &g, &f - &g, &f * &g, -&f] {
            prop_assert!(h.terms().all(|(_, c)| !c.is_zero()));
        }
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn star_is_involutive_automorphism(f in arb_poly(6), g in arb_poly(6)) {
        prop_assert_eq!(f.star().star(), f.clone());
        prop_assert_eq!((&f * &g).star(), &f.star() * &g.star());
        prop_assert_eq!((&f + &g).star(), &f.star() + &g.star());
        prop_assert_eq!(f.star().evaluate_at_s0(), f.evaluate_at_s0());
    }

    #[test]
    fn star_matches_substitution(f in arb_poly(6), a in 1i64..7, b in 1i64..7, c in 1i64..7) {
        let (s1, s2, s3) = (q(a, 1), q(b, 2), q(c, 3));
        let sub = [&(&s2 / &s3), &(&s1 / &s3), &(BigRational::one() / &s3)];
        prop_assert_eq!(eval_q(&f.star(), [&s1, &s2, &s3]), eval_q(&f, sub));
    }

    #[test]
    fn multiplication_matches_evaluation(f in arb_poly(10), g in arb_poly(10), a in -5i64..5) {
        let s = [&q(a, 1), &q(2, 3), &q(-3, 2)];
        prop_assert_eq!(eval_q(&(&f * &g), s), eval_q(&f, s) * eval_q(&g, s));
    }

    #[test]
    fn mu_dual_laws(f in arb_quasi_homogeneous()) {
        let bd = f.bidegree().unwrap();
        let g = f.mu_dual().unwrap();
        prop_assert_eq!(g.bidegree().unwrap(), BiDegree::new(bd.d, 3 * bd.d - bd.q));
        prop_assert_eq!(g.s3_valuation(), Some(0));
        prop_assert_eq!(g.mu_dual().unwrap(), f.clone());
        prop_assert_eq!(g.evaluate_at_s0(), f.evaluate_at_s0());
        prop_assert_eq!(g, f.star().shift_s3(bd.d as i32));
        prop_assert_eq!(f.degree_matrix().unwrap().swap_columns(), f.mu_dual().unwrap().degree_matrix().unwrap());
    }

    #[test]
    fn newton_vertices_are_extreme(f in arb_quasi_homogeneous()) {
        let np = f.newton_polygon().unwrap();
        let support: Vec<Exponent> = f.terms().map(|(e, _)| *e).collect();
        for v in &np.vertices {
            prop_assert!(support.contains(v));
        }
        // Every support point lies inside the hull (left of or on each ccw edge).
        let n = np.vertices.len();
        if n >= 3 {
            for p in &support {
                for i in 0..n {
                    let (a, b) = (np.vertices[i], np.vertices[(i + 1) % n]);
                    let cr = (b.a1 as i64 - a.a1 as i64) * (p.a2 as i64 - a.a2 as i64)
                        - (b.a2 as i64 - a.a2 as i64) * (p.a1 as i64 - a.a1 as i64);
                    prop_assert!(cr >= 0);
                }
            }
        }
    }

    #[test]
    fn division_inverts_multiplication(f in arb_poly(6), g in arb_poly(6)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).div_exact(&g), Some(f));
    }
}
