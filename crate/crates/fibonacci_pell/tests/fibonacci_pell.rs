use std::collections::BTreeMap;

use fibonacci_pell::*;
use laurent_core::{convex_hull_i64, lp, BigInt, LaurentPoly};
use markov_classical::MarkovTriple;
use num_traits::Zero;
use proptest::prelude::*;

fn phi(m: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0), BigInt::from(1)];
    while v.len() <= m {
        let n = v.len();
        let next = &v[n - 1] + &v[n - 2];
        v.push(next);
    }
    v
}

fn psi(m: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0), BigInt::from(1)];
    while v.len() <= m {
        let n = v.len();
        let next = BigInt::from(2) * &v[n - 1] + &v[n - 2];
        v.push(next);
    }
    v
}

#[test]
fn first_fibonacci_polynomials() {
    let list = [
        "s1",
        "s1^2 - s2",
        "s1^2*s2 - s1*s3 - s2^2",
        "s1^3*s2 - 2*s1^2*s3 - s1*s2^2 + s2*s3",
        "s1^3*s2^2 - 3*s1^2*s2*s3 - s1*s2^3 + s1*s3^2 + 2*s2^2*s3",
        "s1^4*s2^2 - 4*s1^3*s2*s3 - s1^2*s2^3 + 3*s1^2*s3^2 + 3*s1*s2^2*s3 - s2*s3^2",
        "s1^4*s2^3 - 5*s1^3*s2^2*s3 - s1^2*s2^4 + 6*s1^2*s2*s3^2 - s1*s3^3 + 4*s1*s2^3*s3 - 3*s2^2*s3^2",
    ];
    for (n, s) in list.iter().enumerate() {
        assert_eq!(star_fibonacci(n as i64), lp(s), "F_{}", 2 * n + 1);
    }
    assert_eq!(star_fibonacci(-1), lp("s2*s3^-1"));
    assert_eq!(fibonacci_sequence(6).len(), 7);
}

#[test]
fn first_pell_polynomials() {
    let list = [
        "s2",
        "s1^2*s2 - s1*s3 - s2^2",
        "s1^2*s2^3 - s1^3*s2*s3 - s2*s3^2 + s1^2*s3^2 - s2^4",
        "s1^4*s2^3 + s1^4*s3^2 - s1^5*s2*s3 + s1^3*s2^2*s3 - 2*s1^2*s2^4 - 3*s1^2*s2*s3^2 + s1*s3^3 + s2^5 + 2*s2^2*s3^2",
        "s1^4*s2^5 - 2*s1^2*s2^6 + s2^7 - s1*s2^5*s3 + 3*s2^4*s3^2 + 3*s1^3*s2^4*s3 - 4*s1^2*s2^3*s3^2 - 2*s1^5*s2^3*s3 \
         - s1*s2^2*s3^3 + s2*s3^4 + 4*s1^3*s2*s3^3 + s1^6*s2*s3^2 - 2*s1^2*s3^4 - s1^5*s3^3",
    ];
    for (n, s) in list.iter().enumerate() {
        assert_eq!(star_pell(n as u32), lp(s), "P_{}", 2 * n + 1);
    }
    assert_eq!(star_pell(2).evaluate_at_s0(), BigInt::from(87));
}

#[test]
fn closed_forms_match_recurrences() {
    let fib = fibonacci_sequence(81);
    let pell = pell_sequence(81);
    for k in 0..=81usize {
        let index = 2 * k as i64 + 1;
        assert_eq!(star_fibonacci_closed(index).unwrap(), fib[k], "F_{index}");
        assert_eq!(pell_closed(index).unwrap(), pell[k], "P_{index}");
    }
    assert_eq!(fib_closed_4n1(1), lp("s1^2*s2 - s1*s3 - s2^2"));
    assert_eq!(fib_closed_4n3(0), lp("s1^2 - s2"));
    assert_eq!(fib_closed_4n1(0), lp("s1"));
    assert_eq!(star_fibonacci_closed(4), Err(FibError::BadIndex(4)));
    assert_eq!(star_fibonacci_closed(-3), Err(FibError::BadIndex(-3)));
    assert_eq!(pell_closed(0), Err(FibError::BadIndex(0)));
}

#[test]
fn generating_functions_match_recurrences() {
    let fib = fibonacci_sequence(20);
    let pell = pell_sequence(20);
    let (fnum, fden) = fib_genfun();
    let (pnum, pden) = pell_genfun();
    let fc = series_coefficients(&fnum, &fden, 41);
    let pc = series_coefficients(&pnum, &pden, 41);
    for k in 0..=41usize {
        if k % 2 == 0 {
            assert!(fc[k].is_zero() && pc[k].is_zero());
        } else {
            assert_eq!(fc[k], fib[k / 2], "t^{k}");
            assert_eq!(pc[k], pell[k / 2], "t^{k}");
        }
    }
    assert_eq!(fib_genfun_coeff(1).unwrap(), lp("s1"));
    assert_eq!(fib_genfun_coeff(5).unwrap(), lp("s1^2*s2 - s1*s3 - s2^2"));
    assert_eq!(pell_genfun_coeff(5).unwrap(), star_pell(2));
    assert_eq!(fib_genfun_coeff(4), Err(FibError::BadIndex(4)));
    assert_eq!(pell_genfun_coeff(-1), Err(FibError::BadIndex(-1)));
    let at_s0 = |c: &[LaurentPoly]| -> Vec<BigInt> { (0..5).map(|i| c[2 * i + 1].evaluate_at_s0() / 3).collect() };
    assert_eq!(at_s0(&fc), [1, 2, 5, 13, 34].map(BigInt::from));
    assert_eq!(at_s0(&pc), [1, 5, 29, 169, 985].map(BigInt::from));
}

#[test]
fn cassini_identities() {
    let c = fib_cassini_constant();
    let k = pell_cassini_constant();
    for n in 1..=25i64 {
        assert_eq!(cassini_fib(n).unwrap(), c.shift_s3(n as i32 - 1), "n = {n}");
        assert_eq!(cassini_pell(n).unwrap(), k.shift_s3(2 * n as i32 - 1), "n = {n}");
    }
    assert_eq!(c.evaluate_at_s0(), BigInt::from(-27));
    // at n = 2 the constant picks up one power of s3
    let f = fibonacci_sequence(5);
    let lhs = &g(2) * &f[2].pow(2) - &(&g(1) * &f[3]) * &f[1];
    assert_eq!(lhs, c.shift_s3(1));
    assert!(cassini_fib(0).is_err());
}

#[test]
fn continued_fractions() {
    let fib = fibonacci_sequence(13);
    let pell = pell_sequence(13);
    for n in 1..=10i64 {
        let cf = cf_convergent_fib(n).unwrap();
        assert!(cf.equals_ratio(&fib[n as usize + 1], &fib[n as usize]), "n = {n}");
        let cp = cf_convergent_pell(n).unwrap();
        assert!(cp.equals_ratio(&pell[n as usize + 1], &pell[n as usize]), "n = {n}");
        assert!(!cf.equals_ratio(&fib[n as usize], &fib[n as usize + 1]));
    }
    assert_eq!(cf_convergent_fib(1).unwrap().to_string(), "s2 - s3/(s1 - s2/s1)");
    assert_eq!(cf_convergent_fib(2).unwrap().to_string(), "s1 - s3/(s2 - s3/(s1 - s2/s1))");
    assert!(cf_convergent_fib(0).is_err());
}

#[test]
fn evaluation_gives_three_times_classical_numbers() {
    let fib = fibonacci_sequence(40);
    let pell = pell_sequence(40);
    let ph = phi(81);
    let ps = psi(81);
    for n in 0..=40usize {
        assert_eq!(fib[n].evaluate_at_s0(), BigInt::from(3) * &ph[2 * n + 1]);
        assert_eq!(pell[n].evaluate_at_s0(), BigInt::from(3) * &ps[2 * n + 1]);
    }
}

#[test]
fn negative_indices_are_star_duals() {
    for n in 0..=20i64 {
        assert_eq!(star_fibonacci(-n - 1), star_fibonacci(n).star(), "n = {n}");
    }
}

#[test]
fn classical_formulas_match_recurrences() {
    let ph = phi(60);
    let ps = psi(60);
    for m in 1..=60i64 {
        assert_eq!(classical_sequence(Family::Fibonacci, m).unwrap(), ph[m as usize], "phi_{m}");
        assert_eq!(classical_sequence(Family::Pell, m).unwrap(), ps[m as usize], "psi_{m}");
    }
    let odd: Vec<BigInt> = [1, 3, 5, 7].iter().map(|&m| classical_sequence(Family::Pell, m).unwrap()).collect();
    assert_eq!(odd, [1, 5, 29, 169].map(BigInt::from));
    assert!(classical_sequence(Family::Fibonacci, 0).is_err());
}

#[test]
fn binet_values() {
    let r = binet_fib(9, [3.0, 3.0, 1.0]).unwrap();
    assert!((r.predicted - 102.0).abs() < 1e-9 && r.exact == 102.0, "{r:?}");
    let r = binet_fib(13, [3.1, 3.0, 1.0]).unwrap();
    assert!(r.rel_error < 1e-9, "{r:?}");
    for index in (1..=41).step_by(2) {
        let r = binet_fib(index, [3.05, 2.97, 1.02]).unwrap();
        assert!(r.rel_error < 1e-6, "F_{index}: {r:?}");
    }
    assert!(binet_fib(9, [1.0, 1.0, 1.0]).is_err());
    assert!(binet_fib(8, [3.0, 3.0, 1.0]).is_err());
}

#[test]
fn ratio_asymptotics() {
    let s = [3.02, 2.99, 1.01];
    let (left, right) = ratio_limits(s).unwrap();
    assert!((left - right).abs() < 1e-9 * left.abs());
    let f = |n: i64| star_fibonacci(n).evaluate_f64(s);
    // F_{4k+3} = F_{2(2k+1)+1}
    let k = 12;
    let a = s[1] * f(2 * k + 1) / f(2 * k);
    let b = s[0] * f(2 * k + 2) / f(2 * k + 1);
    assert!((a - left).abs() < 1e-6 * left.abs(), "{a} vs {left}");
    assert!((b - left).abs() < 1e-6 * left.abs(), "{b} vs {left}");
}

#[test]
fn fibonacci_presentation_theorem() {
    let ph = phi(31);
    for n in 2..=15usize {
        let t = MarkovTriple::new(3, BigInt::from(3) * &ph[2 * n + 1], BigInt::from(3) * &ph[2 * n - 1]);
        let sol = presentations::reduced_presentation(&t).unwrap().solution();
        let want = [g(n as i64 - 1).star(), star_fibonacci(n as i64), star_fibonacci(n as i64 - 1).star()];
        assert_eq!(sol.0, want, "n = {n}");
    }
}

#[test]
fn pell_presentation_theorem() {
    let ps = psi(25);
    for n in 1..=12usize {
        let t = MarkovTriple::new(BigInt::from(3) * &ps[2 * n - 1], BigInt::from(3) * &ps[2 * n + 1], 6);
        let sol = presentations::reduced_presentation(&t).unwrap().solution();
        let want = [star_pell(n as u32 - 1).star(), star_pell(n as u32), h(n as i64 - 1).star()];
        assert_eq!(sol.0, want, "n = {n}");
    }
}

#[test]
fn fibonacci_newton_polygons() {
    for n in 1..=15i64 {
        for (f, pts) in [
            (star_fibonacci(2 * n), fib_newton_points_4n1(n)),
            (star_fibonacci(2 * n + 1), fib_newton_points_4n3(n)),
        ] {
            let np = f.newton_polygon().unwrap();
            let hull = convex_hull_i64(pts.iter().map(|e| (e.a1 as i64, e.a2 as i64)).collect());
            let got: Vec<(i64, i64)> = np.vertices.iter().map(|e| (e.a1 as i64, e.a2 as i64)).collect();
            assert_eq!(got, hull, "n = {n}");
            for e in pts {
                assert!(!f.coeff(e).is_zero());
            }
        }
    }
}

#[test]
fn pell_support_points_and_limit() {
    for n in 1..=12i64 {
        let p = star_pell(2 * n as u32);
        for e in pell_support_points_4n1(n) {
            assert!(!p.coeff(e).is_zero(), "n = {n}: {e:?}");
        }
    }
    let np = star_pell(24).newton_polygon().unwrap();
    let pts: Vec<(f64, f64)> = np
        .projected
        .iter()
        .map(|p| (num_traits::ToPrimitive::to_f64(&p[0]).unwrap(), num_traits::ToPrimitive::to_f64(&p[1]).unwrap()))
        .collect();
    for target in [(0.75, 0.0), (0.0, 0.75), (0.5, 0.5)] {
        let best = pts.iter().map(|p| ((p.0 - target.0).powi(2) + (p.1 - target.1).powi(2)).sqrt()).fold(f64::INFINITY, f64::min);
        assert!(best < 0.05, "{target:?}: {best}");
    }
}

#[test]
fn newton_table() {
    let csv = newton_csv(Family::Fibonacci, 3);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "index,d,q,vertices");
    assert_eq!(lines.len(), 5);
    assert!(lines[3].starts_with("5,3,4,"));
    assert!(newton_csv(Family::Pell, 2).lines().nth(3).unwrap().starts_with("5,5,8,"));
}

fn ovsienko(m: usize) -> Vec<BTreeMap<i64, BigInt>> {
    let lmul = |a: &BTreeMap<i64, BigInt>, b: &[(i64, i64)]| {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                *out.entry(i + j).or_insert_with(|| BigInt::from(0)) += x * BigInt::from(*y);
            }
        }
        out
    };
    let mut v = vec![BTreeMap::from([(-1, BigInt::from(1))]), BTreeMap::from([(0, BigInt::from(1)), (1, BigInt::from(1))])];
    while v.len() <= m {
        let n = v.len();
        let mut next = lmul(&v[n - 1], &[(0, 1), (1, 1), (2, 1)]);
        for (k, c) in lmul(&v[n - 2], &[(2, -1)]) {
            *next.entry(k).or_insert_with(|| BigInt::from(0)) += c;
        }
        next.retain(|_, c| *c != BigInt::from(0));
        v.push(next);
    }
    v
}

/// The specialization equals `q (1 + q + q^2) f_{2k+1}(q)`.
#[test]
fn q_specialization_matches_q_fibonacci() {
    let f = ovsienko(12);
    for (k, fk) in fibonacci_sequence(12).iter().enumerate() {
        let mut want: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in &f[k] {
            for s in [1, 2, 3] {
                *want.entry(e + s).or_insert_with(|| BigInt::from(0)) += c;
            }
        }
        want.retain(|_, c| *c != BigInt::from(0));
        assert_eq!(q_specialization(fk), want, "k = {k}");
    }
}

proptest! {
    #[test]
    fn recurrence_holds_for_all_signed_indices(n in -30i64..30) {
        let lhs = star_fibonacci(n + 1);
        let rhs = &g(n) * &star_fibonacci(n) - star_fibonacci(n - 1).shift_s3(1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fibonacci_bidegrees(n in 0i64..40) {
        let bd = star_fibonacci(n).bidegree().unwrap();
        let (d, q) = if n % 2 == 0 { (n + 1, 3 * n / 2 + 1) } else { (n + 1, 3 * (n - 1) / 2 + 2) };
        prop_assert_eq!((bd.d, bd.q), (d, q));
        prop_assert_eq!(bd.deviation().abs(), if bd.d % 2 == 1 { 1 } else { 2 });
    }

    #[test]
    fn pell_bidegrees(n in 0u32..30) {
        let bd = star_pell(n).bidegree().unwrap();
        let m = (n / 2) as i64;
        let want = if n % 2 == 0 { (4 * m + 1, 6 * m + 2) } else { (4 * m + 3, 6 * m + 4) };
        prop_assert_eq!((bd.d, bd.q), want);
    }
}
