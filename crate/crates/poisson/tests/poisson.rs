use poisson::*;
use proptest::prelude::*;

fn all_pass(checks: &[Check]) {
    let bad: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {:?}", c.name, c.residual)).collect();
    assert!(bad.is_empty(), "failing checks:\n{}", bad.join("\n"));
}

#[test]
fn nambu_canonical_basics() {
    let v = dubrovin::vars();
    let xs = v.all();
    assert_eq!(nambu_canonical(&xs, &[0, 1, 2]).unwrap(), v.p("1"));
    let h = dubrovin::hamiltonian(&v);
    let hab = nambu_canonical(&[h.clone(), xs[0].clone(), xs[1].clone()], &[0, 1, 2]).unwrap();
    assert_eq!(hab, v.p("2*c - a*b"));
    let hba = nambu_canonical(&[h, xs[1].clone(), xs[0].clone()], &[0, 1, 2]).unwrap();
    assert_eq!(hba, -hab);
    assert!(nambu_canonical(&xs[..2], &[0, 1, 2]).is_err());
}

#[test]
fn determinant_against_cofactor_expansion() {
    // independent oracle: Laplace expansion along the first row
    fn cofactor(m: &[Vec<MultiPoly>]) -> MultiPoly {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = MultiPoly::zero(m[0][0].vars());
        for c in 0..m.len() {
            let minor: Vec<Vec<MultiPoly>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect()).collect();
            let t = &m[0][c] * &cofactor(&minor);
            acc = if c % 2 == 0 { acc + t } else { acc - t };
        }
        acc
    }
    let v = c6::vars();
    let mut rng = sample::rng(3);
    for n in 1..=5 {
        let m: Vec<Vec<MultiPoly>> = (0..n).map(|_| (0..n).map(|_| sample::sparse_poly(&v, 6, 2, 2, &mut rng)).collect()).collect();
        assert_eq!(det(&m), cofactor(&m), "n = {n}");
    }
}

#[test]
fn omega_bracket_entries() {
    let v = c6::vars();
    let om = c6::omega_form(&v);
    let xs = v.all();
    assert_eq!(bracket_from_form(&om, &xs[0], &xs[2]).unwrap(), v.p("-x1*x3"));
    assert!(bracket_from_form(&om, &xs[0], &xs[1]).unwrap().is_zero());
    assert!(bracket_from_form(&om, &xs[0], &v.p("x1*x3*x5")).unwrap().is_zero());
    let three = DiffForm::basic(v.p("1"), &[0, 1, 2]);
    assert!(bracket_from_form(&three, &xs[0], &xs[1]).is_err());
    assert_eq!(BracketTable::from_form(&om).unwrap(), c6::omega_table(&v));
}

#[test]
fn leibniz_extension_reproduces_table() {
    let v = c6::vars();
    let t = c6::omega_table(&v);
    let xs = v.all();
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(&t.bracket(&xs[i], &xs[j]), t.get(i, j));
        }
    }
    let u = c5::u_table();
    let uv = c5::u_vars();
    assert_eq!(u.get(0, 1), &uv.p("u1*u2 - 2*(u1 + u2 + u3) + u4 + u5"));
    for i in 0..5 {
        assert!(u.get(i, 3).is_zero() && u.get(i, 4).is_zero());
    }
}

#[test]
fn jacobi_examples() {
    let v = c6::vars();
    assert!(c6::omega_table(&v).jacobi_check().is_ok());
    let w = c12::vars();
    assert!(c12::family_at(&w, [1, 0, 0]).jacobi_check().is_ok());
    let mut bad = c6::omega_table(&v);
    bad.set(0, 2, v.p("x1^2"));
    // direct expansion: {x1,{x3,x5}} + {x3,{x5,x1}} + {x5,{x1,x3}} = -x1^2 x5 - 2 x1 x3 x5 + ...
    let xs = v.all();
    let jac = bad.bracket(&xs[0], bad.get(2, 4)) + bad.bracket(&xs[2], bad.get(4, 0)) + bad.bracket(&xs[4], bad.get(0, 2));
    assert!(!jac.is_zero());
    assert!(bad.jacobi_check().is_err());
}

#[test]
fn fundamental_identities() {
    let c = fi::canonical6_fi(100, 1);
    assert!(c.pass, "{:?}", c.residual);
    let c = fi::bracket4_fi(100, 2);
    assert!(c.pass, "{:?}", c.residual);
    all_pass(&dubrovin::checks());
}

#[test]
fn pullbacks_of_forms() {
    let v = c6::vars();
    let f = c6::f_map(&v);
    let y = c5::vars();
    let dy1 = DiffForm::differential(&y.var(0)).pullback(&f);
    let mut want = DiffForm::zero(&v, 1);
    want.add_basic(v.p("x2"), &[0]);
    want.add_basic(v.p("x1"), &[1]);
    assert_eq!(dy1, want);
    // F*omega = Omega after clearing the chart denominator y2 y3
    let chart = DiffForm::basic(y.p("1"), &[1, 2, 3, 4]);
    assert_eq!(chart.pullback(&f), c6::omega_form(&v).scale(&v.p("x3*x4*x5*x6")));
}

#[test]
fn transforms_of_brackets() {
    let v = c6::vars();
    let om = c6::omega_table(&v);
    assert_eq!(transform_bracket(Space::C6, "tau1", &om).unwrap(), om.scale(&q(-1)));
    assert_eq!(transform_bracket(Space::C6, "tau2", &om).unwrap(), om.scale(&q(-1)));
    assert_eq!(transform_bracket(Space::C6, "nu", &om).unwrap(), om);
    assert!(transform_bracket(Space::C6, "tau9", &om).is_err());

    let w = c12::vars();
    let fam = c12::family(&w);
    for i in 1..=3 {
        let moved = transform_bracket(Space::C12, &format!("tau{i}"), &fam).unwrap();
        let mut sub = w.all();
        for (k, s) in c12::rho(i).iter().enumerate() {
            sub[12 + k] = w.p(s);
        }
        let want = BracketTable::from_upper(&w, 12, |a, b| fam.get(a, b).substitute(&sub));
        assert_eq!(moved, want, "tau{i}");
    }
}

#[test]
fn quadratic_casimir_solutions() {
    let sys = c6::solve_quadratic();
    assert_eq!(sys.basis.len(), 1);
    assert_eq!(sys.unknowns(), 15 * 21);
    assert!(sys.express(&c6::omega_table(&c6::vars())).is_some());
    let sys = c12::solve_quadratic();
    assert_eq!(sys.unknowns(), 66 * 78);
    assert_eq!(sys.basis.len(), 3);
    all_pass(&c12::solver_checks());
    all_pass(&c6::solver_checks());
}

#[test]
fn suites_pass() {
    all_pass(&c6::checks());
    all_pass(&c5::checks());
    all_pass(&c12::checks());
}

#[test]
fn casimir_subalgebra_identities() {
    let v = c6::vars();
    let h = c6::casimir_generators(&v);
    assert!((&(&(&h[0] * &h[1]) * &h[2]) - &(&h[3] * &h[4])).is_zero());
    let w = c12::vars();
    let m = c12::casimir_monomials(&w);
    let lhs = c12::tau(&w, 1).pullback(&m[1]);
    let rhs = &(&(&m[0] * &m[1]) + &m[3]) - &(&m[10] + &m[6]);
    assert_eq!(lhs, rhs);
    assert!(c12::in_subalgebra(&c12::hamiltonians(&w)[1], &m));
    assert!(!c12::in_subalgebra(&w.p("x1"), &m));
}

#[test]
fn triangular_inverse_composes_to_identity() {
    let v = c6::vars();
    for g in c6::generators(&v) {
        let inv = g.inverse(6).unwrap();
        assert_eq!(g.after(&inv).comps(), v.all().as_slice());
    }
    let t1 = c6::tau1(&v).inverse(6).unwrap();
    let want: Vec<MultiPoly> = ["-x2", "-x1", "x6 - x1*x3", "x5 - x2*x4", "x4", "x3"].iter().map(|s| v.p(s)).collect();
    assert_eq!(t1.comps(), want.as_slice());
}

#[test]
fn parser_errors() {
    let v = c6::vars();
    assert!(v.parse("x7").is_err());
    assert!(v.parse("x1 +").is_err());
    assert!(v.parse("(x1").is_err());
    assert_eq!(v.parse("x1/2 + x1/2").unwrap(), v.p("x1"));
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((proptest::collection::vec(0u8..3, 6), -4i64..5), 1..5).prop_map(|terms| {
        let v = c6::vars();
        MultiPoly::from_terms(&v, terms.into_iter().map(|(e, c)| (e, q(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn casimir_subalgebra_is_central(f in arb_poly(), a in 0usize..5, b in 0usize..5) {
        let v = c6::vars();
        let t = c6::omega_table(&v);
        let h = c6::casimir_generators(&v);
        prop_assert!(t.bracket(&f, &c6::h1(&v)).is_zero());
        prop_assert!(t.bracket(&f, &(&h[a] * &h[b])).is_zero());
    }

    #[test]
    fn bracket_is_skew_and_leibniz(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        let t = c6::omega_table(&c6::vars());
        prop_assert_eq!(t.bracket(&f, &g), -t.bracket(&g, &f));
        prop_assert_eq!(t.bracket(&f, &(&g * &h)), &t.bracket(&f, &g) * &h + &g * &t.bracket(&f, &h));
    }

    #[test]
    fn display_parses_back(f in arb_poly()) {
        let v = c6::vars();
        prop_assert_eq!(v.parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn pullback_is_contravariant(f in arb_poly(), i in 0usize..7, j in 0usize..7) {
        let v = c6::vars();
        let gens = c6::generators(&v);
        let (g, h) = (&gens[i], &gens[j]);
        // (g o h)* f = h*(g* f)
        prop_assert_eq!(g.after(h).pullback(&f), h.pullback(&g.pullback(&f)));
    }
}
