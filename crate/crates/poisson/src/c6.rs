//! C^6 with the *-Markov group action, the 4-form Omega and its log-canonical bracket.

use crate::bracket::{subordinate, BracketTable};
use crate::form::DiffForm;
use crate::map::PolyMap;
use crate::poly::{q, MultiPoly, Q, Vars};
use crate::report::{diff, Check};

pub fn vars() -> Vars {
    Vars::numbered("x", 6)
}

pub fn h1(v: &Vars) -> MultiPoly {
    v.p("x1*x2 + x3*x4 + x5*x6 - x1*x3*x5")
}

pub fn h2(v: &Vars) -> MultiPoly {
    v.p("x1*x2 + x3*x4 + x5*x6 - x2*x4*x6")
}

/// Generators of the Casimir subalgebra.
pub fn casimir_generators(v: &Vars) -> Vec<MultiPoly> {
    ["x1*x2", "x3*x4", "x5*x6", "x1*x3*x5", "x2*x4*x6"].iter().map(|s| v.p(s)).collect()
}

pub fn lambda(v: &Vars, i: u32, j: u32) -> PolyMap {
    let s = |k: u32| if k % 2 == 0 { "" } else { "-" };
    let (a, b, c) = (s(i), s(i + j), s(j));
    PolyMap::parse(
        &format!("lambda_{i}{j}"),
        v,
        &[&format!("{a}x1"), &format!("{a}x2"), &format!("{b}x3"), &format!("{b}x4"), &format!("{c}x5"), &format!("{c}x6")],
    )
}

pub fn sigma1(v: &Vars) -> PolyMap {
    PolyMap::parse("sigma1", v, &["x3", "x4", "x1", "x2", "x5", "x6"])
}

pub fn sigma2(v: &Vars) -> PolyMap {
    PolyMap::parse("sigma2", v, &["x1", "x2", "x5", "x6", "x3", "x4"])
}

pub fn tau1(v: &Vars) -> PolyMap {
    PolyMap::parse("tau1", v, &["-x2", "-x1", "x6", "x5", "x4 - x1*x5", "x3 - x2*x6"])
}

pub fn tau2(v: &Vars) -> PolyMap {
    PolyMap::parse("tau2", v, &["x4", "x3", "x2 - x3*x5", "x1 - x4*x6", "-x6", "-x5"])
}

pub fn nu(v: &Vars) -> PolyMap {
    PolyMap::parse("nu", v, &["x2", "x1", "x4", "x3", "x6", "x5"])
}

/// The generators with nontrivial action, in a fixed order.
pub fn generators(v: &Vars) -> Vec<PolyMap> {
    vec![lambda(v, 0, 1), lambda(v, 1, 0), lambda(v, 1, 1), sigma1(v), sigma2(v), tau1(v), tau2(v)]
}

/// The 4-form Omega.
pub fn omega_form(v: &Vars) -> DiffForm {
    let terms: [(&str, [usize; 4]); 12] = [
        ("x1*x3", [2, 4, 5, 6]),
        ("x1*x4", [2, 3, 5, 6]),
        ("-x1*x5", [2, 3, 4, 6]),
        ("-x1*x6", [2, 3, 4, 5]),
        ("x2*x3", [1, 4, 5, 6]),
        ("x2*x4", [1, 3, 5, 6]),
        ("-x2*x5", [1, 3, 4, 6]),
        ("-x2*x6", [1, 3, 4, 5]),
        ("x3*x5", [1, 2, 4, 6]),
        ("x3*x6", [1, 2, 4, 5]),
        ("x4*x5", [1, 2, 3, 6]),
        ("x4*x6", [1, 2, 3, 5]),
    ];
    let mut f = DiffForm::zero(v, 4);
    for (c, idx) in terms {
        let idx: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        f.add_basic(v.p(c), &idx);
    }
    f
}

/// The bracket matrix of `{,}_Omega` as tabulated (signs of `x_i x_j`).
pub fn omega_table(v: &Vars) -> BracketTable {
    let signs: [[i64; 6]; 6] = [
        [0, 0, -1, 1, 1, -1],
        [0, 0, 1, -1, -1, 1],
        [1, -1, 0, 0, -1, 1],
        [-1, 1, 0, 0, 1, -1],
        [-1, 1, 1, -1, 0, 0],
        [1, -1, -1, 1, 0, 0],
    ];
    BracketTable::from_upper(v, 6, |i, j| (&v.var(i) * &v.var(j)).scale(&q(signs[i][j])))
}

/// `{f_1, f_2, f_3, f_4}_{H1,H2}`.
pub fn bracket4(v: &Vars, fs: &[MultiPoly]) -> MultiPoly {
    let mut args = vec![h1(v), h2(v)];
    args.extend_from_slice(fs);
    subordinate(&args, &[])
}

/// `F: C^6 -> C^5`, `y = (x1x2, x3x4, x5x6, x1x3x5, x2x4x6)`, as polynomials in `x`.
pub fn f_map(v: &Vars) -> Vec<MultiPoly> {
    casimir_generators(v)
}

/// Expected sign of each generator on each object, in the order of [`generators`] then `nu`.
struct Signs {
    name: &'static str,
    signs: [i64; 8],
}

fn all_maps(v: &Vars) -> Vec<PolyMap> {
    let mut g = generators(v);
    g.push(nu(v));
    g
}

fn sign_label(s: i64) -> &'static str {
    if s > 0 {
        "invariant"
    } else {
        "anti-invariant"
    }
}

pub fn checks() -> Vec<Check> {
    let v = vars();
    let (hh1, hh2) = (h1(&v), h2(&v));
    let maps = all_maps(&v);
    let nu_map = nu(&v);
    let omega = omega_form(&v);
    let table = omega_table(&v);
    let mut out = Vec::new();

    for g in &maps[..7] {
        out.push(Check::with_residual(format!("{} preserves H1", g.name()), diff(&g.pullback(&hh1), &hh1)));
        out.push(Check::with_residual(format!("{} preserves H2", g.name()), diff(&g.pullback(&hh2), &hh2)));
    }
    out.push(Check::with_residual("nu*H1 = H2", diff(&nu_map.pullback(&hh1), &hh2)));
    out.push(Check::with_residual("nu*H2 = H1", diff(&nu_map.pullback(&hh2), &hh1)));
    for g in &maps[..7] {
        let lhs = nu_map.after(g);
        let rhs = g.after(&nu_map);
        out.push(Check::new(format!("nu commutes with {}", g.name()), lhs.comps() == rhs.comps()));
    }

    let dh = DiffForm::differential(&hh1).wedge(&DiffForm::differential(&hh2));
    let expectations = [
        Signs { name: "dV", signs: [1, 1, 1, 1, 1, -1, -1, -1] },
        Signs { name: "Omega", signs: [1, 1, 1, -1, -1, 1, 1, -1] },
        Signs { name: "dH1^dH2", signs: [1, 1, 1, 1, 1, 1, 1, -1] },
        Signs { name: "{,}_Omega", signs: [1, 1, 1, -1, -1, -1, -1, 1] },
        Signs { name: "{,,,}_H1,H2", signs: [1, 1, 1, 1, 1, -1, -1, 1] },
    ];
    for e in &expectations {
        for (g, &s) in maps.iter().zip(&e.signs) {
            let name = format!("{} is {} under {}", e.name, sign_label(s), g.name());
            let residual = match e.name {
                "dV" => diff(&g.jacobian_det(6), &MultiPoly::constant(&v, q(s))),
                "Omega" => form_residual(&omega.pullback(g.comps()), &omega, s),
                "dH1^dH2" => form_residual(&dh.pullback(g.comps()), &dh, s),
                "{,}_Omega" => table.transported_residual(g, s, &table).map(|(i, j, r)| format!("({},{}): {r}", i + 1, j + 1)),
                _ => bracket4_residual(&v, g, s),
            };
            out.push(Check::with_residual(name, residual));
        }
    }

    // Casimir subalgebra
    let h = casimir_generators(&v);
    let rel = &(&(&h[0] * &h[1]) * &h[2]) - &(&h[3] * &h[4]);
    out.push(Check::new("h1 h2 h3 - h4 h5 = 0", rel.is_zero()));
    out.push(Check::with_residual("H1 = h1 + h2 + h3 - h4", diff(&hh1, &(&(&(&h[0] + &h[1]) + &h[2]) - &h[3]))));
    let csa: [(&str, [&str; 5]); 5] = [
        ("nu", ["h1", "h2", "h3", "h5", "h4"]),
        ("tau1", ["h1", "h3", "h2 + h1*h3 - h4 - h5", "-h5 + h1*h3", "-h4 + h1*h3"]),
        ("tau2", ["h2", "h1 + h2*h3 - h4 - h5", "h3", "-h5 + h2*h3", "-h4 + h2*h3"]),
        ("sigma1", ["h2", "h1", "h3", "h4", "h5"]),
        ("sigma2", ["h1", "h3", "h2", "h4", "h5"]),
    ];
    let hv = Vars::numbered("h", 5);
    for (name, images) in csa {
        let g = maps.iter().find(|m| m.name() == name).expect("generator");
        for (k, img) in images.iter().enumerate() {
            let want = hv.p(img).substitute(&h);
            out.push(Check::with_residual(format!("{name}*h{} = {img}", k + 1), diff(&g.pullback(&h[k]), &want)));
        }
    }
    for g in &maps[..3] {
        out.push(Check::new(format!("{} fixes h1..h5", g.name()), h.iter().all(|p| g.preserves(p, 1))));
    }

    // the bracket of Omega
    match BracketTable::from_form(&omega) {
        Ok(t) => out.push(Check::new("Omega bracket matches the log-canonical table", t == table)),
        Err(e) => out.push(Check::with_residual("Omega bracket matches the log-canonical table", Some(e.to_string()))),
    }
    out.push(Check::with_residual("Omega bracket satisfies Jacobi", table.jacobi_check().err().map(|(i, j, k, r)| format!("({},{},{}): {r}", i + 1, j + 1, k + 1))));
    for (k, p) in h.iter().enumerate() {
        out.push(Check::new(format!("h{} is a Casimir of Omega", k + 1), table.is_casimir(p)));
    }
    let points = crate::sample::rational_points(6, 10, 6);
    let ranks: Vec<usize> = points.iter().map(|p| table.rank_at(p)).collect();
    out.push(Check::with_residual("Omega bracket has rank 2 at random points", ranks.iter().any(|&r| r != 2).then(|| format!("{ranks:?}"))));

    // F and the Gelfand-Leray form
    let f = f_map(&v);
    let yv = crate::c5::vars();
    let jj = crate::c5::j(&yv);
    out.push(Check::new("image of F lies in J = 0", jj.substitute(&f).is_zero()));
    let w: Vec<DiffForm> = f.iter().map(DiffForm::differential).collect();
    let pulled = w[1].wedge(&w[2]).wedge(&w[3]).wedge(&w[4]);
    let x3456 = v.p("x3*x4*x5*x6");
    out.push(Check::new("F*omega = Omega (cleared by x3 x4 x5 x6)", pulled == omega.scale(&x3456)));
    let lin = |a: &str, b: &str| DiffForm::differential(&v.p(a)).scale(&v.p(b));
    let factor = lin("x3", "x4")
        .add(&lin("x4", "x3"))
        .wedge(&lin("x5", "x6").add(&lin("x6", "x5")))
        .wedge(&DiffForm::differential(&v.p("x1*x3*x5")))
        .wedge(&DiffForm::differential(&v.p("x2*x4*x6")));
    out.push(Check::new("factored form of F*omega (cleared)", factor == omega.scale(&x3456)));
    let c5maps = crate::c5::all_maps(&yv);
    for (g6, g5) in maps.iter().zip(&c5maps) {
        let ok = (0..5).all(|k| f[k].substitute(g6.comps()) == g5.comps()[k].substitute(&f));
        out.push(Check::new(format!("F commutes with {}", g6.name()), ok));
    }
    out
}

fn form_residual(got: &DiffForm, want: &DiffForm, s: i64) -> Option<String> {
    let target = want.scale(&MultiPoly::constant(want.vars(), q(s)));
    if *got == target {
        None
    } else {
        Some(got.add(&target.neg()).to_string())
    }
}

fn bracket4_residual(v: &Vars, g: &PolyMap, s: i64) -> Option<String> {
    let xs = v.all();
    let c = g.comps();
    for a in 0..6 {
        for b in a + 1..6 {
            for cc in b + 1..6 {
                for d in cc + 1..6 {
                    let lhs = bracket4(v, &[c[a].clone(), c[b].clone(), c[cc].clone(), c[d].clone()]);
                    let rhs = bracket4(v, &[xs[a].clone(), xs[b].clone(), xs[cc].clone(), xs[d].clone()]).substitute(c).scale(&q(s));
                    if lhs != rhs {
                        return Some(format!("({},{},{},{}): {}", a + 1, b + 1, cc + 1, d + 1, lhs - rhs));
                    }
                }
            }
        }
    }
    None
}

/// `{,}_Omega` is the only quadratic bracket with Casimirs H1, H2, up to scale.
pub fn solve_quadratic() -> crate::solver::CasimirSystem {
    let v = vars();
    crate::solver::quadratic_casimir_solver(&v, 6, &[h1(&v), h2(&v)])
}

/// Log-canonical brackets that stay log-canonical under tau1, tau2 and their inverses.
pub fn log_canonical_closure() -> Vec<BracketTable> {
    let v = vars();
    let maps: Vec<(PolyMap, PolyMap)> = [tau1(&v), tau2(&v)]
        .into_iter()
        .flat_map(|t| {
            let inv = t.inverse(6).expect("tau is invertible");
            [(t.clone(), inv.clone()), (inv, t)]
        })
        .collect();
    crate::solver::log_canonical_closure(&v, 6, &maps)
}

pub fn solver_checks() -> Vec<Check> {
    let v = vars();
    let table = omega_table(&v);
    let sys = solve_quadratic();
    let mut out = vec![Check::with_residual(
        "quadratic brackets with Casimirs H1, H2 form a 1-dimensional space",
        (sys.basis.len() != 1).then(|| format!("dimension {}", sys.basis.len())),
    )];
    out.push(Check::new("that space is spanned by the Omega bracket", sys.basis.len() == 1 && sys.express(&table).is_some()));
    let (_, low) = crate::solver::low_order_probe(&v, 6, &[h1(&v), h2(&v)]);
    out.push(Check::with_residual("constant and linear parts are forced to vanish", (low != 0).then(|| format!("{low} free low-order directions"))));
    let closure = log_canonical_closure();
    let ok = closure.len() == 1 && {
        let k = closure[0].get(0, 2).coeff(&[1, 0, 1, 0, 0, 0]);
        let c: Q = table.get(0, 2).coeff(&[1, 0, 1, 0, 0, 0]) / k;
        closure[0].scale(&c) == table
    };
    out.push(Check::with_residual(
        "log-canonical brackets closed under tau1, tau2 are multiples of Omega",
        (!ok).then(|| format!("dimension {}", closure.len())),
    ));
    out
}
