//! C^5 with the induced *-Markov action, the residue form omega and the bracket {,}_{J,J1,J2}.

use crate::bracket::{nambu_canonical, BracketTable};
use crate::form::DiffForm;
use crate::map::PolyMap;
use crate::poly::{q, qf, MultiPoly, Vars};
use crate::report::{diff, Check};

pub fn vars() -> Vars {
    Vars::numbered("y", 5)
}

pub fn j(v: &Vars) -> MultiPoly {
    v.p("y1*y2*y3 - y4*y5")
}

pub fn j1(v: &Vars) -> MultiPoly {
    v.p("y1 + y2 + y3 - y4")
}

pub fn j2(v: &Vars) -> MultiPoly {
    v.p("y1 + y2 + y3 - y5")
}

/// The generators acting on C^5 in the order lambda_01, lambda_10, lambda_11, sigma1, sigma2, tau1, tau2, nu.
pub fn all_maps(v: &Vars) -> Vec<PolyMap> {
    let id = |name: &str| PolyMap::parse(name, v, &["y1", "y2", "y3", "y4", "y5"]);
    vec![
        id("lambda_01"),
        id("lambda_10"),
        id("lambda_11"),
        PolyMap::parse("sigma1", v, &["y2", "y1", "y3", "y4", "y5"]),
        PolyMap::parse("sigma2", v, &["y1", "y3", "y2", "y4", "y5"]),
        PolyMap::parse("tau1", v, &["y1", "y3", "y2 + y1*y3 - y4 - y5", "-y5 + y1*y3", "-y4 + y1*y3"]),
        PolyMap::parse("tau2", v, &["y2", "y1 + y2*y3 - y4 - y5", "y3", "-y5 + y2*y3", "-y4 + y2*y3"]),
        PolyMap::parse("nu", v, &["y1", "y2", "y3", "y5", "y4"]),
    ]
}

/// `{f, g}_{J,J1,J2} = dJ ^ dJ1 ^ dJ2 ^ df ^ dg / dW`.
pub fn bracket(v: &Vars, f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let idx: Vec<usize> = (0..5).collect();
    nambu_canonical(&[j(v), j1(v), j2(v), f.clone(), g.clone()], &idx).expect("five functions on C^5")
}

pub fn table(v: &Vars) -> BracketTable {
    let ys = v.all();
    BracketTable::from_upper(v, 5, |a, b| bracket(v, &ys[a], &ys[b]))
}

/// Coordinates `u = (y1, y2, y3, J1, J2)`.
pub fn u_vars() -> Vars {
    Vars::numbered("u", 5)
}

/// The bracket table in the `u` coordinates.
pub fn u_table() -> BracketTable {
    let v = vars();
    let u = u_vars();
    let us = [v.p("y1"), v.p("y2"), v.p("y3"), j1(&v), j2(&v)];
    // y expressed through u
    let y_of_u: Vec<MultiPoly> = ["u1", "u2", "u3", "u1 + u2 + u3 - u4", "u1 + u2 + u3 - u5"].iter().map(|s| u.p(s)).collect();
    let t = table(&v);
    BracketTable::from_upper(&u, 5, |a, b| t.bracket(&us[a], &us[b]).substitute(&y_of_u))
}

fn homogeneous_table(t: &BracketTable, d: u32) -> BracketTable {
    BracketTable::from_upper(t.vars(), t.dim(), |a, b| t.get(a, b).homogeneous_part(d))
}

pub fn checks() -> Vec<Check> {
    let v = vars();
    let maps = all_maps(&v);
    let (jj, jj1, jj2) = (j(&v), j1(&v), j2(&v));
    let nu = &maps[7];
    let mut out = Vec::new();
    for g in &maps[..7] {
        for (name, p) in [("J", &jj), ("J1", &jj1), ("J2", &jj2)] {
            out.push(Check::with_residual(format!("{} preserves {name}", g.name()), diff(&g.pullback(p), p)));
        }
        out.push(Check::new(format!("nu commutes with {}", g.name()), nu.after(g).comps() == g.after(nu).comps()));
    }
    out.push(Check::with_residual("nu*J = J", diff(&nu.pullback(&jj), &jj)));
    out.push(Check::with_residual("nu*J1 = J2", diff(&nu.pullback(&jj1), &jj2)));
    out.push(Check::with_residual("nu*J2 = J1", diff(&nu.pullback(&jj2), &jj1)));

    let dj = DiffForm::differential(&jj);
    let djjj = dj.wedge(&DiffForm::differential(&jj1)).wedge(&DiffForm::differential(&jj2));
    let dw = DiffForm::volume(&v);
    let y23 = v.p("y2*y3");
    let chart = DiffForm::basic(MultiPoly::constant(&v, q(1)), &[1, 2, 3, 4]);
    out.push(Check::new("dJ ^ omega = dW (cleared by y2 y3)", dj.wedge(&chart) == dw.scale(&y23)));
    let t = table(&v);
    let ysigns: [(&str, [i64; 5]); 4] = [
        ("dW", [1, 1, -1, -1, -1]),
        ("dJ^dJ1^dJ2", [1, 1, 1, 1, -1]),
        ("omega", [1, 1, -1, -1, -1]),
        ("{,}_J,J1,J2", [1, 1, -1, -1, 1]),
    ];
    // columns: tau1, tau2, sigma1, sigma2, nu
    let order = [5usize, 6, 3, 4, 7];
    for (name, signs) in ysigns {
        for (&gi, &s) in order.iter().zip(&signs) {
            let g = &maps[gi];
            let label = format!("{name} is {} under {}", if s > 0 { "invariant" } else { "anti-invariant" }, g.name());
            let residual = match name {
                "dW" => diff(&g.jacobian_det(5), &MultiPoly::constant(&v, q(s))),
                "dJ^dJ1^dJ2" => {
                    let target = djjj.scale(&MultiPoly::constant(&v, q(s)));
                    let got = djjj.pullback(g.comps());
                    (got != target).then(|| got.add(&target.neg()).to_string())
                }
                "omega" => {
                    // g*omega = Phi / g*(y2 y3); compare dJ ^ Phi with s g*(y2 y3) dW
                    let phi = chart.pullback(g.comps());
                    let lhs = dj.wedge(&phi);
                    let rhs = dw.scale(&g.pullback(&y23).scale(&q(s)));
                    (lhs != rhs).then(|| lhs.add(&rhs.neg()).to_string())
                }
                _ => t.transported_residual(g, s, &t).map(|(a, b, r)| format!("({},{}): {r}", a + 1, b + 1)),
            };
            out.push(Check::with_residual(label, residual));
        }
    }
    for g in &maps[..3] {
        out.push(Check::new(format!("{{,}}_J,J1,J2 is invariant under {}", g.name()), t.is_preserved_by(g, 1)));
    }
    out.push(Check::with_residual("{,}_J,J1,J2 satisfies Jacobi", t.jacobi_check().err().map(|(a, b, c, r)| format!("({},{},{}): {r}", a + 1, b + 1, c + 1))));
    for (name, p) in [("J", &jj), ("J1", &jj1), ("J2", &jj2)] {
        out.push(Check::new(format!("{name} is a Casimir of {{,}}_J,J1,J2"), t.is_casimir(p)));
    }

    let ut = u_table();
    let u = u_vars();
    for (a, b) in [(0, 1), (1, 2), (2, 0)] {
        let want = u.p(&format!("u{}*u{} - 2*(u1 + u2 + u3) + u4 + u5", a + 1, b + 1));
        out.push(Check::with_residual(format!("{{u{},u{}}} formula", a + 1, b + 1), diff(ut.get(a, b), &want)));
    }
    let casimir_cols = (0..5).all(|i| ut.get(i, 3).is_zero() && ut.get(i, 4).is_zero());
    out.push(Check::new("{u_i,u4} = {u_i,u5} = 0", casimir_cols));
    let lin = homogeneous_table(&ut, 1);
    let quad = homogeneous_table(&ut, 2);
    out.push(Check::new("u-table is the sum of its linear and quadratic parts", lin.add(&quad) == ut));
    let samples = [(1, 1, 0, 1), (0, 1, 1, 1), (1, 1, 1, 1), (3, 1, -2, 1), (-5, 1, 7, 1), (1, 2, 3, 1), (-2, 3, 5, 7), (7, 1, 1, 3), (-1, 1, -1, 1), (11, 4, -9, 5)];
    for (an, ad, bn, bd) in samples {
        let (a, b) = (qf(an, ad), qf(bn, bd));
        let comb = lin.scale(&a).add(&quad.scale(&b));
        out.push(Check::new(format!("pencil {a}*linear + {b}*quadratic satisfies Jacobi"), comb.jacobi_check().is_ok()));
    }
    out
}
