//! Dubrovin's braid-invariant Poisson structure on C^3 as a subordinated Nambu bracket.

use crate::bracket::{subordinate, BracketTable};
use crate::map::PolyMap;
use crate::poly::{MultiPoly, Vars};
use crate::report::{diff, Check};

pub fn vars() -> Vars {
    Vars::new(["a", "b", "c"])
}

pub fn hamiltonian(v: &Vars) -> MultiPoly {
    v.p("a^2 + b^2 + c^2 - a*b*c")
}

/// `{f, g}_H = {H, f, g}`.
pub fn bracket(v: &Vars, f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    subordinate(&[hamiltonian(v), f.clone(), g.clone()], &[])
}

pub fn table(v: &Vars) -> BracketTable {
    let xs = v.all();
    BracketTable::from_upper(v, 3, |i, j| bracket(v, &xs[i], &xs[j]))
}

pub fn tau1(v: &Vars) -> PolyMap {
    PolyMap::parse("tau1", v, &["-a", "c", "b - a*c"])
}

pub fn tau2(v: &Vars) -> PolyMap {
    PolyMap::parse("tau2", v, &["b", "a - b*c", "-c"])
}

pub fn checks() -> Vec<Check> {
    let v = vars();
    let t = table(&v);
    let h = hamiltonian(&v);
    let mut out = vec![
        Check::with_residual("{a,b}_H = 2c - ab", diff(t.get(0, 1), &v.p("2*c - a*b"))),
        Check::with_residual("{b,c}_H = 2a - bc", diff(t.get(1, 2), &v.p("2*a - b*c"))),
        Check::with_residual("{c,a}_H = 2b - ac", diff(t.get(2, 0), &v.p("2*b - a*c"))),
        Check::new("Dubrovin bracket satisfies Jacobi", t.jacobi_check().is_ok()),
        Check::new("H is a Casimir", t.is_casimir(&h)),
    ];
    for g in [tau1(&v), tau2(&v)] {
        out.push(Check::with_residual(format!("{} preserves H", g.name()), diff(&g.pullback(&h), &h)));
        out.push(Check::new(format!("Dubrovin bracket is invariant under {}", g.name()), t.is_preserved_by(&g, 1)));
    }
    out
}
