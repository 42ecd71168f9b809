//! Polynomial self-maps given by the images of the coordinates.

use crate::bracket::det;
use crate::poly::{q, MultiPoly, Q, Vars};
use crate::PoissonError;

/// `x -> (comps[0](x), ..., comps[n-1](x))`; `comps[k]` is the pullback of `x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    name: String,
    comps: Vec<MultiPoly>,
}

impl PolyMap {
    pub fn new(name: impl Into<String>, comps: Vec<MultiPoly>) -> Self {
        PolyMap { name: name.into(), comps }
    }

    /// Parses the components; variables beyond the coordinates act as fixed parameters.
    pub fn parse(name: &str, vars: &Vars, comps: &[&str]) -> Self {
        let mut v: Vec<MultiPoly> = comps.iter().map(|s| vars.p(s)).collect();
        for i in v.len()..vars.len() {
            v.push(vars.var(i));
        }
        PolyMap::new(name, v)
    }

    pub fn identity(vars: &Vars) -> Self {
        PolyMap::new("id", vars.all())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn comps(&self) -> &[MultiPoly] {
        &self.comps
    }

    pub fn vars(&self) -> &Vars {
        self.comps[0].vars()
    }

    /// `f o self`.
    pub fn pullback(&self, f: &MultiPoly) -> MultiPoly {
        f.substitute(&self.comps)
    }

    /// `self o other`: first `other`, then `self`.
    pub fn after(&self, other: &PolyMap) -> PolyMap {
        PolyMap::new(format!("{}*{}", self.name, other.name), self.comps.iter().map(|c| other.pullback(c)).collect())
    }

    /// Jacobian determinant over the first `n` variables.
    pub fn jacobian_det(&self, n: usize) -> MultiPoly {
        let m: Vec<Vec<MultiPoly>> = self.comps[..n].iter().map(|c| (0..n).map(|j| c.derivative(j)).collect()).collect();
        det(&m)
    }

    /// Inverts a triangular automorphism: repeatedly finds a component `c x_k + R` with
    /// `R` free of unsolved coordinates and solves it for `x_k`.
    pub fn inverse(&self, n: usize) -> Result<PolyMap, PoissonError> {
        let vars = self.vars().clone();
        let mut solved: Vec<Option<MultiPoly>> = vec![None; n];
        let mut used = vec![false; n];
        for _ in 0..n {
            let mut progress = false;
            'comp: for (ci, comp) in self.comps[..n].iter().enumerate() {
                if used[ci] {
                    continue;
                }
                for k in 0..n {
                    if solved[k].is_some() {
                        continue;
                    }
                    let dk = comp.derivative(k);
                    if dk.degree() != Some(0) {
                        continue;
                    }
                    let c = dk.coeff(&vec![0; vars.len()]);
                    let rest = comp - &vars.var(k).scale(&c);
                    let free = (0..n).all(|j| solved[j].is_some() || rest.derivative(j).is_zero());
                    if !free {
                        continue;
                    }
                    // x_k = (y_ci - R(x)) / c with already-solved x_j written in y
                    let mut images: Vec<MultiPoly> = vars.all();
                    for j in 0..n {
                        if let Some(s) = &solved[j] {
                            images[j] = s.clone();
                        }
                    }
                    let r = rest.substitute(&images);
                    solved[k] = Some((&vars.var(ci) - &r).scale(&(Q::from_integer(1.into()) / c)));
                    used[ci] = true;
                    progress = true;
                    continue 'comp;
                }
            }
            if solved.iter().all(|s| s.is_some()) {
                break;
            }
            if !progress {
                return Err(PoissonError::NotInvertible(self.name.clone()));
            }
        }
        let mut comps: Vec<MultiPoly> = solved.into_iter().map(|s| s.expect("all solved")).collect();
        for i in n..vars.len() {
            comps.push(vars.var(i));
        }
        let inv = PolyMap::new(format!("{}^-1", self.name), comps);
        let id = PolyMap::identity(&vars);
        if self.after(&inv).comps != id.comps || inv.after(self).comps != id.comps {
            return Err(PoissonError::NotInvertible(self.name.clone()));
        }
        Ok(inv)
    }

    /// Whether `f o self == sign * f`.
    pub fn preserves(&self, f: &MultiPoly, sign: i64) -> bool {
        self.pullback(f) == f.scale(&q(sign))
    }
}
