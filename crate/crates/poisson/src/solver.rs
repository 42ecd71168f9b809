//! Linear systems for brackets with prescribed Casimirs, and the log-canonical closure problem.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::bracket::BracketTable;
use crate::linalg::{Echelon, SparseRow};
use crate::map::PolyMap;
use crate::poly::{q, Monomial, MultiPoly, Q, Vars};

/// All exponent vectors of total degree `d` in `n` variables, padded to `width`.
pub fn monomials(n: usize, d: u32, width: usize) -> Vec<Monomial> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == n - 1 {
            cur[i] = left as u8;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a as u8;
            rec(i + 1, n, left - a, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u8; width];
    rec(0, n, d, &mut cur, &mut out);
    out
}

/// Solution space of `{x_i, H} = 0` for skew brackets whose entries are combinations of the
/// given monomials.
pub struct CasimirSystem {
    pub vars: Vars,
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    pub monos: Vec<Monomial>,
    pub rank: usize,
    pub basis: Vec<Vec<Q>>,
}

impl CasimirSystem {
    pub fn unknowns(&self) -> usize {
        self.pairs.len() * self.monos.len()
    }

    fn index(&self, p: usize, m: usize) -> usize {
        p * self.monos.len() + m
    }

    pub fn table(&self, v: &[Q]) -> BracketTable {
        let mut t = BracketTable::zero(&self.vars, self.n);
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            let e = MultiPoly::from_terms(
                &self.vars,
                self.monos.iter().enumerate().map(|(m, mono)| (mono.clone(), v[self.index(p, m)].clone())),
            );
            t.set(i, j, e);
        }
        t
    }

    pub fn basis_tables(&self) -> Vec<BracketTable> {
        self.basis.iter().map(|v| self.table(v)).collect()
    }

    /// Coordinates of a table in the unknown vector; `None` if it uses other monomials.
    pub fn coordinates(&self, t: &BracketTable) -> Option<Vec<Q>> {
        let mut v = vec![Q::zero(); self.unknowns()];
        let pos: BTreeMap<&Monomial, usize> = self.monos.iter().enumerate().map(|(m, e)| (e, m)).collect();
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            for (e, c) in t.get(i, j).terms() {
                let m = *pos.get(e)?;
                v[self.index(p, m)] = c.clone();
            }
        }
        Some(v)
    }

    /// Whether `t` is a combination of the basis, returning the combination.
    pub fn express(&self, t: &BracketTable) -> Option<Vec<Q>> {
        let v = self.coordinates(t)?;
        let coords = self.free_coords(&v);
        let mut recon = vec![Q::zero(); v.len()];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (r, x) in recon.iter_mut().zip(b) {
                *r += c * x;
            }
        }
        (recon == v).then_some(coords)
    }

    fn free_coords(&self, v: &[Q]) -> Vec<Q> {
        self.basis
            .iter()
            .map(|b| {
                let f = free_column(b, &self.basis);
                v[f].clone()
            })
            .collect()
    }
}

/// The column where `b` is 1 and every other basis vector is 0.
fn free_column(b: &[Q], basis: &[Vec<Q>]) -> usize {
    (0..b.len())
        .find(|&c| b[c] == q(1) && basis.iter().filter(|o| !o[c].is_zero()).count() == 1)
        .expect("nullspace basis has a private unit column")
}

/// Sets up and solves `{x_i, H} = 0` for every coordinate and Casimir, with bracket entries in the
/// span of monomials of the given degrees; equations of total degree above `max_eq_degree` are dropped.
pub fn casimir_system(vars: &Vars, n: usize, casimirs: &[MultiPoly], degrees: &[u32], max_eq_degree: Option<u32>) -> CasimirSystem {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let monos: Vec<Monomial> = degrees.iter().flat_map(|&d| monomials(n, d, vars.len())).collect();
    let mut pair_index = vec![vec![usize::MAX; n]; n];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = p;
        pair_index[j][i] = p;
    }
    let grads: Vec<Vec<MultiPoly>> = casimirs.iter().map(|h| (0..n).map(|j| h.derivative(j)).collect()).collect();
    let nm = monos.len();
    // rows are generated per coordinate in parallel, then merged in a fixed order
    let per_i: Vec<Vec<SparseRow>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rows = Vec::new();
            for grad in &grads {
                let mut eqs: BTreeMap<Monomial, BTreeMap<usize, Q>> = BTreeMap::new();
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let p = pair_index[i][j];
                    let sign = if i < j { q(1) } else { q(-1) };
                    for (e, c) in grad[j].terms() {
                        for (m, mono) in monos.iter().enumerate() {
                            let key: Monomial = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                            if let Some(maxd) = max_eq_degree {
                                if key.iter().map(|&a| a as u32).sum::<u32>() > maxd {
                                    continue;
                                }
                            }
                            let slot = eqs.entry(key).or_default().entry(p * nm + m).or_insert_with(Q::zero);
                            *slot += &sign * c;
                        }
                    }
                }
                rows.extend(eqs.into_values().map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect::<SparseRow>()));
            }
            rows
        })
        .collect();
    let mut ech = Echelon::new();
    for rows in per_i {
        for r in rows {
            ech.insert(r);
        }
    }
    let unknowns = pairs.len() * nm;
    let basis = ech.nullspace(unknowns);
    CasimirSystem { vars: vars.clone(), n, pairs, monos, rank: ech.rank(), basis }
}

/// Quadratic skew brackets with the given Casimirs.
pub fn quadratic_casimir_solver(vars: &Vars, n: usize, casimirs: &[MultiPoly]) -> CasimirSystem {
    casimir_system(vars, n, casimirs, &[2], None)
}

/// Low-order probe: brackets with constant, linear and quadratic parts, keeping only the
/// Casimir equations that cannot involve higher-order parts of a polynomial bracket.
/// Returns the system and the number of independent constant and linear directions left.
pub fn low_order_probe(vars: &Vars, n: usize, casimirs: &[MultiPoly]) -> (CasimirSystem, usize) {
    let min_grad = casimirs
        .iter()
        .flat_map(|h| (0..n).map(move |j| h.derivative(j)))
        .filter_map(|g| g.terms().map(|(e, _)| e.iter().map(|&a| a as u32).sum::<u32>()).min())
        .min()
        .unwrap_or(0);
    let sys = casimir_system(vars, n, casimirs, &[0, 1, 2], Some(2 + min_grad));
    let low: Vec<usize> = (0..sys.unknowns())
        .filter(|&k| sys.monos[k % sys.monos.len()].iter().map(|&a| a as u32).sum::<u32>() < 2)
        .collect();
    let projected: Vec<Vec<Q>> = sys.basis.iter().map(|b| low.iter().map(|&k| b[k].clone()).collect()).collect();
    let r = crate::linalg::rank(projected);
    (sys, r)
}

/// Log-canonical brackets `{x_i, x_j} = k_ij x_i x_j` whose transforms under each given map
/// (with its inverse) are again log-canonical. Returns a basis of the admissible `k`.
pub fn log_canonical_closure(vars: &Vars, n: usize, maps: &[(PolyMap, PolyMap)]) -> Vec<BracketTable> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let elementary: Vec<BracketTable> = pairs
        .iter()
        .map(|&(i, j)| {
            let mut t = BracketTable::zero(vars, n);
            t.set(i, j, &vars.var(i) * &vars.var(j));
            t
        })
        .collect();
    let rows: Vec<Vec<SparseRow>> = maps
        .par_iter()
        .map(|(phi, psi)| {
            let moved: Vec<BracketTable> = elementary.iter().map(|e| e.transform(phi, psi)).collect();
            let mut rows = Vec::new();
            for &(i, j) in &pairs {
                let mut want = vec![0u8; vars.len()];
                want[i] += 1;
                want[j] += 1;
                let mut eqs: BTreeMap<Monomial, SparseRow> = BTreeMap::new();
                for (p, t) in moved.iter().enumerate() {
                    for (e, c) in t.get(i, j).terms() {
                        if *e != want {
                            eqs.entry(e.clone()).or_default().push((p, c.clone()));
                        }
                    }
                }
                rows.extend(eqs.into_values());
            }
            rows
        })
        .collect();
    let mut ech = Echelon::new();
    for r in rows.into_iter().flatten() {
        ech.insert(r);
    }
    ech.nullspace(pairs.len())
        .into_iter()
        .map(|v| {
            elementary
                .iter()
                .zip(&v)
                .filter(|(_, c)| !c.is_zero())
                .fold(BracketTable::zero(vars, n), |acc, (e, c)| acc.add(&e.scale(c)))
        })
        .collect()
}
