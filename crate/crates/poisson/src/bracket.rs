//! Bracket tables, Nambu determinants and the Jacobi and fundamental identities.

use crate::form::DiffForm;
use crate::poly::{q, MultiPoly, Q, Vars};
use crate::PoissonError;

/// Determinant of a square matrix of polynomials by expansion over column subsets.
pub fn det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n));
    let vars = m[0][0].vars().clone();
    let mut dp: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    dp[0] = Some(MultiPoly::constant(&vars, q(1)));
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].clone() else { continue };
        if cur.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || m[row][col].is_zero() {
                continue;
            }
            // sign from the number of already-used columns to the right of `col`
            let above = (mask >> (col + 1)).count_ones();
            let mut t = &cur * &m[row][col];
            if above % 2 == 1 {
                t = -t;
            }
            let slot = &mut dp[mask | (1 << col)];
            *slot = Some(match slot.take() {
                Some(s) => s + t,
                None => t,
            });
        }
    }
    dp[(1 << n) - 1].clone().unwrap_or_else(|| MultiPoly::zero(&vars))
}

/// The Nambu bracket `det(d f_i / d x_j)` over the listed variables.
pub fn nambu_canonical(fs: &[MultiPoly], vars: &[usize]) -> Result<MultiPoly, PoissonError> {
    if fs.len() != vars.len() || fs.is_empty() {
        return Err(PoissonError::Shape(format!("{} functions for {} variables", fs.len(), vars.len())));
    }
    let m: Vec<Vec<MultiPoly>> = fs.iter().map(|f| vars.iter().map(|&j| f.derivative(j)).collect()).collect();
    Ok(det(&m))
}

/// Canonical Nambu bracket on all variables with some arguments fixed:
/// `{g_1, ..., g_k}_{fixed} = det(d g_1, ..., d g_k, d fixed_1, ...)`.
pub fn subordinate(args: &[MultiPoly], fixed: &[MultiPoly]) -> MultiPoly {
    let all: Vec<MultiPoly> = args.iter().chain(fixed).cloned().collect();
    let idx: Vec<usize> = (0..all[0].vars().len()).collect();
    nambu_canonical(&all, &idx).expect("argument count matches dimension")
}

/// `{f, g}` defined by `Omega ^ df ^ dg = {f, g} dV` for an `(n-2)`-form `Omega`.
pub fn bracket_from_form(omega: &DiffForm, f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, PoissonError> {
    let n = omega.vars().len();
    if omega.degree() + 2 != n {
        return Err(PoissonError::Shape(format!("form of degree {} on {n} variables", omega.degree())));
    }
    Ok(omega.wedge(&DiffForm::differential(f)).wedge(&DiffForm::differential(g)).top_coeff())
}

/// A skew-symmetric table `{x_i, x_j}` of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    vars: Vars,
    /// Number of coordinates the table lives on (leading variables); later variables are parameters.
    n: usize,
    entries: Vec<Vec<MultiPoly>>,
}

impl BracketTable {
    pub fn zero(vars: &Vars, n: usize) -> Self {
        BracketTable { vars: vars.clone(), n, entries: vec![vec![MultiPoly::zero(vars); n]; n] }
    }

    /// Builds the table from the upper triangle `f(i, j)`, `i < j`.
    pub fn from_upper(vars: &Vars, n: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Self {
        let mut t = BracketTable::zero(vars, n);
        for i in 0..n {
            for j in i + 1..n {
                t.set(i, j, f(i, j));
            }
        }
        t
    }

    pub fn from_form(omega: &DiffForm) -> Result<Self, PoissonError> {
        let vars = omega.vars().clone();
        let xs = vars.all();
        let n = vars.len();
        let mut t = BracketTable::zero(&vars, n);
        for i in 0..n {
            for j in i + 1..n {
                t.set(i, j, bracket_from_form(omega, &xs[i], &xs[j])?);
            }
        }
        Ok(t)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        self.entries[j][i] = -&p;
        self.entries[i][j] = p;
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut t = self.clone();
        for row in &mut t.entries {
            for e in row {
                *e = e.scale(c);
            }
        }
        t
    }

    pub fn add(&self, o: &BracketTable) -> Self {
        let mut t = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                t.entries[i][j] = &self.entries[i][j] + &o.entries[i][j];
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// Extends the table to arbitrary polynomials by the Leibniz rule.
    pub fn bracket(&self, f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
        let df: Vec<MultiPoly> = (0..self.n).map(|i| f.derivative(i)).collect();
        let dg: Vec<MultiPoly> = (0..self.n).map(|i| g.derivative(i)).collect();
        let mut out = MultiPoly::zero(&self.vars);
        for i in 0..self.n {
            if df[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if i == j || dg[j].is_zero() || self.entries[i][j].is_zero() {
                    continue;
                }
                out = out + &(&df[i] * &dg[j]) * &self.entries[i][j];
            }
        }
        out
    }

    /// Jacobiator on coordinate triples; returns the first failing triple and its residual.
    pub fn jacobi_check(&self) -> Result<(), (usize, usize, usize, MultiPoly)> {
        let xs: Vec<MultiPoly> = (0..self.n).map(|i| self.vars.var(i)).collect();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    let r = self.bracket(&xs[i], self.get(j, k))
                        + self.bracket(&xs[j], self.get(k, i))
                        + self.bracket(&xs[k], self.get(i, j));
                    if !r.is_zero() {
                        return Err((i, j, k, r));
                    }
                }
            }
        }
        Ok(())
    }

    /// `{x_i, f} = 0` for every coordinate.
    pub fn is_casimir(&self, f: &MultiPoly) -> bool {
        (0..self.n).all(|i| self.bracket(&self.vars.var(i), f).is_zero())
    }

    /// Skew coefficient matrix `k` with `{x_i, x_j} = k_ij x_i x_j`, if the table is log-canonical.
    pub fn log_canonical_matrix(&self) -> Option<Vec<Vec<MultiPoly>>> {
        let coeff_vars: Vec<usize> = (0..self.n).collect();
        let mut k = vec![vec![MultiPoly::zero(&self.vars); self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i == j {
                    continue;
                }
                let parts = self.entries[i][j].split_by(&coeff_vars);
                let mut want = vec![0u8; self.n];
                want[i] += 1;
                want[j] += 1;
                for (key, c) in parts {
                    if key == want {
                        k[i][j] = c;
                    } else if !c.is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(k)
    }

    /// Evaluates every entry at a point, giving a numeric skew matrix.
    pub fn evaluate(&self, point: &[Q]) -> Vec<Vec<Q>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.evaluate(point)).collect()).collect()
    }

    /// Rank of the evaluated table.
    pub fn rank_at(&self, point: &[Q]) -> usize {
        crate::linalg::rank(self.evaluate(point))
    }

    /// Transport along a polynomial automorphism: `T'(x_i, x_j) = {psi_i, psi_j} o phi`, `psi = phi^-1`.
    pub fn transform(&self, phi: &crate::map::PolyMap, psi: &crate::map::PolyMap) -> Self {
        BracketTable::from_upper(&self.vars, self.n, |i, j| {
            self.bracket(&psi.comps()[i], &psi.comps()[j]).substitute(phi.comps())
        })
    }

    /// Whether `phi` maps this table to `sign` times itself: `{phi_i, phi_j} = sign * T_ij o phi`.
    pub fn is_preserved_by(&self, phi: &crate::map::PolyMap, sign: i64) -> bool {
        self.transported_residual(phi, sign, self).is_none()
    }

    /// First `(i, j)` where `{phi_i, phi_j}_self != sign * other_ij o phi`.
    pub fn transported_residual(&self, phi: &crate::map::PolyMap, sign: i64, other: &BracketTable) -> Option<(usize, usize, MultiPoly)> {
        let c = phi.comps();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let lhs = self.bracket(&c[i], &c[j]);
                let rhs = other.get(i, j).substitute(c).scale(&q(sign));
                let r = lhs - rhs;
                if !r.is_zero() {
                    return Some((i, j, r));
                }
            }
        }
        None
    }
}

/// Fundamental identity for an `n`-ary bracket on the given argument tuples:
/// `{f_1..f_{n-1}, {g_1..g_n}} = sum_k {g_1.., {f_1..f_{n-1}, g_k}, ..g_n}`.
pub fn fundamental_identity(bracket: &dyn Fn(&[MultiPoly]) -> MultiPoly, fs: &[MultiPoly], gs: &[MultiPoly]) -> MultiPoly {
    assert_eq!(fs.len() + 1, gs.len());
    let with = |g: &MultiPoly| {
        let mut args = fs.to_vec();
        args.push(g.clone());
        bracket(&args)
    };
    let mut lhs = with(&bracket(gs));
    for k in 0..gs.len() {
        let mut args = gs.to_vec();
        args[k] = with(&gs[k]);
        lhs = lhs - bracket(&args);
    }
    lhs
}
