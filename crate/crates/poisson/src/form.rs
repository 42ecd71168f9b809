//! Exterior differential forms with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{MultiPoly, Vars};

/// A homogeneous `k`-form: sorted index sets `i_1 < ... < i_k` mapped to coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffForm {
    vars: Vars,
    degree: usize,
    terms: BTreeMap<Vec<usize>, MultiPoly>,
}

/// Sign of the permutation sorting `idx`, or `None` when an index repeats.
fn sort_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl DiffForm {
    pub fn zero(vars: &Vars, degree: usize) -> Self {
        DiffForm { vars: vars.clone(), degree, terms: BTreeMap::new() }
    }

    /// `coeff * dx_{idx[0]} ^ ... ^ dx_{idx[k-1]}` in any index order.
    pub fn basic(coeff: MultiPoly, idx: &[usize]) -> Self {
        let mut f = DiffForm::zero(coeff.vars(), idx.len());
        f.add_basic(coeff, idx);
        f
    }

    pub fn add_basic(&mut self, coeff: MultiPoly, idx: &[usize]) {
        assert_eq!(idx.len(), self.degree);
        let mut sorted = idx.to_vec();
        let Some(sign) = sort_sign(&mut sorted) else { return };
        let c = if sign < 0 { -coeff } else { coeff };
        let entry = self.terms.entry(sorted).or_insert_with(|| MultiPoly::zero(&self.vars));
        *entry = entry.clone() + c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    /// The function itself as a 0-form.
    pub fn function(f: &MultiPoly) -> Self {
        DiffForm::basic(f.clone(), &[])
    }

    pub fn differential(f: &MultiPoly) -> Self {
        let mut out = DiffForm::zero(f.vars(), 1);
        for i in 0..f.vars().len() {
            out.add_basic(f.derivative(i), &[i]);
        }
        out
    }

    /// `dx_1 ^ ... ^ dx_n`.
    pub fn volume(vars: &Vars) -> Self {
        let idx: Vec<usize> = (0..vars.len()).collect();
        DiffForm::basic(MultiPoly::constant(vars, crate::poly::q(1)), &idx)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> MultiPoly {
        let mut sorted = idx.to_vec();
        match sort_sign(&mut sorted) {
            None => MultiPoly::zero(&self.vars),
            Some(s) => {
                let c = self.terms.get(&sorted).cloned().unwrap_or_else(|| MultiPoly::zero(&self.vars));
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Coefficient of `dx_1 ^ ... ^ dx_n` for a top-degree form.
    pub fn top_coeff(&self) -> MultiPoly {
        let idx: Vec<usize> = (0..self.vars.len()).collect();
        self.coeff(&idx)
    }

    pub fn add(&self, o: &DiffForm) -> DiffForm {
        assert_eq!(self.degree, o.degree);
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_basic(v.clone(), k);
        }
        out
    }

    pub fn scale(&self, f: &MultiPoly) -> DiffForm {
        let mut out = DiffForm::zero(&self.vars, self.degree);
        for (k, v) in &self.terms {
            out.add_basic(v * f, k);
        }
        out
    }

    pub fn neg(&self) -> DiffForm {
        self.scale(&MultiPoly::constant(&self.vars, crate::poly::q(-1)))
    }

    pub fn wedge(&self, o: &DiffForm) -> DiffForm {
        let mut out = DiffForm::zero(&self.vars, self.degree + o.degree);
        if out.degree > self.vars.len() {
            return out;
        }
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let idx: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                out.add_basic(x * y, &idx);
            }
        }
        out
    }

    /// Pullback along a polynomial map given by the images of the coordinates.
    pub fn pullback(&self, images: &[MultiPoly]) -> DiffForm {
        let target = images[0].vars().clone();
        let diffs: Vec<DiffForm> = images.iter().map(DiffForm::differential).collect();
        let mut out = DiffForm::zero(&target, self.degree);
        for (idx, c) in &self.terms {
            let mut w = DiffForm::function(&c.substitute(images));
            for &i in idx {
                w = w.wedge(&diffs[i]);
            }
            out = out.add(&w);
        }
        out
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let d: Vec<String> = idx.iter().map(|&i| format!("d{}", names[i])).collect();
                format!("({c}) {}", d.join("^"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffForm({self})")
    }
}
