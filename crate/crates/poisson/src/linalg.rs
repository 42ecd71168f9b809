//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::poly::Q;

pub type SparseRow = Vec<(usize, Q)>;

/// Incremental row echelon form; rows are kept with a unit pivot and no entries in earlier pivot columns.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
    order: Vec<usize>,
}

fn axpy(row: &SparseRow, c: &Q, other: &SparseRow) -> SparseRow {
    // row - c * other
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < other.len() {
        let ka = row.get(a).map(|x| x.0).unwrap_or(usize::MAX);
        let kb = other.get(b).map(|x| x.0).unwrap_or(usize::MAX);
        if ka < kb {
            out.push(row[a].clone());
            a += 1;
        } else if kb < ka {
            out.push((kb, -(c * &other[b].1)));
            b += 1;
        } else {
            let v = &row[a].1 - c * &other[b].1;
            if !v.is_zero() {
                out.push((ka, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut i = 0;
        while i < row.len() {
            let col = row[i].0;
            if let Some(p) = self.pivots.get(&col) {
                let c = row[i].1.clone();
                row = axpy(&row, &c, p);
            } else {
                i += 1;
            }
        }
        row
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = row;
        row.sort_by_key(|x| x.0);
        row.retain(|x| !x.1.is_zero());
        let row = self.reduce(row);
        let Some((col, lead)) = row.first().cloned() else { return false };
        let inv = Q::one() / lead;
        let row: SparseRow = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        self.pivots.insert(col, row);
        self.order.push(col);
        true
    }

    /// Fully reduces every pivot row against later pivots.
    fn reduced(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for &col in self.order.iter().rev() {
            let mut row = self.pivots[&col].clone();
            let mut i = 1;
            while i < row.len() {
                let k = row[i].0;
                if let Some(p) = done.get(&k) {
                    let c = row[i].1.clone();
                    row = axpy(&row, &c, p);
                    // the pivot entry itself is untouched since p has no entry at `col`
                } else {
                    i += 1;
                }
            }
            done.insert(col, row);
        }
        done
    }

    /// Basis of the kernel in `ncols` unknowns, one vector per free column (value 1 there).
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<Q>> {
        let red = self.reduced();
        (0..ncols)
            .filter(|c| !red.contains_key(c))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&free| {
                let mut v = vec![Q::zero(); ncols];
                v[free] = Q::one();
                for (p, row) in &red {
                    if let Ok(ix) = row.binary_search_by_key(&free, |x| x.0) {
                        v[*p] = -row[ix].1.clone();
                    }
                }
                v
            })
            .collect()
    }

    pub fn free_columns(&self, ncols: usize) -> Vec<usize> {
        (0..ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }
}

/// Rank of a dense rational matrix.
pub fn rank(m: Vec<Vec<Q>>) -> usize {
    let mut e = Echelon::new();
    for r in m {
        e.insert(r.into_iter().enumerate().collect());
    }
    e.rank()
}
