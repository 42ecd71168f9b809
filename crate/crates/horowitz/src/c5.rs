//! The Viète involutions on `C^5` and the linear case of the classification there.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::general::Claim;
use crate::xpoly::XPoly;

const N: usize = 5;

fn y(i: usize) -> XPoly {
    XPoly::var(N, i - 1)
}

/// `J = y1 y2 y3 − y4 y5`, `J1 = y1+y2+y3−y4`, `J2 = y1+y2+y3−y5`.
pub fn invariants() -> [XPoly; 3] {
    let s = y(1).add(&y(2)).add(&y(3));
    [XPoly::product(N, [&y(1), &y(2), &y(3)]).sub(&y(4).mul(&y(5))), s.sub(&y(4)), s.sub(&y(5))]
}

/// `v_i` for `i = 1, 2, 3`.
pub fn viete(i: usize) -> Vec<XPoly> {
    let others: Vec<usize> = (1..=3).filter(|&k| k != i).collect();
    let pq = y(others[0]).mul(&y(others[1]));
    let mut im: Vec<XPoly> = (1..=5).map(y).collect();
    im[i - 1] = y(i).add(&pq).sub(&y(4)).sub(&y(5));
    im[3] = pq.sub(&y(5));
    im[4] = pq.sub(&y(4));
    im
}

/// `ν: (y1..y5) ↦ (y1, y2, y3, y5, y4)`.
pub fn nu() -> Vec<XPoly> {
    vec![y(1), y(2), y(3), y(5), y(4)]
}

fn compose(a: &[XPoly], b: &[XPoly]) -> Vec<XPoly> {
    b.iter().map(|f| f.substitute(a)).collect()
}

pub fn claims() -> Vec<Claim> {
    let inv = invariants();
    let ident: Vec<XPoly> = (1..=5).map(y).collect();
    let mut out = Vec::new();
    for i in 1..=3 {
        let v = viete(i);
        for (name, f) in ["J", "J1", "J2"].iter().zip(&inv) {
            out.push(Claim { name: format!("C5 v{i} preserves {name}"), pass: f.substitute(&v) == *f });
        }
        out.push(Claim { name: format!("C5 v{i} is an involution"), pass: compose(&v, &v) == ident });
        out.push(Claim { name: format!("C5 v{i} commutes with nu"), pass: compose(&v, &nu()) == compose(&nu(), &v) });
    }
    let linear = linear_solutions();
    out.push(Claim { name: "C5 linear maps preserving J, J1, J2 on the sample grid are the coordinate permutations".into(), pass: linear == 6 && linear_identity_only() });
    out
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A linear candidate `P_{π(i)} = b_i y_i + a_i` with `P4, P5` forced by `J1, J2`.
struct Linear {
    perm: [usize; 3],
    b: [BigRational; 3],
    a: [BigRational; 3],
}

impl Linear {
    fn eval(&self, pt: &[BigRational]) -> [BigRational; 5] {
        let mut p: [BigRational; 3] = Default::default();
        for i in 0..3 {
            p[self.perm[i]] = &self.b[i] * &pt[i] + &self.a[i];
        }
        let shift = &p[0] + &p[1] + &p[2] - &pt[0] - &pt[1] - &pt[2];
        [p[0].clone(), p[1].clone(), p[2].clone(), &pt[3] + &shift, &pt[4] + &shift]
    }

    /// `J∘ψ = J` decided on a 4^5 grid, which is exact since both sides have degree at most 3 in each variable.
    fn preserves_j(&self) -> bool {
        let vals: Vec<BigRational> = (0..4).map(|k| rat(k, 1)).collect();
        let j = |v: &[BigRational]| &v[0] * &v[1] * &v[2] - &v[3] * &v[4];
        (0..4usize.pow(5)).all(|mut code| {
            let pt: Vec<BigRational> = (0..5)
                .map(|_| {
                    let v = vals[code % 4].clone();
                    code /= 4;
                    v
                })
                .collect();
            j(&self.eval(&pt)) == j(&pt)
        })
    }
}

fn grid() -> Vec<Linear> {
    let bs = [rat(1, 1), rat(-1, 1), rat(2, 1), rat(-2, 1), rat(1, 2), rat(-1, 2)];
    let as_ = [rat(-1, 1), rat(0, 1), rat(1, 1)];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for perm in perms {
        for b1 in &bs {
            for b2 in &bs {
                let b3 = BigRational::one() / (b1 * b2);
                for a1 in &as_ {
                    for a2 in &as_ {
                        for a3 in &as_ {
                            out.push(Linear { perm, b: [b1.clone(), b2.clone(), b3.clone()], a: [a1.clone(), a2.clone(), a3.clone()] });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Number of grid candidates preserving `J`.
pub fn linear_solutions() -> usize {
    grid().iter().filter(|l| l.preserves_j()).count()
}

fn linear_identity_only() -> bool {
    grid().iter().filter(|l| l.preserves_j()).all(|l| l.b.iter().all(One::is_one) && l.a.iter().all(Zero::is_zero))
}
