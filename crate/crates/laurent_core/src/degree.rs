use std::collections::BTreeSet;
use std::fmt;

use crate::poly::{Exponent, LaurentPoly};
use crate::CoreError;

/// Homogeneous degree `d` (weights 1,1,1) and quasi-homogeneous degree `q` (weights 1,2,3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiDegree {
    pub d: i64,
    pub q: i64,
}

impl BiDegree {
    pub const fn new(d: i64, q: i64) -> Self {
        BiDegree { d, q }
    }

    /// Bi-degree of the mu-dual: `(d, 3d - q)`.
    pub fn dual(self) -> Self {
        BiDegree::new(self.d, 3 * self.d - self.q)
    }

    /// `2q - 3d`.
    pub fn deviation(self) -> i64 {
        2 * self.q - 3 * self.d
    }

    /// Degree matrix `[[d, d], [q, 3d - q]]`.
    pub fn matrix(self) -> DegreeMatrix {
        DegreeMatrix([[self.d, self.d], [self.q, 3 * self.d - self.q]])
    }
}

impl std::ops::Add for BiDegree {
    type Output = BiDegree;
    fn add(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.d + o.d, self.q + o.q)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.q)
    }
}

/// 2x2 integer matrix attached to a bi-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeMatrix(pub [[i64; 2]; 2]);

impl DegreeMatrix {
    /// Right multiplication by the column swap `P = [[0,1],[1,0]]`.
    pub fn swap_columns(self) -> Self {
        let m = self.0;
        DegreeMatrix([[m[0][1], m[0][0]], [m[1][1], m[1][0]]])
    }

    /// The entry difference `a21 - a22`, which equals `2q - 3d`.
    pub fn deviation(self) -> i64 {
        self.0[1][0] - self.0[1][1]
    }
}

impl std::ops::Add for DegreeMatrix {
    type Output = DegreeMatrix;
    fn add(self, o: DegreeMatrix) -> DegreeMatrix {
        let (a, b) = (self.0, o.0);
        DegreeMatrix([[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]])
    }
}

impl LaurentPoly {
    /// Bi-degree of a quasi-homogeneous polynomial.
    pub fn bidegree(&self) -> Result<BiDegree, CoreError> {
        if self.is_zero() {
            return Err(CoreError::ZeroPolynomial);
        }
        if !self.is_polynomial() {
            return Err(CoreError::NotPolynomial);
        }
        let qs: BTreeSet<i64> = self.terms().map(|(e, _)| e.quasi_degree()).collect();
        if qs.len() != 1 {
            return Err(CoreError::NotQuasiHomogeneous(qs.into_iter().collect()));
        }
        let d = self.terms().map(|(e, _)| e.degree()).max().unwrap();
        Ok(BiDegree::new(d, *qs.iter().next().unwrap()))
    }

    /// Homogeneous degree `max(a1+a2+a3)` of a polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms().map(|(e, _)| e.degree()).max()
    }

    /// `s3^d * f*`, the polynomial dual of a polynomial not divisible by `s3`.
    pub fn mu_dual(&self) -> Result<LaurentPoly, CoreError> {
        if self.is_zero() {
            return Err(CoreError::ZeroPolynomial);
        }
        if !self.is_polynomial() {
            return Err(CoreError::NotPolynomial);
        }
        if self.s3_valuation() != Some(0) {
            return Err(CoreError::DivisibleByS3);
        }
        let d = self.degree().unwrap();
        Ok(LaurentPoly::from_terms(self.terms().map(|(e, c)| {
            (Exponent::new(e.a2, e.a1, (d - e.degree()) as i32), c.clone())
        })))
    }

    /// `2q - 3d`.
    pub fn deviation(&self) -> Result<i64, CoreError> {
        Ok(self.bidegree()?.deviation())
    }

    pub fn degree_matrix(&self) -> Result<DegreeMatrix, CoreError> {
        Ok(self.bidegree()?.matrix())
    }
}
