//! Exact arithmetic in `Z[s1, s2, s3, s3^-1]`: the star involution `f -> f(s2/s3, s1/s3, 1/s3)`,
//! evaluation at `s0 = (3,3,1)`, bi-degrees, mu-duality and Newton polygons.

mod degree;
mod json;
mod newton;
mod parse;
mod poly;

pub use degree::{BiDegree, DegreeMatrix};
pub use newton::{convex_hull_i64, NewtonPolygon};
pub use parse::lp;
pub use poly::{arith, ArithKind, Exponent, LaurentPoly};

pub use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("not a polynomial: negative power of s3")]
    NotPolynomial,
    #[error("polynomial is divisible by s3")]
    DivisibleByS3,
    #[error("not quasi-homogeneous: quasi-degrees {0:?}")]
    NotQuasiHomogeneous(Vec<i64>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}

/// Right-hand side of the star-Markov equation, `(3 s1 s2 - s1^3) / s3`.
pub fn markov_rhs() -> LaurentPoly {
    lp("3*s1*s2*s3^-1 - s1^3*s3^-1")
}
