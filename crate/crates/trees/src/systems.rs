//! The concrete decoration systems.

use laurent_core::{lp, BiDegree, BigInt, DegreeMatrix, LaurentPoly};

use crate::convex::{convex_step_middle, ConvexSet};
use crate::{DecorationSystem, TreeError};

fn carrier<E: std::fmt::Display>(e: E) -> TreeError {
    TreeError::Carrier(e.to_string())
}

/// Polynomials not divisible by `s3`, admissible triples, `tau = mu`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolynomialSystem;

impl PolynomialSystem {
    fn deg(f: &LaurentPoly) -> Result<u32, TreeError> {
        f.degree().map(|d| d as u32).ok_or(TreeError::Carrier("zero polynomial".into()))
    }
}

impl DecorationSystem for PolynomialSystem {
    type Elem = LaurentPoly;

    fn name(&self) -> &'static str {
        "polynomial"
    }
    fn seed(&self) -> [LaurentPoly; 3] {
        [lp("s2"), lp("s2*(s1^2 - s2) - s3*s1"), lp("s1^2 - s2")]
    }
    fn tau(&self, x: &LaurentPoly) -> Result<LaurentPoly, TreeError> {
        x.mu_dual().map_err(carrier)
    }
    fn left_middle(&self, t: &[LaurentPoly; 3]) -> Result<LaurentPoly, TreeError> {
        let d1 = Self::deg(&t[0])?;
        Ok(&self.tau(&t[0])? * &t[1] - t[2].shift_s3(d1 as i32))
    }
    fn right_middle(&self, t: &[LaurentPoly; 3]) -> Result<LaurentPoly, TreeError> {
        let d3 = Self::deg(&t[2])?;
        Ok(&t[1] * &self.tau(&t[2])? - t[0].shift_s3(d3 as i32))
    }
    fn render(&self, x: &LaurentPoly) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &LaurentPoly) -> serde_json::Value {
        x.to_json()
    }
}

/// Bi-degree vectors `(d, q)` with `tau(d, q) = (d, 3d - q)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BivectorSystem;

impl DecorationSystem for BivectorSystem {
    type Elem = BiDegree;

    fn name(&self) -> &'static str {
        "bivector"
    }
    fn seed(&self) -> [BiDegree; 3] {
        [BiDegree::new(1, 2), BiDegree::new(3, 4), BiDegree::new(2, 2)]
    }
    fn tau(&self, x: &BiDegree) -> Result<BiDegree, TreeError> {
        Ok(x.dual())
    }
    fn left_middle(&self, t: &[BiDegree; 3]) -> Result<BiDegree, TreeError> {
        Ok(t[0].dual() + t[1])
    }
    fn right_middle(&self, t: &[BiDegree; 3]) -> Result<BiDegree, TreeError> {
        Ok(t[1] + t[2].dual())
    }
    fn render(&self, x: &BiDegree) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &BiDegree) -> serde_json::Value {
        serde_json::json!([x.d, x.q])
    }
}

/// Degree matrices with `tau(M) = MP`, `P` the column swap.
#[derive(Clone, Copy, Debug, Default)]
pub struct MatrixSystem;

impl DecorationSystem for MatrixSystem {
    type Elem = DegreeMatrix;

    fn name(&self) -> &'static str {
        "matrix"
    }
    fn seed(&self) -> [DegreeMatrix; 3] {
        BivectorSystem.seed().map(|b| b.matrix())
    }
    fn tau(&self, x: &DegreeMatrix) -> Result<DegreeMatrix, TreeError> {
        Ok(x.swap_columns())
    }
    fn left_middle(&self, t: &[DegreeMatrix; 3]) -> Result<DegreeMatrix, TreeError> {
        Ok(t[0].swap_columns() + t[1])
    }
    fn right_middle(&self, t: &[DegreeMatrix; 3]) -> Result<DegreeMatrix, TreeError> {
        Ok(t[1] + t[2].swap_columns())
    }
    fn render(&self, x: &DegreeMatrix) -> String {
        let m = x.0;
        format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
    fn to_json(&self, x: &DegreeMatrix) -> serde_json::Value {
        serde_json::json!(x.0)
    }
}

/// Deviations `2q - 3d` with `tau(x) = -x`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DeviationSystem;

impl DecorationSystem for DeviationSystem {
    type Elem = i64;

    fn name(&self) -> &'static str {
        "deviation"
    }
    fn seed(&self) -> [i64; 3] {
        [1, -1, -2]
    }
    fn tau(&self, x: &i64) -> Result<i64, TreeError> {
        Ok(-x)
    }
    fn left_middle(&self, t: &[i64; 3]) -> Result<i64, TreeError> {
        Ok(t[1] - t[0])
    }
    fn right_middle(&self, t: &[i64; 3]) -> Result<i64, TreeError> {
        Ok(t[1] - t[2])
    }
    fn render(&self, x: &i64) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &i64) -> serde_json::Value {
        serde_json::json!(x)
    }
}

/// Markov numbers, `tau = id`, `L(a,b,c) = (a, ab - c, b)`, `R(a,b,c) = (b, bc - a, c)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MarkovSystem;

impl DecorationSystem for MarkovSystem {
    type Elem = BigInt;

    fn name(&self) -> &'static str {
        "markov"
    }
    fn seed(&self) -> [BigInt; 3] {
        [3, 15, 6].map(BigInt::from)
    }
    fn tau(&self, x: &BigInt) -> Result<BigInt, TreeError> {
        Ok(x.clone())
    }
    fn left_middle(&self, t: &[BigInt; 3]) -> Result<BigInt, TreeError> {
        Ok(&t[0] * &t[1] - &t[2])
    }
    fn right_middle(&self, t: &[BigInt; 3]) -> Result<BigInt, TreeError> {
        Ok(&t[1] * &t[2] - &t[0])
    }
    fn render(&self, x: &BigInt) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &BigInt) -> serde_json::Value {
        serde_json::Value::String(x.to_string())
    }
}

/// Positive integers, `tau = id`, `L(a,b,c) = (a, a+b, b)`, `R(a,b,c) = (b, b+c, c)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct EuclidSystem;

impl DecorationSystem for EuclidSystem {
    type Elem = i64;

    fn name(&self) -> &'static str {
        "euclid"
    }
    fn seed(&self) -> [i64; 3] {
        [1, 3, 2]
    }
    fn tau(&self, x: &i64) -> Result<i64, TreeError> {
        Ok(*x)
    }
    fn left_middle(&self, t: &[i64; 3]) -> Result<i64, TreeError> {
        Ok(t[0] + t[1])
    }
    fn right_middle(&self, t: &[i64; 3]) -> Result<i64, TreeError> {
        Ok(t[1] + t[2])
    }
    fn render(&self, x: &i64) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &i64) -> serde_json::Value {
        serde_json::json!(x)
    }
}

/// Weighted convex polygons, `tau` the reflection across `a1 = a2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ConvexSystem;

impl DecorationSystem for ConvexSystem {
    type Elem = ConvexSet;

    fn name(&self) -> &'static str {
        "convex"
    }
    fn seed(&self) -> [ConvexSet; 3] {
        PolynomialSystem.seed().map(|f| ConvexSet::from_newton(&f).expect("seed polynomial is quasi-homogeneous"))
    }
    fn tau(&self, x: &ConvexSet) -> Result<ConvexSet, TreeError> {
        Ok(x.mu())
    }
    fn left_middle(&self, t: &[ConvexSet; 3]) -> Result<ConvexSet, TreeError> {
        convex_step_middle(markov_classical::Turn::L, t)
    }
    fn right_middle(&self, t: &[ConvexSet; 3]) -> Result<ConvexSet, TreeError> {
        convex_step_middle(markov_classical::Turn::R, t)
    }
    fn render(&self, x: &ConvexSet) -> String {
        x.to_string()
    }
    fn to_json(&self, x: &ConvexSet) -> serde_json::Value {
        let pts: Vec<serde_json::Value> =
            x.vertices.iter().map(|p| serde_json::json!([p[0].to_string(), p[1].to_string()])).collect();
        serde_json::json!({ "vertices": pts, "d": x.d.to_string() })
    }
}

