//! Newton polygons of quasi-homogeneous polynomials.
//!
//! The support of a quasi-homogeneous polynomial lies in the plane `a1 + 2a2 + 3a3 = q`,
//! which projects injectively to the `(a1, a2)` plane, so the hull is computed in 2D.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::{Exponent, LaurentPoly};
use crate::CoreError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Extreme points of the support, counterclockwise in the `(a1, a2)` projection.
    pub vertices: Vec<Exponent>,
    /// `(a1/d, a2/d)` for each vertex.
    pub projected: Vec<[BigRational; 2]>,
    pub d: i64,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone chain hull of integer points; counterclockwise, collinear points dropped.
pub fn convex_hull_i64(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl LaurentPoly {
    pub fn newton_polygon(&self) -> Result<NewtonPolygon, CoreError> {
        let bd = self.bidegree()?;
        let pts: Vec<(i64, i64)> = self.terms().map(|(e, _)| (e.a1 as i64, e.a2 as i64)).collect();
        let hull = convex_hull_i64(pts);
        let vertices: Vec<Exponent> = hull
            .iter()
            .map(|&(a1, a2)| Exponent::new(a1 as u32, a2 as u32, ((bd.q - a1 - 2 * a2) / 3) as i32))
            .collect();
        let d = BigInt::from(bd.d);
        let projected = hull
            .iter()
            .map(|&(a1, a2)| {
                [BigRational::new(a1.into(), d.clone()), BigRational::new(a2.into(), d.clone())]
            })
            .collect();
        Ok(NewtonPolygon { vertices, projected, d: bd.d })
    }
}

impl NewtonPolygon {
    /// Vertex set as a sorted list, for order-independent comparison.
    pub fn vertex_set(&self) -> Vec<Exponent> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }
}
