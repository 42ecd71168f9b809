//! Weighted convex polygons with exact rational vertices.

use std::fmt;

use laurent_core::LaurentPoly;
use markov_classical::Turn;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::TreeError;

pub type Point = [BigRational; 2];

/// A convex polygon (possibly a segment or a point) with a positive weight `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexSet {
    /// Extreme points, counterclockwise, starting from the lexicographically smallest.
    pub vertices: Vec<Point>,
    pub d: BigRational,
}

fn cross(o: &Point, a: &Point, b: &Point) -> BigRational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Monotone chain hull; counterclockwise, collinear points dropped.
pub fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl ConvexSet {
    pub fn new(points: Vec<Point>, d: BigRational) -> Self {
        ConvexSet { vertices: convex_hull(points), d }
    }

    /// Projected normalized Newton polygon `(a1/d, a2/d)` with weight `d`.
    pub fn from_newton(f: &LaurentPoly) -> Result<Self, TreeError> {
        let np = f.newton_polygon().map_err(|e| TreeError::Carrier(e.to_string()))?;
        Ok(ConvexSet::new(np.projected, BigRational::from_integer(BigInt::from(np.d))))
    }

    /// Reflection across the diagonal `a1 = a2`.
    pub fn mu(&self) -> Self {
        ConvexSet::new(self.vertices.iter().map(|p| [p[1].clone(), p[0].clone()]).collect(), self.d.clone())
    }

    pub fn scaled(&self, k: &BigRational) -> Vec<Point> {
        self.vertices.iter().map(|p| [&p[0] * k, &p[1] * k]).collect()
    }

    /// Exact membership test for a point (boundary included).
    pub fn contains(&self, p: &Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            0 => false,
            1 => &v[0] == p,
            2 => {
                cross(&v[0], &v[1], p).is_zero()
                    && (0..2).all(|k| {
                        let (lo, hi) = if v[0][k] <= v[1][k] { (&v[0][k], &v[1][k]) } else { (&v[1][k], &v[0][k]) };
                        lo <= &p[k] && &p[k] <= hi
                    })
            }
            n => (0..n).all(|i| !cross(&v[i], &v[(i + 1) % n], p).is_negative()),
        }
    }

    /// Every vertex of `other` lies in `self`.
    pub fn contains_set(&self, other: &ConvexSet) -> bool {
        other.vertices.iter().all(|p| self.contains(p))
    }

    pub fn to_f64(&self) -> Vec<[f64; 2]> {
        self.vertices.iter().map(|p| [p[0].to_f64().unwrap_or(f64::NAN), p[1].to_f64().unwrap_or(f64::NAN)]).collect()
    }
}

impl fmt::Display for ConvexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv[")?;
        for (i, p) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {})", p[0], p[1])?;
        }
        write!(f, "] d={}", self.d)
    }
}

fn minkowski(a: &[Point], b: &[Point]) -> Vec<Point> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            out.push([&p[0] + &q[0], &p[1] + &q[1]]);
        }
    }
    out
}

/// Middle entry of the L or R image.
pub(crate) fn convex_step_middle(kind: Turn, t: &[ConvexSet; 3]) -> Result<ConvexSet, TreeError> {
    let [a1, a2, a3] = t;
    if a2.d != &a1.d + &a3.d {
        return Err(TreeError::WeightMismatch { d1: a1.d.to_string(), d2: a2.d.to_string(), d3: a3.d.to_string() });
    }
    let (first, second, other) = match kind {
        // (d1/(d1+d2)) mu(A1) + (d2/(d1+d2)) A2, together with (d3/(d1+d2)) A3
        Turn::L => ((a1.mu(), &a1.d), (a2.clone(), &a2.d), (a3, &a3.d)),
        // (d2/(d2+d3)) A2 + (d3/(d2+d3)) mu(A3), together with (d1/(d2+d3)) A1
        Turn::R => ((a2.clone(), &a2.d), (a3.mu(), &a3.d), (a1, &a1.d)),
    };
    let w = first.1 + second.1;
    let mut pts = minkowski(&first.0.scaled(&(first.1 / &w)), &second.0.scaled(&(second.1 / &w)));
    pts.extend(other.0.scaled(&(other.1 / &w)));
    Ok(ConvexSet::new(pts, w))
}

/// `L` or `R` applied to a triple of weighted convex sets.
pub fn convex_step(kind: Turn, t: &[ConvexSet; 3]) -> Result<[ConvexSet; 3], TreeError> {
    let middle = convex_step_middle(kind, t)?;
    Ok(match kind {
        Turn::L => [t[0].mu(), middle, t[1].clone()],
        Turn::R => [t[1].clone(), middle, t[2].mu()],
    })
}

fn dist_point_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0) };
    let (x, y) = (a[0] + t * dx - p[0], a[1] + t * dy - p[1]);
    (x * x + y * y).sqrt()
}

/// Euclidean distance from `p` to a convex polygon given counterclockwise; 0 inside.
pub fn min_distance_to(p: [f64; 2], poly: &[[f64; 2]]) -> f64 {
    match poly.len() {
        0 => f64::INFINITY,
        1 => dist_point_segment(p, poly[0], poly[0]),
        2 => dist_point_segment(p, poly[0], poly[1]),
        n => {
            let inside = (0..n).all(|i| {
                let (a, b) = (poly[i], poly[(i + 1) % n]);
                (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) >= -1e-15
            });
            if inside {
                return 0.0;
            }
            (0..n).map(|i| dist_point_segment(p, poly[i], poly[(i + 1) % n])).fold(f64::INFINITY, f64::min)
        }
    }
}

/// Hausdorff distance between two convex polygons. For convex sets the supremum is
/// attained at a vertex, so only vertices are probed.
pub fn hausdorff(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
    let one = a.iter().map(|&p| min_distance_to(p, b)).fold(0.0, f64::max);
    let two = b.iter().map(|&p| min_distance_to(p, a)).fold(0.0, f64::max);
    one.max(two)
}

/// Hausdorff distance from a polygon to the segment `[p, q]`.
pub fn hausdorff_to_segment(poly: &[[f64; 2]], p: [f64; 2], q: [f64; 2]) -> f64 {
    hausdorff(poly, &[p, q])
}

/// Extent of the polygon perpendicular to the diagonal `a1 = a2`.
pub fn polygon_width(poly: &[[f64; 2]]) -> f64 {
    let proj = poly.iter().map(|p| (p[0] - p[1]) / std::f64::consts::SQRT_2);
    let (lo, hi) = proj.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    if poly.is_empty() {
        0.0
    } else {
        hi - lo
    }
}
