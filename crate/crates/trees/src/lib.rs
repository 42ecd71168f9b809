//! Planar binary trees whose vertices carry triples `(t1, t2, t3)` and whose domains
//! carry single labels.
//!
//! A decoration system supplies an involution `tau` and rules
//! `L(t) = (tau t1, L2(t), t2)` and `R(t) = (t2, R2(t), tau t3)`. The first vertex holds
//! the marked triple. Each vertex owns the domain above it, labelled by its middle entry.
//! The two outer domains carry the first and last entries of the marked triple.

mod convex;
mod export;
mod systems;

use std::fmt;

pub use convex::{
    convex_hull, convex_step, hausdorff, hausdorff_to_segment, min_distance_to, polygon_width, ConvexSet, Point,
};
pub use export::{polygons_csv, to_csv, to_dot, to_json};
pub use markov_classical::Turn;
pub use systems::{
    BivectorSystem, ConvexSystem, DeviationSystem, EuclidSystem, MarkovSystem, MatrixSystem, PolynomialSystem,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("{0}")]
    Carrier(String),
    #[error("weights do not add up: {d1} + {d3} != {d2}")]
    WeightMismatch { d1: String, d2: String, d3: String },
    #[error("edge labels must be positive, got l{0}|r{1}")]
    BadEdge(u32, u32),
}

pub trait DecorationSystem {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn name(&self) -> &'static str;
    fn seed(&self) -> [Self::Elem; 3];
    fn tau(&self, x: &Self::Elem) -> Result<Self::Elem, TreeError>;
    fn left_middle(&self, t: &[Self::Elem; 3]) -> Result<Self::Elem, TreeError>;
    fn right_middle(&self, t: &[Self::Elem; 3]) -> Result<Self::Elem, TreeError>;
    fn render(&self, x: &Self::Elem) -> String;
    fn to_json(&self, x: &Self::Elem) -> serde_json::Value {
        serde_json::Value::String(self.render(x))
    }

    fn step(&self, kind: Turn, t: &[Self::Elem; 3]) -> Result<[Self::Elem; 3], TreeError> {
        Ok(match kind {
            Turn::L => [self.tau(&t[0])?, self.left_middle(t)?, t[1].clone()],
            Turn::R => [t[1].clone(), self.right_middle(t)?, self.tau(&t[2])?],
        })
    }

    /// `tau^k(x)`.
    fn tau_pow(&self, x: &Self::Elem, k: u32) -> Result<Self::Elem, TreeError> {
        let mut out = x.clone();
        for _ in 0..k {
            out = self.tau(&out)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedVertex<E> {
    pub path: Vec<Turn>,
    /// 1 for the first vertex.
    pub depth: usize,
    pub triple: [E; 3],
    /// Labels `l_a | r_b` of the incoming edge.
    pub edge: (u32, u32),
    /// Indices into [`DecoratedTree::domains`] of the left, upper and right domains.
    pub domains: [usize; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct Domain<E> {
    pub label: E,
    /// Path of the vertex below the domain; `None` for the two outer domains.
    pub owner: Option<Vec<Turn>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedTree<E> {
    pub system: &'static str,
    pub vertices: Vec<DecoratedVertex<E>>,
    pub domains: Vec<Domain<E>>,
}

pub fn path_string(p: &[Turn]) -> String {
    p.iter().map(|t| t.as_char()).collect()
}

/// All vertices with depth `1..=depth`, level by level, children ordered L then R.
pub fn generate<S: DecorationSystem>(system: &S, depth: usize) -> Result<DecoratedTree<S::Elem>, TreeError> {
    let seed = system.seed();
    let mut domains = vec![
        Domain { label: seed[0].clone(), owner: None },
        Domain { label: seed[2].clone(), owner: None },
    ];
    let mut vertices: Vec<DecoratedVertex<S::Elem>> = Vec::new();
    if depth == 0 {
        return Ok(DecoratedTree { system: system.name(), vertices, domains });
    }
    domains.push(Domain { label: seed[1].clone(), owner: Some(vec![]) });
    vertices.push(DecoratedVertex { path: vec![], depth: 1, triple: seed, edge: (1, 1), domains: [0, 2, 1] });
    let mut level_start = 0;
    for d in 2..=depth {
        let level_end = vertices.len();
        for i in level_start..level_end {
            for kind in [Turn::L, Turn::R] {
                let parent = &vertices[i];
                let triple = system.step(kind, &parent.triple)?;
                let mut path = parent.path.clone();
                path.push(kind);
                let [c1, c2, c3] = parent.domains;
                let (a, b) = parent.edge;
                let new_domain = domains.len();
                let (edge, doms) = match kind {
                    Turn::L => ((a + 1, 1), [c1, new_domain, c2]),
                    Turn::R => ((1, b + 1), [c2, new_domain, c3]),
                };
                domains.push(Domain { label: triple[1].clone(), owner: Some(path.clone()) });
                vertices.push(DecoratedVertex { path, depth: d, triple, edge, domains: doms });
            }
        }
        level_start = level_end;
    }
    Ok(DecoratedTree { system: system.name(), vertices, domains })
}

/// `(tau^(a-1) t1, t2, tau^(b-1) t3)` for domain labels `t` and incoming edge `l_a | r_b`.
pub fn vertex_from_domains<S: DecorationSystem>(
    system: &S,
    labels: [&S::Elem; 3],
    edge: (u32, u32),
) -> Result<[S::Elem; 3], TreeError> {
    let (a, b) = edge;
    if a == 0 || b == 0 {
        return Err(TreeError::BadEdge(a, b));
    }
    Ok([system.tau_pow(labels[0], a - 1)?, labels[1].clone(), system.tau_pow(labels[2], b - 1)?])
}

/// Rebuilds every vertex triple from domain and edge labels and compares.
pub fn check_reconstruction<S: DecorationSystem>(system: &S, tree: &DecoratedTree<S::Elem>) -> Result<(), String> {
    for v in &tree.vertices {
        let labels = v.domains.map(|i| &tree.domains[i].label);
        let rebuilt = vertex_from_domains(system, labels, v.edge).map_err(|e| e.to_string())?;
        if rebuilt != v.triple {
            return Err(format!("vertex {} does not match its domain labels", path_string(&v.path)));
        }
    }
    Ok(())
}

/// Checks that `phi` sends the marked triple of `src` to that of `dst`, commutes with
/// `tau` on every entry, and sends each vertex triple of the `src` tree to the
/// corresponding triple of the `dst` tree up to `depth`.
pub fn morphism_check<S, D, F>(src: &S, dst: &D, phi: F, depth: usize) -> Result<(), String>
where
    S: DecorationSystem,
    D: DecorationSystem,
    F: Fn(&S::Elem) -> Result<D::Elem, TreeError>,
{
    let err = |e: TreeError| e.to_string();
    let a = generate(src, depth).map_err(err)?;
    let b = generate(dst, depth).map_err(err)?;
    for (va, vb) in a.vertices.iter().zip(&b.vertices) {
        for k in 0..3 {
            let image = phi(&va.triple[k]).map_err(err)?;
            if image != vb.triple[k] {
                return Err(format!(
                    "{} -> {}: vertex {} entry {}: {} maps to {}, expected {}",
                    src.name(),
                    dst.name(),
                    path_string(&va.path),
                    k + 1,
                    src.render(&va.triple[k]),
                    dst.render(&image),
                    dst.render(&vb.triple[k])
                ));
            }
            let lhs = phi(&src.tau(&va.triple[k]).map_err(err)?).map_err(err)?;
            if lhs != dst.tau(&image).map_err(err)? {
                return Err(format!("{} -> {}: map does not commute with tau at {}", src.name(), dst.name(), src.render(&va.triple[k])));
            }
        }
    }
    Ok(())
}
