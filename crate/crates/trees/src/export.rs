//! DOT, JSON and CSV renderings of decorated trees.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::{path_string, ConvexSet, DecoratedTree, DecorationSystem};

fn node_id(path: &str) -> String {
    if path.is_empty() {
        "v".to_string()
    } else {
        format!("v_{path}")
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: one node per vertex labelled by its triple, edges labelled
/// `l_a|r_b`, and the domain labels collected in a separate cluster.
pub fn to_dot<S: DecorationSystem>(system: &S, tree: &DecoratedTree<S::Elem>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", tree.system).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for v in &tree.vertices {
        let p = path_string(&v.path);
        let label = v.triple.iter().map(|x| system.render(x)).collect::<Vec<_>>().join(", ");
        writeln!(out, "  {} [label=\"({})\"];", node_id(&p), escape(&label)).unwrap();
    }
    for v in tree.vertices.iter().skip(1) {
        let p = path_string(&v.path);
        let parent = node_id(&p[..p.len() - 1]);
        writeln!(out, "  {} -> {} [label=\"l{}|r{}\"];", parent, node_id(&p), v.edge.0, v.edge.1).unwrap();
    }
    writeln!(out, "  subgraph cluster_domains {{").unwrap();
    writeln!(out, "    label=\"domains\";").unwrap();
    for (i, d) in tree.domains.iter().enumerate() {
        let owner = d.owner.as_ref().map(|p| path_string(p)).unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "    D{} [shape=plaintext, label=\"D{} [{}]: {}\"];",
            i,
            i,
            owner,
            escape(&system.render(&d.label))
        )
        .unwrap();
    }
    writeln!(out, "  }}").unwrap();
    writeln!(out, "}}").unwrap();
    out
}

pub fn to_json<S: DecorationSystem>(system: &S, tree: &DecoratedTree<S::Elem>) -> Value {
    let vertices: Vec<Value> = tree
        .vertices
        .iter()
        .map(|v| {
            json!({
                "path": path_string(&v.path),
                "depth": v.depth,
                "edge": [v.edge.0, v.edge.1],
                "triple": v.triple.iter().map(|x| system.to_json(x)).collect::<Vec<_>>(),
                "domains": v.domains,
            })
        })
        .collect();
    let domains: Vec<Value> = tree
        .domains
        .iter()
        .enumerate()
        .map(|(i, d)| {
            json!({
                "id": i,
                "owner": d.owner.as_ref().map(|p| path_string(p)),
                "label": system.to_json(&d.label),
            })
        })
        .collect();
    json!({ "system": tree.system, "vertices": vertices, "domains": domains })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per vertex: `depth,path,a,b,t1,t2,t3`.
pub fn to_csv<S: DecorationSystem>(system: &S, tree: &DecoratedTree<S::Elem>) -> String {
    let mut out = String::from("depth,path,a,b,t1,t2,t3\n");
    for v in &tree.vertices {
        let cells: Vec<String> = v.triple.iter().map(|x| csv_field(&system.render(x))).collect();
        writeln!(out, "{},{},{},{},{}", v.depth, path_string(&v.path), v.edge.0, v.edge.1, cells.join(",")).unwrap();
    }
    out
}

/// One row per polygon vertex: `depth,path,entry,weight,index,x,y`, exact rationals.
pub fn polygons_csv(tree: &DecoratedTree<ConvexSet>) -> String {
    let mut out = String::from("depth,path,entry,weight,index,x,y\n");
    for v in &tree.vertices {
        let p = path_string(&v.path);
        for (k, set) in v.triple.iter().enumerate() {
            for (i, pt) in set.vertices.iter().enumerate() {
                writeln!(out, "{},{},{},{},{},{},{}", v.depth, p, k + 1, set.d, i, pt[0], pt[1]).unwrap();
            }
        }
    }
    out
}
