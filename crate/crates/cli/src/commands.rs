//! Implementations of the subcommands. Each returns the text to print or a [`CliError`].

use std::path::Path;

use fibonacci_pell as fp;
use laurent_core::{BigInt, LaurentPoly};
use markov_classical::MarkovTriple;
use poisson::{Check, Space};
use serde_json::{json, Value};
use trees::{polygons_csv, to_csv, to_dot, to_json, ConvexSet, ConvexSystem, DecoratedTree, DecorationSystem};

use crate::checks::Suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad arguments or unreadable input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A check failed; the payload is printed on standard output and the exit code is 1.
    #[error("verification failed")]
    Failed(Value),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentFormat {
    Plain,
    Json,
    Pretty,
}

fn starred(f: &LaurentPoly) -> String {
    let s = f.to_string();
    if s.chars().all(|c| c.is_ascii_alphanumeric()) {
        format!("{s}*")
    } else {
        format!("({s})*")
    }
}

pub fn present(a: &str, b: &str, c: &str, format: PresentFormat) -> Result<String, CliError> {
    let parse = |s: &str| s.parse::<BigInt>().map_err(|_| usage(format!("not an integer: {s}")));
    let p = MarkovTriple::new(parse(a)?, parse(b)?, parse(c)?);
    let r = presentations::reduced_presentation(&p).map_err(usage)?;
    let sol = r.solution();
    Ok(match format {
        PresentFormat::Pretty => format!("({}, {}, {})", starred(&r.factors[0]), r.factors[1], starred(&r.factors[2])),
        PresentFormat::Plain => format!("({}, {}, {})", sol.0[0], sol.0[1], sol.0[2]),
        PresentFormat::Json => {
            let v = json!({
                "markov": r.markov.0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "factors": r.factors.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
                "solution": sol.0.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
                "bidegrees": r.admissible.as_ref().map(|t| t.bidegrees().iter().map(|b| [b.d, b.q]).collect::<Vec<_>>()),
            });
            serde_json::to_string_pretty(&v).expect("serializable")
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    Markov,
    Euclid,
    Deviation,
    Bivector,
    Matrix,
    Polynomial,
    Newton,
    Convex,
}

impl TreeKind {
    fn polynomial(self) -> bool {
        matches!(self, TreeKind::Polynomial | TreeKind::Newton | TreeKind::Convex)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFormat {
    Dot,
    Json,
    Csv,
}

/// Depth cap from `STARMARKOV_DEPTH_LIMIT`, else 12 for polynomial trees and 30 for integer trees.
pub fn depth_limit(kind: TreeKind, env: Option<&str>) -> Result<usize, CliError> {
    match env {
        Some(s) => s.trim().parse().map_err(|_| usage(format!("STARMARKOV_DEPTH_LIMIT is not a number: {s}"))),
        None => Ok(if kind.polynomial() { 12 } else { 30 }),
    }
}

fn emit<S: DecorationSystem>(s: &S, tree: &DecoratedTree<S::Elem>, format: TreeFormat) -> String {
    match format {
        TreeFormat::Dot => to_dot(s, tree),
        TreeFormat::Json => serde_json::to_string_pretty(&to_json(s, tree)).expect("serializable"),
        TreeFormat::Csv => to_csv(s, tree),
    }
}

fn emit_convex(tree: &DecoratedTree<ConvexSet>, format: TreeFormat) -> String {
    match format {
        TreeFormat::Csv => polygons_csv(tree),
        f => emit(&ConvexSystem, tree, f),
    }
}

pub fn tree(kind: TreeKind, depth: usize, format: TreeFormat, limit: usize) -> Result<String, CliError> {
    if depth > limit {
        return Err(usage(format!("depth {depth} exceeds the limit {limit} (set STARMARKOV_DEPTH_LIMIT to change it)")));
    }
    let err = |e: trees::TreeError| usage(e);
    use trees::*;
    Ok(match kind {
        TreeKind::Markov => emit(&MarkovSystem, &generate(&MarkovSystem, depth).map_err(err)?, format),
        TreeKind::Euclid => emit(&EuclidSystem, &generate(&EuclidSystem, depth).map_err(err)?, format),
        TreeKind::Deviation => emit(&DeviationSystem, &generate(&DeviationSystem, depth).map_err(err)?, format),
        TreeKind::Bivector => emit(&BivectorSystem, &generate(&BivectorSystem, depth).map_err(err)?, format),
        TreeKind::Matrix => emit(&MatrixSystem, &generate(&MatrixSystem, depth).map_err(err)?, format),
        TreeKind::Polynomial => emit(&PolynomialSystem, &generate(&PolynomialSystem, depth).map_err(err)?, format),
        TreeKind::Convex => emit_convex(&generate(&ConvexSystem, depth).map_err(err)?, format),
        TreeKind::Newton => {
            let p = generate(&PolynomialSystem, depth).map_err(err)?;
            let newton = |f: &LaurentPoly| ConvexSet::from_newton(f).map_err(|e| usage(e));
            let mut vertices = Vec::with_capacity(p.vertices.len());
            for v in &p.vertices {
                let [a, b, c] = &v.triple;
                vertices.push(DecoratedVertex { path: v.path.clone(), depth: v.depth, triple: [newton(a)?, newton(b)?, newton(c)?], edge: v.edge, domains: v.domains });
            }
            let domains = p.domains.iter().map(|d| Ok(Domain { label: newton(&d.label)?, owner: d.owner.clone() })).collect::<Result<Vec<_>, CliError>>()?;
            emit_convex(&DecoratedTree { system: "newton", vertices, domains }, format)
        }
    })
}

/// `F_n` for odd `n`; with `negative`, `F_{-n}`.
pub fn fib(n: i64, closed: bool, negative: bool) -> Result<String, CliError> {
    if n < 1 || n % 2 == 0 {
        return Err(usage(format!("index must be odd and positive, got {n}")));
    }
    let k = (n - 1) / 2;
    let f = match (closed, negative) {
        (false, false) => fp::star_fibonacci(k),
        (false, true) => fp::star_fibonacci(-k - 1),
        (true, false) => fp::star_fibonacci_closed(n).map_err(usage)?,
        (true, true) => fp::star_fibonacci_closed(n).map_err(usage)?.star(),
    };
    Ok(f.to_string())
}

/// `P_n` for odd positive `n`.
pub fn pell(n: i64, closed: bool) -> Result<String, CliError> {
    if n < 1 || n % 2 == 0 {
        return Err(usage(format!("index must be odd and positive, got {n}")));
    }
    let f = if closed { fp::pell_closed(n).map_err(usage)? } else { fp::star_pell(((n - 1) / 2) as u32) };
    Ok(f.to_string())
}

fn report(checks: &[(&str, Vec<Check>)]) -> (bool, Value) {
    let pass = checks.iter().all(|(_, c)| c.iter().all(|c| c.pass));
    let suites: Vec<Value> = checks
        .iter()
        .map(|(name, c)| {
            json!({
                "suite": name,
                "pass": c.iter().all(|c| c.pass),
                "passed": c.iter().filter(|c| c.pass).count(),
                "failed": c.iter().filter(|c| !c.pass).count(),
                "checks": c.iter().map(Check::to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    (pass, json!({"pass": pass, "suites": suites}))
}

fn finish(pass: bool, v: Value) -> Result<String, CliError> {
    if pass {
        Ok(serde_json::to_string_pretty(&v).expect("serializable"))
    } else {
        Err(CliError::Failed(v))
    }
}

pub fn verify(suite: Suite, depth: Option<usize>, seed: u64) -> Result<String, CliError> {
    let results = suite.run(depth, seed);
    let (pass, v) = report(&results);
    finish(pass, v)
}

pub fn poisson_solve(space: Space) -> Result<String, CliError> {
    let sys = match space {
        Space::C6 => poisson::c6::solve_quadratic(),
        Space::C12 => poisson::c12::solve_quadratic(),
        other => return Err(usage(format!("no quadratic solver for {}", other.name()))),
    };
    let basis: Vec<Value> = sys
        .basis_tables()
        .iter()
        .map(|t| {
            let mut m = serde_json::Map::new();
            for i in 0..t.dim() {
                for j in i + 1..t.dim() {
                    let e = t.get(i, j);
                    if !e.is_zero() {
                        m.insert(format!("{{{},{}}}", sys.vars.names()[i], sys.vars.names()[j]), json!(e.to_string()));
                    }
                }
            }
            Value::Object(m)
        })
        .collect();
    let v = json!({"space": space.name(), "unknowns": sys.unknowns(), "rank": sys.rank, "dimension": sys.basis.len(), "basis": basis});
    Ok(serde_json::to_string_pretty(&v).expect("serializable"))
}

pub fn poisson_check(space: Space) -> Result<String, CliError> {
    let checks = crate::checks::poisson_space(space);
    let v = poisson::report::to_json(space.name(), &checks);
    finish(poisson::report::all_pass(&checks), v)
}

fn read_endo(path: &Path) -> Result<horowitz::NuEndo, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    horowitz::NuEndo::from_json(&v).map_err(usage)
}

pub fn horowitz_check(path: &Path, seed: u64) -> Result<String, CliError> {
    let e = read_endo(path)?;
    let v = horowitz::check(&e, seed);
    let pass = v["preserves_H"] == json!(true) && v["max_rank"] == json!(true);
    finish(pass, v)
}

pub fn horowitz_decompose(path: &Path, seed: u64) -> Result<String, CliError> {
    let e = read_endo(path)?;
    match horowitz::decompose(&e, seed) {
        Ok(d) => finish(true, d.to_json()),
        Err(err) => Err(CliError::Failed(json!({"error": err.to_string()}))),
    }
}
