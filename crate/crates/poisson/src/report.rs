//! Pass/fail records with residuals, serialized as JSON.

use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub residual: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, residual: None }
    }

    pub fn with_residual(name: impl Into<String>, residual: Option<String>) -> Self {
        Check { name: name.into(), pass: residual.is_none(), residual }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"name": self.name, "pass": self.pass});
        if let Some(r) = &self.residual {
            v["residual"] = json!(r);
        }
        v
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn to_json(space: &str, checks: &[Check]) -> Value {
    json!({
        "space": space,
        "pass": all_pass(checks),
        "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
    })
}

/// `None` when equal, otherwise the difference as text.
pub fn diff(a: &crate::MultiPoly, b: &crate::MultiPoly) -> Option<String> {
    let d = a - b;
    if d.is_zero() {
        None
    } else {
        Some(d.to_string())
    }
}
