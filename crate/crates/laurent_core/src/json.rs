use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::poly::{Exponent, LaurentPoly};
use crate::CoreError;

impl LaurentPoly {
    /// `{"vars":["s1","s2","s3"],"terms":[{"e":[a1,a2,a3],"c":"<decimal>"}]}`, terms in
    /// ascending lexicographic order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(e, c)| json!({"e": [e.a1, e.a2, e.a3], "c": c.to_string()}))
            .collect();
        json!({"vars": ["s1", "s2", "s3"], "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self, CoreError> {
        let bad = |m: &str| CoreError::Json(m.to_string());
        let vars = v.get("vars").and_then(Value::as_array).ok_or_else(|| bad("missing vars"))?;
        if vars.iter().map(|x| x.as_str()).collect::<Vec<_>>() != [Some("s1"), Some("s2"), Some("s3")] {
            return Err(bad("vars must be [\"s1\",\"s2\",\"s3\"]"));
        }
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let e = t.get("e").and_then(Value::as_array).ok_or_else(|| bad("term without e"))?;
            if e.len() != 3 {
                return Err(bad("exponent must have 3 entries"));
            }
            let a1 = e[0].as_u64().ok_or_else(|| bad("a1 must be a nonnegative integer"))?;
            let a2 = e[1].as_u64().ok_or_else(|| bad("a2 must be a nonnegative integer"))?;
            let a3 = e[2].as_i64().ok_or_else(|| bad("a3 must be an integer"))?;
            let c = match t.get("c") {
                Some(Value::String(s)) => s.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                Some(Value::Number(n)) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("bad coefficient"))?,
                _ => return Err(bad("term without c")),
            };
            out.push((Exponent::new(a1 as u32, a2 as u32, a3 as i32), c));
        }
        Ok(LaurentPoly::from_terms(out))
    }
}
