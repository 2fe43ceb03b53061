//! The JSON result envelope and its TSV flattening.

use std::collections::BTreeMap;

use albanese_core::schur::dim_irrep;
use albanese_core::{Bipartition, Decomposition};
use albanese_core::schur::DimensionPolynomial;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    /// Normalized arguments, defaults filled in.
    pub args: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    /// Algorithm route, e.g. `"generator-multisets"` or `"orbit-sums+modular-rank"`.
    pub route: String,
    /// Smallest rank `n` from which the result is asserted.
    pub valid_from_rank: Option<usize>,
    pub conjectural: bool,
    pub hypothesis: Option<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
    /// `"hit"`, `"miss"` or `"off"`.
    pub cache: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub query: Query,
    pub result: Value,
    pub provenance: Provenance,
    pub timing: Timing,
}

/// What a command computes, before timing is attached. This is the cached unit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub result: Value,
    pub provenance: Provenance,
    /// `Some(false)` makes the process exit with status 2.
    pub verdict: Option<bool>,
}

/// Exact integers as JSON numbers when they fit in `u64`, otherwise strings.
pub fn big(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn polynomial_json(p: &DimensionPolynomial) -> Value {
    json!({
        "text": p.to_string(),
        "coefficients": p.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "degree": p.degree(),
        "valid_from": p.threshold(),
    })
}

fn term_json(b: &Bipartition, m: &BigUint, rank: Option<usize>) -> Value {
    let mut t = json!({
        "lambda": b.covariant.to_string(),
        "mu": b.contravariant.to_string(),
        "multiplicity": big(m),
    });
    if let Some(n) = rank {
        t["dim_at_rank"] = big(&dim_irrep(b, n));
    }
    t
}

/// Terms in decreasing lexicographic order of `(λ, μ)`.
pub fn terms_json(d: &Decomposition, rank: Option<usize>) -> Value {
    Value::Array(d.terms().map(|(b, m)| term_json(b, m, rank)).collect())
}

impl Envelope {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }

    /// One row per irreducible term when the result has `terms`; otherwise
    /// `key<TAB>value` rows for the scalar fields.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        if let Some(terms) = self.result.get("terms").and_then(Value::as_array) {
            let with_dim = terms.iter().any(|t| t.get("dim_at_rank").is_some());
            out.push_str(if with_dim { "lambda\tmu\tmultiplicity\tdim_at_rank\n" } else { "lambda\tmu\tmultiplicity\n" });
            for t in terms {
                let cell = |k: &str| t.get(k).map(scalar).unwrap_or_default();
                out.push_str(&cell("lambda"));
                for k in ["mu", "multiplicity"].into_iter().chain(with_dim.then_some("dim_at_rank")) {
                    out.push('\t');
                    out.push_str(&cell(k));
                }
                out.push('\n');
            }
            return out;
        }
        if let Some(cases) = self.result.get("cases").and_then(Value::as_array) {
            out.push_str("suite\tcase\tpassed\tdetail\n");
            for c in cases {
                let cell = |k: &str| c.get(k).map(scalar).unwrap_or_default();
                out.push_str(&format!("{}\t{}\t{}\t{}\n", cell("suite"), cell("name"), cell("passed"), cell("detail")));
            }
            return out;
        }
        if let Some(obj) = self.result.as_object() {
            out.push_str("key\tvalue\n");
            for (k, v) in obj {
                out.push_str(&format!("{k}\t{}\n", scalar(v)));
            }
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
