//! Verdicts produced by identity and theorem checks.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use crate::Error;

/// Outcome of one check. A failing verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictReport {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub ms: u64,
}

/// What a check body reports: `Ok(None)` passes, `Ok(Some(w))` fails with
/// witness `w`, and an error fails with the error text as witness. Unsupported
/// combinations and size-bound refusals are recorded as skips.
pub type CheckOutcome = crate::Result<Option<Value>>;

impl VerdictReport {
    /// Runs `body` and times it.
    pub fn run(
        check: impl Into<String>,
        params: Value,
        body: impl FnOnce() -> CheckOutcome,
    ) -> Self {
        let start = Instant::now();
        let outcome = body();
        let ms = start.elapsed().as_millis() as u64;
        let (pass, witness, skipped) = match outcome {
            Ok(None) => (true, None, None),
            Ok(Some(w)) => (false, Some(w), None),
            Err(Error::Unsupported(why)) => (true, None, Some(why)),
            Err(e @ Error::TooLarge { .. }) => (true, None, Some(e.to_string())),
            Err(e) => (false, Some(json!({ "error": e.to_string() })), None),
        };
        VerdictReport {
            check: check.into(),
            params,
            pass,
            witness,
            skipped,
            ms,
        }
    }

    /// Identity verdicts use `{name, size, pass, witness?}`.
    pub fn identity_json(&self) -> Value {
        let mut v = json!({
            "name": self.check,
            "size": self.params.get("size").cloned().unwrap_or(Value::Null),
            "pass": self.pass,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }

    /// One line of text: status, check name, params.
    pub fn line(&self) -> String {
        let status = match (self.pass, &self.skipped) {
            (true, Some(_)) => "SKIP",
            (true, None) => "PASS",
            (false, _) => "FAIL",
        };
        let mut s = format!("{status} {} {}", self.check, compact(&self.params));
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness={}", compact(w)));
        }
        if let Some(why) = &self.skipped {
            s.push_str(&format!(" ({why})"));
        }
        s
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

/// `None` when equal, else the largest monomial where the two differ.
pub fn poly_witness<C: Scalar>(
    lhs: &LaurentPoly<C>,
    rhs: &LaurentPoly<C>,
    prefix: &str,
) -> Option<Value> {
    if lhs == rhs {
        return None;
    }
    if lhs.arity() != rhs.arity() {
        return Some(json!({ "arity": [lhs.arity(), rhs.arity()] }));
    }
    let diff = lhs - rhs;
    let (e, _) = diff
        .leading_term()
        .expect("unequal polynomials differ somewhere");
    let mono = LaurentPoly::<C>::monomial(e.clone(), C::one());
    Some(json!({
        "monomial": mono.display_with(prefix),
        "exp2": e,
        "lhs": lhs.coeff(e).to_string(),
        "rhs": rhs.coeff(e).to_string(),
    }))
}

/// `None` when equal, else both values.
pub fn value_witness<T: ToString + PartialEq>(what: &str, lhs: &T, rhs: &T) -> Option<Value> {
    (lhs != rhs)
        .then(|| json!({ "mismatch": what, "lhs": lhs.to_string(), "rhs": rhs.to_string() }))
}

/// Merges verdicts into the canonical order: by check name, then params.
pub fn sort_verdicts(v: &mut [VerdictReport]) {
    v.sort_by(|a, b| {
        a.check
            .cmp(&b.check)
            .then_with(|| compact(&a.params).cmp(&compact(&b.params)))
    });
}
