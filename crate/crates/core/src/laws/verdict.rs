//! Structured outcomes of law checks.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::format::IdealJson;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// How a check ended. Conjectures are never reported as `Holds`: a check
/// over a finite range of powers reports `HoldsInRange`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    HoldsInRange,
    Fails,
    ResourceExhausted,
    /// Observational checks that record data and never refute.
    Observed,
    /// Every quantified case was empty.
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::HoldsInRange => "holds-in-range",
            Status::Fails => "fails",
            Status::ResourceExhausted => "resource-exhausted",
            Status::Observed => "observed",
            Status::Vacuous => "vacuous",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cost {
    pub elapsed_ms: u64,
    /// Number of elementary comparisons (ideal equalities, exchange checks,
    /// Ass computations, ...) the law performed.
    pub checks: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawVerdict {
    pub law_id: String,
    pub instance: Value,
    pub status: Status,
    /// `false` exactly when `status` is `Fails`; a resource-exhausted check
    /// is undecided, not refuted.
    pub holds: bool,
    /// Counterexample payload for failures (re-checkable from `instance`).
    pub witness: Option<Value>,
    /// Observations gathered along the way.
    pub data: Value,
    pub cost: Cost,
}

/// Accumulates state while a law runs.
pub(crate) struct Run {
    law_id: String,
    instance: Value,
    start: Instant,
    pub checks: u64,
    pub data: Map<String, Value>,
}

/// Result of the body of a law.
pub(crate) enum Outcome {
    Pass(Status),
    Fail(Value),
}

impl Run {
    pub fn new(law_id: &str, instance: Value) -> Self {
        Self {
            law_id: law_id.to_string(),
            instance,
            start: Instant::now(),
            checks: 0,
            data: Map::new(),
        }
    }

    pub fn note(&mut self, key: &str, value: Value) {
        self.data.insert(key.to_string(), value);
    }

    fn into_verdict(self, status: Status, witness: Option<Value>) -> LawVerdict {
        LawVerdict {
            law_id: self.law_id,
            instance: self.instance,
            status,
            holds: status != Status::Fails,
            witness,
            data: Value::Object(self.data),
            cost: Cost {
                elapsed_ms: self.start.elapsed().as_millis() as u64,
                checks: self.checks,
            },
        }
    }
}

/// Run a law body; resource exhaustion becomes a verdict, other errors
/// (violated preconditions, bad arguments) propagate.
pub(crate) fn run_law(
    law_id: &str,
    instance: Value,
    body: impl FnOnce(&mut Run) -> Result<Outcome>,
) -> Result<LawVerdict> {
    let mut run = Run::new(law_id, instance);
    match body(&mut run) {
        Ok(Outcome::Pass(status)) => Ok(run.into_verdict(status, None)),
        Ok(Outcome::Fail(w)) => Ok(run.into_verdict(Status::Fails, Some(w))),
        Err(Error::ResourceExhausted(msg)) => {
            Ok(run.into_verdict(Status::ResourceExhausted, Some(json!({"reason": msg}))))
        }
        Err(e) => Err(e),
    }
}

pub(crate) fn ideal_json(i: &MonomialIdeal) -> Value {
    serde_json::to_value(IdealJson::from(i)).expect("serializable")
}

/// A generator of one ideal missing from the other, if they differ.
pub(crate) fn difference(a: &MonomialIdeal, b: &MonomialIdeal) -> Option<Value> {
    let only = |x: &MonomialIdeal, y: &MonomialIdeal| -> Option<Monomial> {
        x.gens().iter().find(|g| !y.contains(g)).cloned()
    };
    if let Some(m) = only(a, b) {
        return Some(json!({"in_left_only": m.to_string()}));
    }
    only(b, a).map(|m| json!({"in_right_only": m.to_string()}))
}

/// Counterexample payload for a failed ideal equality.
pub(crate) fn mismatch(what: &str, extra: Value, left: &MonomialIdeal, right: &MonomialIdeal) -> Value {
    json!({
        "identity": what,
        "at": extra,
        "left": ideal_json(left),
        "right": ideal_json(right),
        "difference": difference(left, right),
    })
}
