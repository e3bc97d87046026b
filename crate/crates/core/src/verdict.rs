//! Machine-readable outcomes of claim checks.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of checking one claim against the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Confirmed,
    RefutedAtDeskScale,
    InconsistentInPaper,
    OutOfCap,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::RefutedAtDeskScale => "refuted_at_desk_scale",
            Status::InconsistentInPaper => "inconsistent_in_paper",
            Status::OutOfCap => "out_of_cap",
        }
    }
}

/// One evaluated statement. `holds` is `None` for purely informational rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub observed: Value,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub claim_id: String,
    pub locator: String,
    pub claim: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub witness: Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerdictReport {
    pub fn new(claim_id: &str, locator: &str, claim: &str) -> Self {
        VerdictReport {
            claim_id: claim_id.into(),
            locator: locator.into(),
            claim: claim.into(),
            status: Status::Confirmed,
            checks: Vec::new(),
            witness: Value::Null,
            notes: Vec::new(),
            wall_time_ms: None,
        }
    }

    /// Records `expected == observed`.
    pub fn expect<T: Serialize + PartialEq>(&mut self, name: &str, expected: T, observed: T) -> bool {
        let holds = expected == observed;
        self.checks.push(Check {
            name: name.into(),
            expected: to_value(&expected),
            observed: to_value(&observed),
            holds: Some(holds),
        });
        holds
    }

    /// Records a boolean statement expected to be true.
    pub fn assert(&mut self, name: &str, holds: bool) -> bool {
        self.expect(name, true, holds)
    }

    /// Records a value without judging it.
    pub fn info<T: Serialize>(&mut self, name: &str, observed: T) {
        self.checks.push(Check { name: name.into(), expected: Value::Null, observed: to_value(&observed), holds: None });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds != Some(false))
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.holds == Some(false)).collect()
    }

    /// Confirmed if every judged check holds, `on_failure` otherwise.
    pub fn conclude(mut self, on_failure: Status) -> Self {
        self.status = if self.all_hold() { Status::Confirmed } else { on_failure };
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("check values are plain data")
}

/// Runs `f` and stamps the report with its wall time.
pub fn timed(f: impl FnOnce() -> VerdictReport) -> VerdictReport {
    let start = Instant::now();
    let mut r = f();
    r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    r
}
