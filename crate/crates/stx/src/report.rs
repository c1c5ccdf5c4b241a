use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Outcome of one experiment. `measured` and `predicted` are absent only
/// when the run was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n2: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    pub parameters: BTreeMap<String, String>,
    pub measured: Option<u128>,
    pub predicted: Option<u128>,
    pub equal: Option<bool>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub wall_time_ms: u128,
}

impl ExperimentReport {
    pub fn new(command: &str) -> Self {
        ExperimentReport {
            command: command.to_owned(),
            n1: None,
            n2: None,
            method: None,
            parameters: BTreeMap::new(),
            measured: None,
            predicted: None,
            equal: None,
            verdict: Verdict::Skipped,
            reason: None,
            wall_time_ms: 0,
        }
    }

    pub fn sizes(mut self, n1: usize, n2: usize) -> Self {
        self.n1 = Some(n1);
        self.n2 = Some(n2);
        self
    }

    pub fn method(mut self, method: &str) -> Self {
        self.method = Some(method.to_owned());
        self
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_owned(), value.to_string());
        self
    }

    /// Records an exact comparison: pass iff the two integers are equal.
    pub fn compare(mut self, measured: u128, predicted: u128) -> Self {
        let equal = measured == predicted;
        self.measured = Some(measured);
        self.predicted = Some(predicted);
        self.equal = Some(equal);
        self.verdict = if equal { Verdict::Pass } else { Verdict::Fail };
        self
    }

    pub fn skip(mut self, reason: impl ToString) -> Self {
        self.measured = None;
        self.predicted = None;
        self.equal = None;
        self.verdict = Verdict::Skipped;
        self.reason = Some(reason.to_string());
        self
    }

    pub fn reason(mut self, reason: impl ToString) -> Self {
        self.reason = Some(reason.to_string());
        self
    }

    pub fn timed(mut self, since: Instant) -> Self {
        self.wall_time_ms = since.elapsed().as_millis();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Process exit code for a batch of reports: 0 iff none failed.
pub fn exit_code(reports: &[ExperimentReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else {
        0
    }
}
