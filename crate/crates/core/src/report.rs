//! Structured pass/fail verdicts shared by every check in the crate.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// A named verdict with an optional failure witness, free-form details and
/// nested sub-checks. Details are kept in a `BTreeMap` so serialized reports
/// are byte-stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sub_reports: Vec<CheckReport>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, verdict: Verdict) -> Self {
        CheckReport {
            check: check.into(),
            verdict,
            witness: None,
            details: BTreeMap::new(),
            sub_reports: Vec::new(),
        }
    }

    pub fn pass(check: impl Into<String>) -> Self {
        Self::new(check, Verdict::Pass)
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        let mut r = Self::new(check, Verdict::Fail);
        r.witness = Some(witness.into());
        r
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn set_detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn with_sub(mut self, sub: CheckReport) -> Self {
        self.sub_reports.push(sub);
        self
    }

    pub fn sub(&self, check: &str) -> Option<&CheckReport> {
        self.sub_reports.iter().find(|r| r.check == check)
    }

    /// Human-readable multi-line rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!("{pad}{}: {}", self.check, self.verdict));
        if let Some(w) = &self.witness {
            out.push_str(&format!(" (witness: {w})"));
        }
        out.push('\n');
        for (k, v) in &self.details {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{pad}  {k} = {v}\n"));
        }
        for sub in &self.sub_reports {
            sub.render_into(out, depth + 1);
        }
    }
}
