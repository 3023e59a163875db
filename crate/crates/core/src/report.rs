//! Machine-readable suite reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// `{suite, verdict, counts, witnesses[]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub verdict: Verdict,
    pub counts: BTreeMap<String, Value>,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), verdict: Verdict::Pass, counts: BTreeMap::new(), witnesses: vec![], notes: vec![] }
    }

    pub fn count(&mut self, key: &str, v: impl Into<Value>) {
        self.counts.insert(key.into(), v.into());
    }

    /// Records a check; a failed check flips the verdict and keeps its witness.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.verdict = Verdict::Fail;
            self.witnesses.push(witness());
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// A witness that documents a confirmed negative result.
    pub fn exhibit(&mut self, s: impl Into<String>) {
        self.witnesses.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn merge(&mut self, prefix: &str, other: SuiteReport) {
        for (k, v) in other.counts {
            self.counts.insert(format!("{prefix}.{k}"), v);
        }
        if other.verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
        }
        self.witnesses.extend(other.witnesses.into_iter().map(|w| format!("{prefix}: {w}")));
        self.notes.extend(other.notes.into_iter().map(|w| format!("{prefix}: {w}")));
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}", self.suite, if self.passed() { "PASS" } else { "FAIL" })?;
        for (k, v) in &self.counts {
            writeln!(f, "  {k} = {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}
