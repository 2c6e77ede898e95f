//! Machine-readable verification reports.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named family of checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    #[serde(flatten)]
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub checks_run: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, Value>,
}

impl ClaimReport {
    pub fn new(claim: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            checks_run: 0,
            counterexample: None,
            notes: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.notes.insert(key.to_string(), value.into());
    }

    /// Records one check. The witness is only built on the first failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checks_run += 1;
        if !ok {
            self.fail_with(witness());
        }
    }

    pub fn fail_with(&mut self, witness: Value) {
        self.status = Status::Fail;
        if self.counterexample.is_none() {
            self.counterexample = Some(witness);
        }
    }

    /// Runs `f` over every item in parallel. `f` returns `Some(witness)` on
    /// failure; the witness of the lowest-indexed failure is kept, so the
    /// report does not depend on scheduling.
    pub fn check_all<T, F>(&mut self, items: &[T], f: F)
    where
        T: Sync,
        F: Fn(&T) -> Option<Value> + Sync,
    {
        let failures: Vec<Option<Value>> = items.par_iter().map(&f).collect();
        self.checks_run += items.len() as u64;
        if let Some(w) = failures.into_iter().flatten().next() {
            self.fail_with(w);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A suite run: several claim reports with an overall status.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub checks_run: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    /// Only filled in on request, so that default output is reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub claims: Vec<ClaimReport>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, parameters: BTreeMap<String, Value>, claims: Vec<ClaimReport>) -> Self {
        let checks_run = claims.iter().map(|c| c.checks_run).sum();
        let failed = claims.iter().find(|c| !c.passed());
        let counterexample = failed.map(|c| {
            serde_json::json!({
                "claim": c.claim,
                "witness": c.counterexample.clone().unwrap_or(Value::Null),
            })
        });
        Self {
            suite: suite.into(),
            parameters,
            status: if failed.is_some() { Status::Fail } else { Status::Pass },
            checks_run,
            counterexample,
            elapsed_ms: None,
            claims,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
