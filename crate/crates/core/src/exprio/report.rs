//! The JSON report emitted by every verification command.
//!
//! Serialized objects carry exactly the keys
//! `{schema_version, operation, params, status, witnesses, steps, millis}`.
//! With a fixed configuration and seed everything except `millis` is
//! reproducible byte-for-byte.

use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Pass,
    Fail,
    Error,
}

/// One checked item: the input as entered or generated, and the reduced or
/// computed output as a printed expression.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub input: String,
    pub output: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub operation: String,
    pub params: BTreeMap<String, String>,
    pub status: ReportStatus,
    pub witnesses: Vec<Witness>,
    pub steps: u64,
    pub millis: u64,
}

impl Report {
    pub fn new(operation: impl Into<String>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            operation: operation.into(),
            params: BTreeMap::new(),
            status: ReportStatus::Pass,
            witnesses: Vec::new(),
            steps: 0,
            millis: 0,
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn witness(&mut self, input: impl Into<String>, output: impl Into<String>) {
        self.witnesses.push(Witness {
            input: input.into(),
            output: output.into(),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
