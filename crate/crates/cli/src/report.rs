//! The JSON report printed for every invocation, and exit codes.

use coverideal::Error;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Value { value: Value },
    Certificate { certificate: Value },
    Refutation { certificate: Value },
    BudgetExceeded { nodes: u64 },
    Error { class: ErrorClass, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorClass {
    Usage,
    Domain,
    Io,
}

/// Anything that ends a command early.
#[derive(Debug)]
pub enum Failure {
    Error(ErrorClass, String),
    Budget(u64),
}

impl Failure {
    pub fn usage(msg: String) -> Self {
        Failure::Error(ErrorClass::Usage, msg)
    }

    pub fn io(msg: String) -> Self {
        Failure::Error(ErrorClass::Io, msg)
    }

    pub fn into_outcome(self) -> Outcome {
        match self {
            Failure::Budget(nodes) => Outcome::BudgetExceeded { nodes },
            Failure::Error(class, message) => Outcome::Error { class, message },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { nodes } => Failure::Budget(nodes),
            e => Failure::Error(ErrorClass::Domain, e.to_string()),
        }
    }
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Value { .. } | Outcome::Certificate { .. } | Outcome::Refutation { .. } => EXIT_OK,
            Outcome::BudgetExceeded { .. } => EXIT_BUDGET,
            Outcome::Error { class: ErrorClass::Io, .. } => EXIT_IO,
            Outcome::Error { .. } => EXIT_DOMAIN,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Params {
    pub k: u32,
    pub field: u32,
    pub budget_nodes: u64,
    pub budget_secs: u64,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub version: &'static str,
    pub params: Params,
    /// sha256 over the raw inputs, each followed by a NUL byte.
    pub input_hash: String,
    pub outcome: Outcome,
    pub wall_time_ms: u128,
}

pub fn input_hash<'a>(inputs: impl IntoIterator<Item = &'a str>) -> String {
    let mut h = Sha256::new();
    for s in inputs {
        h.update(s.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}
