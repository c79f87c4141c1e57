use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use hda_core::Error;

pub const SCHEMA: &str = "hda-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    ValidationFailure,
    ResourceCap,
    ConsistencyViolation,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::ValidationFailure => 1,
            Status::ResourceCap => 2,
            Status::ConsistencyViolation => 3,
        }
    }

    /// The more severe of two outcomes.
    pub fn worst(self, o: Status) -> Status {
        if o.exit_code() > self.exit_code() {
            o
        } else {
            self
        }
    }

    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::Resource { .. } => Status::ResourceCap,
            Error::Internal(_) => Status::ConsistencyViolation,
            _ => Status::ValidationFailure,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input_digest: Option<String>,
    pub config: Value,
    pub status: Status,
    pub errors: Vec<String>,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Report {
        Report {
            schema: SCHEMA,
            tool: "hda",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            input_digest: None,
            config,
            status: Status::Ok,
            errors: Vec::new(),
            payload: Value::Null,
            timing_ms: None,
        }
    }

    pub fn fail(&mut self, status: Status, msg: impl Into<String>) {
        self.status = self.status.worst(status);
        self.errors.push(msg.into());
    }

    pub fn error(&mut self, e: &Error) {
        self.fail(Status::of_error(e), e.to_string());
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

/// The token `check oracle-agreement` hands out for an input that passed.
pub fn oracle_token(digest: &str) -> String {
    let d = Sha256::digest(format!("oracle-pass {digest}").as_bytes());
    format!("{:x}", d)[..16].to_string()
}
