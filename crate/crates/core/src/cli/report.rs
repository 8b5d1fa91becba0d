use serde::Serialize;
use serde_json::Value;

use crate::gallery::Check;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Assertion {
    pub anchor: String,
    pub pass: bool,
}

/// The JSON document emitted by every subcommand.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: Vec<String>,
    pub timestamp: String,
    pub results: Value,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Report { schema: 1, command, timestamp: secs.to_string(), results: Value::Null, assertions: Vec::new() }
    }

    pub fn assert(&mut self, anchor: &str, pass: bool) {
        self.assertions.push(Assertion { anchor: anchor.to_string(), pass });
    }

    pub fn extend_checks(&mut self, checks: &[Check]) {
        for c in checks {
            self.assert(&c.anchor, c.pass);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
