//! The report document printed by every subcommand.

use mengerkit_core::theorem::Condition;
use mengerkit_core::{Error, Outcome};
use serde::Serialize;
use serde_json::Value;

pub const REPORT_FORMAT: &str = "mengerkit-report-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    InputError,
    CapacityError,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::InputError => 2,
            Verdict::CapacityError => 3,
        }
    }

    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub format: &'static str,
    /// The arguments after the program name.
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub exit_code: i32,
    pub results: Value,
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(verdict: Verdict, results: Value, summary: Vec<String>) -> Self {
        Report {
            format: REPORT_FORMAT,
            command: Vec::new(),
            verdict,
            exit_code: verdict.exit_code(),
            results,
            summary,
        }
    }

    pub fn from_error(err: &Error) -> Self {
        let verdict = match err {
            Error::Capacity { .. } => Verdict::CapacityError,
            // an internal inconsistency is reported as a failed verdict
            Error::Inconsistent(_) => Verdict::Fail,
            Error::Input(_) => Verdict::InputError,
        };
        // the message itself goes to stderr
        Report::new(verdict, serde_json::json!({ "error": err.to_string() }), vec![])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn outcome_line(name: &str, outcome: &Outcome) -> String {
    match outcome.witness() {
        None => format!("PASS {name}"),
        Some(w) => format!("FAIL {name}: {w}"),
    }
}

pub fn condition_lines(conditions: &[Condition]) -> Vec<String> {
    conditions.iter().map(|c| outcome_line(&c.name, &c.outcome)).collect()
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}
