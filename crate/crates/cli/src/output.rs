use std::fmt::Write as _;
use std::process::ExitCode;

use csmlap_core::LabeledMatrix;
use serde::Serialize;

use crate::config::OutputFormat;

/// Whether the command found what it was asked to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Violation,
}

impl Status {
    pub fn from_check(holds: bool) -> Self {
        if holds {
            Status::Ok
        } else {
            Status::Violation
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
        }
    }
}

/// Exit code for errors that stop a command early.
pub const USAGE_EXIT: u8 = 2;

/// A rendered command result: both output forms are produced from the same values.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub structured: serde_json::Value,
}

impl Outcome {
    pub fn new<T: Serialize>(status: Status, text: String, value: &T) -> Self {
        Self {
            status,
            text,
            structured: serde_json::to_value(value).expect("report types serialize"),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Structured => {
                let mut s = serde_json::to_string_pretty(&self.structured).expect("valid json");
                s.push('\n');
                s
            }
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.status.exit_code())
    }
}

/// Labels and entries of a matrix as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixView {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl From<&LabeledMatrix> for MatrixView {
    fn from(a: &LabeledMatrix) -> Self {
        let names = |ls: &[csmlap_core::Label]| ls.iter().map(ToString::to_string).collect();
        Self {
            rows: names(a.rows().labels()),
            cols: names(a.cols().labels()),
            entries: (0..a.nrows())
                .map(|r| a.row(r).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

pub(crate) fn push_line(s: &mut String, line: impl std::fmt::Display) {
    let _ = writeln!(s, "{line}");
}
