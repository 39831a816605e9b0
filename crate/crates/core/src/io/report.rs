//! Run reports: a JSON serialization with sorted keys and a plain-text
//! rendering. Neither contains anything that varies between runs unless
//! timings are requested.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{AxiomReport, FlatComb, Violation};
use crate::io::document::Kind;
use crate::scalar::format_rational;

/// Witnesses kept per check; the full count is still reported.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: String,
    pub at: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Violation> for Witness {
    fn from(v: &Violation) -> Self {
        Self {
            axiom: v.axiom.clone(),
            at: v.witness.clone(),
            lhs: render_flat(&v.lhs),
            rhs: render_flat(&v.rhs),
        }
    }
}

fn render_flat(c: &FlatComb) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.iter()
        .map(|(k, q)| {
            let key: Vec<String> = k.iter().map(usize::to_string).collect();
            format!("{}·[{}]", format_rational(q), key.join(","))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Only asserted checks decide the exit status.
    pub asserted: bool,
    pub status: Status,
    pub violations: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn from_report(name: impl Into<String>, asserted: bool, report: &AxiomReport) -> Self {
        Self {
            name: name.into(),
            asserted,
            status: if report.passed() {
                Status::Pass
            } else {
                Status::Fail
            },
            violations: report.violations.len(),
            witnesses: report
                .violations
                .iter()
                .take(MAX_WITNESSES)
                .map(Witness::from)
                .collect(),
            note: None,
        }
    }

    /// A check that could not run because a precondition failed.
    pub fn failed(name: impl Into<String>, asserted: bool, note: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            asserted,
            status: Status::Fail,
            violations: 0,
            witnesses: Vec::new(),
            note: Some(note.into()),
        }
    }

    pub fn not_applicable(name: impl Into<String>, asserted: bool) -> Self {
        Self {
            name: name.into(),
            asserted,
            status: Status::NotApplicable,
            violations: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputSummary {
    pub name: String,
    pub kind: Kind,
    /// SHA-256 of the document's canonical TOML serialization.
    pub sha256: String,
}

/// `key -> (coordinate label -> rational)`.
pub type Payload = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: InputSummary,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub payload: BTreeMap<String, Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl RunReport {
    pub fn new(command: String, input: InputSummary) -> Self {
        Self {
            command,
            input,
            passed: true,
            checks: Vec::new(),
            payload: BTreeMap::new(),
            timings_ms: None,
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        if check.asserted && check.status == Status::Fail {
            self.passed = false;
        }
        self.checks.push(check);
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "coquecigrue {}", self.command);
        let _ = writeln!(out, "input    {} ({})", self.input.name, self.input.kind);
        let _ = writeln!(out, "sha256   {}", self.input.sha256);
        let _ = writeln!(out);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.asserted { "*" } else { " " };
            let mut line = format!("  {:<4} {mark} {:<width$}", c.status.label(), c.name);
            if c.violations > 0 {
                let _ = write!(line, "  {} violation(s)", c.violations);
            }
            if let Some(note) = &c.note {
                let _ = write!(line, "  {note}");
            }
            let _ = writeln!(out, "{}", line.trim_end());
            for w in &c.witnesses {
                let _ = writeln!(
                    out,
                    "         {} at {:?}: {} != {}",
                    w.axiom, w.at, w.lhs, w.rhs
                );
            }
        }
        let _ = writeln!(out, "  (* asserted)");
        for (section, entries) in &self.payload {
            let _ = writeln!(out);
            let _ = writeln!(out, "{section}");
            if entries.is_empty() {
                let _ = writeln!(out, "  (none)");
            }
            let width = entries.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (key, value) in entries {
                let pad = width - key.chars().count();
                let _ = writeln!(out, "  {key}{}  {}", " ".repeat(pad), render_value(value));
            }
        }
        if let Some(t) = &self.timings_ms {
            let _ = writeln!(out);
            for (k, v) in t {
                let _ = writeln!(out, "  {k}: {v:.1} ms");
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "result   {}",
            if self.passed { "pass" } else { "FAIL" }
        );
        out
    }
}

fn render_value(v: &BTreeMap<String, String>) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(label, c)| {
            if c == "1" {
                label.clone()
            } else {
                format!("{c} {label}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
