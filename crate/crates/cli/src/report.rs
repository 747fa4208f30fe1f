//! Reports: a list of named checks with values and witnesses, rendered as text or JSON.

use std::fmt::Write as _;

use hopfkit_core::exactlin::ExactMatrix;
use hopfkit_core::fusion::IsoWitness;
use serde::Serialize;
use serde_json::{json, Value};

use crate::job::JobEcho;

pub const TOOL: &str = "hopfkit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A computed fact with no expectation attached.
    Info,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Failure means two computations that must agree did not.
    #[serde(skip)]
    pub consistency: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    False,
    Inconsistent,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::False => 1,
            Outcome::Inconsistent => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub job: JobEcho,
    pub checks: Vec<Check>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(job: JobEcho) -> Self {
        Report {
            tool: TOOL,
            version: VERSION,
            job,
            checks: Vec::new(),
            verdict: String::new(),
            timing_ms: None,
        }
    }

    fn push(&mut self, name: impl Into<String>, status: Status, consistency: bool) -> &mut Check {
        self.checks.push(Check {
            name: name.into(),
            status,
            value: None,
            witness: None,
            consistency,
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// A claim that either holds or is mathematically false.
    pub fn claim(&mut self, name: impl Into<String>, holds: bool) -> &mut Check {
        let status = if holds { Status::Pass } else { Status::Fail };
        self.push(name, status, false).with_value(holds)
    }

    /// An agreement that must hold; failure signals an internal inconsistency.
    pub fn consistency(&mut self, name: impl Into<String>, holds: bool) -> &mut Check {
        let status = if holds { Status::Pass } else { Status::Fail };
        self.push(name, status, true).with_value(holds)
    }

    pub fn info(&mut self, name: impl Into<String>, value: impl Serialize) -> &mut Check {
        self.push(name, Status::Info, false).with_value(value)
    }

    pub fn skipped(&mut self, name: impl Into<String>, why: &str) -> &mut Check {
        self.push(name, Status::Skipped, false).with_value(why)
    }

    pub fn outcome(&self) -> Outcome {
        let failed = |c: &&Check| c.status == Status::Fail;
        if self.checks.iter().filter(failed).any(|c| c.consistency) {
            Outcome::Inconsistent
        } else if self.checks.iter().any(|c| c.status == Status::Fail) {
            Outcome::False
        } else {
            Outcome::Pass
        }
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let j = &self.job;
        let _ = writeln!(
            out,
            "{} {}  {}  {}",
            self.tool, self.version, j.command, j.input
        );
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(5)
            .max(5);
        let _ = writeln!(out, "{:<8}{:<width$}  VALUE", "STATUS", "CHECK");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Info => "info",
                Status::Skipped => "skip",
            };
            let value = c.value.as_ref().map(compact).unwrap_or_default();
            let _ = writeln!(out, "{status:<8}{:<width$}  {value}", c.name);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "{:8}witness: {}", "", compact(w));
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms} ms");
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("values serialize"),
    }
}

impl Check {
    pub fn with_value(&mut self, v: impl Serialize) -> &mut Self {
        self.value = Some(serde_json::to_value(v).expect("values serialize"));
        self
    }

    pub fn with_witness(&mut self, w: impl Serialize) -> &mut Self {
        self.witness = Some(serde_json::to_value(w).expect("witnesses serialize"));
        self
    }
}

/// Witness carrying the matrix itself, so it can be re-verified from the report alone.
pub fn iso_witness(m: &ExactMatrix, w: &IsoWitness) -> Value {
    let (kind, evidence) = match w {
        IsoWitness::Inverse(inv) => ("inverse", inv),
        IsoWitness::Kernel(v) => ("kernel", v),
    };
    json!({ "kind": kind, "matrix": m, "evidence": evidence })
}

/// Re-checks every invertibility witness in a machine report: `inverse` evidence must be a
/// two-sided inverse and `kernel` evidence a nonzero kernel vector. Returns how many were checked.
pub fn reverify_witnesses(report: &Value) -> Result<usize, String> {
    let checks = report
        .get("checks")
        .and_then(Value::as_array)
        .ok_or("report has no checks")?;
    let mut n = 0;
    for c in checks {
        let Some(w) = c.get("witness") else { continue };
        let kind = w.get("kind").and_then(Value::as_str);
        if !matches!(kind, Some("inverse" | "kernel")) {
            continue;
        }
        let name = c.get("name").and_then(Value::as_str).unwrap_or("?");
        let read = |key: &str| -> Result<ExactMatrix, String> {
            serde_json::from_value(
                w.get(key)
                    .cloned()
                    .ok_or(format!("{name}: missing {key}"))?,
            )
            .map_err(|e| format!("{name}: {e}"))
        };
        let m = read("matrix")?;
        let evidence = read("evidence")?;
        let witness = if kind == Some("inverse") {
            IsoWitness::Inverse(evidence)
        } else {
            IsoWitness::Kernel(evidence)
        };
        if !witness.verify(&m) {
            return Err(format!("{name}: witness does not verify"));
        }
        n += 1;
    }
    Ok(n)
}
