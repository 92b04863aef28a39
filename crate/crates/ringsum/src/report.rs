//! Sweep reports: one [`Cell`] per grid point, serialized as JSON Lines.

use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Map, Value};

/// Outcome of a single cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// A proved formula agrees with the oracle.
    ProvedMatch,
    /// A proved formula disagrees with the oracle: an implementation bug.
    ProvedMismatch,
    /// A conjecture-dependent prediction agrees with the oracle.
    ConjectureMatch,
    /// A conjecture-dependent prediction disagrees, confirmed by the slow
    /// path (or flagged as unconfirmed in the note).
    Counterexample,
    /// An audited statement agrees with the oracle.
    AuditMatch,
    /// An audited statement disagrees; recorded, not a failure.
    AuditMismatch,
    /// Evaluated without any assertion.
    Recorded,
    /// Evaluated outside the stated hypotheses; needs a human look.
    Inspect,
    /// Not evaluated (for example over budget).
    Skipped,
}

impl Classification {
    pub const ALL: [Classification; 9] = [
        Classification::ProvedMatch,
        Classification::ProvedMismatch,
        Classification::ConjectureMatch,
        Classification::Counterexample,
        Classification::AuditMatch,
        Classification::AuditMismatch,
        Classification::Recorded,
        Classification::Inspect,
        Classification::Skipped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::ProvedMatch => "proved-match",
            Classification::ProvedMismatch => "proved-mismatch",
            Classification::ConjectureMatch => "conjecture-match",
            Classification::Counterexample => "counterexample",
            Classification::AuditMatch => "audit-match",
            Classification::AuditMismatch => "audit-mismatch",
            Classification::Recorded => "recorded",
            Classification::Inspect => "inspect",
            Classification::Skipped => "skipped",
        }
    }

    pub fn is_discrepancy(self) -> bool {
        matches!(
            self,
            Classification::ProvedMismatch
                | Classification::Counterexample
                | Classification::AuditMismatch
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cell {
    pub sweep: &'static str,
    pub params: Value,
    pub classification: Classification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    /// Where the expected value comes from (formula branch or conjecture).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<Value>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub info: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Cell {
    pub fn new(sweep: &'static str, params: Value, classification: Classification) -> Self {
        Cell {
            sweep,
            params,
            classification,
            expected: None,
            source: None,
            observed: None,
            info: Map::new(),
            note: None,
        }
    }

    pub fn expected(mut self, value: Value, source: impl Into<String>) -> Self {
        self.expected = Some(value);
        self.source = Some(source.into());
        self
    }

    pub fn observed(mut self, value: Value) -> Self {
        self.observed = Some(value);
        self
    }

    pub fn info(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.info.insert(key.to_string(), value.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn param(&self, key: &str) -> Option<&Value> {
        self.params.get(key)
    }
}

/// A cell whose expectation failed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    /// Position of the cell in the report.
    pub cell: usize,
    pub params: Value,
    pub classification: Classification,
    pub expected: Option<Value>,
    pub source: Option<String>,
    pub observed: Option<Value>,
}

/// Process exit status of a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    /// A proved statement disagreed with the oracle.
    ProvedMismatch = 1,
    /// A conjecture was contradicted by a verified oracle value.
    Counterexample = 2,
    InvalidConfig = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub sweep: &'static str,
    /// Every grid cell, in grid order.
    pub cells: Vec<Cell>,
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn new(sweep: &'static str, cells: Vec<Cell>, wall_time: Duration) -> Self {
        SweepReport {
            sweep,
            cells,
            wall_time,
        }
    }

    pub fn cells_checked(&self) -> usize {
        self.cells.len()
    }

    pub fn count(&self, c: Classification) -> usize {
        self.cells.iter().filter(|x| x.classification == c).count()
    }

    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.classification.is_discrepancy())
            .map(|(i, c)| Discrepancy {
                cell: i,
                params: c.params.clone(),
                classification: c.classification,
                expected: c.expected.clone(),
                source: c.source.clone(),
                observed: c.observed.clone(),
            })
            .collect()
    }

    pub fn exit_status(&self) -> ExitStatus {
        if self.count(Classification::ProvedMismatch) > 0 {
            ExitStatus::ProvedMismatch
        } else if self.count(Classification::Counterexample) > 0 {
            ExitStatus::Counterexample
        } else {
            ExitStatus::Ok
        }
    }

    /// Counts per classification; no timing, so it is reproducible.
    pub fn summary(&self) -> Value {
        let counts: Map<String, Value> = Classification::ALL
            .iter()
            .map(|&c| (c.as_str().to_string(), json!(self.count(c))))
            .collect();
        json!({
            "summary": {
                "sweep": self.sweep,
                "cells_checked": self.cells_checked(),
                "discrepancies": self.discrepancies().len(),
                "counts": counts,
                "exit_code": self.exit_status().code(),
            }
        })
    }

    /// One line per cell, then the summary line.
    pub fn write_jsonl(&self, mut w: impl Write) -> io::Result<()> {
        for cell in &self.cells {
            serde_json::to_writer(&mut w, cell)?;
            w.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut w, &self.summary())?;
        w.write_all(b"\n")
    }

    /// Short human-readable summary (with timing) for standard error.
    pub fn human_summary(&self) -> String {
        let mut parts: Vec<String> = Classification::ALL
            .iter()
            .filter_map(|&c| {
                let n = self.count(c);
                (n > 0).then(|| format!("{} {}", n, c.as_str()))
            })
            .collect();
        if parts.is_empty() {
            parts.push("no cells".to_string());
        }
        format!(
            "{}: {} cells ({}), exit {}, {:.2?}",
            self.sweep,
            self.cells_checked(),
            parts.join(", "),
            self.exit_status().code(),
            self.wall_time
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_status_priority() {
        let cell = |c| Cell::new("t", json!({}), c);
        let mut r = SweepReport::new(
            "t",
            vec![cell(Classification::ProvedMatch), cell(Classification::AuditMismatch)],
            Duration::ZERO,
        );
        assert_eq!(r.exit_status(), ExitStatus::Ok);
        assert_eq!(r.discrepancies().len(), 1);
        r.cells.push(cell(Classification::Counterexample));
        assert_eq!(r.exit_status(), ExitStatus::Counterexample);
        r.cells.push(cell(Classification::ProvedMismatch));
        assert_eq!(r.exit_status(), ExitStatus::ProvedMismatch);
    }

    #[test]
    fn jsonl_layout() {
        let r = SweepReport::new(
            "t",
            vec![Cell::new("t", json!({"k": 1}), Classification::Recorded).observed(json!(0))],
            Duration::from_secs(3),
        );
        let mut buf = Vec::new();
        r.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], r#"{"sweep":"t","params":{"k":1},"classification":"recorded","observed":0}"#);
        assert!(lines[1].starts_with(r#"{"summary":"#));
        assert!(!text.contains("wall"));
    }
}
