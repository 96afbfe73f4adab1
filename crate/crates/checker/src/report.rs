//! Check results and their serialized forms.
//!
//! Serialization is byte-deterministic: identical configurations yield
//! identical report text. The `elapsed_ms` field demanded by the wire
//! format is therefore reserved and always written as 0 — real wall-clock
//! measurements live in the in-memory report (`elapsed`) and belong on a
//! diagnostic stream, never in the data.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::config::{CheckConfig, PropertyId};

/// Outcome of one property check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every checked case passed.
    Holds,
    /// At least one case that should have passed failed.
    Fails,
    /// The unconditional statement fails, but every failure lies outside
    /// the property's stated side condition.
    HoldsConditionally,
    /// The check could not run to completion; see the note.
    Error,
}

/// A reproducible failing case.
///
/// `bindings` name the inputs (as literals re-parseable by the algebra);
/// `lhs`/`rhs` record the property-specific witness pair, rendered so that
/// a genuine violation shows as `lhs != rhs`. `note` says which aspect of
/// the property failed and how to read the sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub property: PropertyId,
    pub bindings: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

/// Result of checking a single property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: PropertyId,
    pub verdict: Verdict,
    pub cases_checked: u64,
    pub sampled: bool,
    pub counterexamples: Vec<Counterexample>,
    /// Sampling fraction, error text, or side-condition summary.
    pub note: Option<String>,
    /// Real wall-clock time of the check. In-memory only; serialized
    /// reports carry a zeroed placeholder instead.
    pub elapsed: Duration,
}

/// A full run: one entry per requested property, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub config: CheckConfig,
    pub entries: Vec<PropertyReport>,
}

#[derive(Serialize)]
struct RecordWire<'a> {
    property: &'a str,
    verdict: &'a Verdict,
    cases_checked: u64,
    sampled: bool,
    counterexamples: &'a [Counterexample],
    /// Reserved; always 0 so identical configurations serialize
    /// identically.
    elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: &'a Option<String>,
}

impl Report {
    /// One JSON object per line, one line per property.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let wire = RecordWire {
                property: e.property.name(),
                verdict: &e.verdict,
                cases_checked: e.cases_checked,
                sampled: e.sampled,
                counterexamples: &e.counterexamples,
                elapsed_ms: 0,
                note: &e.note,
            };
            out.push_str(&serde_json::to_string(&wire).expect("report serializes"));
            out.push('\n');
        }
        out
    }

    /// Human-oriented lines: one summary line per property, counterexample
    /// detail lines indented beneath, and a closing tally.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = write!(
                out,
                "property={} verdict={:?} cases={} sampled={}",
                e.property, e.verdict, e.cases_checked, e.sampled
            );
            if let Some(note) = &e.note {
                let _ = write!(out, " note={note:?}");
            }
            out.push('\n');
            for c in &e.counterexamples {
                out.push_str("  counterexample");
                for (k, v) in &c.bindings {
                    let _ = write!(out, " {k}={v}");
                }
                let _ = write!(out, " lhs={} rhs={}", c.lhs, c.rhs);
                if !c.note.is_empty() {
                    let _ = write!(out, " note={:?}", c.note);
                }
                out.push('\n');
            }
        }
        let tally = |v: Verdict| self.entries.iter().filter(|e| e.verdict == v).count();
        let _ = write!(
            out,
            "checked {} properties: {} Holds, {} HoldsConditionally, {} Fails, {} Error\n",
            self.entries.len(),
            tally(Verdict::Holds),
            tally(Verdict::HoldsConditionally),
            tally(Verdict::Fails),
            tally(Verdict::Error),
        );
        out
    }

    /// True when every verdict is the expected one: `Holds` everywhere,
    /// except `Distribution`, whose expected verdict is
    /// `HoldsConditionally`.
    pub fn is_expected(&self) -> bool {
        self.entries.iter().all(|e| match e.verdict {
            Verdict::Holds => true,
            Verdict::HoldsConditionally => e.property == PropertyId::Distribution,
            Verdict::Fails | Verdict::Error => false,
        })
    }
}
