use std::fmt;

use serde::Serialize;

use super::domain::DomainSummary;
use super::LawId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

/// A case where the two sides of a law disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample<T> {
    pub operands: Vec<T>,
    pub left: T,
    pub right: T,
    /// Which part of a compound law failed (e.g. `left` / `right`
    /// distributivity), when that is not obvious from the law alone.
    pub note: Option<String>,
}

impl<T> Counterexample<T> {
    pub fn new(operands: Vec<T>, left: T, right: T) -> Self {
        Counterexample {
            operands,
            left,
            right,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of checking one law over a finite domain.
///
/// `verdict` is `Holds` exactly when `failures` is zero; `counterexamples`
/// keeps the first few failures in lexicographic operand order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport<T> {
    pub law: LawId,
    pub domain: DomainSummary,
    pub checked: u64,
    pub verdict: Verdict,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample<T>>,
}

impl<T: fmt::Display> LawReport<T> {
    pub fn to_record(&self, expected: Option<Verdict>) -> LawRecord {
        LawRecord {
            law: self.law.name().to_string(),
            verdict: self.verdict,
            expected,
            shape: self.domain.shape.clone(),
            magnitudes: self.domain.magnitudes,
            universe: self.domain.universe,
            checked: self.checked,
            failures: self.failures,
            counterexamples: self
                .counterexamples
                .iter()
                .map(|c| CounterexampleRecord {
                    operands: c.operands.iter().map(ToString::to_string).collect(),
                    left: c.left.to_string(),
                    right: c.right.to_string(),
                    note: c.note.clone(),
                })
                .collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for LawReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<20} {}  (shape {:?}, {} magnitudes, {} elements, {} cases checked, {} failures)",
            self.law.name(),
            self.verdict,
            self.domain.shape,
            self.domain.magnitudes,
            self.domain.universe,
            self.checked,
            self.failures
        )?;
        for c in &self.counterexamples {
            let operands: Vec<String> = c.operands.iter().map(ToString::to_string).collect();
            write!(
                f,
                "\n    [{}]: {} != {}",
                operands.join(", "),
                c.left,
                c.right
            )?;
            if let Some(note) = &c.note {
                write!(f, "  ({note})")?;
            }
        }
        Ok(())
    }
}

/// Machine-readable form of a report; values are in canonical literal syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawRecord {
    pub law: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Verdict>,
    pub shape: Vec<u32>,
    pub magnitudes: usize,
    pub universe: usize,
    pub checked: u64,
    pub failures: u64,
    pub counterexamples: Vec<CounterexampleRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleRecord {
    pub operands: Vec<String>,
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}
