use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One failed check with its witness in the module's text formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub witness: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification run. `passed` holds exactly when `failures` is
/// empty; `expected_failures` records known degenerate cases that don't count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_min: usize,
    pub n_max: usize,
    pub parameters: BTreeMap<String, String>,
    pub cases_checked: u64,
    pub passed: bool,
    pub failures: Vec<Failure>,
    #[serde(default)]
    pub expected_failures: Vec<Failure>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default)]
    pub operations: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: &str, n_min: usize, n_max: usize) -> Self {
        Self {
            suite: suite.to_string(),
            n_min,
            n_max,
            parameters: BTreeMap::new(),
            cases_checked: 0,
            passed: true,
            failures: Vec::new(),
            expected_failures: Vec::new(),
            notes: Vec::new(),
            operations: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub(crate) fn fail(
        &mut self,
        check: &str,
        witness: impl Display,
        expected: impl Display,
        actual: impl Display,
    ) {
        self.failures.push(Failure {
            check: check.to_string(),
            witness: witness.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
        self.passed = false;
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Display) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self.passed = self.failures.is_empty();
        self
    }

    /// Moves failures of the given check, labelled or not, into
    /// `expected_failures`.
    pub(crate) fn expect_failures(&mut self, check: &str) {
        let (expected, rest) = std::mem::take(&mut self.failures)
            .into_iter()
            .partition(|f| f.check == check || f.check.ends_with(&format!(": {check}")));
        self.failures = rest;
        self.expected_failures.extend::<Vec<_>>(expected);
        self.passed = self.failures.is_empty();
    }

    /// Folds another report's counts and failures into this one.
    pub(crate) fn absorb(&mut self, other: VerificationReport) {
        self.cases_checked += other.cases_checked;
        self.failures.extend(other.failures);
        self.expected_failures.extend(other.expected_failures);
        self.notes.extend(other.notes);
        self.passed = self.failures.is_empty();
    }

    /// Key-value text form, one `key = value` per line.
    pub fn to_document(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedReport(e.to_string()))
    }

    pub fn from_document(text: &str) -> Result<Self> {
        let bad = |line: &str| Error::MalformedReport(line.to_string());
        let mut report = VerificationReport::new("", 0, 0);
        let mut failure_slots: BTreeMap<(bool, usize), Failure> = BTreeMap::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (key, value) = line.split_once(" = ").ok_or_else(|| bad(line))?;
            let number = |v: &str| v.parse::<u64>().map_err(|_| bad(line));
            match key {
                "suite" => report.suite = value.to_string(),
                "n_min" => report.n_min = number(value)? as usize,
                "n_max" => report.n_max = number(value)? as usize,
                "cases_checked" => report.cases_checked = number(value)?,
                "passed" => report.passed = value.parse().map_err(|_| bad(line))?,
                "elapsed_ms" => report.elapsed_ms = number(value)?,
                "failures" | "expected_failures" => {}
                "note" => report.notes.push(value.to_string()),
                "operation" => report.operations.push(value.to_string()),
                _ => {
                    if let Some(name) = key.strip_prefix("param.") {
                        report.param(name, value);
                        continue;
                    }
                    let (expected, rest) = match key.strip_prefix("expected_failure.") {
                        Some(rest) => (true, rest),
                        None => (
                            false,
                            key.strip_prefix("failure.").ok_or_else(|| bad(line))?,
                        ),
                    };
                    let (index, field) = rest.split_once('.').ok_or_else(|| bad(line))?;
                    let index = number(index)? as usize;
                    let slot = failure_slots
                        .entry((expected, index))
                        .or_insert_with(|| Failure {
                            check: String::new(),
                            witness: String::new(),
                            expected: String::new(),
                            actual: String::new(),
                        });
                    let target = match field {
                        "check" => &mut slot.check,
                        "witness" => &mut slot.witness,
                        "expected" => &mut slot.expected,
                        "actual" => &mut slot.actual,
                        _ => return Err(bad(line)),
                    };
                    *target = value.to_string();
                }
            }
        }
        for ((expected, _), failure) in failure_slots {
            if expected {
                report.expected_failures.push(failure);
            } else {
                report.failures.push(failure);
            }
        }
        Ok(report)
    }
}

/// Several reports in one document, separated by blank lines.
pub fn reports_to_document(reports: &[VerificationReport]) -> String {
    reports
        .iter()
        .map(VerificationReport::to_document)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn reports_from_document(text: &str) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if !block.is_empty() {
                out.push(VerificationReport::from_document(&block)?);
                block.clear();
            }
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    Ok(out)
}

impl Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite = {}", self.suite)?;
        writeln!(f, "n_min = {}", self.n_min)?;
        writeln!(f, "n_max = {}", self.n_max)?;
        for (key, value) in &self.parameters {
            writeln!(f, "param.{key} = {value}")?;
        }
        writeln!(f, "cases_checked = {}", self.cases_checked)?;
        writeln!(f, "passed = {}", self.passed)?;
        writeln!(f, "elapsed_ms = {}", self.elapsed_ms)?;
        for (label, list) in [
            ("failure", &self.failures),
            ("expected_failure", &self.expected_failures),
        ] {
            writeln!(f, "{label}s = {}", list.len())?;
            for (i, x) in list.iter().enumerate() {
                let i = i + 1;
                writeln!(f, "{label}.{i}.check = {}", x.check)?;
                writeln!(f, "{label}.{i}.witness = {}", x.witness)?;
                writeln!(f, "{label}.{i}.expected = {}", x.expected)?;
                writeln!(f, "{label}.{i}.actual = {}", x.actual)?;
            }
        }
        for note in &self.notes {
            writeln!(f, "note = {note}")?;
        }
        for op in &self.operations {
            writeln!(f, "operation = {op}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new("axioms", 2, 4);
        r.param("order", "UDL");
        r.cases_checked = 7;
        r.fail("non-escher", "UD", "proper nonempty subset of 1..=2", "1,2");
        r.expect_failures("non-escher");
        r.fail("closure", "LUD", "image inside the domain", "UDL");
        r.notes.push("M*_1 is empty".into());
        r.operations.push("rho".into());
        r.passed = r.failures.is_empty();
        r
    }

    #[test]
    fn document_round_trip() {
        let r = sample();
        assert!(!r.passed);
        assert_eq!(
            VerificationReport::from_document(&r.to_document()).unwrap(),
            r
        );
        assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn several_reports() {
        let mut other = VerificationReport::new("counts", 0, 3);
        other.param("motzkin", "1,1,2,4");
        let both = vec![sample(), other];
        assert_eq!(
            reports_from_document(&reports_to_document(&both)).unwrap(),
            both
        );
    }

    #[test]
    fn malformed() {
        assert!(VerificationReport::from_document("suite axioms").is_err());
        assert!(VerificationReport::from_document("failure.x.check = a").is_err());
        assert!(VerificationReport::from_json("{").is_err());
    }
}
