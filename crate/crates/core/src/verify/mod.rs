//! Batch verification of every identity and round trip over a range.
//!
//! Each check compares library output against an independent [`Oracle`] or
//! against a second implementation, splits its range into chunks that run on
//! the rayon pool, and merges violations back in input order, so reports do
//! not depend on scheduling.

mod checks;
pub mod oracle;

use std::fmt::{self, Display};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use oracle::Oracle;

/// Violations kept per check; the count is always exact.
pub const VIOLATION_CAP: usize = 10;

const CHUNK: i64 = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Inclusive range of tested indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRange {
    pub start: i64,
    pub end: i64,
}

impl CheckRange {
    pub fn new(start: i64, end: i64) -> Self {
        CheckRange { start, end }
    }
}

impl Display for CheckRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub range: CheckRange,
    pub passed: bool,
    pub violation_count: u64,
    /// The first [`VIOLATION_CAP`] violations in input order.
    pub violations: Vec<Violation>,
    pub elapsed_secs: f64,
}

impl CheckReport {
    pub fn new(check_id: &str, range: CheckRange, sink: Sink, elapsed_secs: f64) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            range,
            passed: sink.count == 0,
            violation_count: sink.count,
            violations: sink.items,
            elapsed_secs,
        }
    }

    /// `PASS id [start, end] violations=0 elapsed=0.012s`, then one indented
    /// line per kept violation.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} violations={} elapsed={:.3}s\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_id,
            self.range,
            self.violation_count,
            self.elapsed_secs
        );
        for v in &self.violations {
            out += &format!(
                "  input={} expected={} actual={}\n",
                v.input, v.expected, v.actual
            );
        }
        out
    }
}

pub fn reports_to_text(reports: &[CheckReport]) -> String {
    reports.iter().map(CheckReport::to_text).collect()
}

pub fn reports_to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Collects violations, keeping the first [`VIOLATION_CAP`].
#[derive(Debug, Default)]
pub struct Sink {
    items: Vec<Violation>,
    count: u64,
}

impl Sink {
    pub fn fail(&mut self, input: impl Display, expected: impl Display, actual: impl Display) {
        self.count += 1;
        if self.items.len() < VIOLATION_CAP {
            self.items.push(Violation {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub fn expect<T: PartialEq + Display>(&mut self, input: impl Display, expected: T, actual: T) {
        if expected != actual {
            self.fail(input, expected, actual);
        }
    }

    /// Like [`Sink::expect`], recording an error as the actual value.
    pub fn expect_ok<T: PartialEq + Display>(
        &mut self,
        input: impl Display,
        expected: T,
        actual: Result<T>,
    ) {
        match actual {
            Ok(v) => self.expect(input, expected, v),
            Err(e) => self.fail(input, expected, format!("error: {e}")),
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    fn absorb(&mut self, other: Sink) {
        self.count += other.count;
        let room = VIOLATION_CAP - self.items.len();
        self.items.extend(other.items.into_iter().take(room));
    }
}

/// Runs `f` on every index of `[lo, hi]` in parallel chunks, merging in order.
pub(crate) fn scan<F>(lo: i64, hi: i64, f: F) -> Sink
where
    F: Fn(i64, &mut Sink) + Sync,
{
    let mut total = Sink::default();
    if hi < lo {
        return total;
    }
    let chunks = ((hi - lo) / CHUNK + 1) as usize;
    let parts: Vec<Sink> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = lo + c as i64 * CHUNK;
            let end = (start + CHUNK - 1).min(hi);
            let mut sink = Sink::default();
            for i in start..=end {
                f(i, &mut sink);
            }
            sink
        })
        .collect();
    for part in parts {
        total.absorb(part);
    }
    total
}

/// Runs the check closure and wraps its output in a report.
type CheckFn = fn(u64) -> Result<(CheckRange, Sink)>;

pub struct CheckInfo {
    pub id: &'static str,
    pub description: &'static str,
    run: CheckFn,
}

impl CheckInfo {
    pub fn run(&self, limit: u64) -> Result<CheckReport> {
        let started = Instant::now();
        let (range, sink) = (self.run)(limit)?;
        Ok(CheckReport::new(
            self.id,
            range,
            sink,
            started.elapsed().as_secs_f64(),
        ))
    }
}

/// Every registered check, in canonical order.
pub fn registry() -> &'static [CheckInfo] {
    checks::REGISTRY
}

pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

/// Looks up `selection` (or all checks for `"all"`) and runs them in order.
pub fn run_checks<S: AsRef<str>>(selection: &[S], limit: u64) -> Result<Vec<CheckReport>> {
    if limit == 0 {
        return Err(Error::OutOfDomain("limit must be at least 1".into()));
    }
    let mut chosen: Vec<&CheckInfo> = Vec::new();
    for id in selection {
        let id = id.as_ref().trim();
        if id == "all" {
            chosen.extend(registry());
            continue;
        }
        let info = registry()
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
        chosen.push(info);
    }
    chosen.iter().map(|c| c.run(limit)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_merges_in_order_and_caps() {
        let sink = scan(0, 10_000, |i, s| {
            if i % 7 == 0 {
                s.fail(i, 0, 1)
            }
        });
        assert_eq!(sink.count(), 1429);
        let inputs: Vec<_> = sink.items.iter().map(|v| v.input.as_str()).collect();
        assert_eq!(
            inputs,
            ["0", "7", "14", "21", "28", "35", "42", "49", "56", "63"]
        );
    }

    #[test]
    fn empty_range() {
        assert_eq!(scan(5, 4, |_, s| s.fail(0, 0, 0)).count(), 0);
    }

    #[test]
    fn unknown_check_is_rejected() {
        assert_eq!(
            run_checks(&["nope"], 10).unwrap_err(),
            Error::UnknownCheck("nope".into())
        );
    }

    #[test]
    fn ids_are_unique() {
        let mut ids = check_ids();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
    }
}
