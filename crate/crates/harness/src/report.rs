//! Suite reports. Everything except the optional `runtime_ms` is a function of
//! the suite name and its parameters, so reruns produce identical JSON.

use serde::{Deserialize, Serialize};

pub const REPORT_FORMAT: &str = "omegabench-report/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// How many counterexamples a report keeps, smallest first.
pub const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictValue {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl Counterexample {
    /// Order used for shrinking: shorter inputs come from smaller bounds.
    fn size_key(&self) -> (usize, &str) {
        (self.input.chars().count(), &self.input)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: VerdictValue,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub bound: Option<u64>,
    pub seed: u64,
    pub trees: Vec<String>,
    pub budget: usize,
    pub random_cases: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub format: String,
    pub tool_version: String,
    pub suite: String,
    pub parameters: Parameters,
    pub cases_total: u64,
    pub cases_failed: u64,
    pub cases_inconclusive: u64,
    /// `cases_inconclusive / cases_total`.
    pub inconclusive_rate: f64,
    pub verdict: Verdict,
    /// Counts of named sub-outcomes, e.g. which classification path a word
    /// took; sorted by name.
    pub tallies: Vec<(String, u64)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

/// Result of checking one case; a case may bundle several checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseResult {
    pub checks: u64,
    pub inconclusive: u64,
    pub failures: Vec<Counterexample>,
    pub tallies: Vec<&'static str>,
}

impl CaseResult {
    pub fn pass(checks: u64) -> Self {
        CaseResult {
            checks,
            ..Self::default()
        }
    }

    pub fn inconclusive() -> Self {
        CaseResult {
            checks: 1,
            inconclusive: 1,
            ..Self::default()
        }
    }

    pub fn fail(input: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        CaseResult {
            checks: 1,
            failures: vec![Counterexample {
                input: input.into(),
                expected: expected.to_string(),
                got: got.to_string(),
            }],
            ..Self::default()
        }
    }

    /// Checks `got == expected` for a single input.
    pub fn compare<T: PartialEq + ToString>(input: impl Into<String>, expected: T, got: T) -> Self {
        if expected == got {
            Self::pass(1)
        } else {
            Self::fail(input, expected, got)
        }
    }

    pub fn tally(mut self, name: &'static str) -> Self {
        self.tallies.push(name);
        self
    }

    pub fn merge(&mut self, other: CaseResult) {
        self.checks += other.checks;
        self.inconclusive += other.inconclusive;
        self.failures.extend(other.failures);
        self.tallies.extend(other.tallies);
    }
}

impl SuiteReport {
    /// Aggregates case results. The outcome does not depend on the order of
    /// `results` beyond ties between equally sized counterexamples, which are
    /// broken by input text.
    pub fn build(suite: &str, parameters: Parameters, results: Vec<CaseResult>) -> Self {
        let mut total = CaseResult::default();
        for r in results {
            total.merge(r);
        }
        let cases_failed = total.failures.len() as u64;
        let mut counterexamples = total.failures;
        counterexamples.sort_by(|a, b| a.size_key().cmp(&b.size_key()));
        counterexamples.dedup();
        counterexamples.truncate(MAX_COUNTEREXAMPLES);
        let value = if cases_failed > 0 {
            VerdictValue::Fail
        } else if total.inconclusive == total.checks && total.checks > 0 {
            VerdictValue::Inconclusive
        } else {
            VerdictValue::Pass
        };
        let mut tallies: Vec<(String, u64)> = Vec::new();
        total.tallies.sort_unstable();
        for t in total.tallies {
            match tallies.last_mut() {
                Some((name, n)) if name == t => *n += 1,
                _ => tallies.push((t.to_owned(), 1)),
            }
        }
        SuiteReport {
            format: REPORT_FORMAT.to_owned(),
            tool_version: TOOL_VERSION.to_owned(),
            suite: suite.to_owned(),
            parameters,
            cases_total: total.checks,
            cases_failed,
            cases_inconclusive: total.inconclusive,
            inconclusive_rate: if total.checks == 0 {
                0.0
            } else {
                total.inconclusive as f64 / total.checks as f64
            },
            verdict: Verdict {
                value,
                counterexamples,
            },
            tallies,
            runtime_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: {:?} ({} cases, {} failed, {} inconclusive)",
            self.suite, self.verdict.value, self.cases_total, self.cases_failed, self.cases_inconclusive
        );
        if let Some(c) = self.verdict.counterexamples.first() {
            s.push_str(&format!("; smallest counterexample {} expected {} got {}", c.input, c.expected, c.got));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Parameters {
        Parameters {
            bound: Some(3),
            seed: 1,
            trees: vec![],
            budget: 10,
            random_cases: 0,
        }
    }

    #[test]
    fn failures_sorted_smallest_first() {
        let results = vec![
            CaseResult::pass(5),
            CaseResult::fail("0(12)", "yes", "no"),
            CaseResult::fail("(1)", "yes", "no"),
            CaseResult::inconclusive(),
        ];
        let r = SuiteReport::build("s", params(), results);
        assert_eq!(r.cases_total, 8);
        assert_eq!(r.cases_failed, 2);
        assert_eq!(r.cases_inconclusive, 1);
        assert_eq!(r.verdict.value, VerdictValue::Fail);
        assert_eq!(r.verdict.counterexamples[0].input, "(1)");
        assert!(r.cases_failed + r.cases_inconclusive <= r.cases_total);
    }

    #[test]
    fn json_is_stable_without_timing() {
        let r = SuiteReport::build("s", params(), vec![CaseResult::pass(1).tally("a")]);
        assert!(!r.to_json().contains("runtime_ms"));
        let back: SuiteReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.verdict.value, VerdictValue::Pass);
        assert_eq!(r.tallies, vec![("a".to_string(), 1)]);
    }
}
