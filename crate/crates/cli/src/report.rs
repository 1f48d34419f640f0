//! Machine-readable verification reports.
//!
//! Reports carry only deterministic content (verdicts, counts, parameters,
//! failure records), so repeated runs with identical arguments produce
//! byte-identical output in both renderings; wall time goes to stderr.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub cases: u64,
    /// Cases run per individual check.
    pub counts: BTreeMap<String, u64>,
    /// Measured quantities (convergence errors, fitted slopes).
    pub metrics: BTreeMap<String, String>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn new(suite: &str) -> Self {
        VerifyReport {
            suite: suite.to_string(),
            parameters: BTreeMap::new(),
            cases: 0,
            counts: BTreeMap::new(),
            metrics: BTreeMap::new(),
            failures: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn count(&mut self, check: &str) {
        self.cases += 1;
        *self.counts.entry(check.to_string()).or_insert(0) += 1;
    }

    pub fn fail(&mut self, check: &str, inputs: String, lhs: String, rhs: String) {
        self.failures.push(Failure { check: check.to_string(), inputs, lhs, rhs });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn render_json(&self) -> String {
        let value = serde_json::json!({
            "suite": self.suite,
            "parameters": self.parameters,
            "cases": self.cases,
            "counts": self.counts,
            "metrics": self.metrics,
            "failures": self.failures,
            "verdict": self.verdict(),
        });
        let mut out = serde_json::to_string_pretty(&value).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        out.push_str("parameters:\n");
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        out.push_str(&format!("cases: {}\n", self.cases));
        out.push_str("counts:\n");
        for (k, v) in &self.counts {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        if !self.metrics.is_empty() {
            out.push_str("metrics:\n");
            for (k, v) in &self.metrics {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        out.push_str(&format!("failures: {}\n", self.failures.len()));
        for (i, f) in self.failures.iter().enumerate() {
            out.push_str(&format!("failure[{i}]:\n"));
            out.push_str(&format!("  check: {}\n", f.check));
            out.push_str(&format!("  inputs: {}\n", f.inputs));
            out.push_str(&format!("  lhs: {}\n", f.lhs));
            out.push_str(&format!("  rhs: {}\n", f.rhs));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_failures() {
        let mut r = VerifyReport::new("demo");
        r.count("x");
        assert_eq!(r.verdict(), "pass");
        r.fail("x", "m=1".into(), "1".into(), "0".into());
        assert_eq!(r.verdict(), "fail");
        let json = r.render_json();
        assert!(json.contains("\"verdict\": \"fail\""));
        let human = r.render_human();
        assert!(human.contains("failure[0]:"));
        assert!(human.contains("verdict: fail"));
    }

    #[test]
    fn rendering_is_stable() {
        let mut r = VerifyReport::new("demo");
        r.param("max", 3);
        r.count("b");
        r.count("a");
        assert_eq!(r.render_json(), r.clone().render_json());
        // maps render in key order regardless of insertion order
        let human = r.render_human();
        let a = human.find("  a: ").unwrap();
        let b = human.find("  b: ").unwrap();
        assert!(a < b);
    }
}
