//! Experiment reports with deterministic serialisation: sorted keys and
//! floats rounded to 9 significant digits.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Library operation the check drives.
    pub operation: String,
    /// The inequality or identity under test.
    pub anchor: String,
    pub expected: Value,
    pub observed: Value,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, operation: &str, anchor: &str) -> CheckBuilder {
        CheckBuilder { name: name.into(), operation: operation.into(), anchor: anchor.into(), tolerance: None }
    }
}

pub struct CheckBuilder {
    name: String,
    operation: String,
    anchor: String,
    tolerance: Option<f64>,
}

impl CheckBuilder {
    pub fn tol(mut self, tolerance: f64) -> Self {
        self.tolerance = Some(tolerance);
        self
    }

    pub fn result(self, expected: impl Into<Value>, observed: impl Into<Value>, pass: bool) -> Check {
        Check {
            name: self.name,
            operation: self.operation,
            anchor: self.anchor,
            expected: expected.into(),
            observed: observed.into(),
            tolerance: self.tolerance,
            pass,
        }
    }

    /// `observed ≤ bound + tol`.
    pub fn at_most(self, bound: f64, observed: f64) -> Check {
        let tol = self.tolerance.unwrap_or(0.0);
        self.result(format!("<= {}", fmt9(bound)), observed, observed <= bound + tol)
    }

    /// `observed ≥ bound − tol`.
    pub fn at_least(self, bound: f64, observed: f64) -> Check {
        let tol = self.tolerance.unwrap_or(0.0);
        self.result(format!(">= {}", fmt9(bound)), observed, observed >= bound - tol)
    }

    /// `|observed − expected| ≤ tol`.
    pub fn close(self, expected: f64, observed: f64) -> Check {
        let tol = self.tolerance.unwrap_or(0.0);
        self.result(expected, observed, (observed - expected).abs() <= tol)
    }

    pub fn equal<T: PartialEq + Into<Value>>(self, expected: T, observed: T) -> Check {
        let pass = expected == observed;
        self.result(expected, observed, pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Only filled in on request; leaving it out keeps output byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    pub pass: bool,
}

impl ExperimentReport {
    pub fn new(experiment: &str, seed: u64) -> Self {
        Self {
            experiment: experiment.into(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            seed,
            runtime_ms: None,
            pass: true,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.into(), value.into());
        self
    }

    pub fn push(&mut self, check: Check) -> &mut Self {
        self.pass &= check.pass;
        self.checks.push(check);
        self
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Canonical JSON value (sorted keys, 9 significant digits).
    pub fn to_value(&self) -> Value {
        canonicalize(serde_json::to_value(self).expect("report serialises"))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("value serialises")
    }

    /// Plain-text table.
    pub fn to_text(&self) -> String {
        let mut out = format!("experiment {} (seed {})\n", self.experiment, self.seed);
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "  [{mark}] {:<40} observed {} expected {}\n",
                c.name,
                render(&canonicalize(c.observed.clone())),
                render(&canonicalize(c.expected.clone()))
            ));
        }
        out.push_str(&format!("overall: {}\n", if self.pass { "PASS" } else { "FAIL" }));
        if let Some(ms) = self.runtime_ms {
            out.push_str(&format!("runtime: {ms} ms\n"));
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Rounds to 9 significant digits.
pub fn round9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

/// Human form of [`round9`].
pub fn fmt9(x: f64) -> String {
    let r = round9(x);
    if r.is_finite() {
        format!("{r}")
    } else {
        format!("{x}")
    }
}

/// Rebuilds `v` with sorted object keys, integral values kept as integers,
/// and every other float rounded to 9 significant digits. Non-finite floats
/// become strings.
pub fn canonicalize(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let sorted: BTreeMap<String, Value> = map.into_iter().map(|(k, v)| (k, canonicalize(v))).collect();
            Value::Object(sorted.into_iter().collect::<Map<String, Value>>())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            Number::from_f64(round9(x)).map(Value::Number).unwrap_or_else(|| Value::String(x.to_string()))
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_to_nine_digits() {
        assert_eq!(round9(5f64.sqrt()), 2.23606798);
        assert_eq!(round9(-1234567891234.0), -1234567890000.0);
        assert_eq!(round9(0.0), 0.0);
        assert_eq!(fmt9(1.0 / 3.0), "0.333333333");
    }

    #[test]
    fn canonical_json_is_sorted_and_rounded() {
        let mut r = ExperimentReport::new("demo", 0);
        r.param("zeta", 1).param("alpha", 0.1 + 0.2);
        r.push(Check::new("x", "op", "a <= b").tol(1e-9).at_most(1.0, 0.5));
        let text = r.to_json_pretty();
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(text.contains("0.3,") || text.contains("0.3\n"));
        assert!(!text.contains("runtime_ms"));
        assert!(r.pass);
        r.push(Check::new("y", "op", "a = b").equal(1, 2));
        assert!(!r.pass && r.failed_checks().count() == 1);
    }
}
