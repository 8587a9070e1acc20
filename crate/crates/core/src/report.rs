//! Machine-readable check reports.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        anchor: &str,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            id: id.into(),
            anchor: anchor.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    /// A check whose outcome is a predicate rather than an equality.
    pub fn holds(id: impl Into<String>, anchor: &str, pass: bool, detail: impl ToString) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            expected: "true".into(),
            actual: if pass {
                "true".into()
            } else {
                format!("false ({})", detail.to_string())
            },
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub path: String,
    pub sha256: String,
}

impl Fixture {
    pub fn new(path: &str, contents: &str) -> Self {
        Fixture {
            path: path.into(),
            sha256: sha256_hex(contents.as_bytes()),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub field: String,
    pub seed: u64,
    pub fixtures: Vec<Fixture>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str, field: &str, seed: u64) -> Self {
        Report {
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            field: field.into(),
            seed,
            fixtures: Vec::new(),
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, c: Check) {
        self.pass &= c.pass;
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.push(c);
        }
    }

    /// Sorts checks by id so parallel producers emit a fixed order.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.fixtures.sort_by(|a, b| a.path.cmp(&b.path));
        self.pass = self.checks.iter().all(|c| c.pass);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "suite {} (field {}, seed {})\n",
            self.suite, self.field, self.seed
        );
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!(
                "{tag} {} [{}] expected={} actual={}\n",
                c.id, c.anchor, c.expected, c.actual
            ));
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        s.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        s
    }
}
