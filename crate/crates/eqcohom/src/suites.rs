//! Verification suites: each instantiates a family of identities over a
//! bounded parameter grid and records every failure.

use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub p: i64,
    pub seed: Option<u64>,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>, p: i64) -> Self {
        Self { name: name.into(), p, ..Default::default() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !cond {
            self.failures.push(msg());
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.checked += 1;
        self.failures.push(msg.into());
    }

    /// Records the outcome of a fallible check; errors count as failures.
    pub fn record(&mut self, label: &str, r: crate::Result<bool>) {
        match r {
            Ok(ok) => self.check(ok, || label.to_string()),
            Err(e) => self.fail(format!("{label}: {e}")),
        }
    }

    pub fn merge(&mut self, o: SuiteReport) {
        self.checked += o.checked;
        self.skipped += o.skipped;
        self.failures.extend(o.failures);
    }
}
