//! Claim harness: each registered claim is checked instance by instance
//! over a parameter grid, comparing the closed form against enumeration or
//! exact distance computation.

mod claims;
mod examples;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cosets::LengthKind;
use crate::distance::DistanceOptions;

pub use examples::{example_catalogue, reproduce_examples, Example};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Out of budget; `observed` holds what was reached.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One grid point of a claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kind: Option<LengthKind>,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<f64>,
}

impl Instance {
    pub fn new(q: u64) -> Self {
        Instance {
            q,
            m: None,
            n: None,
            delta: None,
            kind: None,
            expected: String::new(),
            observed: String::new(),
            status: Status::Fail,
            note: None,
            runtime_ms: None,
        }
    }

    pub fn m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn delta(mut self, delta: u64) -> Self {
        self.delta = Some(delta);
        self
    }

    pub fn kind(mut self, kind: LengthKind) -> Self {
        self.kind = Some(kind);
        self
    }

    /// Record both sides; passes iff they are equal.
    pub fn compare<T: fmt::Debug + PartialEq>(mut self, expected: T, observed: T) -> Self {
        self.status = if expected == observed {
            Status::Pass
        } else {
            Status::Fail
        };
        self.expected = format!("{expected:?}");
        self.observed = format!("{observed:?}");
        self
    }

    pub fn outcome(mut self, expected: String, observed: String, status: Status) -> Self {
        self.expected = expected;
        self.observed = observed;
        self.status = status;
        self
    }

    pub fn error(mut self, expected: String, err: impl fmt::Display) -> Self {
        self.expected = expected;
        self.observed = format!("error: {err}");
        self.status = Status::Fail;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub statement: String,
    pub grid: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub instances: Vec<Instance>,
}

impl VerificationReport {
    pub fn new(claim: &str, statement: &str, grid: &str, instances: Vec<Instance>) -> Self {
        let count = |s| instances.iter().filter(|i| i.status == s).count();
        VerificationReport {
            claim: claim.to_string(),
            statement: statement.to_string(),
            grid: grid.to_string(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
            instances,
        }
    }

    /// No failing instance.
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Grid size selector and engine settings.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub extended: bool,
    pub distance: DistanceOptions,
    /// Record per-instance runtimes (makes output non-reproducible).
    pub timing: bool,
}

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    /// Human-readable grid description, default then extended.
    pub grid: (&'static str, &'static str),
    run: fn(&VerifyOptions) -> Vec<Instance>,
}

/// Every registered claim, in report order.
pub fn registry() -> &'static [Claim] {
    claims::REGISTRY
}

pub fn claim_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

pub fn verify(id: &str, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let claim = registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))?;
    let grid = if opts.extended {
        claim.grid.1
    } else {
        claim.grid.0
    };
    Ok(VerificationReport::new(
        claim.id,
        claim.statement,
        grid,
        (claim.run)(opts),
    ))
}

pub fn verify_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    registry()
        .iter()
        .map(|c| verify(c.id, opts).expect("registered"))
        .collect()
}

/// Run `f` over the grid in parallel, keeping grid order.
pub(crate) fn run_grid<T, F>(items: Vec<T>, opts: &VerifyOptions, f: F) -> Vec<Instance>
where
    T: Send + Sync,
    F: Fn(&T) -> Instance + Sync,
{
    items
        .par_iter()
        .map(|item| {
            let start = Instant::now();
            let mut inst = f(item);
            if opts.timing {
                inst.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            inst
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids = claim_ids();
        let total = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), total);
        assert!(matches!(
            verify("no-such-claim", &VerifyOptions::default()),
            Err(VerifyError::UnknownClaim(_))
        ));
    }

    #[test]
    fn compare_sets_status() {
        assert_eq!(Instance::new(3).compare(1, 1).status, Status::Pass);
        let bad = Instance::new(3).compare(1, 2);
        assert_eq!(
            (bad.status, bad.expected.as_str(), bad.observed.as_str()),
            (Status::Fail, "1", "2")
        );
    }
}
