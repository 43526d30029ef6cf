//! Worked example codes with their stated parameters.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Instance, Status, VerificationReport, VerifyOptions};
use crate::codes::{build_code, Parameters};
use crate::cosets::LengthKind;
use crate::distance::min_distance;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example {
    /// Label as printed alongside the example.
    pub label: String,
    pub q: u64,
    pub n: u64,
    /// Designed distances that all give this code.
    pub deltas: (u64, u64),
    pub expected: Parameters,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

fn ex(q: u64, n: u64, deltas: (u64, u64), (k, d): (u64, u64)) -> Example {
    let label = if deltas.0 == deltas.1 {
        format!("C_({q},{n},{},0)", deltas.0)
    } else {
        format!("C_({q},{n},{}..={},0)", deltas.0, deltas.1)
    };
    Example {
        label,
        q,
        n,
        deltas,
        expected: Parameters { n, k, d },
        note: None,
    }
}

fn relabel(mut e: Example, label: &str, note: &str) -> Example {
    e.label = label.to_string();
    e.note = Some(note.to_string());
    e
}

pub fn example_catalogue() -> Vec<Example> {
    vec![
        // large dimension, length (q^m-1)/2
        ex(3, 121, (6, 6), (106, 6)),
        ex(3, 40, (6, 6), (28, 6)),
        ex(5, 12, (4, 4), (8, 4)),
        ex(7, 24, (5, 5), (18, 5)),
        ex(9, 40, (6, 6), (32, 6)),
        // small dimension, length (q^m-1)/2
        ex(3, 121, (67, 81), (5, 81)),
        ex(3, 121, (63, 63), (15, 63)),
        ex(3, 40, (22, 27), (4, 27)),
        ex(3, 40, (14, 21), (8, 21)),
        ex(5, 62, (48, 50), (3, 50)),
        // large dimension, length (q^m+1)/2
        ex(3, 122, (3, 3), (112, 5)),
        ex(5, 63, (4, 4), (51, 7)),
        ex(5, 63, (5, 5), (45, 9)),
        ex(5, 13, (4, 4), (5, 7)),
        // small dimension, length (q^m+1)/2
        relabel(
            ex(5, 13, (3, 4), (5, 7)),
            "C_(3,121,δ,0), 3 <= δ <= 4",
            "label names q = 3, n = 121; the stated [13, 5, 7] and range fit q = 5, n = 13",
        ),
        ex(7, 25, (7, 9), (5, 17)),
        // distance 2 designs
        ex(9, 41, (2, 2), (37, 4)),
        ex(3, 41, (2, 2), (33, 5)),
        relabel(
            ex(7, 25, (2, 2), (21, 4)),
            "C_(5,25,2,0)",
            "length 25 = (q^m+1)/2 needs q = 7; the stated [25, 21, 4] holds there",
        ),
        relabel(
            ex(9, 40, (2, 2), (38, 2)),
            "C_(9,41,2,0)",
            "stated [40, 38, 2] is the length-40 code; length 41 gives [41, 37, 4]",
        ),
        ex(3, 13, (2, 2), (10, 3)),
        ex(3, 40, (2, 2), (36, 3)),
        ex(5, 12, (3, 3), (8, 4)),
    ]
}

/// Observed dimension and distance bracket of one code.
#[derive(Clone, Debug)]
struct Observed {
    m: Option<(u32, LengthKind)>,
    k: u64,
    lower: u64,
    upper: u64,
    runtime_ms: f64,
}

fn observe(q: u64, n: u64, delta: u64, opts: &VerifyOptions) -> Result<Observed, String> {
    let start = Instant::now();
    let code = build_code(q, n, delta, 0).map_err(|e| e.to_string())?;
    let r = min_distance(&code, &opts.distance).map_err(|e| e.to_string())?;
    Ok(Observed {
        m: code.length_kind(),
        k: code.dimension(),
        lower: r.lower.value,
        upper: r.upper.value,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn judge(obs: &Observed, exp: Parameters) -> Status {
    if obs.k != exp.k || exp.d < obs.lower || exp.d > obs.upper {
        Status::Fail
    } else if obs.lower == obs.upper {
        Status::Pass
    } else {
        Status::Skipped
    }
}

/// Instances for every example; each distinct code's distance is computed
/// once.
pub(super) fn example_instances(opts: &VerifyOptions) -> Vec<Instance> {
    let catalogue = example_catalogue();
    let keys: BTreeSet<(u64, u64, u64)> = catalogue
        .iter()
        .flat_map(|e| (e.deltas.0..=e.deltas.1).map(move |d| (e.q, e.n, d)))
        .collect();
    let observed: BTreeMap<_, _> = keys
        .into_par_iter()
        .map(|key @ (q, n, delta)| (key, observe(q, n, delta, opts)))
        .collect();
    catalogue
        .iter()
        .flat_map(|e| (e.deltas.0..=e.deltas.1).map(move |delta| (e, delta)))
        .map(|(e, delta)| {
            let exp = e.expected;
            let mut inst = Instance::new(e.q).n(e.n).delta(delta);
            let expected = format!("[{}, {}, {}]", exp.n, exp.k, exp.d);
            inst = match &observed[&(e.q, e.n, delta)] {
                Err(err) => inst.error(expected, err),
                Ok(obs) => {
                    if let Some((m, kind)) = obs.m {
                        inst = inst.m(m).kind(kind);
                    }
                    let d = if obs.lower == obs.upper {
                        obs.lower.to_string()
                    } else {
                        format!("{}..={}", obs.lower, obs.upper)
                    };
                    if opts.timing {
                        inst.runtime_ms = Some(obs.runtime_ms);
                    }
                    inst.outcome(
                        expected,
                        format!("[{}, {}, {d}]", e.n, obs.k),
                        judge(obs, exp),
                    )
                }
            };
            let inst = inst.note(e.label.clone());
            match &e.note {
                Some(n) => inst.note(n.clone()),
                None => inst,
            }
        })
        .collect()
}

/// Rebuild every example and compare its `[n, k, d]`.
pub fn reproduce_examples(opts: &VerifyOptions) -> VerificationReport {
    let claim = super::registry()
        .iter()
        .find(|c| c.id == "examples")
        .expect("registered");
    let grid = if opts.extended {
        claim.grid.1
    } else {
        claim.grid.0
    };
    VerificationReport::new(claim.id, claim.statement, grid, example_instances(opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_labels_are_consistent() {
        for e in example_catalogue() {
            assert!(e.deltas.0 <= e.deltas.1);
            assert_eq!(e.expected.n, e.n);
            if e.note.is_none() {
                assert!(
                    e.label.starts_with(&format!("C_({},{},", e.q, e.n)),
                    "{}",
                    e.label
                );
            }
        }
    }

    #[test]
    fn judge_uses_the_bracket() {
        let exp = Parameters { n: 13, k: 10, d: 3 };
        let obs = |k, lower, upper| Observed {
            m: None,
            k,
            lower,
            upper,
            runtime_ms: 0.0,
        };
        assert_eq!(judge(&obs(10, 3, 3), exp), Status::Pass);
        assert_eq!(judge(&obs(10, 2, 4), exp), Status::Skipped);
        assert_eq!(judge(&obs(10, 4, 4), exp), Status::Fail);
        assert_eq!(judge(&obs(9, 3, 3), exp), Status::Fail);
    }
}
