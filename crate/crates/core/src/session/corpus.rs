//! Bundled example sessions with their expected values.

use std::fmt;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::Result;

use super::parser::parse_session;
use super::run::{run_tasks, RunOptions};

#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    Equals(Value),
    PositiveInteger,
}

#[derive(Clone, Debug)]
pub struct Expectation {
    pub task: usize,
    /// JSON pointer below the task's `result`.
    pub pointer: &'static str,
    pub check: Check,
    pub claim: &'static str,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub tag: &'static str,
    pub group: &'static str,
    pub session: &'static str,
    pub expectations: Vec<Expectation>,
}

fn eq(task: usize, pointer: &'static str, v: Value, claim: &'static str) -> Expectation {
    Expectation { task, pointer, check: Check::Equals(v), claim }
}

/// The bundled sessions.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            tag: "degree-one",
            group: "rees-degree",
            session: include_str!("../../corpus/degree-one.ses"),
            expectations: vec![
                Expectation {
                    task: 0,
                    pointer: "/length",
                    check: Check::PositiveInteger,
                    claim: "λ(I/J) is finite",
                },
                eq(1, "/verdict", json!("REDUCTION"), "J is a reduction of I"),
                eq(2, "/fit/degree", json!(1), "λ(Iⁿ/Jⁿ) is a polynomial in n of degree one"),
            ],
        },
        CorpusEntry {
            tag: "four-products",
            group: "rees-degree",
            session: include_str!("../../corpus/four-products.ses"),
            expectations: vec![
                eq(0, "/grade", json!(2), "grade J = 2"),
                eq(1, "/strict", json!(true), "XZ, YW, XW+YZ is a d-sequence"),
                eq(2, "/analytic_spread", json!(3), "l(J) = 3"),
                eq(3, "/fit/degree", json!(2), "deg P(I/J) = 2"),
                eq(
                    4,
                    "/theorem_flags/d_sequence_lower_bound/status",
                    json!("verified"),
                    "I ∩ ((XZ,YW) : XW+YZ) = (XZ,YW) and grade J ≤ deg P(I/J)",
                ),
            ],
        },
        CorpusEntry {
            tag: "deviation-one",
            group: "multiplicity",
            session: include_str!("../../corpus/deviation-one.ses"),
            expectations: vec![
                eq(0, "/radical_is_maximal", json!(true), "√(J:I) = (x,y,z,w)"),
                eq(1, "/depth_positive", json!(false), "𝔪 ∈ Ass(R/J)"),
                eq(2, "/analytic_spread", json!(3), "l(J) = ht J + 1 = 3"),
                eq(3, "/t", json!(0), "t = dim R/K = 0"),
                eq(3, "/fit/degree", json!(2), "deg e(Iⁿ/Jⁿ) = deg λ(Iⁿ/Jⁿ) = 2"),
            ],
        },
        CorpusEntry {
            tag: "linear-type",
            group: "multiplicity",
            session: include_str!("../../corpus/linear-type.ses"),
            expectations: vec![
                eq(0, "/analytic_spread", json!(3), "l(J) = 3"),
                eq(1, "/is_reduction", json!(true), "xyzw is integral over J"),
                eq(2, "/stable_from", json!(1), "√(Jⁿ : Iⁿ) is constant for n = 1..3"),
            ],
        },
        CorpusEntry {
            tag: "counter-filtration",
            group: "filtration",
            session: include_str!("../../corpus/counter-filtration.ses"),
            expectations: vec![
                eq(0, "/table/values", json!([1, 1, 1, 1, 1, 1, 1, 1]), "λ(I_m/J_m) = 1 for m = 1..8"),
                eq(0, "/limit/verdict", json!("VANISHES"), "λ(I_m/J_m)/m² → 0"),
                eq(1, "/is_reduction", json!(false), "(x²,xy) is not a reduction of (x)"),
            ],
        },
    ]
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub tag: &'static str,
    pub claim: &'static str,
    pub pointer: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "PASS {}: {} [{} = {}]", self.tag, self.claim, self.pointer, self.got)
        } else {
            write!(
                f,
                "FAIL {}: {} [{}] expected {}, got {}",
                self.tag, self.claim, self.pointer, self.expected, self.got
            )
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CorpusReport {
    pub outcomes: Vec<CheckOutcome>,
    /// `(tag, elapsed_ms)` for every session run.
    pub sessions: Vec<(&'static str, u64)>,
}

impl CorpusReport {
    pub fn failures(&self) -> Vec<&CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.pass).collect()
    }

    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sessions": self.sessions.iter().map(|(t, ms)| json!({ "tag": t, "elapsed_ms": ms })).collect::<Vec<_>>(),
            "checks": self.outcomes.iter().map(|o| json!({
                "tag": o.tag, "claim": o.claim, "pointer": o.pointer,
                "expected": o.expected, "got": o.got, "pass": o.pass,
            })).collect::<Vec<_>>(),
            "failures": self.failures().len(),
        })
    }
}

fn selected(e: &CorpusEntry, filter: Option<&str>) -> bool {
    filter.is_none_or(|f| e.tag.contains(f) || e.group.contains(f))
}

fn evaluate(check: &Check, got: Option<&Value>) -> (String, bool) {
    match check {
        Check::Equals(v) => (v.to_string(), got == Some(v)),
        Check::PositiveInteger => ("a positive integer".into(), got.and_then(Value::as_u64).is_some_and(|n| n > 0)),
    }
}

/// Runs the selected entries and evaluates every expectation. `filter`
/// matches a substring of the tag or group.
pub fn verify_entries(entries: &[CorpusEntry], filter: Option<&str>) -> Result<CorpusReport> {
    let mut report = CorpusReport::default();
    for entry in entries.iter().filter(|e| selected(e, filter)) {
        let session = parse_session(entry.session)?;
        let start = Instant::now();
        let run = run_tasks(&session, &RunOptions::default())?;
        report.sessions.push((entry.tag, start.elapsed().as_millis() as u64));
        for x in &entry.expectations {
            let task = run.task(x.task);
            let got = task.and_then(|t| t["result"].pointer(x.pointer));
            let (expected, pass) = evaluate(&x.check, got);
            let got = match (got, task) {
                (Some(v), _) => v.to_string(),
                (None, Some(t)) if t["status"] == "error" => format!("error: {}", t["error"]["message"]),
                _ => "nothing".into(),
            };
            report.outcomes.push(CheckOutcome {
                tag: entry.tag,
                claim: x.claim,
                pointer: format!("/tasks/{}/result{}", x.task, x.pointer),
                expected,
                got,
                pass,
            });
        }
    }
    Ok(report)
}

pub fn verify_paper_corpus(filter: Option<&str>) -> Result<CorpusReport> {
    verify_entries(&corpus(), filter)
}
