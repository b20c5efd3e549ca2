mod common;

use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;

use reeslab::session::{corpus, parse_session, run_tasks, RunOptions};

fn schema() -> jsonschema::Validator {
    let text = include_str!("../../../docs/report-schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, report: &Value) {
    let errors: Vec<String> = v.iter_errors(report).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

fn floats_absent(v: &Value) -> bool {
    match v {
        Value::Number(n) => !n.is_f64(),
        Value::Array(a) => a.iter().all(floats_absent),
        Value::Object(o) => o.values().all(floats_absent),
        _ => true,
    }
}

#[test]
fn corpus_reports_match_schema() {
    let v = schema();
    for entry in corpus() {
        let s = parse_session(entry.session).unwrap();
        let r = run_tasks(&s, &RunOptions::default()).unwrap();
        assert_valid(&v, &r.json);
        assert!(floats_absent(&r.json), "{}", entry.tag);
    }
}

#[test]
fn every_task_kind_matches_schema() {
    let text = "ring q[x,y]\n\
                ideal M = x, y\nideal J = x^2, y^2\nideal I = x^2, x*y, y^2\nideal X = x\n\
                family F(m) = x^m, y\nfamily G(m) = x^(m+1), y\n\
                task length J\ntask length M J krange=1..4\ntask length M J\ntask length J krange=1..3\n\
                task rees M J\ntask reduction I J\ntask spread J\ntask grade J\ntask dseq J\n\
                task radcolon M J\ntask mult I J nrange=1..5\n\
                task filtration power M J mrange=1..5\ntask filtration explicit F G levels=5\n\
                task verify M J nrange=1..5\n\
                task length X\ntask rees J M\n";
    let s = parse_session(text).unwrap();
    let r = run_tasks(&s, &RunOptions { jobs: Some(3), default_nmax: Some(6) }).unwrap();
    assert_valid(&schema(), &r.json);
    assert_eq!(r.errors, 2, "{:#}", r.json);
    assert_eq!(r.json["tasks"][0]["result"]["length"], 4);
    assert_eq!(r.json["tasks"][1]["result"]["table"]["values"], serde_json::json!([2, 3, 3, 3]));
}

#[test]
fn cli_run_and_verify() {
    let bin = env!("CARGO_BIN_EXE_reeslab");
    let dir = std::env::temp_dir().join(format!("reeslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ses = dir.join("pair.ses");
    let out = dir.join("out.json");
    std::fs::write(&ses, "ring q[x,y]\nideal I = x, y\nideal J = x^2, y^2\ntask rees I J\ntask reduction I I\n").unwrap();
    let st = Command::new(bin)
        .args(["run", ses.to_str().unwrap(), "--json", out.to_str().unwrap(), "--jobs", "2", "--nmax", "5"])
        .status()
        .unwrap();
    assert!(st.success());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_valid(&schema(), &report);
    assert_eq!(report["tasks"][0]["result"]["fit"]["degree"], 2);
    assert_eq!(report["tasks"][1]["result"]["reduction_number"], 0);
    assert_eq!(report["tasks"][0]["result"]["direct"]["n_max_searched"], 5);

    // a task error gives exit code 1, a parse error 2
    std::fs::write(&ses, "ring q[x,y]\nideal A = x\ntask length A\n").unwrap();
    let st = Command::new(bin).args(["run", ses.to_str().unwrap()]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
    std::fs::write(&ses, "ring q[x,y]\nideal A = x + \n").unwrap();
    let st = Command::new(bin).args(["run", ses.to_str().unwrap()]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    let err = String::from_utf8_lossy(&st.stderr);
    assert!(err.contains("line 2, column 14"), "{err}");

    // the budget variable reaches the kernel
    std::fs::write(&ses, "ring q[x,y,z]\nideal I = x, y, z\nideal J = x^3, y^3, z^3\ntask rees I J\n").unwrap();
    let st = Command::new(bin).args(["run", ses.to_str().unwrap()]).env("REESLAB_BUDGET", "basis=2").output().unwrap();
    assert_eq!(st.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&st.stdout).unwrap();
    assert_eq!(report["tasks"][0]["error"]["kind"], "resource");

    let st = Command::new(bin).args(["verify-paper", "--filter", "rees-degree"]).output().unwrap();
    assert!(st.status.success());
    let text = String::from_utf8_lossy(&st.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 8, "{text}");
    assert!(!text.contains("counter-filtration"));
    std::fs::remove_dir_all(&dir).ok();
}

fn arb_poly_text() -> impl Strategy<Value = String> {
    let term = (-9i64..=9, 0u32..4, 0u32..4, 0u32..3)
        .prop_filter("nonzero", |t| t.0 != 0)
        .prop_map(|(c, a, b, e)| format!("{c}*x^{a}*y^{b}*z^{e}"));
    prop::collection::vec(term, 1..4).prop_map(|ts| ts.join(" + "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_round_trips(
        ideals in prop::collection::vec(prop::collection::vec(arb_poly_text(), 1..4), 1..4),
        poly in arb_poly_text(),
        nmax in 1u32..20,
        range in (1u32..5, 0u32..5),
    ) {
        let mut text = String::from("ring q[x,y,z]\n");
        for (k, gens) in ideals.iter().enumerate() {
            text.push_str(&format!("ideal A{k} = {}\n", gens.join(", ")));
        }
        text.push_str(&format!("poly p = {poly}\nfamily F(m) = x^m + y, z^(2*m)\n"));
        text.push_str(&format!("task rees A0 A0 nmax={nmax} nrange={}..{}\n", range.0, range.0 + range.1));
        text.push_str("task dseq p\ntask spread A0\ntask filtration explicit F F levels=3\n");
        let s = parse_session(&text).unwrap();
        let canon = s.to_canonical_string();
        let again = parse_session(&canon).unwrap();
        prop_assert_eq!(&s, &again);
        prop_assert_eq!(again.to_canonical_string(), canon);
    }
}
