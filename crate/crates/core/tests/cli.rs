use std::path::PathBuf;

use evoalg::cli::{run, EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn evoalg(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("evoalg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = evoalg(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn analyze_reports_the_two_males_case_split() {
    let r = json(&["analyze", &fixture("two_males.json")]);
    assert_eq!(r["invariant_forms"]["J_X"]["dim"], 2);
    assert_eq!(r["invariant_forms"]["J_X"]["agrees_with_male_transitions"], true);
    assert_eq!(r["dibaric"]["via_quotient"]["case"], "SexDiff");
    assert_eq!(r["conservative"]["holds"], false);
    assert!(r["conservative"]["failing_triple"].is_array());
    assert_eq!(r["bq_pairs"]["(X, Y)"]["family"], "B12");
    assert_eq!(r["bq_pairs"]["b01"]["family"], "B01");
    assert_eq!(r["induced_operator"]["agrees_with_bernstein"], true);
    assert_eq!(r["identities"]["power-associativity"]["holds"], false);
    let half = json(&["analyze", &fixture("two_males_half.json")]);
    assert_eq!(half["invariant_forms"]["J_X"]["dim"], 1);
}

#[test]
fn every_check_names_its_operation() {
    let r = json(&["analyze", &fixture("mixed_inheritance.json")]);
    for (key, check) in r.as_object().unwrap() {
        if key == "input" || key == "bq_pairs" || key == "identities" || key == "dibaric" || key == "invariant_forms" {
            continue;
        }
        assert!(check.get("operation").is_some(), "{key}");
        assert!(check.get("inputs").is_some(), "{key}");
    }
    assert_eq!(r["simplex_invariants"]["effective_dim"], 2);
}

#[test]
fn output_is_deterministic() {
    let a = evoalg(&["--format", "json", "analyze", &fixture("mixed_inheritance.json")]);
    let b = evoalg(&["--format", "json", "analyze", &fixture("mixed_inheritance.json")]);
    assert_eq!(a, b);
    let t1 = evoalg(&["analyze", &fixture("two_males.json")]);
    let t2 = evoalg(&["analyze", &fixture("two_males.json")]);
    assert_eq!(t1, t2);
}

#[test]
fn simulate_prints_exact_rows() {
    let r = json(&["simulate", &fixture("two_males.json"), "--state", "s0", "--steps", "2"]);
    let rows = r["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    // y' = (a y1 + b y2, ...) with a = 1, b = 0: y1 stays 1/3.
    assert_eq!(rows[1]["y"], serde_json::json!(["1/3", "2/3"]));
    let (code, text, _) =
        evoalg(&["simulate", &fixture("two_males_half.json"), "--state", "s0", "--steps", "1", "--decimal"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("t=1  x=(1)  y=(1/2, 1/2)"), "{text}");
    assert!(text.contains("approx"));
}

#[test]
fn check_hom_separates_the_two_shift_maps() {
    let shift = json(&["check-hom", &fixture("two_males_half.json"), "--map", "shift"]);
    let report = &shift["report"];
    assert_eq!(report["is_linear_hom"], false);
    let v = report["violated_constraints"].as_array().unwrap();
    assert!(v.iter().all(|c| c["kind"] == "cross-product"));
    assert!(v.iter().any(|c| c["residual"] == "1/6"));
    let collapse = json(&["check-hom", &fixture("two_males_half.json"), "--map", "collapse"]);
    assert_eq!(collapse["report"]["is_eabp_hom"], true);
    assert!(collapse["report"]["t3_table"].is_array());
}

#[test]
fn quotients_of_the_sex_differentiation_algebra() {
    let r = json(&["classify-quotient", &fixture("sex_diff_quotients.json"), "--ideal", "zero"]);
    assert_eq!(r["case"], "SexDiff");
    let r = json(&["classify-quotient", &fixture("two_males.json"), "--ideal", "ker_xy"]);
    assert_eq!(r["case"], "SexDiff");
    let (code, _, err) = evoalg(&["classify-quotient", &fixture("sex_diff_quotients.json"), "--ideal", "square"]);
    assert_eq!(code, EXIT_PRECONDITION, "{err}");
}

#[test]
fn bq_classify_named_pair() {
    let r = json(&["bq", "classify", &fixture("two_males.json"), "--pair", "b01"]);
    assert_eq!(r["b01"]["family"], "B01");
    assert_eq!(r["b01"]["nonzero"], false);
}

#[test]
fn input_errors_exit_with_code_two() {
    let (code, _, err) = evoalg(&["analyze", &fixture("bad_row_sum.json")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("Pm[0][0]: row sums to 3/2"), "{err}");
    let (code, _, _) = evoalg(&["analyze", "/nonexistent/problem.json"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = evoalg(&["simulate", &fixture("two_males.json"), "--state", "missing"]);
    assert_ne!(code, EXIT_OK);
    let (code, _, _) = evoalg(&["no-such-command"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn permissive_mode_accepts_negative_entries() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("neg.json");
    std::fs::write(&path, r#"{"n": 1, "nu": 2, "Pf": [[["1"], ["1"]]], "Pm": [[["3/2", "-1/2"], ["0", "1"]]]}"#)
        .unwrap();
    let p = path.display().to_string();
    let (code, _, err) = evoalg(&["analyze", &p]);
    assert_eq!(code, EXIT_INPUT, "{err}");
    let (code, out, err) = evoalg(&["--permissive", "--format", "json", "analyze", &p]);
    assert_eq!(code, EXIT_OK, "{err}");
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(r["input"]["mode"], "permissive");
}
