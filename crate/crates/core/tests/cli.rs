use std::process::Command;

use cfperiod::cli::run;
use serde_json::Value;

fn invoke(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("cfperiod").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn expand_prints_period() {
    let (code, out, _) = invoke("expand 23");
    assert_eq!(code, 0);
    assert!(out.contains("a0      4"));
    assert!(out.contains("period  1,3,1,8"));
    assert!(out.contains("k       4"));

    let (code, out, _) = invoke("expand 23 --json");
    assert_eq!(code, 0);
    let v = &json_lines(&out)[0];
    assert_eq!(v["N"], "23");
    assert_eq!(v["a0"], "4");
    assert_eq!(v["period"], serde_json::json!(["1", "3", "1", "8"]));
    assert_eq!(v["k"], 4);
}

#[test]
fn expand_rejects_bad_radicands() {
    assert_eq!(invoke("expand 49").0, 1);
    assert_eq!(invoke("expand 1").0, 1);
    assert_eq!(invoke("expand -5").0, 1);
    assert_eq!(invoke("expand abc").0, 1);
    assert_eq!(invoke("expand").0, 1);
}

#[test]
fn check_both_odd_exits_two() {
    let (code, out, _) = invoke("check --word 1,1 --json");
    assert_eq!(code, 2);
    let v = &json_lines(&out)[0];
    assert_eq!(
        (v["C"].as_str(), v["B"].as_str(), v["A"].as_str()),
        (Some("2"), Some("1"), Some("1"))
    );
    assert_eq!(v["B_even"], false);
    assert_eq!(v["A_even"], false);
    assert_eq!(v["solvable"], false);

    let (code, out, _) = invoke("check --word 2,2");
    assert_eq!(code, 0);
    assert!(out.contains("solvable  true"));
}

#[test]
fn construct_records() {
    let (code, out, _) = invoke("construct --word 2,2 --count 2 --json");
    assert_eq!(code, 0);
    let recs = json_lines(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["N"], "2");
    assert_eq!(recs[0]["word_match"], false);
    assert_eq!(recs[0]["actual_period"], 1);
    assert_eq!(recs[1]["N"], "41");
    assert_eq!(recs[1]["b"], 1);
    assert_eq!(recs[1]["a0"], "6");
    assert_eq!(recs[1]["expected_period"], 3);
    assert_eq!(recs[1]["word_match"], true);
    assert_eq!(recs[1]["squarefree"], "true");
    for key in [
        "b",
        "a0",
        "N",
        "expected_period",
        "actual_period",
        "word_match",
        "squarefree",
    ] {
        assert!(recs[0].get(key).is_some(), "{key}");
    }

    assert_eq!(invoke("construct --word 1,1 --count 3").0, 2);
    assert_eq!(invoke("construct --word 1,2 --count 3").0, 1);
    assert_eq!(invoke("construct --word 1,0,1").0, 1);
}

#[test]
fn construct_empty_word() {
    let argv = [
        "cfperiod",
        "construct",
        "--word",
        "",
        "--count",
        "3",
        "--json",
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run(argv, &mut out, &mut err), 0);
    let ns: Vec<String> = json_lines(std::str::from_utf8(&out).unwrap())
        .iter()
        .map(|v| v["N"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(ns, ["2", "5", "10"]);
}

#[test]
fn factor_bound_controls_squarefree() {
    let (_, out, _) = invoke("construct --word 2,2 --count 3 --json --factor-bound 100");
    let recs = json_lines(&out);
    assert_eq!(recs[1]["squarefree"], "true");
    assert_eq!(recs[2]["squarefree"], "unknown");
    assert_eq!(invoke("construct --word 2,2 --factor-bound 1e9").0, 1);
}

#[test]
fn corollary_report_and_family() {
    let (code, out, _) = invoke("corollary --k 6 --json");
    assert_eq!(code, 0);
    let lines = json_lines(&out);
    assert_eq!(lines[0]["Q_k_minus_1"], "21");
    assert_eq!(lines[0]["fib_identity_value"], "21");
    assert_eq!(lines[0]["is_odd"], true);
    assert_eq!(lines[0]["identity_holds"], true);
    assert_eq!(lines[1]["alpha"], "441");
    assert_eq!(invoke("corollary --k 0").0, 1);
}

#[test]
fn errata_formats() {
    let (code, out, _) = invoke("errata --kmax 6 --json");
    assert_eq!(code, 0);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4]["erroneous_formula_value"], "42");
    assert_eq!(rows[2]["original_Q"], "8");
    assert_eq!(rows[2]["erroneous_formula_value"], Value::Null);

    let (code, out, _) = invoke("errata --kmax 4 --csv");
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("k,corrected_word,original_word,corrected_Q"));
    assert_eq!(
        lines.nth(2).unwrap(),
        "4,\"1,1,1\",\"2,1,2\",3,8,true,false,"
    );

    assert_eq!(invoke("errata --kmax 1").0, 1);
    assert_eq!(invoke("expand 23 --csv").0, 1);
    assert_eq!(invoke("errata --kmax 5 --csv --json").0, 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(invoke("").0, 1);
    assert_eq!(invoke("frobnicate").0, 1);
    assert_eq!(invoke("check").0, 1);
    assert_eq!(invoke("--help").0, 0);
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        "construct --word 2,1,1,1,2 --count 50 --json",
        "errata --kmax 40",
        "expand 1000003",
    ] {
        assert_eq!(invoke(args), invoke(args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cfperiod");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["expand", "23"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("[4; (1,3,1,8)]"));
    assert_eq!(status(&["check", "--word", "1,1"]).status.code(), Some(2));
    assert_eq!(status(&["check", "--word", "x"]).status.code(), Some(1));
}
