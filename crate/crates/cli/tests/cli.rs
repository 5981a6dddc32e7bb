use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn sact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sact"))
        .args(args)
        .output()
        .unwrap()
}

fn with_fixtures(args: &[&str]) -> Output {
    let (s2, e3) = (fixture("s2.sact"), fixture("e3.sact"));
    let mut all = vec!["-f", &s2, "-f", &e3];
    all.extend_from_slice(args);
    sact(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

fn temp_file(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("sact-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn validate_accepts_shipped_fixtures() {
    let out = with_fixtures(&["validate"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("act ActW0 over S2 (act0): ok"));
}

#[test]
fn unknown_act_is_an_input_error() {
    let out = with_fixtures(&["analyze", "Nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Nope"));
}

#[test]
fn syntax_error_reports_line() {
    let path = temp_file(
        "bad.sact",
        "monoid M\nelements: 1 0\none: 1\nzero: 0\ntable:\n1 0\n0\n",
    );
    let out = sact(&["-f", &path, "validate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 7"));
}

#[test]
fn act0_with_two_zeros_is_rejected() {
    let text = "act Z over S2 category act0\nelements: p q\nzero: p\ntable:\np q\np q\n";
    let path = temp_file("twozero.sact", text);
    let s2 = fixture("s2.sact");
    let out = sact(&["-f", &s2, "-f", &path, "validate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_monoid_is_rejected() {
    let path = temp_file(
        "orphan.sact",
        "act X over Q category acto\nelements: x\ntable:\nx\n",
    );
    let out = sact(&["-f", &path, "validate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('Q'));
}

#[test]
fn bad_bound_is_an_input_error() {
    let out = with_fixtures(&["--bounds", "depth=2", "validate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_actw_in_both_categories() {
    let plain = json(&with_fixtures(&["--json", "analyze", "ActW"]));
    assert_eq!(plain["schema"], 1);
    assert_eq!(plain["decomposition"]["indecomposable"], true);
    let zeroed = json(&with_fixtures(&[
        "--json",
        "analyze",
        "ActW",
        "--category",
        "act0",
    ]));
    assert_eq!(
        zeroed["decomposition"]["components"]
            .as_array()
            .unwrap()
            .len(),
        2
    );
}

#[test]
fn analyze_single_zero() {
    let r = json(&with_fixtures(&["--json", "analyze", "A1"]));
    assert!(!r["cyclic"].is_null());
    assert_eq!(r["hollow"], true);
    assert!(!r["projective"].is_null());
}

#[test]
fn analyze_actb_splits_off_one_zero() {
    let r = json(&with_fixtures(&["--json", "analyze", "ActB"]));
    let s = &r["substantial_summand"];
    assert_eq!(s["substantial"], serde_json::json!(["θA", "a"]));
    assert_eq!(s["discrete_zeros"], serde_json::json!(["θS"]));
}

#[test]
fn analyze_field_order_is_fixed() {
    let out = stdout(&with_fixtures(&["--json", "analyze", "ActA"]));
    let keys = [
        "\"schema\"",
        "\"act\"",
        "\"monoid\"",
        "\"category\"",
        "\"size\"",
        "\"zero_set\"",
        "\"cyclic\"",
        "\"locally_cyclic\"",
        "\"hollow\"",
        "\"decomposition\"",
        "\"projective\"",
        "\"substantial_summand\"",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn json_is_byte_stable() {
    for args in [
        vec!["--json", "analyze", "ActB"],
        vec!["--json", "cover", "ActW"],
        vec!["--json", "classify", "E3"],
        vec![
            "--json",
            "enumerate",
            "acts",
            "--monoid",
            "S2",
            "--size",
            "3",
        ],
        vec!["--json", "functor-f", "ActB"],
    ] {
        let a = with_fixtures(&args);
        let b = with_fixtures(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn dot_matches_goldens() {
    for (act, golden) in [("ActA", "act_a.dot"), ("ActW", "act_w.dot")] {
        let expected = std::fs::read_to_string(
            PathBuf::from(env!("CARGO_MANIFEST_DIR"))
                .join("tests/golden")
                .join(golden),
        )
        .unwrap();
        assert_eq!(stdout(&with_fixtures(&["dot", act])), expected);
    }
}

#[test]
fn dot_of_single_zero_has_no_edges() {
    let out = stdout(&with_fixtures(&["dot", "A1"]));
    assert!(!out.contains("->"));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn enumerated_acts_reload() {
    let out = with_fixtures(&["enumerate", "acts", "--monoid", "S2", "--size", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = format!(
        "{}\n{}",
        std::fs::read_to_string(fixture("s2.sact")).unwrap(),
        stdout(&out)
    );
    let path = temp_file("enum.sact", &text);
    let again = sact(&["-f", &path, "validate"]);
    assert_eq!(
        again.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&again.stderr)
    );
}

#[test]
fn enumerate_monoids_counts() {
    for (n, count) in [(2, 1), (3, 3), (4, 15)] {
        let r = json(&sact(&[
            "--json",
            "enumerate",
            "monoids",
            "--size",
            &n.to_string(),
        ]));
        let items = r
            .as_object()
            .unwrap()
            .values()
            .find_map(|v| v.as_array())
            .unwrap();
        assert_eq!(items.len(), count, "order {n}");
    }
}

#[test]
fn functor_f_output_parses() {
    let out = with_fixtures(&["functor-f", "ActB"]);
    assert_eq!(out.status.code(), Some(0));
    let text = format!(
        "{}\n{}",
        std::fs::read_to_string(fixture("s2.sact")).unwrap(),
        stdout(&out)
    );
    let path = temp_file("f.sact", &text);
    assert_eq!(sact(&["-f", &path, "validate"]).status.code(), Some(0));
}

#[test]
fn classify_finite_monoid_has_no_failures() {
    let out = with_fixtures(&["classify", "E3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("fails"));
}

#[test]
fn seeded_fixtures_need_no_files() {
    let out = sact(&["--seed-fixtures", "cover", "ActW0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_paper_passes() {
    let out = with_fixtures(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    assert!(text.contains("hom counts 2 -> 1"));
    assert!(text.contains("sizes 6 vs 4"));
}
