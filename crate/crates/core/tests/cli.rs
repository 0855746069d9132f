use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clutter-ci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(root().join("tests/golden").join(name)).unwrap()
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str, &str); 8] = [
        (&["enumerate", "--input"], "az12.json", "enumerate-az12.json"),
        (&["ideal", "--input"], "az13.json", "ideal-az13.json"),
        (&["classify", "--input"], "az12.json", "classify-az12.json"),
        (&["classify", "--input"], "s2-q5.json", "classify-s2-q5.json"),
        (&["gb", "--format", "text", "--input"], "lemma-nov12-14.json", "gb-lemma-nov12-14.txt"),
        (&["gb", "--input"], "subcase-d.json", "gb-subcase-d.json"),
        (&["code", "--degree", "2", "--input"], "az13.json", "code-az13-d2.json"),
        (&["check", "--format", "text", "--input"], "az13.json", "check-az13.txt"),
    ];
    for (args, input, expected) in cases {
        let path = fixture(input);
        let mut full: Vec<&str> = args.to_vec();
        full.push(&path);
        let first = stdout(&full);
        assert_eq!(first, golden(expected), "{expected}");
        assert_eq!(stdout(&full), first, "{expected} not reproducible");
    }
}

#[test]
fn enumerate_counts() {
    let count = |input: &str| -> u64 {
        let v: serde_json::Value = serde_json::from_str(&stdout(&["enumerate", "--input", input])).unwrap();
        v["count"].as_u64().unwrap()
    };
    assert_eq!(count(&fixture("az13.json")), 4);
    assert_eq!(count(&fixture("az12.json")), 8);
    assert_eq!(count(r#"{"p": 5, "n": 2, "monomials": [[1, 3]]}"#), 1);
}

#[test]
fn gb_of_the_three_binomials_has_six_elements() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["gb", "--input", &fixture("lemma-nov12-14.json")])).unwrap();
    assert_eq!(v["reduced_gb"].as_array().unwrap().len(), 6);
    let b: serde_json::Value =
        serde_json::from_str(&stdout(&["gb", "--input", &fixture("subcase-b.json")])).unwrap();
    assert_eq!(b["reduced_gb"].as_array().unwrap().len(), 6);
}

#[test]
fn check_detects_non_clutter_input() {
    let out = stdout(&["check", "--input", r#"{"p": 3, "n": 2, "monomials": [[1, 1], [1, 0]]}"#]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["clutter_type"], false);
    assert_eq!(v["monoid_closed"], true);
}

#[test]
fn clutter_input_and_lex_order() {
    let tri = r#"{"p": 2, "n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}"#;
    let v: serde_json::Value = serde_json::from_str(&stdout(&["classify", "--input", tri])).unwrap();
    assert_eq!(v["form"], "II");
    assert_eq!(v["mu_total"], 2);
    let text = stdout(&["ideal", "--order", "lex", "--format", "text", "--input", tri]);
    assert!(text.contains("reduced Groebner basis (lex)"));
}

#[test]
fn exit_codes() {
    let non_clutter = r#"{"p": 3, "n": 2, "monomials": [[1, 1], [1, 0]]}"#;
    assert_eq!(run(&["classify", "--input", non_clutter]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--input", r#"{"p": 3, "n": 1}"#]).status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--input", r#"{"p": 3, "n": 1, "monomials": [[1]], "q": 3}"#]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["enumerate", "--input", "/nonexistent/input.json"]).status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--budget-points", "100", "--input", &fixture("az12.json")]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["code", "--degree", "0", "--input", &fixture("az13.json")]).status.code(), Some(2));
    // budget on codewords leaves the distance open rather than failing
    let out = stdout(&["code", "--degree", "2", "--budget-codewords", "10", "--input", &fixture("az13.json")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["dmin"].is_null());
    assert_eq!(v["k"], 4);
}
