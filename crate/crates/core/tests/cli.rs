use std::process::{Command, Output};

fn wedgewalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wedgewalk"))
        .args(args)
        .env_remove("WEDGEWALK_DIGITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_symmetric_rows() {
    let o = wedgewalk(&["count", "--model", "symmetric", "--p", "1", "--n", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let counts: Vec<&str> = text
        .lines()
        .skip(1)
        .take(6)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(counts, ["1", "1", "3", "5", "13", "27"]);
    assert_eq!(text.lines().count(), 42);
}

#[test]
fn count_json_large_integers_are_strings() {
    let o = wedgewalk(&["count", "--model", "free", "--n", "100", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    let last = v["counts"][100].as_str().unwrap();
    assert!(last.len() > 30, "{last}");
}

#[test]
fn verify_funceq_passes() {
    let o = wedgewalk(&["verify", "--suite", "funceq", "--order", "30"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn verify_ledgered_suite_exits_zero() {
    let o = wedgewalk(&["verify", "--suite", "closedform"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "reported");
    assert!(v["verdicts"][0]["ledger"]
        .as_array()
        .unwrap()
        .iter()
        .any(|x| x == "halfplane"));
}

#[test]
fn asympt_a0_contains_printed_value() {
    let o = wedgewalk(&["asympt", "--const", "A0", "--digits", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0.27730985348603118827"));
}

#[test]
fn digits_default_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_wedgewalk"))
        .args(["asympt", "--const", "theta"])
        .env("WEDGEWALK_DIGITS", "45")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["digits"], 45);
    let bad = Command::new(env!("CARGO_BIN_EXE_wedgewalk"))
        .args(["asympt", "--const", "theta"])
        .env("WEDGEWALK_DIGITS", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(
        wedgewalk(&["count", "--model", "spiral", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wedgewalk(&["verify", "--suite", "nothing"]).status.code(),
        Some(2)
    );
    assert_eq!(wedgewalk(&["series", "--kind", "unknown"]).status.code(), Some(2));
    assert_eq!(
        wedgewalk(&["count", "--model", "free", "--n", "100000"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        wedgewalk(&["asympt", "--const", "A0", "--digits", "1000"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "series",
        "--kind",
        "theta_sym:1/2",
        "--order",
        "20",
        "--format",
        "json",
    ];
    assert_eq!(stdout(&wedgewalk(&args)), stdout(&wedgewalk(&args)));
    let args = ["asympt", "--const", "halfplane", "--nmax", "60"];
    assert_eq!(stdout(&wedgewalk(&args)), stdout(&wedgewalk(&args)));
}

#[test]
fn output_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("wedgewalk-cli-{}.csv", std::process::id()));
    let o = wedgewalk(&[
        "series",
        "--kind",
        "sym_g1",
        "--order",
        "5",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text, "n,coefficient\n0,1\n1,1\n2,3\n3,5\n4,13\n5,27\n");
}

#[test]
fn ledger_list_and_explain() {
    let list = stdout(&wedgewalk(&["ledger", "list"]));
    assert!(list.contains("halfplane Lemma formula: valuation -2 as printed"));
    let o = wedgewalk(&["ledger", "explain", "halfplane"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for dp in ["1", "2", "4", "9", "20"] {
        assert!(
            text.lines().any(|l| l.split_whitespace().last() == Some(dp)),
            "{text}"
        );
    }
    assert_eq!(wedgewalk(&["ledger", "explain", "nope"]).status.code(), Some(2));
}
